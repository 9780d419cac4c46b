// Higher baby Verma modules Z_chi^r(lambda) from the closed-form action
// equations, teenage Verma modules induced through the straightening engine,
// and level lifts.

#pragma once

#include "hue/algebra.hpp"
#include "hue/module_rep.hpp"

namespace hue {

/// The higher baby Verma module Z_chi^r(lambda) on the basis v_0..v_{p^{r+1}-1},
/// v_k = f^(k) (x) m_0. Throws std::invalid_argument if lambda is not in
/// Lambda_chi^r.
ModuleRep baby_verma(const ChiForm& chi, const Weight& lambda);

/// The same module built independently by inducing from K_lambda with the
/// straightening engine; used to cross-validate baby_verma.
ModuleRep baby_verma_via_engine(const ChiForm& chi, const Weight& lambda);

/// Teenage Verma module Z_chi^[r](N, lambda_r): induced from the level-(r-1)
/// chi = 0 irreducible N (with its highest weight recorded in N.weight and
/// Verma basis labels in N.basis_index), extended by e^(p^r) acting as zero
/// and binom(h,p^r) acting by the lambda_r scalars. Basis f^(a p^r) (x) n,
/// slot-major in a. Throws std::invalid_argument on weight incompatibility.
ModuleRep teenage_verma(const ModuleRep& N, const FieldElem& lambda_r, const ChiForm& chi);

/// Lift a level-s module to level target_r >= s along the Frobenius twist:
/// level j of the result acts as level j - (target_r - s) of the input, and
/// levels below target_r - s act as zero. Throws std::runtime_error if the
/// lifted module fails its relation check.
ModuleRep lift_module(const ModuleRep& rep, int target_r);

/// Divided-power matrices on a module: e^(m), binom(h,m), f^(m).
Matrix divided_e(const ModuleRep& rep, int64_t m);
Matrix divided_f(const ModuleRep& rep, int64_t m);
Matrix divided_h(const ModuleRep& rep, int64_t m);
/// binom(h + shift, t) on the module.
Matrix divided_h_shifted(const ModuleRep& rep, int64_t shift, int64_t t);

struct RelationReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Exact matrix verification of every defining relation the module must
/// satisfy: p-th power central relations per level, pairwise commutation of
/// each generator family, the toral shifts past e/f, and the e-f straightening
/// instances for all level pairs.
RelationReport verify_relations(const ModuleRep& rep);

/// Re-express a module over a larger field (coefficientwise embedding of F_p).
ModuleRep embed_rep(const ModuleRep& rep, const FieldPtr& K);

}  // namespace hue
