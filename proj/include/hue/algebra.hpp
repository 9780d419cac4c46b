// PBW normal-form (straightening) engine for U_chi^[r](SL2).
//
// Elements live in the basis f^[[i]] binom(h,[[k]]) e^[[j]] with the three
// codes in [0, p^{r+1}): the digits of a code are the exponents of the
// level-u divided-power generators f^(p^u), binom(h,p^u), e^(p^u).
//
// Multiplication rewrites one elementary generator factor at a time, so every
// commutation step involves two factors of grade <= p^r and stays below the
// p^{r+1} filtration bound where the defining relations apply. p-th powers of
// generator factors reduce through the central chi-relations.

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hue/module_rep.hpp"
#include "hue/weights.hpp"

namespace hue {

struct PbwMonomial {
    int64_t i = 0, k = 0, j = 0;
    auto operator<=>(const PbwMonomial&) const = default;
};

enum class GenKind { e, h, f };

class EngineContext;
using EnginePtr = std::shared_ptr<const EngineContext>;

/// Shared immutable context: (p, r, chi, field) plus internal rewrite caches.
class EngineContext : public std::enable_shared_from_this<EngineContext> {
  public:
    static EnginePtr make(const ChiForm& chi, FieldPtr field);

    int64_t p() const { return p_; }
    int r() const { return r_; }
    int64_t q() const { return q_; }  // p^{r+1}
    const ChiForm& chi() const { return chi_; }
    const FieldPtr& field() const { return field_; }

    bool same(const EngineContext& o) const;

    ~EngineContext();

  private:
    EngineContext(const ChiForm& chi, FieldPtr field);
    int64_t p_;
    int r_;
    int64_t q_;
    ChiForm chi_;
    FieldPtr field_;

    struct Caches;
    std::unique_ptr<Caches> caches_;
    friend struct EngineOps;
};

/// A field-linear combination of PBW monomials over a context.
class AlgebraElement {
  public:
    explicit AlgebraElement(EnginePtr ctx) : ctx_(std::move(ctx)) {}

    static AlgebraElement zero(EnginePtr ctx) { return AlgebraElement(std::move(ctx)); }
    static AlgebraElement one(EnginePtr ctx);
    static AlgebraElement monomial(EnginePtr ctx, PbwMonomial m, FieldElem c);
    static AlgebraElement from_terms(EnginePtr ctx,
                                     const std::vector<std::pair<PbwMonomial, FieldElem>>& terms);

    const EnginePtr& ctx() const { return ctx_; }
    const std::map<PbwMonomial, FieldElem>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    AlgebraElement operator+(const AlgebraElement& o) const;
    AlgebraElement operator-(const AlgebraElement& o) const;
    AlgebraElement operator*(const FieldElem& c) const;
    bool operator==(const AlgebraElement& o) const;

    std::string str() const;

    void add_term(const PbwMonomial& m, const FieldElem& c);  // keeps zero terms out

  private:
    EnginePtr ctx_;
    std::map<PbwMonomial, FieldElem> terms_;
};

/// The generator e^(p^level), binom(h,p^level) or f^(p^level).
AlgebraElement generator(const EnginePtr& ctx, GenKind kind, int level);

/// Plain divided power e^(m), f^(m) or binom(h,m) for 0 <= m < p^{r+1},
/// expressed in the engine basis (no multiplication involved).
AlgebraElement plain_divided_power(const EnginePtr& ctx, GenKind kind, int64_t m);

/// binom(h + shift, t) for any integer shift, 0 <= t < p^{r+1}, as a toral
/// element of the engine basis.
AlgebraElement shifted_h_binom(const EnginePtr& ctx, int64_t shift, int64_t t);

/// Product in normal form.
AlgebraElement pbw_multiply(const AlgebraElement& x, const AlgebraElement& y);

/// Evaluate x on a module by substituting generator matrices.
Matrix act_on_module(const AlgebraElement& x, const ModuleRep& rep);

/// Centrality/scalar report for the three central elements of U_chi^[r].
struct CentralityReport {
    bool ok = true;
    std::vector<std::string> violations;
};

/// Checks that E_r^p = 0, F_r^p = chi_f^p I, H_r^p - H_r = chi_h^p I on the
/// given module and that these matrices commute with every generator matrix.
CentralityReport verify_centrality(const ChiForm& chi, const ModuleRep& rep);

}  // namespace hue
