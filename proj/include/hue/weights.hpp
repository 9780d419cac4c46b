// The reduced p-character chi in canonical form, the weight set Lambda and
// evaluation of weights on divided powers binom(h, k) and their shifts.

#pragma once

#include <cstdint>
#include <vector>

#include "hue/field.hpp"

namespace hue {

enum class ChiKind { zero, nilpotent, semisimple };

/// Canonical representative of a p-character on sl2: supported on f^(p^r)
/// (nilpotent), on binom(h, p^r) (semisimple), or zero.
struct ChiForm {
    ChiKind kind = ChiKind::zero;
    int64_t p = 0;
    int r = 0;
    int64_t c = 0;  // chi(binom(h,p^r)) for semisimple, else 0

    int64_t c_h() const { return kind == ChiKind::semisimple ? c : 0; }
    int64_t c_f() const { return kind == ChiKind::nilpotent ? 1 : 0; }
    int64_t c_e() const { return 0; }
    bool is_zero() const { return kind == ChiKind::zero; }
};

const char* chi_kind_name(ChiKind k);

/// Canonical chi. For semisimple, c must be nonzero mod p.
ChiForm standard_chi(ChiKind kind, int64_t p, int r, int64_t c = 0);

/// The smallest field housing Lambda for this chi: F_p, or the Artin-Schreier
/// extension when chi is semisimple.
FieldPtr field_for(const ChiForm& chi);

/// A weight lambda = (lambda_0, ..., lambda_r): values on binom(h, p^i).
/// The first r coordinates are integers in {0..p-1}; the top one is a root of
/// X^p - X = chi(binom(h,p^r))^p in the ambient field. The full table of
/// values lambda(binom(h,k)) for k < p^{r+1} is precomputed at construction.
class Weight {
  public:
    Weight(int64_t p, int r, std::vector<int64_t> low, FieldElem top);

    int64_t p() const { return p_; }
    int r() const { return r_; }
    int64_t q() const { return q_; }  // p^{r+1}
    const std::vector<int64_t>& low() const { return low_; }
    const FieldElem& top() const { return top_; }
    const FieldPtr& field() const { return top_.spec(); }

    /// lambda_i as a field element (i <= r).
    FieldElem coord(int i) const;

    /// lambda(binom(h, k)), 0 <= k < p^{r+1}.
    const FieldElem& lambda_binom(int64_t k) const;

    /// lambda(binom(h + m, k)) = Sigma_t binom(m, k-t) lambda(binom(h, t)),
    /// m any integer. m = 0 reduces to lambda_binom.
    FieldElem lambda_binom_shifted(int64_t m, int64_t k) const;

    /// Membership test in Lambda_chi^r (the invariants of the type).
    bool valid_for(const ChiForm& chi) const;

    bool operator==(const Weight& o) const;
    std::string str() const;

  private:
    int64_t p_;
    int r_;
    int64_t q_;
    std::vector<int64_t> low_;        // lambda_0 .. lambda_{r-1}
    FieldElem top_;                   // lambda_r
    std::vector<FieldElem> table_;    // lambda(binom(h,k)), k < q
};

/// All p^{r+1} weights of Lambda_chi^r over the given field, in a fixed
/// deterministic order (low coordinates lexicographic, top roots sorted).
std::vector<Weight> enumerate_weights(const ChiForm& chi, const FieldPtr& field);

}  // namespace hue
