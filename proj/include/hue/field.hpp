// Arithmetic in F_p and in the degree-p Artin-Schreier extension
// F_p[theta]/(theta^p - theta - c^p), the smallest fields the engine needs.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hue {

class FieldSpec;
using FieldPtr = std::shared_ptr<const FieldSpec>;

class FieldElem;

/// Immutable description of F_p[X]/(modulus). d = 1 means F_p itself.
class FieldSpec : public std::enable_shared_from_this<FieldSpec> {
  public:
    /// The prime field F_p.
    static FieldPtr fp(int64_t p);

    /// F_p[theta]/(theta^p - theta - c^p), c != 0 in F_p.
    /// Throws std::domain_error for c = 0 (X^p - X splits; not a field).
    static FieldPtr artin_schreier(int64_t p, int64_t c);

    int64_t p() const { return p_; }
    int d() const { return d_; }
    int64_t order() const;  // p^d
    const std::vector<int64_t>& modulus() const { return modulus_; }

    FieldElem zero() const;
    FieldElem one() const;
    FieldElem from_int(int64_t n) const;  // embed n mod p
    FieldElem theta() const;              // residue class of X (== from_int for d = 1)
    FieldElem element(std::vector<int64_t> coeffs) const;

    /// All elements, in lexicographic coefficient order. Small fields only.
    std::vector<FieldElem> all_elements() const;

    bool same(const FieldSpec& other) const;

  private:
    FieldSpec(int64_t p, std::vector<int64_t> modulus);
    int64_t p_;
    int d_;
    std::vector<int64_t> modulus_;  // monic, length d+1, coefficients in [0,p)
    friend class FieldElem;
};

/// Element of a FieldSpec, stored as a reduced coefficient vector of length d.
class FieldElem {
  public:
    FieldElem() = default;  // unusable until assigned

    const std::vector<int64_t>& coeffs() const { return c_; }
    const FieldPtr& spec() const { return spec_; }

    bool is_zero() const;
    bool is_one() const;

    /// True iff the element lies in F_p (all higher coefficients zero).
    bool in_prime_subfield() const;
    /// The integer representative in [0,p); requires in_prime_subfield().
    int64_t as_int() const;

    FieldElem operator+(const FieldElem& o) const;
    FieldElem operator-(const FieldElem& o) const;
    FieldElem operator*(const FieldElem& o) const;
    FieldElem operator-() const;
    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }

    FieldElem inv() const;  // throws std::domain_error on zero
    FieldElem operator/(const FieldElem& o) const { return *this * o.inv(); }
    FieldElem pow(int64_t e) const;
    FieldElem frobenius() const { return pow(spec_->p()); }

    FieldElem operator*(int64_t n) const;  // scalar from F_p

    bool operator==(const FieldElem& o) const;
    bool operator!=(const FieldElem& o) const { return !(*this == o); }
    /// Lexicographic on coefficients; used for deterministic ordering only.
    bool operator<(const FieldElem& o) const { return c_ < o.c_; }

    std::string str() const;

  private:
    friend class FieldSpec;
    FieldElem(FieldPtr spec, std::vector<int64_t> c) : spec_(std::move(spec)), c_(std::move(c)) {}
    void check_same(const FieldElem& o) const;  // throws std::invalid_argument on spec mismatch
    FieldPtr spec_;
    std::vector<int64_t> c_;
};

/// binom(x, k) = x(x-1)...(x-k+1)/k! for 0 <= k < p.
/// Throws std::invalid_argument for k >= p.
FieldElem binom_field(const FieldElem& x, int64_t k);

/// All p roots of X^p - X - c^p in spec, c an F_p value, found by substitution.
/// Throws std::domain_error if fewer than p roots exist in spec.
std::vector<FieldElem> artin_schreier_roots(const FieldPtr& spec, int64_t c);

}  // namespace hue
