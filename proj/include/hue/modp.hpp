// Base-p digit manipulation and generalized binomial coefficients mod p.
// Everything here is exact integer arithmetic; no field elements appear.

#pragma once

#include <cstdint>
#include <vector>

namespace hue {

/// Base-p digit expansion, least-significant digit first.
struct DigitVector {
    std::vector<int64_t> digits;  // each in [0, p)
    int64_t p = 0;

    int64_t value() const;  // Sigma digits[i] * p^i
};

/// p^e for small exponents, exact.
int64_t ipow(int64_t p, int e);

/// Digits of n in base p, padded to `width`. Throws std::overflow_error if n >= p^width.
DigitVector base_p_digits(int64_t n, int64_t p, int width);

/// binom(n, k) mod p for any integer n and k >= 0.
/// n >= 0 uses the Lucas digit product; n < 0 uses the reflection
/// binom(n, k) = (-1)^k binom(-n+k-1, k). binom(n, 0) = 1 always.
int64_t binom_mod_p(int64_t n, int64_t k, int64_t p);

/// True iff adding a and b in base p produces at least one carry,
/// equivalently binom(a+b, a) = 0 mod p.
bool kummer_carry_vanishes(int64_t a, int64_t b, int64_t p);

/// n! mod p for 0 <= n < p.
int64_t factorial_mod_p(int64_t n, int64_t p);

/// Inverse of a mod p, a not divisible by p.
int64_t inverse_mod_p(int64_t a, int64_t p);

/// Structure constant of the additive-group distribution algebra:
/// gamma_k gamma_l = binom(k+l, k) gamma_{k+l}.
int64_t gamma_coeff(int64_t k, int64_t l, int64_t p);

/// Structure constant of the multiplicative-group distribution algebra:
/// the coefficient of delta_{k+l-m} in delta_k delta_l, i.e.
/// (k+l-m)!/((k-m)!(l-m)!m!) mod p. Computed via p-adic valuations so the
/// factorials never materialize; a positive net valuation gives 0.
int64_t delta_coeff(int64_t k, int64_t l, int64_t m, int64_t p);

}  // namespace hue
