#include "hue/modp.hpp"

#include <cassert>
#include <stdexcept>

namespace hue {

int64_t DigitVector::value() const {
    int64_t n = 0, w = 1;
    for (int64_t d : digits) {
        n += d * w;
        w *= p;
    }
    return n;
}

int64_t ipow(int64_t p, int e) {
    int64_t n = 1;
    for (int i = 0; i < e; ++i) n *= p;
    return n;
}

DigitVector base_p_digits(int64_t n, int64_t p, int width) {
    if (n < 0) throw std::invalid_argument("base_p_digits: negative input");
    if (n >= ipow(p, width)) throw std::overflow_error("base_p_digits: n >= p^width");
    DigitVector dv;
    dv.p = p;
    dv.digits.resize(width);
    for (int i = 0; i < width; ++i) {
        dv.digits[i] = n % p;
        n /= p;
    }
    return dv;
}

int64_t binom_mod_p(int64_t n, int64_t k, int64_t p) {
    if (k < 0) throw std::invalid_argument("binom_mod_p: k < 0");
    if (k == 0) return 1;
    if (n < 0) {
        int64_t v = binom_mod_p(-n + k - 1, k, p);
        return (k % 2 == 0) ? v : (p - v) % p;
    }
    if (k > n) return 0;
    // Lucas: product over base-p digits of binom(n_i, k_i).
    int64_t res = 1;
    while (k > 0) {
        int64_t nd = n % p, kd = k % p;
        if (kd > nd) return 0;
        // binom(nd, kd) for digits < p, via factorials
        int64_t num = factorial_mod_p(nd, p);
        int64_t den = (factorial_mod_p(kd, p) * factorial_mod_p(nd - kd, p)) % p;
        res = (res * num) % p;
        res = (res * inverse_mod_p(den, p)) % p;
        n /= p;
        k /= p;
    }
    return res;
}

bool kummer_carry_vanishes(int64_t a, int64_t b, int64_t p) {
    if (a < 0 || b < 0) throw std::invalid_argument("kummer_carry_vanishes: negative input");
    int64_t carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        int64_t s = a % p + b % p + carry;
        if (s >= p) return true;
        carry = 0;
        a /= p;
        b /= p;
    }
    return false;
}

int64_t factorial_mod_p(int64_t n, int64_t p) {
    assert(0 <= n && n < p);
    int64_t r = 1;
    for (int64_t i = 2; i <= n; ++i) r = (r * i) % p;
    return r;
}

int64_t inverse_mod_p(int64_t a, int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw std::domain_error("inverse_mod_p: zero");
    // Fermat
    int64_t r = 1, b = a, e = p - 2;
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

int64_t gamma_coeff(int64_t k, int64_t l, int64_t p) { return binom_mod_p(k + l, k, p); }

namespace {

// p-adic valuation of n! (Legendre).
int64_t val_factorial(int64_t n, int64_t p) {
    int64_t v = 0;
    while (n > 0) {
        n /= p;
        v += n;
    }
    return v;
}

// n! with all factors of p removed, mod p. Uses (p-1)! = -1 mod p per block.
int64_t factorial_unit(int64_t n, int64_t p) {
    int64_t r = 1;
    while (n > 0) {
        int64_t blocks = n / p;
        if (blocks % 2 == 1) r = (r * (p - 1)) % p;  // (-1)^blocks
        for (int64_t i = 2; i <= n % p; ++i) r = (r * i) % p;
        n /= p;
    }
    return r;
}

}  // namespace

int64_t delta_coeff(int64_t k, int64_t l, int64_t m, int64_t p) {
    if (m < 0 || m > k || m > l) throw std::invalid_argument("delta_coeff: m out of range");
    int64_t v = val_factorial(k + l - m, p) - val_factorial(k - m, p) - val_factorial(l - m, p) -
                val_factorial(m, p);
    assert(v >= 0 && "delta_coeff: negative p-adic valuation is impossible");
    if (v > 0) return 0;
    int64_t num = factorial_unit(k + l - m, p);
    int64_t den = (((factorial_unit(k - m, p) * factorial_unit(l - m, p)) % p) *
                   factorial_unit(m, p)) %
                  p;
    return (num * inverse_mod_p(den, p)) % p;
}

}  // namespace hue
