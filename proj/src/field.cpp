#include "hue/field.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "hue/modp.hpp"

namespace hue {

FieldSpec::FieldSpec(int64_t p, std::vector<int64_t> modulus)
    : p_(p), d_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
    if (p < 3) throw std::invalid_argument("FieldSpec: p must be an odd prime >= 3");
    for (int64_t i = 2; i * i <= p; ++i)
        if (p % i == 0) throw std::invalid_argument("FieldSpec: p is not prime");
    assert(modulus_.back() == 1 && "modulus must be monic");
}

FieldPtr FieldSpec::fp(int64_t p) {
    return FieldPtr(new FieldSpec(p, {0, 1}));  // X
}

FieldPtr FieldSpec::artin_schreier(int64_t p, int64_t c) {
    c = ((c % p) + p) % p;
    if (c == 0) throw std::domain_error("artin_schreier: c = 0 gives a split modulus, not a field");
    // modulus X^p - X - c^p; c^p = c in F_p
    std::vector<int64_t> mod(p + 1, 0);
    mod[p] = 1;
    mod[1] = p - 1;
    mod[0] = (p - c) % p;
    // Irreducibility: X^p - X - c over F_p has a root in F_p iff c = 0
    // (x^p - x = 0 for every x in F_p), and an Artin-Schreier polynomial
    // is irreducible exactly when it has no root. c != 0 was checked above.
    return FieldPtr(new FieldSpec(p, std::move(mod)));
}

int64_t FieldSpec::order() const {
    int64_t q = 1;
    for (int i = 0; i < d_; ++i) q *= p_;
    return q;
}

FieldElem FieldSpec::zero() const { return from_int(0); }
FieldElem FieldSpec::one() const { return from_int(1); }

FieldElem FieldSpec::from_int(int64_t n) const {
    std::vector<int64_t> c(d_, 0);
    c[0] = ((n % p_) + p_) % p_;
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem FieldSpec::theta() const {
    std::vector<int64_t> c(d_, 0);
    if (d_ == 1)
        c[0] = 0;  // no generator beyond F_p; theta degenerates to 0
    else
        c[1] = 1;
    return FieldElem(shared_from_this(), std::move(c));
}

FieldElem FieldSpec::element(std::vector<int64_t> coeffs) const {
    if (static_cast<int>(coeffs.size()) != d_)
        throw std::invalid_argument("FieldSpec::element: wrong coefficient count");
    for (auto& x : coeffs) x = ((x % p_) + p_) % p_;
    return FieldElem(shared_from_this(), std::move(coeffs));
}

std::vector<FieldElem> FieldSpec::all_elements() const {
    std::vector<FieldElem> out;
    out.reserve(order());
    std::vector<int64_t> c(d_, 0);
    while (true) {
        out.push_back(FieldElem(shared_from_this(), c));
        int i = 0;
        while (i < d_ && ++c[i] == p_) c[i++] = 0;
        if (i == d_) break;
    }
    return out;
}

bool FieldSpec::same(const FieldSpec& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
}

void FieldElem::check_same(const FieldElem& o) const {
    if (!spec_ || !o.spec_) throw std::invalid_argument("FieldElem: uninitialized element");
    if (!spec_->same(*o.spec_)) throw std::invalid_argument("FieldElem: field spec mismatch");
}

bool FieldElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](int64_t x) { return x == 0; });
}

bool FieldElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](int64_t x) { return x == 0; });
}

bool FieldElem::in_prime_subfield() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](int64_t x) { return x == 0; });
}

int64_t FieldElem::as_int() const {
    if (!in_prime_subfield())
        throw std::domain_error("FieldElem::as_int: element not in prime subfield");
    return c_[0];
}

FieldElem FieldElem::operator+(const FieldElem& o) const {
    check_same(o);
    std::vector<int64_t> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (c_[i] + o.c_[i]) % spec_->p_;
    return FieldElem(spec_, std::move(c));
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
    check_same(o);
    std::vector<int64_t> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (c_[i] - o.c_[i] + spec_->p_) % spec_->p_;
    return FieldElem(spec_, std::move(c));
}

FieldElem FieldElem::operator-() const {
    std::vector<int64_t> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (spec_->p_ - c_[i]) % spec_->p_;
    return FieldElem(spec_, std::move(c));
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
    check_same(o);
    const int64_t p = spec_->p_;
    const int d = spec_->d_;
    std::vector<int64_t> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (int j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + c_[i] * o.c_[j]) % p;
    }
    // reduce by the monic modulus
    for (int k = 2 * d - 2; k >= d; --k) {
        int64_t lead = prod[k];
        if (lead == 0) continue;
        prod[k] = 0;
        for (int j = 0; j < d; ++j)
            prod[k - d + j] = ((prod[k - d + j] - lead * spec_->modulus_[j]) % p + p) % p;
    }
    prod.resize(d);
    return FieldElem(spec_, std::move(prod));
}

FieldElem FieldElem::operator*(int64_t n) const {
    const int64_t p = spec_->p_;
    n = ((n % p) + p) % p;
    std::vector<int64_t> c(c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = (c_[i] * n) % p;
    return FieldElem(spec_, std::move(c));
}

FieldElem FieldElem::pow(int64_t e) const {
    if (e < 0) return inv().pow(-e);
    FieldElem r = spec_->one(), b = *this;
    while (e > 0) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FieldElem FieldElem::inv() const {
    if (is_zero()) throw std::domain_error("FieldElem::inv: division by zero");
    return pow(spec_->order() - 2);  // Fermat in F_{p^d}
}

bool FieldElem::operator==(const FieldElem& o) const {
    check_same(o);
    return c_ == o.c_;
}

std::string FieldElem::str() const {
    std::ostringstream ss;
    ss << "[";
    for (size_t i = 0; i < c_.size(); ++i) ss << (i ? "," : "") << c_[i];
    ss << "]";
    return ss.str();
}

FieldElem binom_field(const FieldElem& x, int64_t k) {
    const int64_t p = x.spec()->p();
    if (k < 0 || k >= p) throw std::invalid_argument("binom_field: k must satisfy 0 <= k < p");
    FieldElem r = x.spec()->one();
    for (int64_t i = 0; i < k; ++i) r = r * (x - x.spec()->from_int(i));
    return r * inverse_mod_p(factorial_mod_p(k, p), p);
}

std::vector<FieldElem> artin_schreier_roots(const FieldPtr& spec, int64_t c) {
    const int64_t p = spec->p();
    const FieldElem rhs = spec->from_int(c);  // c^p = c in F_p
    std::vector<FieldElem> roots;
    for (const FieldElem& x : spec->all_elements())
        if (x.frobenius() - x == rhs) roots.push_back(x);
    if (static_cast<int64_t>(roots.size()) != p)
        throw std::domain_error("artin_schreier_roots: field too small to contain all roots");
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace hue
