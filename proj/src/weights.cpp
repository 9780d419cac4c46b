#include "hue/weights.hpp"

#include <sstream>
#include <stdexcept>

#include "hue/modp.hpp"

namespace hue {

const char* chi_kind_name(ChiKind k) {
    switch (k) {
        case ChiKind::zero: return "zero";
        case ChiKind::nilpotent: return "nilpotent";
        case ChiKind::semisimple: return "semisimple";
    }
    return "?";
}

ChiForm standard_chi(ChiKind kind, int64_t p, int r, int64_t c) {
    if (p < 3) throw std::invalid_argument("standard_chi: p must be > 2");
    if (r < 0) throw std::invalid_argument("standard_chi: r must be >= 0");
    c = ((c % p) + p) % p;
    if (kind == ChiKind::semisimple && c == 0)
        throw std::invalid_argument("standard_chi: semisimple requires c != 0 (c = 0 is the zero form)");
    ChiForm chi;
    chi.kind = kind;
    chi.p = p;
    chi.r = r;
    chi.c = (kind == ChiKind::semisimple) ? c : 0;
    return chi;
}

FieldPtr field_for(const ChiForm& chi) {
    if (chi.kind == ChiKind::semisimple) return FieldSpec::artin_schreier(chi.p, chi.c);
    return FieldSpec::fp(chi.p);
}

Weight::Weight(int64_t p, int r, std::vector<int64_t> low, FieldElem top)
    : p_(p), r_(r), q_(ipow(p, r + 1)), low_(std::move(low)), top_(std::move(top)) {
    if (static_cast<int>(low_.size()) != r_)
        throw std::invalid_argument("Weight: need exactly r low coordinates");
    for (int64_t& x : low_) {
        x = ((x % p_) + p_) % p_;
    }
    // lambda(binom(h,k)) = prod_i binom(lambda_i, k_i) over the digits of k
    table_.reserve(q_);
    const FieldPtr& K = top_.spec();
    for (int64_t k = 0; k < q_; ++k) {
        FieldElem v = K->one();
        int64_t rest = k;
        for (int i = 0; i <= r_ && !v.is_zero(); ++i) {
            int64_t d = rest % p_;
            rest /= p_;
            if (d != 0) v = v * binom_field(coord(i), d);
        }
        table_.push_back(v);
    }
}

FieldElem Weight::coord(int i) const {
    if (i < 0 || i > r_) throw std::out_of_range("Weight::coord");
    if (i == r_) return top_;
    return top_.spec()->from_int(low_[i]);
}

const FieldElem& Weight::lambda_binom(int64_t k) const {
    if (k < 0 || k >= q_) throw std::out_of_range("Weight::lambda_binom: k out of range");
    return table_[k];
}

FieldElem Weight::lambda_binom_shifted(int64_t m, int64_t k) const {
    if (k < 0 || k >= q_) throw std::out_of_range("Weight::lambda_binom_shifted: k out of range");
    if (m == 0) return table_[k];
    FieldElem acc = top_.spec()->zero();
    for (int64_t t = 0; t <= k; ++t) {
        int64_t b = binom_mod_p(m, k - t, p_);
        if (b != 0 && !table_[t].is_zero()) acc += table_[t] * b;
    }
    return acc;
}

bool Weight::valid_for(const ChiForm& chi) const {
    if (chi.p != p_ || chi.r != r_) return false;
    // low coordinates are already in {0..p-1} = F_p by construction
    FieldElem want = top_.spec()->from_int(chi.c_h()).pow(p_);
    return top_.frobenius() - top_ == want;
}

bool Weight::operator==(const Weight& o) const {
    return p_ == o.p_ && r_ == o.r_ && low_ == o.low_ && top_ == o.top_;
}

std::string Weight::str() const {
    std::ostringstream ss;
    ss << "(";
    for (int i = 0; i < r_; ++i) ss << low_[i] << ",";
    ss << top_.str() << ")";
    return ss.str();
}

std::vector<Weight> enumerate_weights(const ChiForm& chi, const FieldPtr& field) {
    const int64_t p = chi.p;
    const int r = chi.r;
    auto roots = artin_schreier_roots(field, chi.c_h());  // throws if field too small
    std::vector<Weight> out;
    out.reserve(ipow(p, r + 1));
    std::vector<int64_t> low(r, 0);
    while (true) {
        for (const FieldElem& rt : roots) out.emplace_back(p, r, low, rt);
        int i = 0;
        while (i < r && ++low[i] == p) low[i++] = 0;
        if (i == r) break;
    }
    return out;
}

}  // namespace hue
