#include "hue/algebra.hpp"

#include <cassert>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "hue/modp.hpp"

namespace hue {

namespace {
using Terms = std::map<PbwMonomial, FieldElem>;
// Toral elements in the power basis: code -> coefficient, where digit u of the
// code is the exponent of binom(h,p^u).
using Toral = std::map<int64_t, FieldElem>;
}  // namespace

struct EngineContext::Caches {
    std::mutex mu;
    std::map<int64_t, Toral> delta;                          // t -> expansion of binom(h,t)
    std::map<std::pair<int64_t, int>, Toral> sigma_gen;      // (m mod q, u) -> binom(h+m,p^u)
    std::map<std::pair<int64_t, int64_t>, Toral> sigma_code; // (m mod q, code) -> shifted code
    std::map<std::pair<int, int64_t>, Terms> cross_f;        // (u, j) -> e^[[j]] f^(p^u)
};

EngineContext::EngineContext(const ChiForm& chi, FieldPtr field)
    : p_(chi.p), r_(chi.r), q_(ipow(chi.p, chi.r + 1)), chi_(chi), field_(std::move(field)),
      caches_(std::make_unique<Caches>()) {
    if (p_ < 3) throw std::invalid_argument("EngineContext: p must be > 2");
    if (chi.kind == ChiKind::semisimple && field_->d() < 2)
        throw std::invalid_argument("EngineContext: semisimple chi needs the Artin-Schreier field");
}

EngineContext::~EngineContext() = default;

EnginePtr EngineContext::make(const ChiForm& chi, FieldPtr field) {
    return EnginePtr(new EngineContext(chi, std::move(field)));
}

bool EngineContext::same(const EngineContext& o) const {
    return p_ == o.p_ && r_ == o.r_ && chi_.kind == o.chi_.kind && chi_.c == o.chi_.c &&
           field_->same(*o.field_);
}

void AlgebraElement::add_term(const PbwMonomial& m, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

AlgebraElement AlgebraElement::one(EnginePtr ctx) {
    return monomial(std::move(ctx), PbwMonomial{}, FieldElem());
}

AlgebraElement AlgebraElement::monomial(EnginePtr ctx, PbwMonomial m, FieldElem c) {
    AlgebraElement x(std::move(ctx));
    if (c.spec() == nullptr) c = x.ctx_->field()->one();
    x.add_term(m, c);
    return x;
}

AlgebraElement AlgebraElement::from_terms(
    EnginePtr ctx, const std::vector<std::pair<PbwMonomial, FieldElem>>& terms) {
    AlgebraElement x(std::move(ctx));
    for (const auto& [m, c] : terms) x.add_term(m, c);
    return x;
}

AlgebraElement AlgebraElement::operator+(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, c);
    return out;
}

AlgebraElement AlgebraElement::operator-(const AlgebraElement& o) const {
    AlgebraElement out = *this;
    for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
    return out;
}

AlgebraElement AlgebraElement::operator*(const FieldElem& c) const {
    AlgebraElement out(ctx_);
    for (const auto& [m, v] : terms_) out.add_term(m, v * c);
    return out;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const { return terms_ == o.terms_; }

std::string AlgebraElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) ss << " + ";
        first = false;
        ss << c.str() << "*f[" << m.i << "]h[" << m.k << "]e[" << m.j << "]";
    }
    return ss.str();
}

// ---------------------------------------------------------------------------
// Rewrite machinery
// ---------------------------------------------------------------------------

struct EngineOps {
    const EngineContext& C;
    const FieldPtr& K;
    int64_t p;
    int r;
    int64_t q;

    explicit EngineOps(const EngineContext& c)
        : C(c), K(c.field()), p(c.p()), r(c.r()), q(c.q()) {}

    int64_t digit(int64_t code, int u) const { return (code / ipow(p, u)) % p; }

    // chi(g^(p^u))^p for the three generator families: nonzero only at the
    // top level, and only on the family carrying the canonical form.
    FieldElem chi_scalar(GenKind kind, int u) const {
        if (u < r) return K->zero();
        int64_t c = 0;
        switch (kind) {
            case GenKind::e: c = C.chi().c_e(); break;
            case GenKind::h: c = C.chi().c_h(); break;
            case GenKind::f: c = C.chi().c_f(); break;
        }
        return K->from_int(c).pow(p);
    }

    // --- toral helpers -----------------------------------------------------

    static void toral_add(Toral& t, int64_t code, const FieldElem& c) {
        if (c.is_zero()) return;
        auto it = t.find(code);
        if (it == t.end()) {
            t.emplace(code, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }

    // Multiply a toral power-monomial by one factor binom(h,p^u).
    // Exponent overflow reduces through B^p = B + chi(B)^p.
    void toral_mul_gen(const Toral& in, int u, Toral& out) const {
        const int64_t pu = ipow(p, u);
        for (const auto& [code, c] : in) {
            int64_t d = digit(code, u);
            if (d + 1 < p) {
                toral_add(out, code + pu, c);
            } else {
                toral_add(out, code - (p - 2) * pu, c);  // exponent p -> B_u
                FieldElem s = chi_scalar(GenKind::h, u);
                if (!s.is_zero()) toral_add(out, code - (p - 1) * pu, c * s);
            }
        }
    }

    Toral toral_mul_code(const Toral& in, int64_t code2) const {
        Toral cur = in;
        for (int u = 0; u <= r; ++u) {
            int64_t d = digit(code2, u);
            for (int64_t rep = 0; rep < d; ++rep) {
                Toral next;
                toral_mul_gen(cur, u, next);
                cur = std::move(next);
            }
        }
        return cur;
    }

    Toral toral_mul(const Toral& a, const Toral& b) const {
        Toral out;
        for (const auto& [cb, vb] : b) {
            Toral scaled;
            for (const auto& [ca, va] : a) toral_add(scaled, ca, va * vb);
            Toral prod = toral_mul_code(scaled, cb);
            for (const auto& [c, v] : prod) toral_add(out, c, v);
        }
        return out;
    }

    // Plain binom(h,t) expanded in the power basis: per digit t_u, the falling
    // factorial (1/t_u!) B_u (B_u - 1) ... (B_u - t_u + 1) written out in
    // powers of B_u. Exponents stay < p, so no reduction is triggered here.
    Toral expand_delta(int64_t t) const {
        {
            std::lock_guard<std::mutex> lk(C.caches_->mu);
            auto it = C.caches_->delta.find(t);
            if (it != C.caches_->delta.end()) return it->second;
        }
        Toral result;
        toral_add(result, 0, K->one());
        for (int u = 0; u <= r; ++u) {
            int64_t d = digit(t, u);
            if (d == 0) continue;
            // falling factorial coefficients of x(x-1)...(x-d+1)/d! over F_p
            std::vector<int64_t> poly{1};  // coefficients of x^s
            for (int64_t cc = 0; cc < d; ++cc) {
                std::vector<int64_t> next(poly.size() + 1, 0);
                for (size_t s = 0; s < poly.size(); ++s) {
                    next[s + 1] = (next[s + 1] + poly[s]) % p;
                    next[s] = (next[s] + poly[s] * ((p - cc % p) % p)) % p;
                }
                poly = std::move(next);
            }
            int64_t dinv = inverse_mod_p(factorial_mod_p(d, p), p);
            Toral with_level;
            for (const auto& [code, c] : result)
                for (size_t s = 0; s < poly.size(); ++s) {
                    int64_t coef = (poly[s] * dinv) % p;
                    if (coef) toral_add(with_level, code + static_cast<int64_t>(s) * ipow(p, u),
                                        c * coef);
                }
            result = std::move(with_level);
        }
        std::lock_guard<std::mutex> lk(C.caches_->mu);
        return C.caches_->delta.emplace(t, std::move(result)).first->second;
    }

    // binom(h+m, p^u) = sum_t binom(m, p^u - t) binom(h, t), expanded.
    // Only m mod p^{r+1} matters since every lower index is < p^{r+1}.
    Toral sigma_gen(int64_t m, int u) const {
        int64_t mm = ((m % q) + q) % q;
        auto key = std::make_pair(mm, u);
        {
            std::lock_guard<std::mutex> lk(C.caches_->mu);
            auto it = C.caches_->sigma_gen.find(key);
            if (it != C.caches_->sigma_gen.end()) return it->second;
        }
        Toral out;
        const int64_t pu = ipow(p, u);
        for (int64_t t = 0; t <= pu; ++t) {
            int64_t b = binom_mod_p(mm, pu - t, p);
            if (b == 0) continue;
            for (const auto& [code, c] : expand_delta(t)) toral_add(out, code, c * b);
        }
        std::lock_guard<std::mutex> lk(C.caches_->mu);
        return C.caches_->sigma_gen.emplace(key, std::move(out)).first->second;
    }

    // The toral power-monomial `code`, with every binom(h,p^u) replaced by
    // binom(h+m, p^u). This is how toral factors commute past e^(n)/f^(n):
    // e^(n) T = sigma_{-2n}(T) e^(n) and T f^(n) = f^(n) sigma_{-2n}(T).
    Toral sigma_code(int64_t m, int64_t code) const {
        int64_t mm = ((m % q) + q) % q;
        if (mm == 0 || code == 0) {
            Toral t;
            toral_add(t, code, K->one());
            return t;
        }
        auto key = std::make_pair(mm, code);
        {
            std::lock_guard<std::mutex> lk(C.caches_->mu);
            auto it = C.caches_->sigma_code.find(key);
            if (it != C.caches_->sigma_code.end()) return it->second;
        }
        Toral out;
        toral_add(out, 0, K->one());
        for (int u = 0; u <= r; ++u) {
            int64_t d = digit(code, u);
            if (d == 0) continue;
            Toral g = sigma_gen(mm, u);
            for (int64_t rep = 0; rep < d; ++rep) out = toral_mul(out, g);
        }
        std::lock_guard<std::mutex> lk(C.caches_->mu);
        return C.caches_->sigma_code.emplace(key, std::move(out)).first->second;
    }

    // --- term assembly -----------------------------------------------------

    static void terms_add(Terms& t, const PbwMonomial& m, const FieldElem& c) {
        if (c.is_zero()) return;
        auto it = t.find(m);
        if (it == t.end()) {
            t.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }

    // Merge two f-codes (or two e-codes): exponents add digit-wise; an
    // exponent reaching p reduces via the central relation and multiplies the
    // coefficient by the chi-scalar of that level (zero except f at level r).
    // Returns false if the term dies.
    bool merge_code(GenKind kind, int64_t a, int64_t b, int64_t& out, FieldElem& coef) const {
        out = a;
        for (int u = 0; u <= r; ++u) {
            int64_t db = digit(b, u);
            if (db == 0) continue;
            int64_t da = digit(out, u);
            int64_t s = da + db;
            if (s < p) {
                out += db * ipow(p, u);
            } else {
                FieldElem cs = chi_scalar(kind, u);
                if (cs.is_zero()) return false;
                coef *= cs;
                out += (db - p) * ipow(p, u);  // digit becomes s - p
            }
        }
        return true;
    }

    // X * e^(p^u)
    Terms mul_E(const Terms& x, int u) const {
        Terms out;
        const int64_t pu = ipow(p, u);
        for (const auto& [m, c] : x) {
            if (digit(m.j, u) + 1 < p) {
                terms_add(out, PbwMonomial{m.i, m.k, m.j + pu}, c);
            }
            // overflow: (e^(p^u))^p = chi(e^(p^u))^p = 0, term dies
        }
        return out;
    }

    // X * binom(h,p^u): the factor crosses e^[[j]] picking up the -2j shift,
    // then merges into the toral part.
    Terms mul_B(const Terms& x, int u) const {
        Terms out;
        for (const auto& [m, c] : x) {
            for (const auto& [code, v] : sigma_gen(-2 * m.j, u)) {
                Toral single;
                toral_add(single, m.k, c * v);
                for (const auto& [kc, vc] : toral_mul_code(single, code))
                    terms_add(out, PbwMonomial{m.i, kc, m.j}, vc);
            }
        }
        return out;
    }

    // X * (toral element given in the power basis), crossing each monomial's
    // e-part.
    Terms mul_toral(const Terms& x, const Toral& t) const {
        Terms out;
        for (const auto& [m, c] : x) {
            for (const auto& [code, v] : t) {
                Toral crossed = sigma_code(-2 * m.j, code);
                for (const auto& [code2, v2] : crossed) {
                    Toral single;
                    toral_add(single, m.k, c * v * v2);
                    Toral prod = toral_mul_code(single, code2);
                    for (const auto& [kc, vc] : prod) terms_add(out, PbwMonomial{m.i, kc, m.j}, vc);
                }
            }
        }
        return out;
    }

    // X * binom(h+shift, t)
    Terms mul_plain_delta_shifted(const Terms& x, int64_t shift, int64_t t) const {
        Toral d;
        for (int64_t s = 0; s <= t; ++s) {
            int64_t b = binom_mod_p(shift, t - s, p);
            if (b == 0) continue;
            for (const auto& [code, c] : expand_delta(s)) toral_add(d, code, c * b);
        }
        return mul_toral(x, d);
    }

    // X * e^(m) (plain divided power)
    Terms mul_plain_e(const Terms& x, int64_t m) const {
        Terms cur = x;
        int64_t unit = 1;
        for (int u = 0; u <= r; ++u) {
            int64_t d = digit(m, u);
            unit = (unit * factorial_mod_p(d, p)) % p;
            for (int64_t rep = 0; rep < d; ++rep) cur = mul_E(cur, u);
        }
        return scale(cur, K->from_int(inverse_mod_p(unit, p)));
    }

    // X * f^(m) (plain divided power)
    Terms mul_plain_f(const Terms& x, int64_t m) const {
        Terms cur = x;
        int64_t unit = 1;
        for (int u = 0; u <= r; ++u) {
            int64_t d = digit(m, u);
            unit = (unit * factorial_mod_p(d, p)) % p;
            for (int64_t rep = 0; rep < d; ++rep) cur = mul_F(cur, u);
        }
        return scale(cur, K->from_int(inverse_mod_p(unit, p)));
    }

    Terms scale(const Terms& x, const FieldElem& c) const {
        Terms out;
        for (const auto& [m, v] : x) terms_add(out, m, v * c);
        return out;
    }

    // Normal form of e^[[j]] * f^(p^u). Writes e^[[j]] = e^[[j - p^w]] e^(p^w)
    // and applies the single commutation
    //   e^(p^w) f^(p^u) = sum_t f^(p^u - t) binom(h - p^w - p^u + 2t, t) e^(p^w - t),
    // whose factor grades keep every step below the filtration bound.
    Terms cross_f(int u, int64_t j) const {
        const int64_t pu = ipow(p, u);
        if (j == 0) {
            Terms t;
            terms_add(t, PbwMonomial{pu, 0, 0}, K->one());
            return t;
        }
        auto key = std::make_pair(u, j);
        {
            std::lock_guard<std::mutex> lk(C.caches_->mu);
            auto it = C.caches_->cross_f.find(key);
            if (it != C.caches_->cross_f.end()) return it->second;
        }
        int w = r;
        while (digit(j, w) == 0) --w;
        const int64_t pw = ipow(p, w);
        const int64_t j0 = j - pw;

        Terms x = mul_E(cross_f(u, j0), w);
        for (int64_t t = 1; t <= std::min(pw, pu); ++t) {
            Terms y;
            terms_add(y, PbwMonomial{0, 0, j0}, K->one());
            if (pu - t > 0) y = mul_plain_f(y, pu - t);
            y = mul_plain_delta_shifted(y, -pw - pu + 2 * t, t);
            if (pw - t > 0) y = mul_plain_e(y, pw - t);
            for (const auto& [m, c] : y) terms_add(x, m, c);
        }
        std::lock_guard<std::mutex> lk(C.caches_->mu);
        return C.caches_->cross_f.emplace(key, std::move(x)).first->second;
    }

    // X * f^(p^u)
    Terms mul_F(const Terms& x, int u) const {
        Terms out;
        for (const auto& [m, c] : x) {
            Terms crossed = cross_f(u, m.j);
            for (const auto& [m2, c2] : crossed) {
                // prefix multiply: f^[[i]] B^[[k]] * f^[[i2]] B^[[k2]] e^[[j2]]
                FieldElem coef = c * c2;
                int64_t imerged = 0;
                if (!merge_code(GenKind::f, m.i, m2.i, imerged, coef)) continue;
                Toral shiftedk = sigma_code(-2 * m2.i, m.k);
                for (const auto& [kc, kv] : shiftedk) {
                    Toral single;
                    toral_add(single, kc, coef * kv);
                    Toral prod = toral_mul_code(single, m2.k);
                    for (const auto& [kc2, kv2] : prod)
                        terms_add(out, PbwMonomial{imerged, kc2, m2.j}, kv2);
                }
            }
        }
        return out;
    }
};

// ---------------------------------------------------------------------------
// Public operations
// ---------------------------------------------------------------------------

AlgebraElement generator(const EnginePtr& ctx, GenKind kind, int level) {
    if (level < 0 || level > ctx->r())
        throw std::out_of_range("generator: level must satisfy 0 <= level <= r");
    int64_t pu = ipow(ctx->p(), level);
    PbwMonomial m;
    switch (kind) {
        case GenKind::f: m.i = pu; break;
        case GenKind::h: m.k = pu; break;
        case GenKind::e: m.j = pu; break;
    }
    return AlgebraElement::monomial(ctx, m, ctx->field()->one());
}

AlgebraElement plain_divided_power(const EnginePtr& ctx, GenKind kind, int64_t m) {
    if (m < 0 || m >= ctx->q()) throw std::out_of_range("plain_divided_power: index out of range");
    EngineOps ops(*ctx);
    if (kind == GenKind::h) {
        AlgebraElement x(ctx);
        for (const auto& [code, c] : ops.expand_delta(m)) x.add_term(PbwMonomial{0, code, 0}, c);
        return x;
    }
    int64_t unit = 1;
    for (int u = 0; u <= ctx->r(); ++u)
        unit = (unit * factorial_mod_p(ops.digit(m, u), ctx->p())) % ctx->p();
    FieldElem c = ctx->field()->from_int(inverse_mod_p(unit, ctx->p()));
    PbwMonomial mono;
    if (kind == GenKind::e)
        mono.j = m;
    else
        mono.i = m;
    return AlgebraElement::monomial(ctx, mono, c);
}

AlgebraElement shifted_h_binom(const EnginePtr& ctx, int64_t shift, int64_t t) {
    if (t < 0 || t >= ctx->q()) throw std::out_of_range("shifted_h_binom: t out of range");
    EngineOps ops(*ctx);
    AlgebraElement x(ctx);
    for (int64_t s = 0; s <= t; ++s) {
        int64_t b = binom_mod_p(shift, t - s, ctx->p());
        if (b == 0) continue;
        for (const auto& [code, c] : ops.expand_delta(s)) x.add_term(PbwMonomial{0, code, 0}, c * b);
    }
    return x;
}

AlgebraElement pbw_multiply(const AlgebraElement& x, const AlgebraElement& y) {
    if (!x.ctx()->same(*y.ctx())) throw std::invalid_argument("pbw_multiply: context mismatch");
    const EnginePtr& ctx = x.ctx();
    EngineOps ops(*ctx);
    AlgebraElement out(ctx);
    for (const auto& [m2, c2] : y.terms()) {
        Terms cur;
        for (const auto& [m1, c1] : x.terms()) EngineOps::terms_add(cur, m1, c1 * c2);
        for (int u = 0; u <= ctx->r(); ++u)
            for (int64_t rep = 0; rep < ops.digit(m2.i, u); ++rep) cur = ops.mul_F(cur, u);
        for (int u = 0; u <= ctx->r(); ++u)
            for (int64_t rep = 0; rep < ops.digit(m2.k, u); ++rep) cur = ops.mul_B(cur, u);
        for (int u = 0; u <= ctx->r(); ++u)
            for (int64_t rep = 0; rep < ops.digit(m2.j, u); ++rep) cur = ops.mul_E(cur, u);
        for (const auto& [m, c] : cur) out.add_term(m, c);
    }
    return out;
}

Matrix act_on_module(const AlgebraElement& x, const ModuleRep& rep) {
    const EnginePtr& ctx = x.ctx();
    if (rep.p != ctx->p() || rep.r != ctx->r() || !rep.field->same(*ctx->field()))
        throw std::invalid_argument("act_on_module: context mismatch");
    EngineOps ops(*ctx);
    Matrix acc(rep.field, rep.dim, rep.dim);
    for (const auto& [m, c] : x.terms()) {
        Matrix term = Matrix::identity(rep.field, rep.dim);
        for (int u = 0; u <= ctx->r(); ++u)
            for (int64_t rep_ = 0; rep_ < ops.digit(m.i, u); ++rep_) term = term * rep.F[u];
        for (int u = 0; u <= ctx->r(); ++u)
            for (int64_t rep_ = 0; rep_ < ops.digit(m.k, u); ++rep_) term = term * rep.H[u];
        for (int u = 0; u <= ctx->r(); ++u)
            for (int64_t rep_ = 0; rep_ < ops.digit(m.j, u); ++rep_) term = term * rep.E[u];
        acc = acc + term * c;
    }
    return acc;
}

CentralityReport verify_centrality(const ChiForm& chi, const ModuleRep& rep) {
    CentralityReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };
    const int64_t p = chi.p;
    const auto& K = rep.field;
    Matrix I = Matrix::identity(K, rep.dim);
    Matrix Ce = rep.E[rep.r].pow(p);
    Matrix Cf = rep.F[rep.r].pow(p);
    Matrix Ch = rep.H[rep.r].pow(p) - rep.H[rep.r];
    if (!Ce.is_zero()) fail("E_r^p != 0");
    if (!(Cf == I * K->from_int(chi.c_f()).pow(p))) fail("F_r^p != chi_f^p I");
    if (!(Ch == I * K->from_int(chi.c_h()).pow(p))) fail("H_r^p - H_r != chi_h^p I");
    for (const Matrix* g : rep.all_generators()) {
        if (!(Ce * *g == *g * Ce)) fail("E_r^p does not commute with a generator");
        if (!(Cf * *g == *g * Cf)) fail("F_r^p does not commute with a generator");
        if (!(Ch * *g == *g * Ch)) fail("H_r^p - H_r does not commute with a generator");
    }
    return report;
}

}  // namespace hue
