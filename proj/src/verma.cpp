#include "hue/verma.hpp"

#include <sstream>
#include <stdexcept>

#include "hue/modp.hpp"

namespace hue {

namespace {

int64_t code_digit(int64_t code, int u, int64_t p) { return (code / ipow(p, u)) % p; }

int64_t digit_factorial_unit(int64_t m, int r, int64_t p) {
    int64_t unit = 1;
    for (int u = 0; u <= r; ++u) unit = (unit * factorial_mod_p(code_digit(m, u, p), p)) % p;
    return unit;
}

}  // namespace

ModuleRep baby_verma(const ChiForm& chi, const Weight& lambda) {
    if (!lambda.valid_for(chi))
        throw std::invalid_argument("baby_verma: weight does not lie in Lambda_chi^r");
    const int64_t p = chi.p;
    const int r = chi.r;
    const int64_t q = ipow(p, r + 1);
    const FieldPtr& K = lambda.field();

    ModuleRep rep;
    rep.p = p;
    rep.r = r;
    rep.dim = static_cast<int>(q);
    rep.field = K;
    rep.chi = chi;
    rep.weight = lambda;
    rep.basis_index.resize(q);
    for (int64_t k = 0; k < q; ++k) rep.basis_index[k] = k;

    const FieldElem chi_f_p = K->from_int(chi.c_f()).pow(p);
    const FieldElem wrap_coeff = chi_f_p * inverse_mod_p(factorial_mod_p(p - 1, p), p);

    for (int j = 0; j <= r; ++j) {
        const int64_t pj = ipow(p, j);
        Matrix E(K, rep.dim, rep.dim), H(K, rep.dim, rep.dim), F(K, rep.dim, rep.dim);
        for (int64_t k = 0; k < q; ++k) {
            // binom(h,p^j) v_k = lambda(binom(h-2k, p^j)) v_k
            H.at(k, k) = lambda.lambda_binom_shifted(-2 * k, pj);
            // e^(p^j) v_k = lambda(binom(h-k+p^j, p^j)) v_{k-p^j} for k >= p^j
            if (k >= pj) E.at(k - pj, k) = lambda.lambda_binom_shifted(pj - k, pj);
            // f^(p^j) v_k: digit bump with binomial coefficient; at the top
            // level the index wraps and picks up chi(f^(p^r))^p / (p-1)!
            if (k + pj < q) {
                int64_t b = binom_mod_p(k + pj, pj, p);
                if (b) F.at(k + pj, k) = K->from_int(b);
            } else if (j == r && !wrap_coeff.is_zero()) {
                F.at(k + pj - q, k) = wrap_coeff;
            }
        }
        rep.E.push_back(std::move(E));
        rep.H.push_back(std::move(H));
        rep.F.push_back(std::move(F));
    }
    return rep;
}

ModuleRep baby_verma_via_engine(const ChiForm& chi, const Weight& lambda) {
    if (!lambda.valid_for(chi))
        throw std::invalid_argument("baby_verma_via_engine: weight does not lie in Lambda_chi^r");
    const int64_t p = chi.p;
    const int r = chi.r;
    const int64_t q = ipow(p, r + 1);
    const FieldPtr& K = lambda.field();
    EnginePtr ctx = EngineContext::make(chi, K);

    ModuleRep rep;
    rep.p = p;
    rep.r = r;
    rep.dim = static_cast<int>(q);
    rep.field = K;
    rep.chi = chi;
    rep.weight = lambda;
    rep.basis_index.resize(q);
    for (int64_t k = 0; k < q; ++k) rep.basis_index[k] = k;

    // lambda extended multiplicatively to toral power monomials
    auto lambda_pow = [&](int64_t code) {
        FieldElem v = K->one();
        for (int u = 0; u <= r; ++u) {
            int64_t d = code_digit(code, u, p);
            if (d) v *= lambda.coord(u).pow(d);
        }
        return v;
    };

    for (int fam = 0; fam < 3; ++fam) {
        for (int j = 0; j <= r; ++j) {
            Matrix M(K, rep.dim, rep.dim);
            GenKind kind = fam == 0 ? GenKind::e : fam == 1 ? GenKind::h : GenKind::f;
            AlgebraElement g = generator(ctx, kind, j);
            for (int64_t k = 0; k < q; ++k) {
                // v_k = f^(k) (x) m_0
                AlgebraElement x = pbw_multiply(g, plain_divided_power(ctx, GenKind::f, k));
                for (const auto& [m, c] : x.terms()) {
                    if (m.j != 0) continue;  // e-part kills m_0
                    FieldElem coeff = c * digit_factorial_unit(m.i, r, p) * lambda_pow(m.k);
                    if (!coeff.is_zero()) M.at(m.i, k) += coeff;
                }
            }
            (fam == 0 ? rep.E : fam == 1 ? rep.H : rep.F).push_back(std::move(M));
        }
    }
    return rep;
}

ModuleRep teenage_verma(const ModuleRep& N, const FieldElem& lambda_r, const ChiForm& chi) {
    const int64_t p = chi.p;
    const int r = chi.r;
    if (r < 1) throw std::invalid_argument("teenage_verma: needs r >= 1");
    if (N.r != r - 1 || !N.chi.is_zero())
        throw std::invalid_argument("teenage_verma: N must be a chi = 0 module at level r-1");
    if (!N.weight || N.basis_index.size() != static_cast<size_t>(N.dim))
        throw std::invalid_argument("teenage_verma: N needs weight and Verma basis labels");

    const FieldPtr K = lambda_r.spec();
    // (lambda_{r-1}, lambda_r) must lie in Lambda_chi^r
    std::vector<int64_t> low = N.weight->low();
    low.push_back(N.weight->top().as_int());
    Weight lambda(p, r, low, lambda_r);
    if (!lambda.valid_for(chi))
        throw std::invalid_argument(
            "teenage_verma: lambda_r does not extend N's weight into Lambda_chi^r");

    ModuleRep Nk = embed_rep(N, K);
    const int dimN = N.dim;
    const int64_t pr = ipow(p, r);

    // binom(h, p^r) acts on N by the scalars it takes on f^(z) (x) m_0
    Matrix Hr(K, dimN, dimN);
    for (int b = 0; b < dimN; ++b)
        Hr.at(b, b) = lambda.lambda_binom_shifted(-2 * N.basis_index[b], pr);

    EnginePtr ctx = EngineContext::make(chi, K);

    ModuleRep rep;
    rep.p = p;
    rep.r = r;
    rep.dim = static_cast<int>(p) * dimN;
    rep.field = K;
    rep.chi = chi;
    rep.weight = lambda;
    rep.basis_index.resize(rep.dim);
    for (int64_t a = 0; a < p; ++a)
        for (int b = 0; b < dimN; ++b) rep.basis_index[a * dimN + b] = a * pr + N.basis_index[b];

    // the operator on N for the Borel part of a PBW monomial:
    // f^(z) B^[[k]] e^[[j]] with z, j below p^r and the toral top acting by Hr
    auto borel_op = [&](int64_t z, int64_t kcode, int64_t jcode) {
        Matrix op = Matrix::identity(K, dimN);
        for (int u = 0; u < r; ++u)
            for (int64_t t = 0; t < code_digit(z, u, p); ++t) op = op * Nk.F[u];
        for (int u = 0; u <= r; ++u) {
            const Matrix& Hu = (u == r) ? Hr : Nk.H[u];
            for (int64_t t = 0; t < code_digit(kcode, u, p); ++t) op = op * Hu;
        }
        for (int u = 0; u < r; ++u)
            for (int64_t t = 0; t < code_digit(jcode, u, p); ++t) op = op * Nk.E[u];
        return op;
    };

    for (int fam = 0; fam < 3; ++fam) {
        for (int j = 0; j <= r; ++j) {
            Matrix M(K, rep.dim, rep.dim);
            GenKind kind = fam == 0 ? GenKind::e : fam == 1 ? GenKind::h : GenKind::f;
            AlgebraElement g = generator(ctx, kind, j);
            for (int64_t a = 0; a < p; ++a) {
                // g * f^[[a p^r]]; each monomial splits as f^(a' p^r) * borel
                // part, and the digit-factorial units cancel except a'!/a!
                AlgebraElement x = pbw_multiply(
                    g, AlgebraElement::monomial(ctx, PbwMonomial{a * pr, 0, 0}, K->one()));
                int64_t inv_afact = inverse_mod_p(factorial_mod_p(a, p), p);
                for (const auto& [m, c] : x.terms()) {
                    if (code_digit(m.j, r, p) > 0) continue;  // e^(p^r) kills N
                    int64_t a2 = m.i / pr;
                    int64_t z = m.i % pr;
                    FieldElem scale = c * ((factorial_mod_p(a2, p) * inv_afact) % p);
                    if (scale.is_zero()) continue;
                    Matrix op = borel_op(z, m.k, m.j) * scale;
                    for (int row = 0; row < dimN; ++row)
                        for (int col = 0; col < dimN; ++col)
                            if (!op.at(row, col).is_zero())
                                M.at(a2 * dimN + row, a * dimN + col) += op.at(row, col);
                }
            }
            (fam == 0 ? rep.E : fam == 1 ? rep.H : rep.F).push_back(std::move(M));
        }
    }
    return rep;
}

ModuleRep lift_module(const ModuleRep& rep, int target_r) {
    if (target_r < rep.r) throw std::invalid_argument("lift_module: target level below source");
    const int shift = target_r - rep.r;
    ModuleRep out;
    out.p = rep.p;
    out.r = target_r;
    out.dim = rep.dim;
    out.field = rep.field;
    out.chi = standard_chi(rep.chi.kind, rep.p, target_r, rep.chi.c);
    Matrix Z(rep.field, rep.dim, rep.dim);
    for (int j = 0; j <= target_r; ++j) {
        out.E.push_back(j < shift ? Z : rep.E[j - shift]);
        out.H.push_back(j < shift ? Z : rep.H[j - shift]);
        out.F.push_back(j < shift ? Z : rep.F[j - shift]);
    }
    auto check = verify_relations(out);
    if (!check.ok)
        throw std::runtime_error("lift_module: lifted module fails relation check: " +
                                 check.violations.front());
    return out;
}

Matrix divided_e(const ModuleRep& rep, int64_t m) {
    Matrix M = Matrix::identity(rep.field, rep.dim);
    for (int u = 0; u <= rep.r; ++u)
        for (int64_t t = 0; t < code_digit(m, u, rep.p); ++t) M = M * rep.E[u];
    return M * rep.field->from_int(inverse_mod_p(digit_factorial_unit(m, rep.r, rep.p), rep.p));
}

Matrix divided_f(const ModuleRep& rep, int64_t m) {
    Matrix M = Matrix::identity(rep.field, rep.dim);
    for (int u = 0; u <= rep.r; ++u)
        for (int64_t t = 0; t < code_digit(m, u, rep.p); ++t) M = M * rep.F[u];
    return M * rep.field->from_int(inverse_mod_p(digit_factorial_unit(m, rep.r, rep.p), rep.p));
}

Matrix divided_h(const ModuleRep& rep, int64_t m) {
    const int64_t p = rep.p;
    Matrix M = Matrix::identity(rep.field, rep.dim);
    for (int u = 0; u <= rep.r; ++u) {
        int64_t d = code_digit(m, u, p);
        if (d == 0) continue;
        // falling factorial of binom(h,p^u), divided by d!
        Matrix part = Matrix::identity(rep.field, rep.dim);
        for (int64_t c = 0; c < d; ++c)
            part = part * (rep.H[u] - Matrix::identity(rep.field, rep.dim) * rep.field->from_int(c));
        M = M * part * rep.field->from_int(inverse_mod_p(factorial_mod_p(d, p), p));
    }
    return M;
}

Matrix divided_h_shifted(const ModuleRep& rep, int64_t shift, int64_t t) {
    Matrix M(rep.field, rep.dim, rep.dim);
    for (int64_t s = 0; s <= t; ++s) {
        int64_t b = binom_mod_p(shift, t - s, rep.p);
        if (b) M = M + divided_h(rep, s) * rep.field->from_int(b);
    }
    return M;
}

RelationReport verify_relations(const ModuleRep& rep) {
    RelationReport report;
    auto fail = [&](const std::string& msg) {
        report.ok = false;
        report.violations.push_back(msg);
    };
    const int64_t p = rep.p;
    const int r = rep.r;
    const FieldPtr& K = rep.field;
    const Matrix I = Matrix::identity(K, rep.dim);
    auto name = [](const char* fam, int j) {
        std::ostringstream ss;
        ss << fam << "_" << j;
        return ss.str();
    };

    // p-th power relations: nilpotency/idempotency below level r, the
    // chi-scalars at level r
    for (int j = 0; j <= r; ++j) {
        Matrix Ep = rep.E[j].pow(p);
        Matrix Fp = rep.F[j].pow(p);
        Matrix Hp = rep.H[j].pow(p);
        if (j < r) {
            if (!Ep.is_zero()) fail(name("E", j) + "^p != 0");
            if (!Fp.is_zero()) fail(name("F", j) + "^p != 0");
            if (!(Hp == rep.H[j])) fail(name("H", j) + "^p != " + name("H", j));
        } else {
            if (!Ep.is_zero()) fail("E_r^p != 0");
            if (!(Fp == I * K->from_int(rep.chi.c_f()).pow(p))) fail("F_r^p != chi_f^p I");
            if (!(Hp - rep.H[j] == I * K->from_int(rep.chi.c_h()).pow(p)))
                fail("H_r^p - H_r != chi_h^p I");
        }
    }

    // family-internal commutativity
    for (int j = 0; j <= r; ++j)
        for (int u = j + 1; u <= r; ++u) {
            if (!(rep.E[j] * rep.E[u] == rep.E[u] * rep.E[j]))
                fail("[" + name("E", j) + "," + name("E", u) + "] != 0");
            if (!(rep.F[j] * rep.F[u] == rep.F[u] * rep.F[j]))
                fail("[" + name("F", j) + "," + name("F", u) + "] != 0");
            if (!(rep.H[j] * rep.H[u] == rep.H[u] * rep.H[j]))
                fail("[" + name("H", j) + "," + name("H", u) + "] != 0");
        }

    // toral shifts: binom(h,p^u) e^(p^j) = e^(p^j) binom(h+2p^j, p^u)
    for (int u = 0; u <= r; ++u)
        for (int j = 0; j <= r; ++j) {
            const int64_t pj = ipow(p, j), pu = ipow(p, u);
            if (!(rep.H[u] * rep.E[j] == rep.E[j] * divided_h_shifted(rep, 2 * pj, pu)))
                fail(name("H", u) + " past " + name("E", j) + " shift relation fails");
            if (!(rep.H[u] * rep.F[j] == rep.F[j] * divided_h_shifted(rep, -2 * pj, pu)))
                fail(name("H", u) + " past " + name("F", j) + " shift relation fails");
        }

    // e-f straightening:
    // e^(p^j) f^(p^u) = sum_t f^(p^u-t) binom(h-p^j-p^u+2t, t) e^(p^j-t)
    for (int j = 0; j <= r; ++j)
        for (int u = 0; u <= r; ++u) {
            const int64_t pj = ipow(p, j), pu = ipow(p, u);
            Matrix rhs(K, rep.dim, rep.dim);
            for (int64_t t = 0; t <= std::min(pj, pu); ++t)
                rhs = rhs + divided_f(rep, pu - t) * divided_h_shifted(rep, -pj - pu + 2 * t, t) *
                                divided_e(rep, pj - t);
            if (!(rep.E[j] * rep.F[u] == rhs))
                fail(name("E", j) + " " + name("F", u) + " straightening relation fails");
        }

    // distinguished-basis diagonality for Verma-type constructions
    if (!rep.basis_index.empty())
        for (int j = 0; j <= r; ++j)
            if (!rep.H[j].is_diagonal()) fail(name("H", j) + " not diagonal in the Verma basis");

    return report;
}

ModuleRep embed_rep(const ModuleRep& rep, const FieldPtr& K) {
    if (rep.field->same(*K)) return rep;
    if (rep.field->d() != 1 || rep.field->p() != K->p())
        throw std::invalid_argument("embed_rep: only F_p -> extension embeddings supported");
    ModuleRep out;
    out.p = rep.p;
    out.r = rep.r;
    out.dim = rep.dim;
    out.field = K;
    out.chi = rep.chi;
    out.basis_index = rep.basis_index;
    out.weight = std::nullopt;  // the weight stays tied to the original field
    auto conv = [&](const Matrix& m) {
        Matrix o(K, m.rows(), m.cols());
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                if (!m.at(i, j).is_zero()) o.at(i, j) = K->from_int(m.at(i, j).coeffs()[0]);
        return o;
    };
    for (int j = 0; j <= rep.r; ++j) {
        out.E.push_back(conv(rep.E[j]));
        out.H.push_back(conv(rep.H[j]));
        out.F.push_back(conv(rep.F[j]));
    }
    return out;
}

}  // namespace hue
