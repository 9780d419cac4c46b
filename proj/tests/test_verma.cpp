#include "hue/verma.hpp"

#include <doctest.h>

#include <stdexcept>

#include "hue/modp.hpp"

using namespace hue;

namespace {

// Frozen classical r=0, p=3, chi=0, lambda=2 restricted Verma: v_k = f^(k) v,
// h v_k = (lambda - 2k) v_k, e v_k = (lambda - k + 1) v_{k-1}, f v_k = (k+1) v_{k+1}.
// Worked out by hand from the classical sl2 action on f^k v / k!.
void check_classical(const ModuleRep& rep) {
    auto K = rep.field;
    REQUIRE(rep.dim == 3);
    int64_t h_want[3] = {2, 0, 1};   // 2, 0, -2 mod 3
    int64_t e_want[3] = {0, 2, 1};   // e v_1 = 2 v_0, e v_2 = (2-1) v_1
    int64_t f_want[3] = {1, 2, 0};   // f v_0 = v_1, f v_1 = 2 v_2, f v_2 = 0
    for (int k = 0; k < 3; ++k) {
        CHECK(rep.H[0].at(k, k) == K->from_int(h_want[k]));
        if (k > 0) CHECK(rep.E[0].at(k - 1, k) == K->from_int(e_want[k]));
        if (k < 2) CHECK(rep.F[0].at(k + 1, k) == K->from_int(f_want[k]));
    }
}

}  // namespace

TEST_CASE("classical restricted Verma at r=0 (independent hand computation)") {
    auto chi = standard_chi(ChiKind::zero, 3, 0);
    auto K = field_for(chi);
    Weight lam(3, 0, {}, K->from_int(2));
    check_classical(baby_verma(chi, lam));
}

TEST_CASE("baby Verma basic shape and relations") {
    for (int64_t p : {3, 5})
        for (int r : {0, 1})
            for (auto kind : {ChiKind::zero, ChiKind::nilpotent, ChiKind::semisimple}) {
                auto chi = standard_chi(kind, p, r, kind == ChiKind::semisimple ? 1 : 0);
                auto K = field_for(chi);
                auto W = enumerate_weights(chi, K);
                const auto& w = W[W.size() / 2];
                auto rep = baby_verma(chi, w);
                CHECK(rep.dim == ipow(p, r + 1));
                auto rel = verify_relations(rep);
                if (!rel.ok) {
                    for (const auto& v : rel.violations) MESSAGE(v);
                }
                CHECK(rel.ok);
            }
}

TEST_CASE("H eigenvalue of v_k is the shifted weight value") {
    auto chi = standard_chi(ChiKind::nilpotent, 3, 1);
    auto K = field_for(chi);
    for (const auto& w : enumerate_weights(chi, K)) {
        auto rep = baby_verma(chi, w);
        for (int j = 0; j <= 1; ++j)
            for (int64_t k = 0; k < 9; ++k)
                CHECK(rep.H[j].at(k, k) == w.lambda_binom_shifted(-2 * k, ipow(3, j)));
    }
}

TEST_CASE("e^(t) v_t = lambda(binom(h,t)) v_0") {
    auto chi = standard_chi(ChiKind::semisimple, 3, 1, 1);
    auto K = field_for(chi);
    for (const auto& w : enumerate_weights(chi, K)) {
        auto rep = baby_verma(chi, w);
        for (int64_t t = 0; t < 9; ++t) {
            auto Et = divided_e(rep, t);
            CHECK(Et.at(0, t) == w.lambda_binom(t));
        }
    }
}

TEST_CASE("top-level f wrap: f^(p^r) v_{p^{r+1}-p^r} = (1/(p-1)!) chi_f^p v_0") {
    auto chi = standard_chi(ChiKind::nilpotent, 3, 1);
    auto K = field_for(chi);
    auto W = enumerate_weights(chi, K);
    auto rep = baby_verma(chi, W[0]);
    // 1/(p-1)! = 1/2 = 2 in F_3, and chi_f^p = 1
    CHECK(rep.F[1].at(0, 6) == K->from_int(2));
    // zero and semisimple chi kill the wrap entirely
    auto chi0 = standard_chi(ChiKind::zero, 3, 1);
    auto rep0 = baby_verma(chi0, enumerate_weights(chi0, field_for(chi0))[0]);
    CHECK(rep0.F[1].pow(3).is_zero());
}

TEST_CASE("invalid weight is rejected") {
    auto chi_ss = standard_chi(ChiKind::semisimple, 3, 1, 1);
    auto K = field_for(chi_ss);
    // top coordinate in F_p cannot satisfy the semisimple membership equation
    Weight bad(3, 1, {0}, K->from_int(1));
    CHECK_THROWS_AS(baby_verma(chi_ss, bad), std::invalid_argument);
}

TEST_CASE("verify_relations detects corruption") {
    auto chi = standard_chi(ChiKind::nilpotent, 3, 1);
    auto rep = baby_verma(chi, enumerate_weights(chi, field_for(chi))[3]);
    REQUIRE(verify_relations(rep).ok);
    rep.E[0].at(2, 1) += rep.field->one();
    CHECK_FALSE(verify_relations(rep).ok);
}

TEST_CASE("lift_module") {
    auto chi0 = standard_chi(ChiKind::zero, 3, 0);
    auto K = field_for(chi0);

    // lifting the trivial module stays trivial
    ModuleRep triv;
    triv.p = 3;
    triv.r = 0;
    triv.dim = 1;
    triv.field = K;
    triv.chi = chi0;
    triv.E = {Matrix(K, 1, 1)};
    triv.H = {Matrix(K, 1, 1)};
    triv.F = {Matrix(K, 1, 1)};
    auto lifted_triv = lift_module(triv, 2);
    CHECK(lifted_triv.dim == 1);
    for (int j = 0; j <= 2; ++j) {
        CHECK(lifted_triv.E[j].is_zero());
        CHECK(lifted_triv.H[j].is_zero());
        CHECK(lifted_triv.F[j].is_zero());
    }

    // lifting the r=0 Steinberg module (lambda = p-1) to r=1 keeps dim p and
    // kills the level-0 generators
    Weight stein(3, 0, {}, K->from_int(2));
    auto st = baby_verma(chi0, stein);
    auto lifted = lift_module(st, 1);
    CHECK(lifted.dim == 3);
    CHECK(lifted.E[0].is_zero());
    CHECK(lifted.H[0].is_zero());
    CHECK(lifted.F[0].is_zero());
    CHECK(lifted.E[1] == st.E[0]);
    CHECK(verify_relations(lifted).ok);

    // composite lift equals one-shot lift
    auto two_step = lift_module(lift_module(st, 1), 2);
    auto one_step = lift_module(st, 2);
    for (int j = 0; j <= 2; ++j) {
        CHECK(two_step.E[j] == one_step.E[j]);
        CHECK(two_step.H[j] == one_step.H[j]);
        CHECK(two_step.F[j] == one_step.F[j]);
    }
}

TEST_CASE("teenage Verma shape and relations, p=3, r=1") {
    // N runs over the chi = 0 level-0 irreducibles; these are the baby Vermas
    // at r=0 truncated to their irreducible quotients. At r=0 and chi = 0 the
    // quotient of Z(lambda) keeps indices 0..lambda.
    auto chi0 = standard_chi(ChiKind::zero, 3, 0);
    auto F3 = field_for(chi0);
    for (auto kind : {ChiKind::nilpotent, ChiKind::semisimple}) {
        auto chi = standard_chi(kind, 3, 1, kind == ChiKind::semisimple ? 1 : 0);
        auto K = field_for(chi);
        for (int64_t lam0 = 0; lam0 < 3; ++lam0) {
            Weight wlow(3, 0, {}, F3->from_int(lam0));
            auto Z0 = baby_verma(chi0, wlow);
            // truncate to the irreducible quotient: rows/cols 0..lam0
            ModuleRep N;
            N.p = 3;
            N.r = 0;
            N.dim = static_cast<int>(lam0) + 1;
            N.field = F3;
            N.chi = chi0;
            N.weight = wlow;
            std::vector<int> keep;
            for (int64_t z = 0; z <= lam0; ++z) {
                keep.push_back(static_cast<int>(z));
                N.basis_index.push_back(z);
            }
            N.E = {Z0.E[0].submatrix(keep, keep)};
            N.H = {Z0.H[0].submatrix(keep, keep)};
            N.F = {Z0.F[0].submatrix(keep, keep)};

            for (const auto& rt : artin_schreier_roots(K, chi.c_h())) {
                auto T = teenage_verma(N, rt, chi);
                CHECK(T.dim == 3 * N.dim);
                auto rel = verify_relations(T);
                if (!rel.ok)
                    for (const auto& v : rel.violations) MESSAGE(v);
                CHECK(rel.ok);
            }
        }
    }
}

TEST_CASE("teenage Verma rejects incompatible weights") {
    auto chi0 = standard_chi(ChiKind::zero, 3, 0);
    auto F3 = field_for(chi0);
    Weight wlow(3, 0, {}, F3->from_int(1));
    auto Z0 = baby_verma(chi0, wlow);
    ModuleRep N;
    N.p = 3;
    N.r = 0;
    N.dim = 2;
    N.field = F3;
    N.chi = chi0;
    N.weight = wlow;
    N.basis_index = {0, 1};
    std::vector<int> keep{0, 1};
    N.E = {Z0.E[0].submatrix(keep, keep)};
    N.H = {Z0.H[0].submatrix(keep, keep)};
    N.F = {Z0.F[0].submatrix(keep, keep)};

    auto chi_ss = standard_chi(ChiKind::semisimple, 3, 1, 1);
    auto K = field_for(chi_ss);
    // lambda_r in F_p does not satisfy the semisimple membership equation
    CHECK_THROWS_AS(teenage_verma(N, K->from_int(0), chi_ss), std::invalid_argument);
}
