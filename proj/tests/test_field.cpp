#include "hue/field.hpp"

#include <doctest.h>

#include <random>

#include "hue/modp.hpp"

using namespace hue;

TEST_CASE("artin_schreier defining relation") {
    auto K = FieldSpec::artin_schreier(3, 1);
    CHECK(K->order() == 27);
    auto th = K->theta();
    CHECK(th.pow(3) == th + K->one());  // theta^3 = theta + 1
    CHECK(th.frobenius() == th + K->from_int(1));
    CHECK_THROWS_AS(FieldSpec::artin_schreier(3, 0), std::domain_error);
}

TEST_CASE("field identities and inverse roundtrip") {
    for (auto K : {FieldSpec::fp(5), FieldSpec::artin_schreier(3, 2)}) {
        auto th = K->d() > 1 ? K->theta() : K->from_int(3);
        CHECK(th + K->zero() == th);
        CHECK(th * K->one() == th);
        auto y = th * th.pow(K->p() - 1);
        CHECK(y * y.inv() * th == th);
        CHECK_THROWS_AS(K->zero().inv(), std::domain_error);
    }
}

TEST_CASE("spec mismatch rejected") {
    auto a = FieldSpec::fp(3)->one();
    auto b = FieldSpec::fp(5)->one();
    CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
}

TEST_CASE("Fermat: x^(p^d) = x, repeated-squaring oracle") {
    std::mt19937_64 rng(0);
    for (auto K : {FieldSpec::fp(5), FieldSpec::artin_schreier(3, 1), FieldSpec::artin_schreier(5, 2)}) {
        auto els = K->all_elements();
        for (int trial = 0; trial < 40; ++trial) {
            const auto& x = els[rng() % els.size()];
            // oracle: literal repeated multiplication by squaring, exponent p^d
            FieldElem r = K->one(), b = x;
            int64_t e = K->order();
            while (e > 0) {
                if (e & 1) r = r * b;
                b = b * b;
                e >>= 1;
            }
            CHECK(r == x);
        }
    }
}

TEST_CASE("frobenius is additive and multiplicative") {
    auto K = FieldSpec::artin_schreier(3, 1);
    auto els = K->all_elements();
    std::mt19937_64 rng(1);
    for (int t = 0; t < 60; ++t) {
        const auto& x = els[rng() % els.size()];
        const auto& y = els[rng() % els.size()];
        CHECK((x + y).frobenius() == x.frobenius() + y.frobenius());
        CHECK((x * y).frobenius() == x.frobenius() * y.frobenius());
    }
}

TEST_CASE("fixed points of frobenius are exactly the prime subfield (p=3)") {
    auto K = FieldSpec::artin_schreier(3, 1);
    for (const auto& x : K->all_elements())
        CHECK((x.frobenius() == x) == x.in_prime_subfield());
}

TEST_CASE("binom_field") {
    auto K = FieldSpec::artin_schreier(3, 1);
    auto th = K->theta();
    CHECK(binom_field(th, 0) == K->one());
    CHECK(binom_field(th, 1) == th);
    CHECK_THROWS_AS(binom_field(th, 3), std::invalid_argument);
    // agreement with the integer binomial on embedded values
    for (int64_t p : {3, 5}) {
        auto F = FieldSpec::fp(p);
        for (int64_t m = 0; m < p; ++m)
            for (int64_t k = 0; k < p; ++k)
                CHECK(binom_field(F->from_int(m), k) == F->from_int(binom_mod_p(m, k, p)));
    }
}

TEST_CASE("binom_field Pascal identity") {
    auto K = FieldSpec::artin_schreier(3, 2);
    auto one = K->one();
    for (const auto& x : K->all_elements())
        for (int64_t k = 1; k < 3; ++k)
            CHECK(binom_field(x, k) == binom_field(x - one, k) + binom_field(x - one, k - 1));
}

TEST_CASE("artin_schreier_roots") {
    auto F3 = FieldSpec::fp(3);
    auto r0 = artin_schreier_roots(F3, 0);
    REQUIRE(r0.size() == 3);
    for (int64_t j = 0; j < 3; ++j) CHECK(r0[j] == F3->from_int(j));

    auto K = FieldSpec::artin_schreier(3, 1);
    auto r1 = artin_schreier_roots(K, 1);
    REQUIRE(r1.size() == 3);
    auto th = K->theta();
    for (const auto& rt : r1) {
        CHECK(rt.pow(3) - rt == K->one());
        CHECK((rt - th).in_prime_subfield());  // the shift family theta + j
    }
    // c = 0 over the extension still has exactly the prime subfield as roots
    auto rz = artin_schreier_roots(K, 0);
    REQUIRE(rz.size() == 3);
    for (const auto& rt : rz) CHECK(rt.in_prime_subfield());

    CHECK_THROWS_AS(artin_schreier_roots(F3, 1), std::domain_error);
}

TEST_CASE("field axioms by sampling") {
    auto K = FieldSpec::artin_schreier(5, 1);
    auto els = K->all_elements();
    std::mt19937_64 rng(2);
    for (int t = 0; t < 50; ++t) {
        const auto& x = els[rng() % els.size()];
        const auto& y = els[rng() % els.size()];
        const auto& z = els[rng() % els.size()];
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) CHECK(x * x.inv() == K->one());
    }
}
