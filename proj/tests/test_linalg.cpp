#include "hue/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace hue;

namespace {
Matrix random_matrix(const FieldPtr& K, int n, int m, std::mt19937_64& rng) {
    Matrix a(K, n, m);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) a.at(i, j) = K->from_int(static_cast<int64_t>(rng() % K->p()));
    return a;
}
}  // namespace

TEST_CASE("matrix arithmetic sanity") {
    auto K = FieldSpec::fp(5);
    auto I = Matrix::identity(K, 4);
    std::mt19937_64 rng(3);
    auto A = random_matrix(K, 4, 4, rng);
    CHECK(A * I == A);
    CHECK(I * A == A);
    CHECK((A - A).is_zero());
    auto B = random_matrix(K, 4, 4, rng);
    auto C = random_matrix(K, 4, 4, rng);
    CHECK((A * B) * C == A * (B * C));
    CHECK(A * (B + C) == A * B + A * C);
    CHECK(A.pow(3) == A * A * A);
}

TEST_CASE("rref is canonical and rank is correct") {
    auto K = FieldSpec::fp(3);
    Matrix m(K, 3, 4);
    // rows: (1,2,0,1), (2,1,0,2), (0,0,1,1); rows 1,2 dependent? 2*(1,2,0,1)=(2,4,0,2)=(2,1,0,2): yes
    int64_t vals[3][4] = {{1, 2, 0, 1}, {2, 1, 0, 2}, {0, 0, 1, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m.at(i, j) = K->from_int(vals[i][j]);
    CHECK(rref(m) == 2);
    // canonical: the same space from reordered generators gives identical rref
    Matrix m2(K, 3, 4);
    int64_t vals2[3][4] = {{0, 0, 1, 1}, {1, 2, 0, 1}, {0, 0, 2, 2}};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) m2.at(i, j) = K->from_int(vals2[i][j]);
    CHECK(rref(m2) == 2);
    for (int j = 0; j < 4; ++j) {
        CHECK(m.at(0, j) == m2.at(0, j));
        CHECK(m.at(1, j) == m2.at(1, j));
    }
}

TEST_CASE("kernel_basis solves m v = 0") {
    auto K = FieldSpec::artin_schreier(3, 1);
    std::mt19937_64 rng(4);
    for (int t = 0; t < 10; ++t) {
        Matrix m(K, 3, 5);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 5; ++j) {
                auto els = std::vector<int64_t>{static_cast<int64_t>(rng() % 3),
                                                static_cast<int64_t>(rng() % 3),
                                                static_cast<int64_t>(rng() % 3)};
                m.at(i, j) = K->element(els);
            }
        auto ker = kernel_basis(m);
        Matrix red = m;
        CHECK(ker.rows() == 5 - rref(red));
        for (int r = 0; r < ker.rows(); ++r) {
            auto v = ker.row(r);
            for (const auto& x : m * v) CHECK(x.is_zero());
        }
    }
}

TEST_CASE("subspace insert/contains and idempotence") {
    auto K = FieldSpec::fp(3);
    Subspace S(K, 4);
    auto vec = [&](std::initializer_list<int64_t> v) {
        std::vector<FieldElem> out;
        for (auto x : v) out.push_back(K->from_int(x));
        return out;
    };
    CHECK(S.insert(vec({1, 1, 0, 0})));
    CHECK(S.insert(vec({0, 0, 1, 2})));
    CHECK_FALSE(S.insert(vec({2, 2, 1, 2})));  // dependent
    CHECK(S.dim() == 2);
    CHECK(S.contains(vec({1, 1, 1, 2})));
    CHECK_FALSE(S.contains(vec({1, 0, 0, 0})));
    // canonicity: building in another order gives the same basis
    Subspace T(K, 4);
    T.insert(vec({2, 2, 1, 2}));
    T.insert(vec({0, 0, 2, 1}));
    CHECK(S == T);
}
