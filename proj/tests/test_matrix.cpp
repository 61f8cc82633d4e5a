#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "hopfcat/matrix.hpp"

using namespace hopfcat;
using hopfcat::testing::mk;
using hopfcat::testing::random_mat;
using Q = Rational;

TEST_CASE("rational arithmetic is exact and canonical") {
    Q a(1, 2), b(1, 3);
    CHECK(a + b == Q(5, 6));
    CHECK(a * b == Q(1, 6));
    CHECK(Q(2, 4) == Q(1, 2));
    CHECK(Q(-1, -2) == Q(1, 2));
    CHECK(Q(3).inv() == Q(1, 3));
    CHECK_THROWS(Q(1).operator/(Q(0)));
    CHECK_THROWS(Q(1, 0));
}

TEST_CASE("prime field arithmetic") {
    Fp::set_modulus(7);
    CHECK(Fp(3) + Fp(5) == Fp(1));
    CHECK(Fp(-1) == Fp(6));
    CHECK(Fp(3).inv() * Fp(3) == Fp(1));
    for (long v = 1; v < 7; ++v) CHECK(Fp(v) * Fp(v).inv() == Fp(1));
    CHECK_THROWS(Fp::set_modulus(6));
}

TEST_CASE("rank on explicit matrices") {
    CHECK(rank(Mat<Q>::identity(2)) == 2);
    CHECK(rank(Mat<Q>(2, 2)) == 0);
    CHECK(rank(mk<Q>({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("solve on explicit systems") {
    Mat<Q> v = mk<Q>({{3}, {7}});
    CHECK(*solve(Mat<Q>::identity(2), v) == v);
    CHECK_FALSE(solve(Mat<Q>(2, 2), v).has_value());
    CHECK(*solve(mk<Q>({{1, 1}, {0, 1}}), mk<Q>({{3}, {1}})) == mk<Q>({{2}, {1}}));
}

TEST_CASE("kernel_basis on explicit matrices") {
    CHECK(kernel_basis(Mat<Q>::identity(3)).cols() == 0);
    CHECK(kernel_basis(Mat<Q>(4, 4)) == Mat<Q>::identity(4));
    Mat<Q> k = kernel_basis(mk<Q>({{1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK(!k(0, 0).is_zero());
}

TEST_CASE("kron convention") {
    CHECK(kron(Mat<Q>::identity(2), Mat<Q>::identity(3)) == Mat<Q>::identity(6));
    CHECK(kron(mk<Q>({{2}}), mk<Q>({{3}})) == mk<Q>({{6}}));
    Mat<Q> got = kron(mk<Q>({{0, 1}, {1, 0}}), mk<Q>({{1}, {0}}));
    CHECK(got == mk<Q>({{0, 1}, {0, 0}, {1, 0}, {0, 0}}));
}

TEST_CASE("swap_factors permutes tensor legs") {
    Mat<Q> a = mk<Q>({{1}, {2}});
    Mat<Q> b = mk<Q>({{3}, {4}, {5}});
    CHECK(swap_factors<Q>(2, 3) * kron(a, b) == kron(b, a));
    CHECK(swap_factors<Q>(3, 2) * swap_factors<Q>(2, 3) == Mat<Q>::identity(6));
}

TEST_CASE("quotient_by presentations") {
    Quotient<Q> q0 = quotient_by(3, Mat<Q>(0, 3));
    CHECK(q0.dim() == 3);
    CHECK(q0.projection == Mat<Q>::identity(3));
    CHECK(q0.section == Mat<Q>::identity(3));

    Quotient<Q> q1 = quotient_by(2, mk<Q>({{1, -1}}));
    CHECK(q1.dim() == 1);
    CHECK(q1.projection.col(0) == q1.projection.col(1));

    Quotient<Q> q2 = quotient_by(3, Mat<Q>::identity(3));
    CHECK(q2.dim() == 0);
}

TEST_CASE("rank-nullity over a prime field") {
    Fp::set_modulus(101);
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        int r = 1 + static_cast<int>(rng() % 6), c = 1 + static_cast<int>(rng() % 6);
        Mat<Fp> m = random_mat<Fp>(rng, r, c, 0, 100);
        CHECK(rank(m) + kernel_basis(m).cols() == c);
    }
}

TEST_CASE("solve recovers consistent systems") {
    std::mt19937 rng(11);
    for (int t = 0; t < 30; ++t) {
        int r = 1 + static_cast<int>(rng() % 5), c = 1 + static_cast<int>(rng() % 5);
        Mat<Q> m = random_mat<Q>(rng, r, c);
        Mat<Q> x = random_mat<Q>(rng, c, 1);
        auto x2 = solve(m, m * x);
        REQUIRE(x2.has_value());
        CHECK(m * *x2 == m * x);
    }
}

TEST_CASE("kron is multiplicative") {
    std::mt19937 rng(13);
    for (int t = 0; t < 20; ++t) {
        Mat<Q> a = random_mat<Q>(rng, 2, 3), c = random_mat<Q>(rng, 3, 2);
        Mat<Q> b = random_mat<Q>(rng, 3, 2), d = random_mat<Q>(rng, 2, 3);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("quotient invariants on random relations") {
    std::mt19937 rng(17);
    for (int t = 0; t < 30; ++t) {
        int amb = 1 + static_cast<int>(rng() % 6);
        int nrel = static_cast<int>(rng() % 5);
        Mat<Q> rel = random_mat<Q>(rng, nrel, amb);
        Quotient<Q> q = quotient_by(amb, rel);
        CHECK(q.projection * q.section == Mat<Q>::identity(q.dim()));
        CHECK(rank(q.projection) == q.dim());
        CHECK(q.dim() == amb - rank(rel));
        if (nrel > 0) CHECK((q.projection * rel.transpose()).is_zero());
    }
}
