#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cycdim/matrices.hpp"

using namespace cycdim;

namespace {

// Independent oracle: plain repeated multiplication, no squaring tricks.
BigIntMatrix naive_pow(const BigIntMatrix& m, unsigned long g) {
    BigIntMatrix r = BigIntMatrix::identity(m.dim());
    for (unsigned long i = 0; i < g; ++i)
        r = r * m;
    return r;
}

std::vector<mpz_class> column_one(const BigIntMatrix& m) {
    std::vector<mpz_class> col;
    for (long i = 0; i < m.dim(); ++i)
        col.push_back(m.at(i, 0));
    return col;
}

} // namespace

TEST_CASE("recursion matrix layout") {
    BigIntMatrix c3 = recursion_matrix(3);
    CHECK(c3.dim() == 2);
    CHECK(c3.at(0, 0) == 2);
    CHECK(c3.at(0, 1) == 1);
    CHECK(c3.at(1, 0) == 1);
    CHECK(c3.at(1, 1) == 2);

    BigIntMatrix c5 = recursion_matrix(5);
    CHECK(c5.dim() == 4);
    // row 2 in 1-based terms
    CHECK(c5.at(1, 0) == 1);
    CHECK(c5.at(1, 1) == 2);
    CHECK(c5.at(1, 2) == 1);
    CHECK(c5.at(1, 3) == 0);
    CHECK(c5.is_symmetric());

    CHECK_THROWS_AS(recursion_matrix(4), std::invalid_argument);
    CHECK_THROWS_AS(c5.at(4, 0), std::invalid_argument);
}

TEST_CASE("s-matrix and eigenvalue diagonal entries") {
    CycMatrix s = s_matrix(5);
    // entry (1,1): (-1)^{1*1} (q - q^-1) = -q + q^4
    CHECK(s.at(0, 0) == root_power(5, 4) - root_power(5, 1));
    // entry (2,2): (-1)^4 (q^4 - q^-4) = q^4 - q
    CHECK(s.at(1, 1) == root_power(5, 4) - root_power(5, 1));
    // entry (1,2): (-1)^2 (q^2 - q^-2)
    CHECK(s.at(0, 1) == root_power(5, 2) - root_power(5, 3));

    CycMatrix q = eigenvalue_diagonal(5);
    CHECK(q.at(0, 0) == CycInt::constant(5, 2) - root_power(5, 1) - root_power(5, 4));
    CHECK(q.at(1, 1) == CycInt::constant(5, 2) + root_power(5, 2) + root_power(5, 3));
    CHECK(q.at(0, 1) == CycInt::zero(5));
    CHECK(q.at(1, 0) == CycInt::zero(5));
}

TEST_CASE("defining expression of S vanishes at the boundary rows") {
    // The closed-form entry (-1)^{ij} (q^{ij} - q^{-ij}) is 0 at i = 0 and i = p.
    for (long p : {3L, 5L, 7L, 13L}) {
        for (long j = 1; j <= p - 1; ++j) {
            for (long i : {0L, p}) {
                CycInt v = root_power(p, i * j) - root_power(p, -i * j);
                if ((i * j) % 2 != 0) v = -v;
                CHECK(v.is_zero());
            }
        }
    }
}

TEST_CASE("mat_pow basics and frozen column values") {
    BigIntMatrix c5 = recursion_matrix(5);
    CHECK(mat_pow(c5, 0) == BigIntMatrix::identity(4));
    CHECK(mat_pow(c5, 1).at(1, 0) == 1);
    CHECK(column_one(mat_pow(c5, 2)) == std::vector<mpz_class>{5, 4, 1, 0});
    CHECK(column_one(mat_pow(c5, 4)) == std::vector<mpz_class>{42, 48, 27, 8});
}

TEST_CASE("mat_pow agrees with naive repeated multiplication") {
    for (long p : {3L, 5L, 7L}) {
        BigIntMatrix c = recursion_matrix(p);
        for (unsigned long g = 0; g <= 8; ++g)
            CHECK(mat_pow(c, g) == naive_pow(c, g));
    }
}

TEST_CASE("mat_pow is additive in the exponent") {
    std::mt19937 rng(20260816);
    std::uniform_int_distribution<unsigned long> exp(0, 6);
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        BigIntMatrix c = recursion_matrix(p);
        for (int it = 0; it < 10; ++it) {
            unsigned long a = exp(rng), b = exp(rng);
            CHECK(mat_pow(c, a + b) == mat_pow(c, a) * mat_pow(c, b));
        }
    }
}

TEST_CASE("powers of the recursion matrix stay symmetric") {
    for (long p : {5L, 13L}) {
        BigIntMatrix c = recursion_matrix(p);
        for (unsigned long g : {2UL, 7UL, 19UL})
            CHECK(mat_pow(c, g).is_symmetric());
    }
}

TEST_CASE("column-one band structure") {
    // Entries 1..g+1 of the first column are positive, the rest are zero.
    for (long p : {11L, 13L}) {
        BigIntMatrix c = recursion_matrix(p);
        for (long g = 1; g < p - 2; ++g) {
            BigIntMatrix power = mat_pow(c, static_cast<unsigned long>(g));
            for (long n = 1; n <= p - 1; ++n) {
                if (n <= g + 1)
                    CHECK(power.at(n - 1, 0) > 0);
                else
                    CHECK(power.at(n - 1, 0) == 0);
            }
        }
    }
}

TEST_CASE("cyclotomic matrix arithmetic building blocks") {
    CycMatrix a(5, 2), b(5, 2);
    a.at(0, 0) = root_power(5, 1);
    a.at(0, 1) = CycInt::one(5);
    b.at(0, 0) = root_power(5, 4);
    b.at(1, 0) = CycInt::constant(5, 3);
    CycMatrix prod = a * b;
    CHECK(prod.at(0, 0) == CycInt::one(5) + CycInt::constant(5, 3)); // q*q^4 + 1*3
    CHECK(prod.at(1, 1) == CycInt::zero(5));

    CycMatrix sum = a + a;
    CHECK(sum.at(0, 0) == root_power(5, 1) * 2);

    CHECK_THROWS_AS(a * CycMatrix(7, 2), std::invalid_argument);
    CHECK(CycMatrix::scalar(5, 3, CycInt::one(5)) ==
          CycMatrix::from_integer(5, BigIntMatrix::identity(3)));
}

TEST_CASE("s-matrix identities hold for every odd prime up to 13") {
    for (long p : {3L, 5L, 7L, 11L, 13L}) {
        SMatrixReport report = verify_s_matrix(p);
        CHECK(report.p == p);
        REQUIRE(report.checks.size() == 3);
        CHECK(report.checks[0].name == "s_squared");
        CHECK(report.checks[1].name == "conjugation");
        CHECK(report.checks[2].name == "inverse_relation");
        for (const auto& c : report.checks) {
            INFO("p = ", p, ", identity ", c.name, ": ", c.detail);
            CHECK(c.pass);
            CHECK_FALSE(c.first_fail.has_value());
        }
        CHECK(report.all_pass());
    }
}
