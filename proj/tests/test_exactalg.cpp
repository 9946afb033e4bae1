#include "doctest.h"

#include <random>
#include <vector>

#include "gromzeta/errors.hpp"
#include "gromzeta/linalg.hpp"
#include "gromzeta/matrix.hpp"
#include "gromzeta/polynomial.hpp"
#include "gromzeta/sturm.hpp"
#include "support/oracles.hpp"

using namespace gromzeta;

namespace {
Polynomial P(const std::vector<long>& c) {
    return Polynomial(std::vector<Rat>(c.begin(), c.end()));
}
}  // namespace

TEST_CASE("determinant on fixed matrices") {
    CHECK(det_exact(Matrix{{1}}) == 1);
    CHECK(det_exact(Matrix{{2, 1}, {1, 1}}) == 1);
    CHECK(det_exact(Matrix{{0, -1}, {0, 0}}) == 0);
    CHECK(det_exact(Matrix(0, 0)) == 1);
    CHECK(det_exact(Matrix{{1, 1}, {-1, 0}}) == 1);

    Matrix rational(2, 2, {Rat(1, 2), Rat(1, 3), Rat(1, 5), Rat(1, 7)});
    CHECK(det_exact(rational) == Rat(1, 14) - Rat(1, 15));
    CHECK(det_exact(rational) == oracle::laplace_det(rational));
}

TEST_CASE("determinant agrees with cofactor expansion on random matrices") {
    std::mt19937_64 eng(20240811);
    for (int trial = 0; trial < 40; ++trial) {
        int n = static_cast<int>(oracle::uniform(eng, 1, 5));
        Matrix m = oracle::random_integer_matrix(eng, n, n, 9);
        CHECK(det_exact(m) == oracle::laplace_det(m));
    }
}

TEST_CASE("determinant is multiplicative") {
    std::mt19937_64 eng(7121);
    for (int trial = 0; trial < 20; ++trial) {
        int n = static_cast<int>(oracle::uniform(eng, 2, 5));
        Matrix a = oracle::random_integer_matrix(eng, n, n, 6);
        Matrix b = oracle::random_integer_matrix(eng, n, n, 6);
        CHECK(det_exact(a * b) == det_exact(a) * det_exact(b));
    }
}

TEST_CASE("reversed characteristic polynomial on fixed matrices") {
    CHECK(charpoly_rev(Matrix{{1}}) == P({1, -1}));
    CHECK(charpoly_rev(Matrix{{2, 1}, {1, 1}}) == P({1, -3, 1}));
    CHECK(charpoly_rev(Matrix{{1, 1}, {-1, 0}}) == P({1, -1, 1}));
    CHECK(charpoly_rev(Matrix::identity(4)) == P({1, -4, 6, -4, 1}));
    CHECK(charpoly_rev(Matrix(0, 0)) == P({1}));
}

TEST_CASE("reversed characteristic polynomial agrees with Lagrange interpolation") {
    std::mt19937_64 eng(95501);
    for (int trial = 0; trial < 30; ++trial) {
        int n = static_cast<int>(oracle::uniform(eng, 1, 5));
        Matrix m = oracle::random_integer_matrix(eng, n, n, 9);
        CHECK(charpoly_rev(m) == oracle::interpolated_charpoly_rev(m));
    }
}

TEST_CASE("reversed characteristic polynomial evaluates to det(I - t0 M)") {
    std::mt19937_64 eng(33077);
    for (int trial = 0; trial < 10; ++trial) {
        int n = static_cast<int>(oracle::uniform(eng, 1, 4));
        Matrix m = oracle::random_integer_matrix(eng, n, n, 7);
        Polynomial p = charpoly_rev(m);
        for (int k = 0; k < 5; ++k) {
            Rat t0 = make_rat(Int(oracle::uniform(eng, -20, 20)),
                              Int(oracle::uniform(eng, 1, 9)));
            CHECK(p(t0) == det_exact(Matrix::identity(n) - m.scaled(t0)));
        }
    }
}

TEST_CASE("power traces") {
    Matrix a{{2, 1}, {1, 1}};
    CHECK(power_trace(a, 1) == 3);
    CHECK(power_trace(a, 3) == 18);
    CHECK(power_trace(Matrix::identity(4), 7) == 4);
    CHECK(power_trace(a, 0) == 2);

    std::mt19937_64 eng(1401);
    for (int trial = 0; trial < 10; ++trial) {
        int n = static_cast<int>(oracle::uniform(eng, 1, 4));
        Matrix m = oracle::random_integer_matrix(eng, n, n, 5);
        for (unsigned long p = 0; p <= 8; ++p)
            CHECK(power_trace(m, p) == oracle::iterated_product(m, p).trace());
    }
}

TEST_CASE("Smith normal form on fixed matrices") {
    auto s1 = smith_normal_form(Matrix::identity(3));
    CHECK(s1.diagonal == std::vector<Int>{1, 1, 1});
    CHECK(oracle::smith_decomposition_valid(Matrix::identity(3), s1));

    Matrix m2{{0, -1}, {0, 0}};
    auto s2 = smith_normal_form(m2);
    CHECK(s2.diagonal == std::vector<Int>{1, 0});
    CHECK(oracle::smith_decomposition_valid(m2, s2));

    Matrix m3{{2, 0}, {0, 3}};
    auto s3 = smith_normal_form(m3);
    CHECK(s3.diagonal == std::vector<Int>{1, 6});
    CHECK(oracle::smith_decomposition_valid(m3, s3));

    Matrix wide{{2, 4, 4}, {-6, 6, 12}};
    CHECK(oracle::smith_decomposition_valid(wide, smith_normal_form(wide)));

    CHECK_THROWS_AS(smith_normal_form(Matrix(1, 1, {Rat(1, 2)})), DomainError);
}

TEST_CASE("Smith normal form is valid on 200 random integer matrices") {
    std::mt19937_64 eng(424242);
    for (int trial = 0; trial < 200; ++trial) {
        int rows = static_cast<int>(oracle::uniform(eng, 1, 5));
        int cols = static_cast<int>(oracle::uniform(eng, 1, 5));
        Matrix m = oracle::random_integer_matrix(eng, rows, cols, 9);
        CHECK(oracle::smith_decomposition_valid(m, smith_normal_form(m)));
    }
}

TEST_CASE("cokernel decompositions") {
    auto thurston = cokernel_decomposition(Matrix{{0, -1}, {0, 0}});
    CHECK(thurston.free_rank == 1);
    CHECK(thurston.torsion.empty());

    auto unit = cokernel_decomposition(Matrix{{-1, -1}, {-1, 0}});
    CHECK(unit.free_rank == 0);
    CHECK(unit.torsion.empty());

    auto torsion2 = cokernel_decomposition(Matrix{{2, 0}, {0, 1}});
    CHECK(torsion2.free_rank == 0);
    CHECK(torsion2.torsion == std::vector<Int>{2});
}

TEST_CASE("symplectic form and check") {
    CHECK(symplectic_check(Matrix{{2, 1}, {1, 1}}));
    CHECK(symplectic_check(Matrix{{1, 1}, {-1, 0}}));
    CHECK_FALSE(symplectic_check(Matrix{{1, 0}, {0, 2}}));

    Matrix block4{{2, 1, 0, 0}, {1, 1, 0, 0}, {0, 0, -2, -1}, {0, 0, -1, -1}};
    CHECK(symplectic_check(block4));

    CHECK_THROWS_AS(symplectic_check(Matrix{{1}}), DimensionError);
    CHECK_THROWS_AS(symplectic_form(3), DimensionError);

    Matrix j2 = symplectic_form(2);
    CHECK(j2 == Matrix{{0, -1}, {1, 0}});
    Matrix jb4 = symplectic_form(4, JConvention::Block);
    CHECK(jb4 == Matrix{{0, 0, -1, 0}, {0, 0, 0, -1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
}

TEST_CASE("transvections are symplectic in both conventions") {
    std::mt19937_64 eng(86);
    for (int dim : {2, 4, 6}) {
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Int> v(dim);
            for (auto& x : v)
                x = oracle::uniform(eng, -3, 3);
            CHECK(symplectic_check(symplectic_transvection(v), JConvention::Interleaved));
            CHECK(symplectic_check(symplectic_transvection(v, JConvention::Block),
                                   JConvention::Block));
        }
    }
}

TEST_CASE("random transvection words are symplectic") {
    std::mt19937_64 eng(5150);
    for (int trial = 0; trial < 10; ++trial) {
        CHECK(symplectic_check(oracle::random_symplectic_word(eng, 2, 6)));
        CHECK(symplectic_check(oracle::random_symplectic_word(eng, 4, 6)));
    }
}

TEST_CASE("Sturm root counting on fixed polynomials") {
    auto golden = sturm_root_count(P({1, -3, 1}), RootInterval::positive_axis());
    CHECK(golden.distinct == 2);
    CHECK(golden.with_multiplicity == 2);

    auto cyclotomic = sturm_root_count(P({1, 1, 1}), RootInterval::real_line());
    CHECK(cyclotomic.distinct == 0);
    CHECK(cyclotomic.with_multiplicity == 0);

    Polynomial cubic = P({1, -2, 1}) * P({2, 1});  // (t-1)^2 (t+2)
    CHECK(cubic == P({2, -3, 0, 1}));
    auto counts = sturm_root_count(cubic, RootInterval::real_line());
    CHECK(counts.distinct == 2);
    CHECK(counts.with_multiplicity == 3);

    // Both real roots of the cubic sit on the ends of this interval, and open
    // intervals exclude their endpoints.
    auto interior = sturm_root_count(cubic, RootInterval::open(Rat(-2), Rat(1)));
    CHECK(interior.distinct == 0);
    CHECK(interior.with_multiplicity == 0);

    auto half = sturm_root_count(P({1, -3, 1}), RootInterval::open(Rat(0), Rat(1)));
    CHECK(half.distinct == 1);

    CHECK_THROWS_AS(sturm_root_count(Polynomial(), RootInterval::real_line()), DomainError);
    CHECK_THROWS_AS(sturm_root_count(P({1, 1}), RootInterval::open(Rat(2), Rat(2))), DomainError);
}

TEST_CASE("Sturm count with multiplicity equals degree for real-rooted products") {
    std::mt19937_64 eng(777);
    for (int trial = 0; trial < 20; ++trial) {
        int factors = static_cast<int>(oracle::uniform(eng, 1, 6));
        Polynomial p = Polynomial::one();
        for (int i = 0; i < factors; ++i) {
            long a = oracle::uniform(eng, 1, 4);
            long b = oracle::uniform(eng, -5, 5);
            p = p * P({b, a});
        }
        auto counts = sturm_root_count(p, RootInterval::real_line());
        CHECK(counts.with_multiplicity == p.degree());
    }
}

TEST_CASE("matrix basics and validation") {
    CHECK_THROWS_AS(Matrix(2, 2).at(2, 0), DimensionError);
    Matrix a{{1, 2}, {3, 4}};
    CHECK(a.transpose() == Matrix{{1, 3}, {2, 4}});
    CHECK(a.pow(0) == Matrix::identity(2));
    CHECK(a.pow(3) == a * a * a);
    CHECK(a.is_integral());
    CHECK_FALSE(Matrix(1, 1, {Rat(1, 2)}).is_integral());
    CHECK_THROWS_AS(a + Matrix::identity(3), DimensionError);
    Matrix row{{1, 2}};
    CHECK_THROWS_AS(row * row, DimensionError);
}

TEST_CASE("polynomial arithmetic and helpers") {
    Polynomial p = P({2, 0, 1});
    CHECK(p.degree() == 2);
    CHECK(p(Rat(3)) == 11);
    CHECK(p.derivative() == P({0, 2}));
    CHECK(P({1, 1}).pow(2) == P({1, 2, 1}));

    auto [q, r] = P({2, -3, 0, 1}).divmod(P({-1, 1}));
    CHECK(q * P({-1, 1}) + r == P({2, -3, 0, 1}));
    CHECK(r.degree() < 1);
    CHECK_THROWS_AS(p.divmod(Polynomial()), DomainError);

    CHECK(poly_gcd(P({-1, 0, 1}), P({1, 1})) == P({1, 1}));
    CHECK(poly_gcd(Polynomial(), Polynomial()) == Polynomial());

    CHECK(squarefree_part(P({2, -3, 0, 1})) == P({-2, 1, 1}).monic());
    auto parts = squarefree_decomposition(P({2, -3, 0, 1}));
    REQUIRE(parts.size() == 2);
    CHECK(parts[0] == P({2, 1}));
    CHECK(parts[1] == P({-1, 1}));

    CHECK(reversed(P({1, -3, 1}), 2) == P({1, -3, 1}));
    CHECK(reversed(P({1, -1}), 3) == P({0, 0, -1, 1}));
    CHECK_THROWS_AS(reversed(P({1, 0, 0, 1}), 2), DomainError);

    CHECK(P({1, 2}).substitute_power(3) == P({1, 0, 0, 2}));
}
