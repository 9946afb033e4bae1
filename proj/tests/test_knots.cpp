#include "doctest.h"

#include <random>
#include <vector>

#include "gromzeta/errors.hpp"
#include "gromzeta/knots.hpp"
#include "gromzeta/linalg.hpp"
#include "support/oracles.hpp"

using namespace gromzeta;

namespace {

Polynomial P(const std::vector<long>& c) {
    return Polynomial(std::vector<Rat>(c.begin(), c.end()));
}

}  // namespace

TEST_CASE("built-in fibered knots") {
    FiberedKnot trefoil = builtin_knot("trefoil");
    CHECK(trefoil.name == "trefoil");
    CHECK(trefoil.genus == 1);
    CHECK(trefoil.monodromy == Matrix{{1, 1}, {-1, 0}});

    FiberedKnot fig8 = builtin_knot("figure8");
    CHECK(fig8.genus == 1);
    CHECK(fig8.monodromy == Matrix{{2, 1}, {1, 1}});

    CHECK(builtin_knot_names() == std::vector<std::string>{"figure8", "trefoil"});
    CHECK_THROWS_AS(builtin_knot("unknot"), LookupError);
}

TEST_CASE("fibered knot validation") {
    CHECK_NOTHROW(make_fibered_knot("k", 1, Matrix{{2, 1}, {1, 1}}));
    CHECK_THROWS_AS(make_fibered_knot("k", 0, Matrix(0, 0)), ValidationError);
    CHECK_THROWS_AS(make_fibered_knot("k", 1, Matrix{{1, 1}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(make_fibered_knot("k", 2, Matrix{{2, 1}, {1, 1}}), ValidationError);
    Matrix half(2, 2, {Rat(1, 2), Rat(0), Rat(0), Rat(2)});
    CHECK_THROWS_AS(make_fibered_knot("k", 1, half), ValidationError);
}

TEST_CASE("Alexander polynomials") {
    CHECK(alexander(builtin_knot("trefoil")) == P({1, -1, 1}));
    CHECK(alexander(builtin_knot("figure8")) == P({1, -3, 1}));

    // Genus-2 connected sum: block-diagonal monodromy multiplies the
    // polynomials.
    std::vector<Rat> e(16, Rat(0));
    Matrix blocks[2] = {builtin_knot("trefoil").monodromy,
                        builtin_knot("figure8").monodromy};
    for (int b = 0; b < 2; ++b)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                e[(2 * b + i) * 4 + (2 * b + j)] = blocks[b].at(i, j);
    FiberedKnot sum = make_fibered_knot("trefoil # figure8", 2, Matrix(4, 4, e));
    CHECK(alexander(sum) == P({1, -1, 1}) * P({1, -3, 1}));
}

TEST_CASE("Alexander value at one is the fixed-point determinant") {
    std::mt19937_64 eng(77121);
    for (int trial = 0; trial < 12; ++trial) {
        long genus = oracle::uniform(eng, 1, 2);
        Matrix f = oracle::random_symplectic_word(
            eng, static_cast<int>(2 * genus),
            static_cast<int>(oracle::uniform(eng, 2, 6)));
        FiberedKnot k = make_fibered_knot("w", genus, f);
        Polynomial a = alexander(k);
        CHECK(a(Rat(1)) == det_exact(Matrix::identity(f.rows()) - f));
    }
}

TEST_CASE("Alexander audit verdicts") {
    AlexanderAudit fig8 = alexander_audit(P({1, -3, 1}), 1);
    CHECK(fig8.integer_coefficients);
    CHECK(fig8.monic_degree);
    CHECK(fig8.palindromic);
    CHECK(fig8.value_at_one == -1);
    CHECK(fig8.unit_at_one);
    CHECK(fig8.all_pass());

    // (1-t)^2 is integral, monic and palindromic but vanishes at one, so it
    // cannot be the Alexander polynomial of a genus-1 fibered knot.
    AlexanderAudit square = alexander_audit(P({1, -2, 1}), 1);
    CHECK(square.integer_coefficients);
    CHECK(square.monic_degree);
    CHECK(square.palindromic);
    CHECK(square.value_at_one == 0);
    CHECK_FALSE(square.unit_at_one);
    CHECK_FALSE(square.all_pass());

    AlexanderAudit degree = alexander_audit(P({1, 1}), 1);
    CHECK_FALSE(degree.monic_degree);
    CHECK_FALSE(degree.all_pass());

    AlexanderAudit halves = alexander_audit(
        Polynomial(std::vector<Rat>{Rat(1), Rat(1, 2), Rat(1)}), 1);
    CHECK_FALSE(halves.integer_coefficients);
    CHECK(halves.monic_degree);
    CHECK_FALSE(halves.all_pass());

    AlexanderAudit lopsided = alexander_audit(P({1, -3, 2, -3, 1}), 2);
    CHECK(lopsided.palindromic);
    AlexanderAudit skew = alexander_audit(P({1, -3, 2, -2, 1}), 2);
    CHECK_FALSE(skew.palindromic);
}

TEST_CASE("structural constraints hold for every symplectic monodromy") {
    // Integrality, degree and palindromy are automatic; A(1) = +/-1 is a
    // genuine fibering restriction and fails for most random words.
    std::mt19937_64 eng(424242);
    for (int trial = 0; trial < 15; ++trial) {
        long genus = oracle::uniform(eng, 1, 3);
        Matrix f = oracle::random_symplectic_word(
            eng, static_cast<int>(2 * genus),
            static_cast<int>(oracle::uniform(eng, 2, 6)));
        AlexanderAudit audit = alexander_audit(
            alexander(make_fibered_knot("w", genus, f)), genus);
        CHECK(audit.integer_coefficients);
        CHECK(audit.monic_degree);
        CHECK(audit.palindromic);
    }
}
