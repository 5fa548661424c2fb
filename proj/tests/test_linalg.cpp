#include <doctest.h>

#include "oracles.hpp"
#include "quadnorm/fixtures.hpp"

using namespace quadnorm;

namespace {

Matrix random_matrix(FixtureGen& gen, const RingPtr& r, size_t n, size_t m) {
    Matrix out = Matrix::zero(r, n, m);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) out.set(i, j, gen.random_element(r));
    return out;
}

} // namespace

TEST_CASE("matrix algebra basics") {
    RingPtr r = modular(5);
    FixtureGen gen(2);
    Matrix m = random_matrix(gen, r, 3, 3);
    CHECK(mat_mul(Matrix::identity(r, 3), m) == m);
    CHECK(mat_mul(Matrix::zero(r, 3, 3), m) == Matrix::zero(r, 3, 3));

    Matrix a(r, 2, 2, {r->from_int(1), r->from_int(2), r->from_int(3), r->from_int(4)});
    Matrix b(r, 2, 2, {r->from_int(0), r->from_int(1), r->from_int(1), r->from_int(0)});
    // hand multiplication: rows of a against the swap matrix
    Matrix expected(r, 2, 2, {r->from_int(2), r->from_int(1), r->from_int(4), r->from_int(3)});
    CHECK(mat_mul(a, b) == expected);

    CHECK_THROWS_AS((void)mat_mul(a, random_matrix(gen, r, 3, 2)), AlgebraError);
}

TEST_CASE("determinant basics") {
    RingPtr r = modular(7);
    CHECK(det(Matrix::identity(r, 4)).is_one());

    // det of diag(S, T) = S*T
    FixtureGen gen(3);
    RingElement s = gen.random_element(r), t = gen.random_element(r);
    Matrix d = Matrix::zero(r, 2, 2);
    d.set(0, 0, s);
    d.set(1, 1, t);
    CHECK(det(d) == mul(s, t));

    CHECK_THROWS_AS((void)det(Matrix::zero(r, 2, 3)), AlgebraError);
}

TEST_CASE("determinant matches the Laplace oracle") {
    FixtureGen gen(5);
    SUBCASE("random 3x3 over Z/7") {
        RingPtr r = modular(7);
        for (int i = 0; i < 100; ++i) {
            Matrix m = random_matrix(gen, r, 3, 3);
            CHECK(det(m) == oracles::laplace_det(m));
        }
    }
    SUBCASE("fixed pseudorandom sample of 500 over Z/3, sizes 1..4") {
        RingPtr r = modular(3);
        FixtureGen sample_gen(2024);
        for (int i = 0; i < 500; ++i) {
            size_t n = 1 + sample_gen.rng().below(4);
            Matrix m = random_matrix(sample_gen, r, n, n);
            REQUIRE(det(m) == oracles::laplace_det(m));
        }
    }
    SUBCASE("rings with zero divisors and fractions") {
        for (const auto& r : {modular(12), localized_integers(6), integers()}) {
            for (int i = 0; i < 40; ++i) {
                size_t n = 1 + gen.rng().below(4);
                Matrix m = random_matrix(gen, r, n, n);
                CHECK(det(m) == oracles::laplace_det(m));
            }
        }
    }
}

TEST_CASE("determinant is multiplicative and transpose-invariant") {
    FixtureGen gen(8);
    for (const auto& r : FixtureGen::default_ring_family()) {
        for (int i = 0; i < 200; ++i) {
            size_t n = 1 + gen.rng().below(3);
            Matrix a = random_matrix(gen, r, n, n);
            Matrix b = random_matrix(gen, r, n, n);
            CHECK(det(mat_mul(a, b)) == mul(det(a), det(b)));
            CHECK(det(transpose(a)) == det(a));
        }
    }
}

TEST_CASE("determinant over a polynomial ring") {
    RingPtr base = modular(5);
    auto adj = adjoin_variables(base, {"lam"});
    RingElement lam = poly_variable(adj.ring, "lam");
    FixtureGen gen(9);
    for (int i = 0; i < 20; ++i) {
        Matrix m = Matrix::zero(adj.ring, 3, 3);
        for (size_t a = 0; a < 3; ++a)
            for (size_t b = 0; b < 3; ++b) {
                RingElement c = adj.embed(gen.random_element(base));
                if (gen.rng().below(2)) c = add(c, mul(lam, adj.embed(gen.random_element(base))));
                m.set(a, b, c);
            }
        CHECK(det(m) == oracles::laplace_det(m));
    }
}
