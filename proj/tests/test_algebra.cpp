#include <doctest.h>

#include "oracles.hpp"
#include "quadnorm/fixtures.hpp"
#include "quadnorm/quadratic.hpp"

using namespace quadnorm;

namespace {

// A[x]/(x^2 - d), basis {1, x}
AlgebraPtr sqrt_algebra(const RingPtr& base, const RingElement& d) {
    return monogenic_algebra(base, {d, base->zero()});
}

} // namespace

TEST_CASE("algebra element arithmetic") {
    RingPtr base = modular(7);
    // Z/7[y]/(y^2 - y): idempotent generator
    AlgebraPtr alg = monogenic_algebra(base, {base->zero(), base->one()});
    RingPtr ring = algebra_ring(alg);
    RingElement y = algebra_element(alg, {base->zero(), base->one()});
    CHECK(mul(y, y) == y);
    CHECK(mul(ring->one(), y) == y);

    FixtureGen gen(4);
    for (int i = 0; i < 100; ++i) {
        AlgebraPtr a = gen.random_extension(base);
        RingPtr r = algebra_ring(a);
        RingElement x1 = gen.random_element(r), x2 = gen.random_element(r);
        CHECK(mul(x1, x2) == oracles::expansion_mul(a, x1, x2));
    }
}

TEST_CASE("invalid structure constants are rejected") {
    RingPtr base = modular(5);
    // x*x = 1 but the unit claims to be x: not a unit law
    std::vector<RingElement> structure{
        base->one(), base->zero(),  // 1*1
        base->zero(), base->one(),  // 1*x
        base->zero(), base->one(),  // x*1
        base->one(), base->zero(),  // x*x = 1
    };
    CHECK_THROWS_AS(
        (void)make_algebra(base, 2, structure, {base->zero(), base->one()}), AlgebraError);
}

TEST_CASE("mul_matrix conventions") {
    RingPtr base = modular(9);
    FixtureGen gen(6);
    SUBCASE("identity element gives the identity matrix") {
        AlgebraPtr alg = gen.random_extension(base);
        CHECK(mul_matrix(algebra_ring(alg)->one()) == Matrix::identity(base, alg->rank()));
    }
    SUBCASE("product algebra elements act diagonally") {
        AlgebraPtr axa = product_algebra(trivial_algebra(base), trivial_algebra(base));
        RingElement s = gen.random_element(base), t = gen.random_element(base);
        Matrix m = mul_matrix(algebra_element(axa, {s, t}));
        CHECK(m.at(0, 0) == s);
        CHECK(m.at(1, 1) == t);
        CHECK(m.at(0, 1).is_zero());
        CHECK(m.at(1, 0).is_zero());
    }
    SUBCASE("matrix action matches multiplication on basis vectors") {
        AlgebraPtr alg = gen.random_algebra(base, 3);
        RingPtr ring = algebra_ring(alg);
        RingElement x = gen.random_element(ring);
        Matrix m = mul_matrix(x);
        for (size_t j = 0; j < 3; ++j) {
            std::vector<RingElement> e(3, base->zero());
            e[j] = base->one();
            RingElement prod = mul(x, algebra_element(alg, e));
            for (size_t k = 0; k < 3; ++k) CHECK(prod.as_coords()[k] == m.at(k, j));
        }
        CHECK(mul_matrix(mul(x, x)) == mat_mul(m, m));
    }
}

TEST_CASE("norm s_n") {
    RingPtr z = integers();
    SUBCASE("s_n(1) = 1") {
        FixtureGen gen(10);
        AlgebraPtr alg = gen.random_extension(modular(8));
        CHECK(norm_sn(algebra_ring(alg)->one()).is_one());
    }
    SUBCASE("s_2 in Z[y]/(y^2 - d) is a^2 - d b^2") {
        FixtureGen gen(11);
        for (int i = 0; i < 50; ++i) {
            RingElement d = gen.random_element(z);
            AlgebraPtr alg = sqrt_algebra(z, d);
            RingElement a = gen.random_element(z), b = gen.random_element(z);
            RingElement x = algebra_element(alg, {a, b});
            CHECK(norm_sn(x) == sub(mul(a, a), mul(d, mul(b, b))));
        }
    }
    SUBCASE("s_2((S,T)) = S*T in A x A") {
        RingPtr base = modular(11);
        FixtureGen gen(12);
        AlgebraPtr axa = product_algebra(trivial_algebra(base), trivial_algebra(base));
        RingElement s = gen.random_element(base), t = gen.random_element(base);
        CHECK(norm_sn(algebra_element(axa, {s, t})) == mul(s, t));
    }
    SUBCASE("multiplicative on 200 random pairs per ring") {
        FixtureGen gen(13);
        for (const auto& base : FixtureGen::default_ring_family()) {
            AlgebraPtr alg = gen.random_extension(base);
            RingPtr ring = algebra_ring(alg);
            for (int i = 0; i < 200; ++i) {
                RingElement x = gen.random_element(ring), y = gen.random_element(ring);
                CHECK(norm_sn(mul(x, y)) == mul(norm_sn(x), norm_sn(y)));
            }
        }
    }
}

TEST_CASE("trace") {
    RingPtr base = modular(13);
    FixtureGen gen(14);
    SUBCASE("trace(1) = n") {
        for (size_t n = 1; n <= 4; ++n) {
            AlgebraPtr alg = gen.random_algebra(base, n);
            CHECK(trace(algebra_ring(alg)->one()) == base->from_int(static_cast<long>(n)));
        }
    }
    SUBCASE("trace of the generator of (t, n) is t") {
        RingElement t = gen.random_element(base), n = gen.random_element(base);
        AlgebraPtr alg = as_rank2_algebra(make_quad(base, t, n));
        RingElement x = algebra_element(alg, {base->zero(), base->one()});
        CHECK(trace(x) == t);
        CHECK(norm_sn(x) == n);
    }
    SUBCASE("trace(d) = s_2(d+1) - s_2(d) - 1 in quadratic algebras") {
        for (int i = 0; i < 50; ++i) {
            AlgebraPtr alg = gen.random_algebra(base, 2);
            RingPtr ring = algebra_ring(alg);
            RingElement d = gen.random_element(ring);
            RingElement rhs = sub(sub(norm_sn(add(d, ring->one())), norm_sn(d)), base->one());
            CHECK(trace(d) == rhs);
        }
    }
    SUBCASE("trace equals the polarized form s_{1,n-1}(x, 1)") {
        for (int i = 0; i < 30; ++i) {
            AlgebraPtr alg = gen.random_extension(base);
            RingPtr ring = algebra_ring(alg);
            RingElement x = gen.random_element(ring);
            unsigned n = static_cast<unsigned>(alg->rank());
            CHECK(trace(x) == polarized({{1u, x}, {n - 1, ring->one()}}));
        }
    }
}

TEST_CASE("polarized forms") {
    RingPtr base = modular(5);
    FixtureGen gen(15);
    SUBCASE("single block is the norm") {
        AlgebraPtr alg = gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        RingElement x = gen.random_element(ring);
        CHECK(polarized({{static_cast<unsigned>(alg->rank()), x}}) == norm_sn(x));
    }
    SUBCASE("degeneracy drops a zero slot") {
        AlgebraPtr alg = gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        RingElement x = gen.random_element(ring), y = gen.random_element(ring);
        CHECK(polarized({{0u, x}, {static_cast<unsigned>(alg->rank()), y}}) == norm_sn(y));
    }
    SUBCASE("s_{1,1}((M,N), (S,T)^2) = M T^2 + N S^2") {
        AlgebraPtr axa = product_algebra(trivial_algebra(base), trivial_algebra(base));
        for (int i = 0; i < 30; ++i) {
            RingElement m = gen.random_element(base), n = gen.random_element(base);
            RingElement s = gen.random_element(base), t = gen.random_element(base);
            RingElement mn = algebra_element(axa, {m, n});
            RingElement st = algebra_element(axa, {s, t});
            RingElement got = polarized({{1u, mn}, {1u, mul(st, st)}});
            RingElement expected = add(mul(m, mul(t, t)), mul(n, mul(s, s)));
            CHECK(got == expected);
        }
    }
    SUBCASE("partition sum mismatch is rejected") {
        AlgebraPtr alg = gen.random_algebra(base, 2);
        RingPtr ring = algebra_ring(alg);
        RingElement x = gen.random_element(ring);
        CHECK_THROWS_AS((void)polarized({{1u, x}}), AlgebraError);
    }
}

TEST_CASE("characteristic polynomial coefficients") {
    RingPtr base = modular(5);
    FixtureGen gen(16);
    SUBCASE("x = 0 gives lambda^n") {
        AlgebraPtr alg = gen.random_algebra(base, 3);
        RingPtr ring = algebra_ring(alg);
        auto cp = char_poly_coeffs(ring->zero());
        REQUIRE(cp.size() == 4);
        CHECK(cp[0].is_zero());
        CHECK(cp[1].is_zero());
        CHECK(cp[2].is_zero());
        CHECK(cp[3].is_one());
    }
    SUBCASE("generator of (t, n) gives lambda^2 - t lambda + n") {
        RingElement t = gen.random_element(base), n = gen.random_element(base);
        AlgebraPtr alg = as_rank2_algebra(make_quad(base, t, n));
        RingElement x = algebra_element(alg, {base->zero(), base->one()});
        auto cp = char_poly_coeffs(x);
        CHECK(cp[0] == n);
        CHECK(cp[1] == neg(t));
        CHECK(cp[2].is_one());
    }
    SUBCASE("matches det(lambda I - mul_matrix(x)) via the Laplace oracle") {
        for (int i = 0; i < 20; ++i) {
            AlgebraPtr alg = gen.random_algebra(base, 3);
            RingPtr ring = algebra_ring(alg);
            RingElement x = gen.random_element(ring);
            auto adj = adjoin_variables(base, {"lam"});
            RingElement lam = poly_variable(adj.ring, "lam");
            Matrix m = mul_matrix(x);
            Matrix shifted = Matrix::zero(adj.ring, 3, 3);
            for (size_t a = 0; a < 3; ++a)
                for (size_t b = 0; b < 3; ++b) {
                    RingElement entry = neg(adj.embed(m.at(a, b)));
                    if (a == b) entry = add(entry, lam);
                    shifted.set(a, b, entry);
                }
            RingElement charpoly = oracles::laplace_det(shifted);
            auto cp = char_poly_coeffs(x);
            for (unsigned k = 0; k <= 3; ++k) CHECK(coefficient_of(charpoly, {k}) == cp[k]);
        }
    }
    SUBCASE("Cayley-Hamilton on rank <= 4 fixtures") {
        for (const auto& b2 : {modular(4), modular(9)}) {
            for (int i = 0; i < 20; ++i) {
                AlgebraPtr alg = gen.random_extension(b2);
                RingPtr ring = algebra_ring(alg);
                RingElement x = gen.random_element(ring);
                auto cp = char_poly_coeffs(x);
                RingElement acc = ring->zero();
                RingElement power = ring->one();
                for (size_t k = 0; k < cp.size(); ++k) {
                    acc = add(acc, scalar_mul(cp[k], power));
                    power = mul(power, x);
                }
                CHECK(acc.is_zero());
            }
        }
    }
}

TEST_CASE("base change") {
    RingPtr z = integers();
    SUBCASE("identity hom gives an equal algebra") {
        FixtureGen gen(17);
        AlgebraPtr alg = gen.random_extension(modular(6));
        auto bc = base_change(alg, RingHom::identity(modular(6)));
        // same_as is structural, so distinct modular(6) instances still match
        CHECK(bc.algebra->same_as(*alg));
    }
    SUBCASE("Z[y]/(y^2 - y) reduces to (Z/6)[y]/(y^2 - y)") {
        AlgebraPtr alg = monogenic_algebra(z, {z->zero(), z->one()});
        RingPtr target = modular(6);
        RingHom f(z, target,
                  [target](const RingElement& x) { return target->from_int(x.as_int()); });
        auto bc = base_change(alg, f);
        AlgebraPtr expected = monogenic_algebra(target, {target->zero(), target->one()});
        CHECK(bc.algebra->same_as(*expected));
    }
    SUBCASE("s_n commutes with base change on 200 random cases") {
        FixtureGen gen(18);
        for (const auto& base : FixtureGen::default_ring_family()) {
            AlgebraPtr alg = gen.random_extension(base);
            RingPtr ring = algebra_ring(alg);
            auto homs = gen.base_change_homs(base);
            for (int i = 0; i < 200 / static_cast<int>(homs.size()) + 1; ++i) {
                for (const auto& f : homs) {
                    auto bc = base_change(alg, f);
                    RingElement b = gen.random_element(ring);
                    CHECK(f(norm_sn(b)) == norm_sn(bc.push(b)));
                }
            }
        }
    }
    SUBCASE("hom source mismatch is rejected") {
        FixtureGen gen(19);
        AlgebraPtr alg = gen.random_extension(modular(6));
        CHECK_THROWS_AS((void)base_change(alg, RingHom::identity(modular(5))), AlgebraError);
    }
}

TEST_CASE("product algebras") {
    RingPtr base = modular(5);
    FixtureGen gen(20);
    AlgebraPtr axa = product_algebra(trivial_algebra(base), trivial_algebra(base));
    for (int i = 0; i < 30; ++i) {
        RingElement a = gen.random_element(base), b = gen.random_element(base);
        RingElement x = algebra_element(axa, {a, b});
        CHECK(norm_sn(x) == mul(a, b));
        CHECK(trace(x) == add(a, b));
    }
    CHECK_THROWS_AS((void)product_algebra(trivial_algebra(base), trivial_algebra(modular(7))),
                    AlgebraError);
}

TEST_CASE("towers") {
    RingPtr base = modular(5);
    FixtureGen gen(21);
    SUBCASE("trivial upper stage returns the lower algebra") {
        AlgebraPtr lower = gen.random_algebra(base, 2);
        AlgebraPtr upper = trivial_algebra(algebra_ring(lower));
        TowerAlgebra tower = tower_compose(lower, upper);
        CHECK(tower.composed->same_as(*lower));
    }
    SUBCASE("A -> A x A -> (A x A)^2 realizes A^4 with s_4 = product of coordinates") {
        AlgebraPtr axa = product_algebra(trivial_algebra(base), trivial_algebra(base));
        RingPtr bring = algebra_ring(axa);
        AlgebraPtr upper = product_algebra(trivial_algebra(bring), trivial_algebra(bring));
        TowerAlgebra tower = tower_compose(axa, upper);
        CHECK(tower.composed->rank() == 4);
        for (int i = 0; i < 25; ++i) {
            RingElement a = gen.random_element(base), b = gen.random_element(base);
            RingElement c = gen.random_element(base), d = gen.random_element(base);
            RingElement upper_el = algebra_element(
                upper, {algebra_element(axa, {a, b}), algebra_element(axa, {c, d})});
            RingElement flat = tower.to_composed(upper_el);
            CHECK(norm_sn(flat) == mul(mul(a, b), mul(c, d)));
            CHECK(tower.from_composed(flat) == upper_el);
            // the diagonal-determinant oracle agrees
            CHECK(oracles::laplace_det(mul_matrix(flat)) == mul(mul(a, b), mul(c, d)));
        }
    }
    SUBCASE("Gaussian tower: s_4(y) = s_2(s_2(y)) = 1") {
        auto [gauss, upper] = FixtureGen::gaussian_tower();
        TowerAlgebra tower = tower_compose(gauss, upper);
        RingPtr uring = algebra_ring(upper);
        RingPtr gring = algebra_ring(gauss);
        RingElement y = algebra_element(upper, {gring->zero(), gring->one()});
        RingElement flat = tower.to_composed(y);
        CHECK(norm_sn(flat) == integers()->one());
        CHECK(oracles::laplace_det(mul_matrix(flat)) == integers()->one());
        CHECK(norm_sn(norm_sn(y)) == integers()->one());
    }
    SUBCASE("transitivity s_n(s_m(c)) = s_{mn}(c) on random towers") {
        for (int i = 0; i < 100; ++i) {
            AlgebraPtr lower = gen.random_algebra(base, 1 + gen.rng().below(2));
            AlgebraPtr upper = gen.random_upper_algebra(lower, 1 + gen.rng().below(2));
            TowerAlgebra tower = tower_compose(lower, upper);
            RingElement c = gen.random_element(algebra_ring(upper));
            CHECK(norm_sn(norm_sn(c)) == norm_sn(tower.to_composed(c)));
        }
    }
    SUBCASE("tower mismatch is rejected") {
        AlgebraPtr lower = gen.random_algebra(base, 2);
        AlgebraPtr other = gen.random_algebra(base, 2);
        AlgebraPtr upper = trivial_algebra(algebra_ring(other));
        if (!other->same_as(*lower))
            CHECK_THROWS_AS((void)tower_compose(lower, upper), AlgebraError);
        CHECK_THROWS_AS((void)tower_compose(lower, trivial_algebra(base)), AlgebraError);
    }
    SUBCASE("tower conversions reject foreign elements") {
        AlgebraPtr lower = gen.random_algebra(base, 2);
        AlgebraPtr upper = gen.random_upper_algebra(lower, 2);
        TowerAlgebra tower = tower_compose(lower, upper);
        RingElement stranger = gen.random_element(algebra_ring(lower));
        CHECK_THROWS_AS((void)tower.to_composed(stranger), AlgebraError);
        CHECK_THROWS_AS((void)tower.from_composed(stranger), AlgebraError);
    }
}

TEST_CASE("algebra ring units and inverses") {
    FixtureGen gen(22);
    for (const auto& base : {modular(9), modular(12)}) {
        AlgebraPtr alg = gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        for (int i = 0; i < 40; ++i) {
            RingElement u = gen.random_unit(ring);
            CHECK(is_unit(u));
            CHECK(mul(u, inverse(u)) == ring->one());
        }
    }
}
