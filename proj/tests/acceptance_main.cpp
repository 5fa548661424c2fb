// Acceptance suite: one pass/fail line per criterion, exact tolerances,
// wall-clock limits included in the pass condition.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <vector>

#include "oracles.hpp"
#include "quadnorm/fixtures.hpp"
#include "quadnorm/verify.hpp"

using namespace quadnorm;

namespace {

struct Criterion {
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

bool criterion_norm_product(std::string& detail) {
    FixtureGen gen(101);
    int checked = 0;
    for (long m = 2; m <= 13; ++m) {
        RingPtr base = modular(m);
        Extension ext(product_algebra(trivial_algebra(base), trivial_algebra(base)));
        for (int i = 0; i < 42; ++i) {
            RingElement s = gen.random_element(base), mm = gen.random_element(base);
            RingElement t = gen.random_element(base), n = gen.random_element(base);
            BasedQuadratic q = make_quad(ext.ring(), algebra_element(ext.algebra(), {s, t}),
                                         algebra_element(ext.algebra(), {mm, n}));
            BasedQuadratic lhs = ext.norm_quad(q);
            BasedQuadratic rhs = star(make_quad(base, s, mm), make_quad(base, t, n));
            if (!(lhs == rhs)) {
                detail = "mismatch over Z/" + std::to_string(m);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " exact equalities";
    return checked >= 500;
}

bool criterion_sqrt_d(std::string& detail) {
    FixtureGen gen(102);
    std::vector<RingPtr> bases{modular(5), modular(8), modular(9), modular(12), integers()};
    int checked = 0;
    while (checked < 200) {
        for (size_t n = 1; n <= 3; ++n) {
            for (const auto& base : bases) {
                Extension ext(gen.random_algebra(base, n));
                RingElement d = gen.random_element(ext.ring());
                BasedQuadratic q = make_quad(ext.ring(), ext.ring()->zero(), neg(d));
                BasedQuadratic nm = ext.norm_quad(q);
                RingElement expected = neg(mul(base->from_int(zpow(4, n - 1)), norm_sn(d)));
                if (!nm.t.is_zero() || !(nm.n == expected)) {
                    detail = "mismatch at rank " + std::to_string(n) + " over " +
                             base->describe();
                    return false;
                }
                ++checked;
            }
        }
    }
    detail = std::to_string(checked) + " exact equalities";
    return true;
}

bool criterion_swap_parity(std::string& detail) {
    for (const auto& base : {modular(7), modular(12), integers()}) {
        for (size_t n = 1; n <= 4; ++n) {
            AlgebraPtr b = trivial_algebra(base);
            for (size_t k = 1; k < n; ++k) b = product_algebra(b, trivial_algebra(base));
            Extension ext(b);
            BasedQuadratic split = make_quad(ext.ring(), ext.ring()->one(), ext.ring()->zero());
            QuadHom swap = make_hom(split, split, ext.ring()->from_int(-1), ext.ring()->one());
            QuadHom nm = ext.norm_hom(swap);
            bool odd = n % 2 == 1;
            RingElement expect_u = odd ? base->from_int(-1) : base->one();
            RingElement expect_c = odd ? base->one() : base->zero();
            if (!(nm.u() == expect_u) || !(nm.c() == expect_c)) {
                detail = "wrong pair at n = " + std::to_string(n) + " over " + base->describe();
                return false;
            }
        }
    }
    detail = "(u,c) = (1,0) for n in {2,4} and (-1,1) for n in {1,3}";
    return true;
}

bool criterion_disc_identity(std::string& detail) {
    FixtureGen gen(104);
    auto family = FixtureGen::default_ring_family();
    int checked = 0;
    while (checked < 500) {
        for (size_t n = 1; n <= 4 && checked < 500; ++n) {
            const RingPtr& base = family[checked % family.size()];
            Extension ext(gen.random_algebra(base, n));
            BasedQuadratic q = gen.random_quad(ext.ring());
            if (!(discriminant(ext.norm_quad(q)) == norm_sn(discriminant(q)))) {
                detail = "mismatch at rank " + std::to_string(n);
                return false;
            }
            ++checked;
        }
    }
    detail = std::to_string(checked) + " exact equalities across ranks 1-4";
    return true;
}

bool criterion_functorial_transitive(std::string& detail) {
    FixtureGen gen(105);
    auto family = FixtureGen::default_ring_family();
    for (int i = 0; i < 200; ++i) {
        const RingPtr& base = family[i % family.size()];
        Extension ext(gen.random_extension(base));
        auto [f, g] = gen.random_chain(ext.ring());
        if (!(ext.norm_hom(compose(f, g)) == compose(ext.norm_hom(f), ext.norm_hom(g)))) {
            detail = "functoriality failed over " + base->describe();
            return false;
        }
    }
    int towers = 0;
    for (int i = 0; i < 100; ++i) {
        AlgebraPtr lower, upper;
        if (i % 10 == 0) {
            std::tie(lower, upper) = FixtureGen::gaussian_tower();
        } else {
            const RingPtr& base = family[i % family.size()];
            lower = gen.random_algebra(base, 1 + gen.rng().below(2));
            upper = gen.random_upper_algebra(lower, 1 + gen.rng().below(2));
        }
        Extension a_to_b(lower), b_to_c(upper);
        BasedQuadratic q = gen.random_quad(b_to_c.ring());
        auto [direct, staged] = norm_tower_check(a_to_b, b_to_c, q);
        if (!(direct == staged)) {
            detail = "transitivity failed on tower " + lower->describe();
            return false;
        }
        QuadHom f = gen.random_hom(b_to_c.ring());
        auto [dh, sh] = norm_tower_hom_check(a_to_b, b_to_c, f);
        if (!(dh == sh)) {
            detail = "hom transitivity failed on tower " + lower->describe();
            return false;
        }
        ++towers;
    }
    detail = "200 chains, " + std::to_string(towers) +
             " towers (incl. Z -> Z[i] -> Z[i][y]/(y^2 - i)), quad and hom routes";
    return true;
}

bool criterion_monoid_iso(std::string& detail) {
    FixtureGen gen(106);
    std::vector<RingPtr> finite;
    for (const auto& r : FixtureGen::default_ring_family())
        if (r->enumerate()) finite.push_back(r);
    int exact = 0;
    for (int i = 0; i < 200; ++i) {
        const RingPtr& base = finite[i % finite.size()];
        Extension ext(gen.random_algebra(base, 1 + gen.rng().below(3)));
        BasedQuadratic q = gen.random_quad(ext.ring());
        BasedQuadratic qp = gen.random_quad(ext.ring());
        BasedQuadratic lhs = ext.norm_quad(star(q, qp));
        BasedQuadratic rhs = star(ext.norm_quad(q), ext.norm_quad(qp));
        if (lhs == rhs) ++exact;
        if (!find_isomorphism(lhs, rhs).has_value()) {
            detail = "no isomorphism over " + base->describe();
            return false;
        }
    }
    detail = "200 isomorphisms found, " + std::to_string(exact) + " were exact equalities";
    return true;
}

bool criterion_polarized_suite(std::string& detail) {
    VerifyConfig config;
    config.seed = 107;
    config.cases_per_law = 100;
    config.laws = {"polarized-reordering", "polarized-combination", "polarized-homogeneity",
                   "polarized-degeneracy", "polarized-multiplicativity",
                   "polarization-completeness"};
    VerifyReport report = run_verify(config);
    if (!report.ok()) {
        for (const auto& r : report.laws)
            if (r.fails) detail += r.law + " failed; ";
        return false;
    }
    // explicit exhaustive lambda-specialization cross-check over Z/2 and Z/3
    FixtureGen gen(1070);
    for (long m : {2L, 3L}) {
        RingPtr base = modular(m);
        auto elems = *base->enumerate();
        for (int rep = 0; rep < 5; ++rep) {
            AlgebraPtr alg = gen.random_algebra(base, 1 + gen.rng().below(3));
            RingPtr ring = algebra_ring(alg);
            unsigned n = static_cast<unsigned>(alg->rank());
            RingElement b1 = gen.random_element(ring), b2 = gen.random_element(ring);
            for (const auto& l1 : elems) {
                for (const auto& l2 : elems) {
                    RingElement combo = add(scalar_mul(l1, b1), scalar_mul(l2, b2));
                    RingElement lhs = norm_sn(combo);
                    RingElement rhs = base->zero();
                    for (unsigned k = 0; k <= n; ++k) {
                        RingElement mono = base->one();
                        for (unsigned e = 0; e < k; ++e) mono = mul(mono, l1);
                        for (unsigned e = 0; e < n - k; ++e) mono = mul(mono, l2);
                        rhs = add(rhs, mul(mono, polarized({{k, b1}, {n - k, b2}})));
                    }
                    if (!(lhs == rhs)) {
                        detail = "exhaustive lambda check failed over Z/" + std::to_string(m);
                        return false;
                    }
                }
            }
        }
    }
    detail = "five identities x 100 cases plus exhaustive Z/2 and Z/3 specialization";
    return true;
}

bool criterion_descent_suite(std::string& detail) {
    FixtureGen gen(108);
    int fixtures = 0;
    for (int rep = 0; rep < 12; ++rep) {
        Cover cover = rep % 4 == 0   ? FixtureGen::integer_cover_23()
                      : rep % 4 == 1 ? FixtureGen::modular_cover_12()
                      : rep % 4 == 2 ? FixtureGen::modular_cover_60()
                                     : FixtureGen::integer_cover_235();
        std::optional<AlgebraPtr> b;
        if (rep % 3 != 2) b = gen.random_algebra(cover.base(), 1 + gen.rng().below(2));
        auto fixture = gen.descent_fixture(cover, b);
        QuadDescentDatum glued = glue_norm(fixture.datum); // validates the cocycle
        LineDescentDatum lhs = det_bundle(glued);
        LineDescentDatum rhs = line_norm(det_bundle(fixture.datum));
        if (lhs.transitions.size() != rhs.transitions.size()) {
            detail = "determinant bundle transition counts differ";
            return false;
        }
        for (const auto& [ij, u] : lhs.transitions) {
            if (!(rhs.transitions.at(ij) == u)) {
                detail = "det(glue) != line_norm(det) on a transition";
                return false;
            }
        }
        auto before = disc_form(fixture.datum);
        auto after = disc_form(glued);
        for (size_t p = 0; p < before.size(); ++p) {
            RingElement expected = b ? norm_sn(before[p]) : before[p];
            if (!(after[p] == expected)) {
                detail = "disc compatibility failed on piece " + std::to_string(p);
                return false;
            }
        }
        ++fixtures;
    }
    detail = std::to_string(fixtures) + " fixtures: cocycles, det bundles, discriminants";
    return true;
}

bool criterion_oracle_equivalence(std::string& detail) {
    size_t checks = oracle_checks_performed();
    if (checks == 0) {
        detail = "the closed-sum / lambda-fraction assertion never ran";
        return false;
    }
    RingPtr r = modular(3);
    FixtureGen sample_gen(2024);
    for (int i = 0; i < 500; ++i) {
        size_t n = 1 + sample_gen.rng().below(4);
        Matrix m = Matrix::zero(r, n, n);
        for (size_t a = 0; a < n; ++a)
            for (size_t bcol = 0; bcol < n; ++bcol) m.set(a, bcol, sample_gen.random_element(r));
        if (!(det(m) == oracles::laplace_det(m))) {
            detail = "Berkowitz vs Laplace mismatch";
            return false;
        }
    }
    detail = std::to_string(checks) +
             " closed-sum/fraction agreements, 500 det samples vs Laplace";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria{
        {"1 norm-of-product equals star (Z/2..Z/13, 500 cases)", 5.0, criterion_norm_product},
        {"2 sqrt-D example, ranks 1-3, 200 cases", 5.0, criterion_sqrt_d},
        {"3 swap parity over B = A^n, n = 1..4", 1.0, criterion_swap_parity},
        {"4 discriminant identity, ranks 1-4, 500 cases", 10.0, criterion_disc_identity},
        {"5 functoriality (200 chains) + transitivity (100 towers)", 30.0,
         criterion_functorial_transitive},
        {"6 monoid homomorphism up to isomorphism, 200 pairs", 60.0, criterion_monoid_iso},
        {"7 polarized-identity suite + exhaustive lambda check", 30.0,
         criterion_polarized_suite},
        {"8 descent suite: cocycles, det bundles, discriminants", 10.0,
         criterion_descent_suite},
        {"9 oracle equivalence: fraction form + Laplace sample", 10.0,
         criterion_oracle_equivalence},
    };

    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        bool ok = false;
        auto start = std::chrono::steady_clock::now();
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
            ok = false;
        }
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = seconds < c.limit_seconds;
        bool pass = ok && in_time;
        if (!pass) ++failures;
        std::printf("%s criterion %s  [%.2fs < %.0fs]%s%s\n", pass ? "PASS" : "FAIL",
                    c.name.c_str(), seconds, c.limit_seconds,
                    detail.empty() ? "" : "  -- ", detail.c_str());
    }
    if (failures) std::printf("%d criterion(s) failed\n", failures);
    return failures == 0 ? 0 : 1;
}
