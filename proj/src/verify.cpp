#include "quadnorm/verify.hpp"

#include <chrono>
#include <future>

namespace quadnorm {

namespace {

struct LawContext {
    FixtureGen gen;
    std::vector<RingPtr> family;
    std::vector<RingPtr> finite_family;
    int cases;
    LawResult result;

    LawContext(uint64_t seed, std::vector<RingPtr> fam, int n) : gen(seed), family(std::move(fam)), cases(n) {
        for (const auto& r : family)
            if (r->enumerate()) finite_family.push_back(r);
        result.cases = n;
    }

    const RingPtr& ring_at(int i) const { return family[i % family.size()]; }
    const RingPtr& finite_at(int i) const { return finite_family[i % finite_family.size()]; }

    template <typename MakeCx>
    void check(bool ok, MakeCx&& make_cx) {
        if (ok) {
            ++result.passes;
        } else {
            ++result.fails;
            if (!result.first_counterexample) result.first_counterexample = make_cx();
        }
    }
};

template <typename Body>
void run_cases(LawContext& ctx, Body&& body) {
    for (int i = 0; i < ctx.cases; ++i) {
        try {
            body(i);
        } catch (const std::exception& e) {
            ctx.check(false, [&] { return json{{"case", i}, {"error", e.what()}}; });
        }
    }
}

Matrix random_matrix(FixtureGen& gen, const RingPtr& ring, size_t rows, size_t cols) {
    Matrix m = Matrix::zero(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set(i, j, gen.random_element(ring));
    return m;
}

Matrix scaled(const RingElement& s, const Matrix& m) {
    Matrix out = Matrix::zero(m.ring(), m.rows(), m.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.set(i, j, mul(s, m.at(i, j)));
    return out;
}

bool matrix_is_zero(const Matrix& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero()) return false;
    return true;
}

void compositions_rec(unsigned n, unsigned m, std::vector<unsigned>& cur,
                      std::vector<std::vector<unsigned>>& out) {
    if (m == 1) {
        cur.push_back(n);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned k = 0; k <= n; ++k) {
        cur.push_back(k);
        compositions_rec(n - k, m - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<unsigned>> compositions(unsigned n, unsigned m) {
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    compositions_rec(n, m, cur, out);
    return out;
}

RingElement binomial_in(const RingPtr& ring, unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return ring->from_int(b);
}

json quad_cx(const BasedQuadratic& q) { return quad_to_json(q); }

// ---------------------------------------------------------------------------
// rings laws

void law_ring_axioms(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& r = ctx.ring_at(i);
        RingElement x = ctx.gen.random_element(r);
        RingElement y = ctx.gen.random_element(r);
        RingElement z = ctx.gen.random_element(r);
        bool ok = add(add(x, y), z) == add(x, add(y, z));
        ok = ok && mul(x, y) == mul(y, x);
        ok = ok && mul(x, add(y, z)) == add(mul(x, y), mul(x, z));
        ok = ok && mul(mul(x, y), z) == mul(x, mul(y, z));
        ok = ok && mul(r->one(), x) == x;
        ok = ok && add(x, r->zero()) == x;
        ok = ok && add(x, neg(x)).is_zero();
        ok = ok && mul(r->zero(), x).is_zero();
        ctx.check(ok, [&] {
            return json{{"ring", ring_to_json(r)}, {"x", element_to_json(x)},
                        {"y", element_to_json(y)}, {"z", element_to_json(z)}};
        });
    });
}

void law_ring_canonical(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& r = ctx.ring_at(i);
        RingElement x = ctx.gen.random_element(r);
        RingElement y = ctx.gen.random_element(r);
        bool ok = parse_element(r, canonical_print(x)) == x;
        ok = ok && ((canonical_print(x) == canonical_print(y)) == (x == y));
        ctx.check(ok, [&] {
            return json{{"ring", ring_to_json(r)}, {"x", element_to_json(x)},
                        {"y", element_to_json(y)}};
        });
    });
}

void law_modular_localization_kernel(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        (void)i;
        long m = ctx.gen.rng().range(1, 60);
        RingPtr r = modular(m);
        RingElement a = ctx.gen.random_element(r);
        Localization loc = r->localize(a);
        bool ok = true;
        mpz_class mm(m);
        for (long xv = 0; xv < m && ok; ++xv) {
            RingElement x = r->from_int(xv);
            bool killed = loc.map(x).is_zero();
            bool annihilated = false;
            mpz_class pow = 1;
            for (int k = 0; k <= 8 && !annihilated; ++k) {
                annihilated = (pow * xv) % mm == 0;
                pow *= a.as_int();
            }
            ok = killed == annihilated;
        }
        ctx.check(ok, [&] {
            return json{{"modulus", m}, {"a", element_to_json(a)}};
        });
    });
}

// ---------------------------------------------------------------------------
// linalg laws

void law_det_multiplicative(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& r = ctx.ring_at(i);
        size_t n = 1 + ctx.gen.rng().below(4);
        Matrix a = random_matrix(ctx.gen, r, n, n);
        Matrix b = random_matrix(ctx.gen, r, n, n);
        bool ok = det(mat_mul(a, b)) == mul(det(a), det(b));
        ctx.check(ok, [&] { return json{{"ring", ring_to_json(r)}, {"n", n}}; });
    });
}

void law_det_transpose(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& r = ctx.ring_at(i);
        size_t n = 1 + ctx.gen.rng().below(4);
        Matrix a = random_matrix(ctx.gen, r, n, n);
        ctx.check(det(transpose(a)) == det(a),
                  [&] { return json{{"ring", ring_to_json(r)}, {"n", n}}; });
    });
}

// ---------------------------------------------------------------------------
// algebra laws (the s_n identities)

void law_sn_multiplicative(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        RingElement x = ctx.gen.random_element(ring);
        RingElement y = ctx.gen.random_element(ring);
        bool ok = norm_sn(mul(x, y)) == mul(norm_sn(x), norm_sn(y));
        ok = ok && norm_sn(ring->one()).is_one();
        ctx.check(ok, [&] {
            return json{{"algebra", algebra_to_json(alg)}, {"x", element_to_json(x)},
                        {"y", element_to_json(y)}};
        });
    });
}

void law_sn_homogeneous(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        RingElement a = ctx.gen.random_element(base);
        RingElement x = ctx.gen.random_element(ring);
        RingElement lhs = norm_sn(scalar_mul(a, x));
        RingElement an = base->one();
        for (size_t k = 0; k < alg->rank(); ++k) an = mul(an, a);
        bool ok = lhs == mul(an, norm_sn(x));
        ctx.check(ok, [&] {
            return json{{"algebra", algebra_to_json(alg)}, {"a", element_to_json(a)},
                        {"x", element_to_json(x)}};
        });
    });
}

void law_sn_transitive(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr lower, upper;
        if (base->kind() == RingKind::Integers && i % 5 == 0) {
            std::tie(lower, upper) = FixtureGen::gaussian_tower();
        } else {
            lower = ctx.gen.random_algebra(base, 1 + ctx.gen.rng().below(2));
            upper = ctx.gen.random_upper_algebra(lower, 1 + ctx.gen.rng().below(2));
        }
        TowerAlgebra tower = tower_compose(lower, upper);
        RingElement c = ctx.gen.random_element(algebra_ring(upper));
        RingElement staged = norm_sn(norm_sn(c)); // s_m lands in AlgebraRing(lower)
        RingElement direct = norm_sn(tower.to_composed(c));
        ctx.check(staged == direct, [&] {
            return json{{"lower", algebra_to_json(lower)}, {"upper", algebra_to_json(upper)},
                        {"c", element_to_json(c)}};
        });
    });
}

void law_polarized_reordering(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        unsigned n = static_cast<unsigned>(alg->rank());
        unsigned k1 = static_cast<unsigned>(ctx.gen.rng().below(n + 1));
        unsigned k2 = static_cast<unsigned>(ctx.gen.rng().below(n - k1 + 1));
        unsigned k3 = n - k1 - k2;
        std::vector<std::pair<unsigned, RingElement>> parts{
            {k1, ctx.gen.random_element(ring)},
            {k2, ctx.gen.random_element(ring)},
            {k3, ctx.gen.random_element(ring)}};
        auto perm = parts;
        std::swap(perm[0], perm[2]);
        if (ctx.gen.rng().below(2)) std::swap(perm[0], perm[1]);
        ctx.check(polarized(parts) == polarized(perm),
                  [&] { return json{{"algebra", algebra_to_json(alg)}}; });
    });
}

void law_polarized_combination(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        unsigned n = static_cast<unsigned>(alg->rank());
        unsigned k1 = static_cast<unsigned>(ctx.gen.rng().below(n + 1));
        unsigned k2 = static_cast<unsigned>(ctx.gen.rng().below(n - k1 + 1));
        unsigned k3 = n - k1 - k2;
        RingElement b = ctx.gen.random_element(ring);
        RingElement b3 = ctx.gen.random_element(ring);
        RingElement lhs = polarized({{k1, b}, {k2, b}, {k3, b3}});
        RingElement rhs = mul(binomial_in(base, k1 + k2, k1), polarized({{k1 + k2, b}, {k3, b3}}));
        ctx.check(lhs == rhs, [&] {
            return json{{"algebra", algebra_to_json(alg)}, {"k1", k1}, {"k2", k2},
                        {"b", element_to_json(b)}, {"b3", element_to_json(b3)}};
        });
    });
}

void law_polarized_homogeneity(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        unsigned n = static_cast<unsigned>(alg->rank());
        unsigned k1 = static_cast<unsigned>(ctx.gen.rng().below(n + 1));
        unsigned k2 = n - k1;
        RingElement a = ctx.gen.random_element(base);
        RingElement b1 = ctx.gen.random_element(ring);
        RingElement b2 = ctx.gen.random_element(ring);
        RingElement lhs = polarized({{k1, scalar_mul(a, b1)}, {k2, b2}});
        RingElement ak = base->one();
        for (unsigned e = 0; e < k1; ++e) ak = mul(ak, a);
        RingElement rhs = mul(ak, polarized({{k1, b1}, {k2, b2}}));
        ctx.check(lhs == rhs, [&] {
            return json{{"algebra", algebra_to_json(alg)}, {"k1", k1},
                        {"a", element_to_json(a)}};
        });
    });
}

void law_polarized_degeneracy(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        unsigned n = static_cast<unsigned>(alg->rank());
        unsigned k2 = static_cast<unsigned>(ctx.gen.rng().below(n + 1));
        unsigned k3 = n - k2;
        RingElement b1 = ctx.gen.random_element(ring);
        RingElement b2 = ctx.gen.random_element(ring);
        RingElement b3 = ctx.gen.random_element(ring);
        bool ok = polarized({{0u, b1}, {k2, b2}, {k3, b3}}) == polarized({{k2, b2}, {k3, b3}});
        ctx.check(ok, [&] { return json{{"algebra", algebra_to_json(alg)}}; });
    });
}

void law_polarized_multiplicativity(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        unsigned n = static_cast<unsigned>(alg->rank());
        unsigned k1 = static_cast<unsigned>(ctx.gen.rng().below(n + 1));
        unsigned k2 = n - k1;
        RingElement bp = ctx.gen.random_element(ring);
        RingElement b1 = ctx.gen.random_element(ring);
        RingElement b2 = ctx.gen.random_element(ring);
        RingElement lhs = polarized({{k1, mul(bp, b1)}, {k2, mul(bp, b2)}});
        RingElement rhs = mul(norm_sn(bp), polarized({{k1, b1}, {k2, b2}}));
        ctx.check(lhs == rhs, [&] {
            return json{{"algebra", algebra_to_json(alg)}, {"b'", element_to_json(bp)}};
        });
    });
}

void law_polarization_completeness(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_algebra(base, 1 + ctx.gen.rng().below(3));
        RingPtr ring = algebra_ring(alg);
        unsigned n = static_cast<unsigned>(alg->rank());
        const unsigned m = 2;
        std::vector<RingElement> bs{ctx.gen.random_element(ring), ctx.gen.random_element(ring)};
        auto parts_list = compositions(n, m);
        std::vector<RingElement> polarized_values;
        for (const auto& ks : parts_list) {
            std::vector<std::pair<unsigned, RingElement>> parts;
            for (unsigned s = 0; s < m; ++s) parts.push_back({ks[s], bs[s]});
            polarized_values.push_back(polarized(parts));
        }
        // lambda tuples: exhaustive over Z/2 and Z/3, else sampled
        std::vector<std::vector<RingElement>> tuples;
        auto enumerated = base->enumerate();
        bool tiny = enumerated && enumerated->size() <= 3;
        if (tiny) {
            for (const auto& l1 : *enumerated)
                for (const auto& l2 : *enumerated) tuples.push_back({l1, l2});
        } else {
            for (int t = 0; t < 5; ++t)
                tuples.push_back({ctx.gen.random_element(base), ctx.gen.random_element(base)});
        }
        bool ok = true;
        for (const auto& lams : tuples) {
            RingElement combo = ring->zero();
            for (unsigned s = 0; s < m; ++s) combo = add(combo, scalar_mul(lams[s], bs[s]));
            RingElement lhs = norm_sn(combo);
            RingElement rhs = base->zero();
            for (size_t p = 0; p < parts_list.size(); ++p) {
                RingElement mono = base->one();
                for (unsigned s = 0; s < m; ++s)
                    for (unsigned e = 0; e < parts_list[p][s]; ++e) mono = mul(mono, lams[s]);
                rhs = add(rhs, mul(mono, polarized_values[p]));
            }
            if (!(lhs == rhs)) {
                ok = false;
                break;
            }
        }
        ctx.check(ok, [&] { return json{{"algebra", algebra_to_json(alg)}}; });
    });
}

void law_cayley_hamilton(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingElement x = ctx.gen.random_element(algebra_ring(alg));
        auto cp = char_poly_coeffs(x);
        Matrix m = mul_matrix(x);
        Matrix acc = Matrix::zero(base, m.rows(), m.cols());
        Matrix power = Matrix::identity(base, m.rows());
        for (size_t k = 0; k < cp.size(); ++k) {
            acc = mat_add(acc, scaled(cp[k], power));
            if (k + 1 < cp.size()) power = mat_mul(power, m);
        }
        ctx.check(matrix_is_zero(acc), [&] {
            return json{{"algebra", algebra_to_json(alg)}, {"x", element_to_json(x)}};
        });
    });
}

void law_trace_polarized(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        unsigned n = static_cast<unsigned>(alg->rank());
        RingElement x = ctx.gen.random_element(ring);
        bool ok = trace(x) == polarized({{1u, x}, {n - 1, ring->one()}});
        if (n == 2) {
            // trace(d) = s_2(d+1) - s_2(d) - 1
            RingElement d = ctx.gen.random_element(ring);
            RingElement rhs =
                sub(sub(norm_sn(add(d, ring->one())), norm_sn(d)), base->one());
            ok = ok && trace(d) == rhs;
        }
        ok = ok && trace(ring->one()) == base->from_int(static_cast<long>(n));
        ctx.check(ok, [&] {
            return json{{"algebra", algebra_to_json(alg)}, {"x", element_to_json(x)}};
        });
    });
}

void law_sn_base_change(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr alg = ctx.gen.random_extension(base);
        RingPtr ring = algebra_ring(alg);
        auto homs = ctx.gen.base_change_homs(base);
        const RingHom& f = homs[ctx.gen.rng().below(homs.size())];
        auto bc = base_change(alg, f);
        RingElement b = ctx.gen.random_element(ring);
        ctx.check(f(norm_sn(b)) == norm_sn(bc.push(b)), [&] {
            return json{{"algebra", algebra_to_json(alg)}, {"b", element_to_json(b)},
                        {"target", ring_to_json(f.target())}};
        });
    });
}

// ---------------------------------------------------------------------------
// quadratic laws

void law_hom_universal(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        QuadHom h = ctx.gen.random_hom(base);
        auto homs = ctx.gen.base_change_homs(base);
        const RingHom& f = homs[ctx.gen.rng().below(homs.size())];
        bool ok = true;
        try {
            push_hom(h, f); // validity must survive any base change
        } catch (const AlgebraError&) {
            ok = false;
        }
        ctx.check(ok, [&] {
            return json{{"hom", hom_to_json(h)}, {"source", quad_cx(h.source())},
                        {"target", quad_cx(h.target())}, {"push_to", ring_to_json(f.target())}};
        });
    });
}

void law_hom_preserves_norm_trace(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        QuadHom h = ctx.gen.random_hom(base);
        AlgebraPtr src = as_rank2_algebra(h.source());
        AlgebraPtr tgt = as_rank2_algebra(h.target());
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            RingElement a = ctx.gen.random_element(base);
            RingElement b = ctx.gen.random_element(base);
            RingElement e = algebra_element(src, {a, b});
            // a + b*x  |->  (a + b*c) + (b*u)*x
            RingElement image = algebra_element(tgt, {add(a, mul(b, h.c())), mul(b, h.u())});
            ok = norm_sn(e) == norm_sn(image) && trace(e) == trace(image);
        }
        ctx.check(ok, [&] {
            return json{{"hom", hom_to_json(h)}, {"source", quad_cx(h.source())},
                        {"target", quad_cx(h.target())}};
        });
    });
}

void law_star_monoid(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        BasedQuadratic p = ctx.gen.random_quad(base);
        BasedQuadratic q = ctx.gen.random_quad(base);
        BasedQuadratic r = ctx.gen.random_quad(base);
        BasedQuadratic split = make_quad(base, base->one(), base->zero());
        BasedQuadratic degenerate = make_quad(base, base->zero(), base->zero());
        bool ok = star(p, q) == star(q, p);
        ok = ok && star(star(p, q), r) == star(p, star(q, r));
        ok = ok && star(split, q) == q && star(q, split) == q;
        ok = ok && star(degenerate, q) == degenerate;
        ctx.check(ok, [&] {
            return json{{"p", quad_cx(p)}, {"q", quad_cx(q)}, {"r", quad_cx(r)}};
        });
    });
}

void law_disc_star(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        BasedQuadratic p = ctx.gen.random_quad(base);
        BasedQuadratic q = ctx.gen.random_quad(base);
        bool ok = discriminant(star(p, q)) == mul(discriminant(p), discriminant(q));
        ctx.check(ok, [&] { return json{{"p", quad_cx(p)}, {"q", quad_cx(q)}}; });
    });
}

// ---------------------------------------------------------------------------
// norm laws

void law_norm_disc_identity(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        Extension ext(ctx.gen.random_extension(base));
        BasedQuadratic q = ctx.gen.random_quad(ext.ring());
        BasedQuadratic nm = ext.norm_quad(q);
        RingElement lhs = discriminant(nm);
        RingElement rhs = norm_sn(discriminant(q));
        ctx.check(lhs == rhs, [&] {
            return json{{"algebra", algebra_to_json(ext.algebra())}, {"quad", quad_cx(q)}};
        });
    });
}

void law_norm_product_star(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        Extension ext(product_algebra(trivial_algebra(base), trivial_algebra(base)));
        RingElement s = ctx.gen.random_element(base), m = ctx.gen.random_element(base);
        RingElement t = ctx.gen.random_element(base), n = ctx.gen.random_element(base);
        BasedQuadratic q = make_quad(ext.ring(), algebra_element(ext.algebra(), {s, t}),
                                     algebra_element(ext.algebra(), {m, n}));
        BasedQuadratic lhs = ext.norm_quad(q);
        BasedQuadratic rhs = star(make_quad(base, s, m), make_quad(base, t, n));
        ctx.check(lhs == rhs, [&] {
            return json{{"S", element_to_json(s)}, {"M", element_to_json(m)},
                        {"T", element_to_json(t)}, {"N", element_to_json(n)}};
        });
    });
}

void law_norm_sqrt_d(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        size_t n = 1 + ctx.gen.rng().below(3);
        Extension ext(ctx.gen.random_algebra(base, n));
        RingElement d = ctx.gen.random_element(ext.ring());
        BasedQuadratic q = make_quad(ext.ring(), ext.ring()->zero(), neg(d));
        BasedQuadratic nm = ext.norm_quad(q);
        RingElement expected = neg(mul(base->from_int(zpow(4, n - 1)), norm_sn(d)));
        bool ok = nm.t.is_zero() && nm.n == expected;
        ctx.check(ok, [&] {
            return json{{"algebra", algebra_to_json(ext.algebra())}, {"D", element_to_json(d)}};
        });
    });
}

void law_norm_split_degenerate(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        Extension ext(ctx.gen.random_extension(base));
        BasedQuadratic split = make_quad(ext.ring(), ext.ring()->one(), ext.ring()->zero());
        BasedQuadratic degenerate = make_quad(ext.ring(), ext.ring()->zero(), ext.ring()->zero());
        bool ok = ext.norm_quad(split) == make_quad(base, base->one(), base->zero());
        ok = ok && ext.norm_quad(degenerate) == make_quad(base, base->zero(), base->zero());
        ctx.check(ok, [&] { return json{{"algebra", algebra_to_json(ext.algebra())}}; });
    });
}

void law_norm_functorial(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        Extension ext(ctx.gen.random_extension(base));
        auto [f, g] = ctx.gen.random_chain(ext.ring()); // f: Q'->Q, g: Q''->Q'
        QuadHom lhs = ext.norm_hom(compose(f, g));
        QuadHom rhs = compose(ext.norm_hom(f), ext.norm_hom(g));
        ctx.check(lhs == rhs, [&] {
            return json{{"algebra", algebra_to_json(ext.algebra())}, {"f", hom_to_json(f)},
                        {"g", hom_to_json(g)}};
        });
    });
}

void law_norm_base_change(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        Extension ext(ctx.gen.random_extension(base));
        auto homs = ctx.gen.base_change_homs(base);
        const RingHom& f = homs[ctx.gen.rng().below(homs.size())];
        auto bc = base_change(ext.algebra(), f);
        Extension pushed(bc.algebra);
        BasedQuadratic q = ctx.gen.random_quad(ext.ring());
        BasedQuadratic lhs = push_quad(ext.norm_quad(q), f);
        BasedQuadratic rhs = pushed.norm_quad(push_quad(q, bc.push));
        ctx.check(lhs == rhs, [&] {
            return json{{"algebra", algebra_to_json(ext.algebra())}, {"quad", quad_cx(q)},
                        {"target", ring_to_json(f.target())}};
        });
    });
}

void law_norm_transitive(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr lower, upper;
        if (base->kind() == RingKind::Integers && i % 5 == 0) {
            std::tie(lower, upper) = FixtureGen::gaussian_tower();
        } else {
            lower = ctx.gen.random_algebra(base, 1 + ctx.gen.rng().below(2));
            upper = ctx.gen.random_upper_algebra(lower, 1 + ctx.gen.rng().below(2));
        }
        Extension a_to_b(lower), b_to_c(upper);
        BasedQuadratic q = ctx.gen.random_quad(b_to_c.ring());
        auto [direct, staged] = norm_tower_check(a_to_b, b_to_c, q);
        ctx.check(direct == staged, [&] {
            return json{{"lower", algebra_to_json(lower)}, {"upper", algebra_to_json(upper)},
                        {"quad", quad_cx(q)}};
        });
    });
}

void law_norm_transitive_hom(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        AlgebraPtr lower = ctx.gen.random_algebra(base, 1 + ctx.gen.rng().below(2));
        AlgebraPtr upper = ctx.gen.random_upper_algebra(lower, 1 + ctx.gen.rng().below(2));
        Extension a_to_b(lower), b_to_c(upper);
        QuadHom f = ctx.gen.random_hom(b_to_c.ring());
        auto [direct, staged] = norm_tower_hom_check(a_to_b, b_to_c, f);
        ctx.check(direct == staged, [&] {
            return json{{"lower", algebra_to_json(lower)}, {"upper", algebra_to_json(upper)},
                        {"f", hom_to_json(f)}};
        });
    });
}

void law_norm_monoid_iso(LawContext& ctx) {
    int exact = 0;
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.finite_at(i);
        Extension ext(ctx.gen.random_algebra(base, 1 + ctx.gen.rng().below(3)));
        BasedQuadratic q = ctx.gen.random_quad(ext.ring());
        BasedQuadratic qp = ctx.gen.random_quad(ext.ring());
        BasedQuadratic lhs = ext.norm_quad(star(q, qp));
        BasedQuadratic rhs = star(ext.norm_quad(q), ext.norm_quad(qp));
        if (lhs == rhs) ++exact;
        auto iso = find_isomorphism(lhs, rhs);
        ctx.check(iso.has_value(), [&] {
            return json{{"algebra", algebra_to_json(ext.algebra())}, {"q", quad_cx(q)},
                        {"q'", quad_cx(qp)}, {"lhs", quad_cx(lhs)}, {"rhs", quad_cx(rhs)}};
        });
    });
    ctx.result.detail = json{{"exact_equalities", exact}};
}

void law_norm_etale_unit(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        Extension ext(ctx.gen.random_extension(base));
        // Prefer a genuinely random etale quadratic; fall back to a conjugate
        // of the split algebra when unit discriminants are scarce.
        std::optional<BasedQuadratic> etale;
        for (int attempt = 0; attempt < 20 && !etale; ++attempt) {
            BasedQuadratic q = ctx.gen.random_quad(ext.ring());
            if (is_unit(discriminant(q))) etale = q;
        }
        if (!etale) {
            BasedQuadratic split = make_quad(ext.ring(), ext.ring()->one(), ext.ring()->zero());
            etale = ctx.gen.random_hom_onto(split).source();
        }
        bool ok = is_unit(discriminant(*etale));
        ok = ok && is_unit(discriminant(ext.norm_quad(*etale)));
        ctx.check(ok, [&] {
            return json{{"algebra", algebra_to_json(ext.algebra())}, {"quad", quad_cx(*etale)}};
        });
    });
}

void law_norm_iso_unit(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        Extension ext(ctx.gen.random_extension(base));
        RingElement u = ctx.gen.random_unit(ext.ring());
        ctx.check(is_unit(norm_sn(u)), [&] {
            return json{{"algebra", algebra_to_json(ext.algebra())}, {"U", element_to_json(u)}};
        });
    });
}

void law_swap_parity(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        size_t n = 1 + static_cast<size_t>(i % 4);
        AlgebraPtr b = trivial_algebra(base);
        for (size_t k = 1; k < n; ++k) b = product_algebra(b, trivial_algebra(base));
        Extension ext(b);
        BasedQuadratic split = make_quad(ext.ring(), ext.ring()->one(), ext.ring()->zero());
        QuadHom swap = make_hom(split, split, ext.ring()->from_int(-1), ext.ring()->one());
        QuadHom nm = ext.norm_hom(swap);
        bool odd = n % 2 == 1;
        RingElement expect_u = odd ? base->from_int(-1) : base->one();
        RingElement expect_c = odd ? base->one() : base->zero();
        ctx.check(nm.u() == expect_u && nm.c() == expect_c, [&] {
            return json{{"n", n}, {"u", element_to_json(nm.u())},
                        {"c", element_to_json(nm.c())}};
        });
    });
}

// ---------------------------------------------------------------------------
// descent laws

struct DescentScenario {
    Cover cover;
    std::optional<AlgebraPtr> algebra;
};

DescentScenario descent_scenario(LawContext& ctx, int i) {
    switch (i % 5) {
        case 0: {
            Cover c = FixtureGen::integer_cover_23();
            AlgebraPtr b = ctx.gen.random_algebra(c.base(), 1 + ctx.gen.rng().below(2));
            return {c, b};
        }
        case 1: {
            Cover c = FixtureGen::modular_cover_12();
            AlgebraPtr b = ctx.gen.random_algebra(c.base(), 1 + ctx.gen.rng().below(2));
            return {c, b};
        }
        case 2: {
            Cover c = FixtureGen::modular_cover_60();
            AlgebraPtr b = ctx.gen.random_algebra(c.base(), 2);
            return {c, b};
        }
        case 3: {
            Cover c = FixtureGen::modular_cover_30();
            AlgebraPtr b = ctx.gen.random_algebra(c.base(), 1 + ctx.gen.rng().below(2));
            return {c, b};
        }
        default: {
            Cover c = FixtureGen::integer_cover_23();
            return {c, std::nullopt};
        }
    }
}

void law_descent_glue_valid(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        auto scenario = descent_scenario(ctx, i);
        auto fixture = ctx.gen.descent_fixture(scenario.cover, scenario.algebra);
        QuadDescentDatum glued = glue_norm(fixture.datum); // revalidates internally
        ctx.check(!glued.algebra.has_value() && glued.locals.size() == scenario.cover.size(),
                  [&] { return descent_to_json(fixture.datum); });
    });
}

void law_descent_well_defined(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        auto scenario = descent_scenario(ctx, i);
        if (!scenario.algebra) {
            ctx.check(true, [] { return json(); });
            return;
        }
        auto fixture = ctx.gen.descent_fixture(scenario.cover, scenario.algebra);
        QuadDescentDatum glued = glue_norm(fixture.datum);
        Extension ext(*scenario.algebra);
        BasedQuadratic norm_global = ext.norm_quad(fixture.global);
        bool ok = true;
        for (size_t p = 0; p < scenario.cover.size() && ok; ++p) {
            Extension piece_ext(base_change(*scenario.algebra, scenario.cover.piece(p).map).algebra);
            QuadHom witness = piece_ext.norm_hom(fixture.changes[p]);
            BasedQuadratic expected_target =
                push_quad(norm_global, scenario.cover.piece(p).map);
            ok = witness.source() == glued.locals[p] && witness.target() == expected_target &&
                 is_isomorphism(witness);
        }
        ctx.check(ok, [&] { return descent_to_json(fixture.datum); });
    });
}

void law_descent_refinement(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        (void)i;
        Cover big = FixtureGen::integer_cover_235();
        Cover small = FixtureGen::integer_cover_23();
        AlgebraPtr b = ctx.gen.random_algebra(big.base(), 1 + ctx.gen.rng().below(2));
        auto fixture = ctx.gen.descent_fixture(big, b);
        // Restrict the same global + generator changes to the {2,3} subcover.
        std::vector<QuadHom> small_changes{fixture.changes[0], fixture.changes[1]};
        auto small_fixture = ctx.gen.descent_fixture_from(small, b, fixture.global, small_changes);
        QuadDescentDatum glued_big = glue_norm(fixture.datum);
        QuadDescentDatum glued_small = glue_norm(small_fixture.datum);
        bool ok = glued_big.locals[0] == glued_small.locals[0] &&
                  glued_big.locals[1] == glued_small.locals[1] &&
                  glued_big.transitions.at({0, 1}) == glued_small.transitions.at({0, 1});
        ctx.check(ok, [&] { return descent_to_json(fixture.datum); });
    });
}

void law_descent_norm_det(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        auto scenario = descent_scenario(ctx, i);
        auto fixture = ctx.gen.descent_fixture(scenario.cover, scenario.algebra);
        LineDescentDatum lhs = det_bundle(glue_norm(fixture.datum));
        LineDescentDatum rhs = line_norm(det_bundle(fixture.datum));
        bool ok = lhs.transitions.size() == rhs.transitions.size();
        for (const auto& [ij, u] : lhs.transitions)
            ok = ok && rhs.transitions.count(ij) && rhs.transitions.at(ij) == u;
        ctx.check(ok, [&] { return descent_to_json(fixture.datum); });
    });
}

void law_descent_norm_disc(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        auto scenario = descent_scenario(ctx, i);
        auto fixture = ctx.gen.descent_fixture(scenario.cover, scenario.algebra);
        QuadDescentDatum glued = glue_norm(fixture.datum);
        auto before = disc_form(fixture.datum);
        auto after = disc_form(glued);
        bool ok = true;
        for (size_t p = 0; p < before.size() && ok; ++p) {
            RingElement expected =
                scenario.algebra ? norm_sn(before[p]) : before[p];
            ok = after[p] == expected;
        }
        // on overlaps the restricted discriminants differ by the square of
        // the determinant transition
        const auto& d = fixture.datum;
        for (size_t p = 0; p < d.cover.size() && ok; ++p) {
            for (size_t q = 0; q < d.cover.size() && ok; ++q) {
                if (p == q) continue;
                RingElement disc_p = d.restrict_to_overlap(p, q)(before[p]);
                RingElement disc_q = d.restrict_to_overlap(q, p)(before[q]);
                const RingElement& u = d.transitions.at({p, q}).u();
                ok = disc_p == mul(mul(u, u), disc_q);
            }
        }
        ctx.check(ok, [&] { return descent_to_json(fixture.datum); });
    });
}

void law_descent_etale_parity(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        auto scenario = descent_scenario(ctx, i);
        if (!scenario.algebra) {
            ctx.check(true, [] { return json(); });
            return;
        }
        const Cover& cover = scenario.cover;
        const AlgebraPtr& b = *scenario.algebra;
        size_t n = b->rank();
        // Split locals with identity-or-swap generator changes.
        RingPtr ext_ring = algebra_ring(b);
        BasedQuadratic global = make_quad(ext_ring, ext_ring->one(), ext_ring->zero());
        std::vector<QuadHom> changes;
        std::vector<bool> swapped;
        for (size_t p = 0; p < cover.size(); ++p) {
            RingHom push = base_change(b, cover.piece(p).map).push;
            BasedQuadratic split_p = push_quad(global, push);
            bool use_swap = ctx.gen.rng().below(2) == 1;
            swapped.push_back(use_swap);
            if (use_swap)
                changes.push_back(make_hom(split_p, split_p, split_p.base->from_int(-1),
                                           split_p.base->one()));
            else
                changes.push_back(identity_hom(split_p));
        }
        auto fixture = ctx.gen.descent_fixture_from(cover, b, global, changes);
        // Every local discriminant is a unit, so the glued ones must be too.
        bool ok = true;
        for (const auto& dsc : disc_form(fixture.datum)) ok = ok && is_unit(dsc);
        QuadDescentDatum glued = glue_norm(fixture.datum);
        for (const auto& dsc : disc_form(glued)) ok = ok && is_unit(dsc);
        // Parity: the glued transition is swap^(n * (swap parity of the pair)).
        for (size_t p = 0; p < cover.size() && ok; ++p) {
            for (size_t q = 0; q < cover.size() && ok; ++q) {
                if (p == q) continue;
                const QuadHom& t = glued.transitions.at({p, q});
                const RingPtr& ov = t.u().ring();
                bool swap_expected = (swapped[p] != swapped[q]) && (n % 2 == 1);
                RingElement expect_u = swap_expected ? ov->from_int(-1) : ov->one();
                RingElement expect_c = swap_expected ? ov->one() : ov->zero();
                ok = t.u() == expect_u && t.c() == expect_c;
            }
        }
        ctx.check(ok, [&] { return descent_to_json(fixture.datum); });
    });
}

void law_line_norm(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        auto scenario = descent_scenario(ctx, i);
        LineDescentDatum d = ctx.gen.random_line_datum(scenario.cover, scenario.algebra);
        LineDescentDatum nm = line_norm(d); // validates both sides
        bool ok = true;
        if (!scenario.algebra) {
            for (const auto& [ij, u] : d.transitions) ok = ok && nm.transitions.at(ij) == u;
        } else if ((*scenario.algebra)->rank() == 2) {
            // when B = A x A (split rank 2), s_2((u, v)) = u*v
            for (const auto& [ij, u] : d.transitions) {
                if (u.ring()->kind() != RingKind::AlgebraRing) continue;
                const auto& coords = u.as_coords();
                const AlgebraPtr& alg = algebra_of(u.ring());
                bool is_split = true;
                for (size_t a = 0; a < 2 && is_split; ++a)
                    is_split = alg->sc(a, a, a).is_one() && alg->sc(0, 1, 0).is_zero() &&
                               alg->sc(0, 1, 1).is_zero();
                if (is_split) ok = ok && nm.transitions.at(ij) == mul(coords[0], coords[1]);
            }
        }
        ctx.check(ok, [&] { return json{{"cover_size", scenario.cover.size()}}; });
    });
}

void law_json_round_trip(LawContext& ctx) {
    run_cases(ctx, [&](int i) {
        const RingPtr& base = ctx.ring_at(i);
        bool ok = same_ring(ring_from_json(ring_to_json(base)), base);
        RingElement x = ctx.gen.random_element(base);
        ok = ok && element_from_json(base, element_to_json(x)) == x;
        AlgebraPtr alg = ctx.gen.random_extension(base);
        ok = ok && algebra_from_json(algebra_to_json(alg))->same_as(*alg);
        RingPtr ext = algebra_ring(alg);
        RingElement y = ctx.gen.random_element(ext);
        ok = ok && element_from_json(ring_from_json(ring_to_json(ext)), element_to_json(y)) == y;
        BasedQuadratic q = ctx.gen.random_quad(base);
        ok = ok && quad_from_json(quad_to_json(q)) == q;
        if (i % 8 == 0) {
            auto scenario = descent_scenario(ctx, i / 2);
            QuadDescentDatum d =
                ctx.gen.random_descent_datum(scenario.cover, scenario.algebra);
            QuadDescentDatum d2 = descent_from_json(descent_to_json(d));
            ok = ok && d2.locals.size() == d.locals.size();
            for (size_t p = 0; p < d.locals.size() && ok; ++p)
                ok = d2.locals[p] == d.locals[p];
            for (const auto& [ij, t] : d.transitions)
                ok = ok && d2.transitions.at(ij) == t;
        }
        ctx.check(ok, [&] {
            return json{{"ring", ring_to_json(base)}, {"x", element_to_json(x)}};
        });
    });
}

struct LawSpec {
    const char* name;
    void (*fn)(LawContext&);
};

const std::vector<LawSpec>& law_registry() {
    static const std::vector<LawSpec> laws = {
        {"ring-axioms", law_ring_axioms},
        {"ring-canonical-json", law_ring_canonical},
        {"modular-localization-kernel", law_modular_localization_kernel},
        {"det-multiplicative", law_det_multiplicative},
        {"det-transpose", law_det_transpose},
        {"sn-multiplicative", law_sn_multiplicative},
        {"sn-homogeneous", law_sn_homogeneous},
        {"sn-transitive", law_sn_transitive},
        {"polarized-reordering", law_polarized_reordering},
        {"polarized-combination", law_polarized_combination},
        {"polarized-homogeneity", law_polarized_homogeneity},
        {"polarized-degeneracy", law_polarized_degeneracy},
        {"polarized-multiplicativity", law_polarized_multiplicativity},
        {"polarization-completeness", law_polarization_completeness},
        {"cayley-hamilton", law_cayley_hamilton},
        {"trace-polarized", law_trace_polarized},
        {"sn-base-change", law_sn_base_change},
        {"hom-universal", law_hom_universal},
        {"hom-preserves-norm-trace", law_hom_preserves_norm_trace},
        {"star-monoid", law_star_monoid},
        {"disc-star", law_disc_star},
        {"norm-disc-identity", law_norm_disc_identity},
        {"norm-product-star", law_norm_product_star},
        {"norm-sqrt-d", law_norm_sqrt_d},
        {"norm-split-degenerate", law_norm_split_degenerate},
        {"norm-functorial", law_norm_functorial},
        {"norm-base-change", law_norm_base_change},
        {"norm-transitive", law_norm_transitive},
        {"norm-transitive-hom", law_norm_transitive_hom},
        {"norm-monoid-iso", law_norm_monoid_iso},
        {"norm-etale-unit", law_norm_etale_unit},
        {"norm-iso-unit", law_norm_iso_unit},
        {"swap-parity", law_swap_parity},
        {"descent-glue-valid", law_descent_glue_valid},
        {"descent-well-defined", law_descent_well_defined},
        {"descent-refinement", law_descent_refinement},
        {"descent-norm-det", law_descent_norm_det},
        {"descent-norm-disc", law_descent_norm_disc},
        {"descent-etale-parity", law_descent_etale_parity},
        {"line-norm", law_line_norm},
        {"json-round-trip", law_json_round_trip},
    };
    return laws;
}

} // namespace

std::vector<std::string> law_names() {
    std::vector<std::string> out;
    for (const auto& l : law_registry()) out.push_back(l.name);
    return out;
}

VerifyReport run_verify(const VerifyConfig& config) {
    std::vector<RingPtr> family =
        config.ring_family.empty() ? FixtureGen::default_ring_family() : config.ring_family;
    bool run_all = config.laws.empty() ||
                   (config.laws.size() == 1 && config.laws[0] == "all");
    std::vector<const LawSpec*> selected;
    for (const auto& l : law_registry()) {
        if (run_all) {
            selected.push_back(&l);
            continue;
        }
        for (const auto& want : config.laws)
            if (want == l.name) selected.push_back(&l);
    }
    require(!selected.empty(), Errc::InvalidArgument, "no matching laws selected");

    VerifyReport report;
    report.seed = config.seed;
    report.cases_per_law = config.cases_per_law;

    std::vector<std::future<LawResult>> futures;
    for (const LawSpec* law : selected) {
        futures.push_back(std::async(std::launch::async, [law, &family, &config] {
            uint64_t law_seed = SplitMix64(config.seed ^ fnv1a(law->name)).next();
            LawContext ctx(law_seed, family, config.cases_per_law);
            ctx.result.law = law->name;
            auto start = std::chrono::steady_clock::now();
            law->fn(ctx);
            auto stop = std::chrono::steady_clock::now();
            ctx.result.seconds = std::chrono::duration<double>(stop - start).count();
            return std::move(ctx.result);
        }));
    }
    for (auto& f : futures) report.laws.push_back(f.get());
    return report;
}

json report_to_json(const VerifyReport& report, bool include_timings) {
    json laws = json::array();
    for (const auto& r : report.laws) {
        json entry{{"law", r.law},
                   {"cases", r.cases},
                   {"passes", r.passes},
                   {"fails", r.fails}};
        entry["first_counterexample"] =
            r.first_counterexample ? *r.first_counterexample : json(nullptr);
        if (!r.detail.is_null()) entry["detail"] = r.detail;
        if (include_timings) entry["seconds"] = r.seconds;
        laws.push_back(std::move(entry));
    }
    return json{{"seed", std::to_string(report.seed)},
                {"cases_per_law", report.cases_per_law},
                {"ok", report.ok()},
                {"laws", std::move(laws)}};
}

} // namespace quadnorm
