#include "quadnorm/fixtures.hpp"

namespace quadnorm {

uint64_t fnv1a(const std::string& text) {
    uint64_t h = 0xCBF29CE484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001B3ull;
    }
    return h;
}

RingElement FixtureGen::random_element(const RingPtr& ring) {
    switch (ring->kind()) {
        case RingKind::Integers:
            return ring->from_int(rng_.range(-9, 9));
        case RingKind::Modular: {
            const auto& m = static_cast<const ModularRing&>(*ring).modulus();
            if (m.fits_ulong_p())
                return ring->from_int(mpz_class(rng_.below(m.get_ui())));
            return ring->from_int(rng_.range(-9, 9));
        }
        case RingKind::Localized: {
            mpz_class num = rng_.range(-9, 9);
            unsigned exp = static_cast<unsigned>(rng_.below(3));
            const auto& lr = static_cast<const LocalizedIntegersRing&>(*ring);
            mpq_class v(num, zpow(lr.inverted(), exp));
            v.canonicalize();
            return lr.from_rational(v);
        }
        case RingKind::Product: {
            const auto& pr = static_cast<const ProductRing&>(*ring);
            std::vector<RingElement> items;
            for (const auto& f : pr.factors()) items.push_back(random_element(f));
            return pr.tuple(std::move(items));
        }
        case RingKind::Polynomial: {
            const auto& pr = static_cast<const PolynomialRing&>(*ring);
            std::vector<PolyPayload::Term> terms;
            size_t count = 1 + rng_.below(3);
            for (size_t t = 0; t < count; ++t) {
                std::vector<unsigned> exps;
                for (size_t v = 0; v < pr.variables().size(); ++v)
                    exps.push_back(static_cast<unsigned>(rng_.below(3)));
                terms.push_back({std::move(exps), random_element(pr.base())});
            }
            return pr.from_terms(std::move(terms));
        }
        case RingKind::AlgebraRing: {
            const AlgebraPtr& alg = algebra_of(ring);
            std::vector<RingElement> coords;
            for (size_t i = 0; i < alg->rank(); ++i) coords.push_back(random_element(alg->base()));
            return std::static_pointer_cast<const AlgebraRing>(ring)->element(std::move(coords));
        }
    }
    fail(Errc::InternalContradiction, "unhandled ring kind in random_element");
}

RingElement FixtureGen::random_unit(const RingPtr& ring) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        RingElement x = random_element(ring);
        if (is_unit(x)) return x;
    }
    // Dense non-unit rings exist (e.g. the zero ring); 1 is always a unit.
    return ring->one();
}

AlgebraPtr FixtureGen::random_algebra(const RingPtr& base, size_t rank) {
    require(rank >= 1 && rank <= 4, Errc::InvalidArgument, "fixture ranks are 1..4");
    for (int attempt = 0; attempt < 32; ++attempt) {
        try {
            switch (rank) {
                case 1:
                    return trivial_algebra(base);
                case 2:
                    if (rng_.below(3) == 0)
                        return product_algebra(trivial_algebra(base), trivial_algebra(base));
                    return monogenic_algebra(base,
                                             {random_element(base), random_element(base)});
                case 3:
                    if (rng_.below(3) == 0)
                        return product_algebra(trivial_algebra(base),
                                               random_algebra(base, 2));
                    return monogenic_algebra(base, {random_element(base), random_element(base),
                                                    random_element(base)});
                default:
                    switch (rng_.below(3)) {
                        case 0:
                            return product_algebra(random_algebra(base, 2),
                                                   random_algebra(base, 2));
                        case 1:
                            return product_algebra(trivial_algebra(base),
                                                   random_algebra(base, 3));
                        default:
                            return monogenic_algebra(
                                base, {random_element(base), random_element(base),
                                       random_element(base), random_element(base)});
                    }
            }
        } catch (const AlgebraError&) {
            continue; // rejection sampling; recipes should never trip this
        }
    }
    fail(Errc::GenerationExhausted, "algebra generation hit the rejection cap");
}

AlgebraPtr FixtureGen::random_extension(const RingPtr& base) {
    return random_algebra(base, 1 + rng_.below(4));
}

BasedQuadratic FixtureGen::random_quad(const RingPtr& ring) {
    return make_quad(ring, random_element(ring), random_element(ring));
}

QuadHom FixtureGen::random_hom_onto(const BasedQuadratic& target) {
    const RingPtr& a = target.base;
    RingElement u = random_unit(a);
    RingElement c = random_element(a);
    RingElement two = a->from_int(2);
    RingElement t_src = add(mul(u, target.t), mul(two, c));
    RingElement n_src = add(add(mul(mul(u, u), target.n), mul(mul(u, c), target.t)), mul(c, c));
    BasedQuadratic source = make_quad(a, std::move(t_src), std::move(n_src));
    return make_hom(source, target, std::move(u), std::move(c));
}

QuadHom FixtureGen::random_hom(const RingPtr& ring) {
    return random_hom_onto(random_quad(ring));
}

std::pair<QuadHom, QuadHom> FixtureGen::random_chain(const RingPtr& ring) {
    QuadHom f = random_hom(ring);            // Q' -> Q
    QuadHom g = random_hom_onto(f.source()); // Q'' -> Q'
    return {f, g};
}

AlgebraPtr FixtureGen::random_upper_algebra(const AlgebraPtr& lower, size_t rank) {
    RingPtr bring = algebra_ring(lower);
    for (int attempt = 0; attempt < 32; ++attempt) {
        try {
            if (rank == 2 && rng_.below(3) == 0)
                return product_algebra(trivial_algebra(bring), trivial_algebra(bring));
            std::vector<RingElement> rel;
            for (size_t i = 0; i < rank; ++i) rel.push_back(random_element(bring));
            return monogenic_algebra(bring, rel);
        } catch (const AlgebraError&) {
            continue;
        }
    }
    fail(Errc::GenerationExhausted, "upper algebra generation hit the rejection cap");
}

std::vector<RingHom> FixtureGen::base_change_homs(const RingPtr& base) {
    std::vector<RingHom> out;
    out.push_back(RingHom::identity(base));
    switch (base->kind()) {
        case RingKind::Integers: {
            for (long m : {4L, 5L, 6L, 9L}) {
                RingPtr target = modular(m);
                out.push_back(RingHom(base, target, [target](const RingElement& x) {
                    return target->from_int(x.as_int());
                }));
            }
            break;
        }
        case RingKind::Modular: {
            const auto& m = static_cast<const ModularRing&>(*base).modulus();
            for (mpz_class d = 2; d < m; ++d) {
                if (m % d != 0) continue;
                RingPtr target = modular(d);
                out.push_back(RingHom(base, target, [target](const RingElement& x) {
                    return target->from_int(x.as_int());
                }));
            }
            break;
        }
        case RingKind::Product: {
            const auto& pr = static_cast<const ProductRing&>(*base);
            for (size_t i = 0; i < pr.factors().size(); ++i) {
                RingPtr target = pr.factors()[i];
                out.push_back(RingHom(base, target, [i](const RingElement& x) {
                    return x.as_tuple()[i];
                }));
            }
            break;
        }
        default:
            break;
    }
    return out;
}

FixtureGen::DescentFixture FixtureGen::descent_fixture_from(
    const Cover& cover, const std::optional<AlgebraPtr>& algebra, const BasedQuadratic& global,
    const std::vector<QuadHom>& piece_changes) {
    require(piece_changes.size() == cover.size(), Errc::InvalidArgument,
            "one generator change per cover piece required");
    QuadDescentDatum d{cover, algebra, {}, {}};
    const size_t k = cover.size();
    for (size_t i = 0; i < k; ++i) d.locals.push_back(piece_changes[i].source());
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            QuadHom hi = push_hom(piece_changes[i], d.restrict_to_overlap(i, j));
            QuadHom hj = push_hom(piece_changes[j], d.restrict_to_overlap(j, i));
            d.transitions.emplace(std::make_pair(i, j), compose(inverse_hom(hj), hi));
        }
    }
    return DescentFixture{std::move(d), global, piece_changes};
}

FixtureGen::DescentFixture FixtureGen::descent_fixture(const Cover& cover,
                                                       const std::optional<AlgebraPtr>& algebra) {
    RingPtr global_ring = algebra ? algebra_ring(*algebra) : cover.base();
    BasedQuadratic global = random_quad(global_ring);
    std::vector<QuadHom> changes;
    for (size_t i = 0; i < cover.size(); ++i) {
        RingHom to_piece = cover.piece(i).map;
        RingHom ext_to_piece = algebra ? base_change(*algebra, to_piece).push : to_piece;
        BasedQuadratic restricted = push_quad(global, ext_to_piece);
        changes.push_back(random_hom_onto(restricted)); // unit u, so an isomorphism
    }
    return descent_fixture_from(cover, algebra, global, changes);
}

QuadDescentDatum FixtureGen::random_descent_datum(const Cover& cover,
                                                  const std::optional<AlgebraPtr>& algebra) {
    return descent_fixture(cover, algebra).datum;
}

LineDescentDatum FixtureGen::random_line_datum(const Cover& cover,
                                               const std::optional<AlgebraPtr>& algebra) {
    LineDescentDatum d{cover, algebra, {}};
    const size_t k = cover.size();
    std::vector<RingElement> units;
    for (size_t i = 0; i < k; ++i) {
        RingHom to_piece = cover.piece(i).map;
        RingHom ext_to_piece = algebra ? base_change(*algebra, to_piece).push : to_piece;
        units.push_back(ext_to_piece(random_unit(ext_to_piece.source())));
    }
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            RingHom ri = cover.piece_to_overlap(i, j);
            RingHom rj = cover.piece_to_overlap(j, i);
            if (algebra) {
                ri = base_change(base_change(*algebra, cover.piece(i).map).algebra, ri).push;
                rj = base_change(base_change(*algebra, cover.piece(j).map).algebra, rj).push;
            }
            d.transitions.emplace(std::make_pair(i, j),
                                  mul(inverse(ri(units[i])), rj(units[j])));
        }
    }
    return d;
}

std::vector<RingPtr> FixtureGen::default_ring_family() {
    std::vector<RingPtr> out;
    for (long m : {2L, 3L, 4L, 5L, 6L, 7L, 8L, 9L, 12L}) out.push_back(modular(m));
    out.push_back(integers());
    out.push_back(product({modular(5), modular(7)}));
    return out;
}

std::pair<AlgebraPtr, AlgebraPtr> FixtureGen::gaussian_tower() {
    RingPtr z = integers();
    // Z[i]: basis {1, i}, i^2 = -1
    AlgebraPtr gauss = monogenic_algebra(z, {z->from_int(-1), z->zero()});
    RingPtr gring = algebra_ring(gauss);
    // Z[i][y]/(y^2 - i): y^2 = i = (0, 1)
    RingElement i_elem = algebra_element(gauss, {z->zero(), z->one()});
    AlgebraPtr upper = monogenic_algebra(gring, {i_elem, gring->zero()});
    return {gauss, upper};
}

Cover FixtureGen::integer_cover_23() {
    RingPtr z = integers();
    return Cover::make(z, {z->from_int(2), z->from_int(3)}, {z->from_int(-1), z->from_int(1)});
}

Cover FixtureGen::integer_cover_235() {
    RingPtr z = integers();
    // 2*(-2) + 3*0 + 5*1 = 1
    return Cover::make(z, {z->from_int(2), z->from_int(3), z->from_int(5)},
                       {z->from_int(-2), z->from_int(0), z->from_int(1)});
}

Cover FixtureGen::modular_cover_12() {
    RingPtr r = modular(12);
    // 4 + 9 = 13 = 1 mod 12
    return Cover::make(r, {r->from_int(4), r->from_int(9)}, {r->from_int(1), r->from_int(1)});
}

Cover FixtureGen::modular_cover_30() {
    RingPtr r = modular(30);
    // 6*6 + 10*(-2) + 15*1 = 31 = 1 mod 30
    return Cover::make(r, {r->from_int(6), r->from_int(10), r->from_int(15)},
                       {r->from_int(6), r->from_int(-2), r->from_int(1)});
}

Cover FixtureGen::modular_cover_60() {
    RingPtr r = modular(60);
    // 3*7 + 4*(-5) = 1
    return Cover::make(r, {r->from_int(3), r->from_int(4)}, {r->from_int(7), r->from_int(-5)});
}

} // namespace quadnorm
