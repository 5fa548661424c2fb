#include "quadnorm/quadratic.hpp"

namespace quadnorm {

BasedQuadratic make_quad(const RingPtr& base, RingElement t, RingElement n) {
    require(same_ring(t.ring(), base), Errc::MixedRings, "t is not in the base ring");
    require(same_ring(n.ring(), base), Errc::MixedRings, "n is not in the base ring");
    return BasedQuadratic{base, std::move(t), std::move(n)};
}

bool operator==(const BasedQuadratic& p, const BasedQuadratic& q) {
    return same_ring(p.base, q.base) && p.t == q.t && p.n == q.n;
}

AlgebraPtr as_rank2_algebra(const BasedQuadratic& q) {
    const RingPtr& a = q.base;
    RingElement z = a->zero(), o = a->one();
    // basis {1, x}: 1*1 = 1, 1*x = x, x*x = t*x - n.
    std::vector<RingElement> structure{
        /* 1*1 */ o, z,
        /* 1*x */ z, o,
        /* x*1 */ z, o,
        /* x*x */ neg(q.n), q.t,
    };
    return make_algebra(a, 2, std::move(structure), {o, z}, false);
}

QuadHom::QuadHom(BasedQuadratic source, BasedQuadratic target, RingElement u, RingElement c)
    : source_(std::move(source)), target_(std::move(target)), u_(std::move(u)),
      c_(std::move(c)) {}

QuadHom make_hom(const BasedQuadratic& source, const BasedQuadratic& target, RingElement u,
                 RingElement c) {
    require(same_ring(source.base, target.base), Errc::MixedRings,
            "hom endpoints live over different rings");
    const RingPtr& a = source.base;
    require(same_ring(u.ring(), a) && same_ring(c.ring(), a), Errc::MixedRings,
            "hom coefficients are not in the base ring");
    RingElement two = a->from_int(2);
    RingElement trace_rhs = add(mul(u, target.t), mul(two, c));
    require(source.t == trace_rhs, Errc::NotNormPreserving,
            "trace equation t' = u*t + 2c fails");
    RingElement norm_rhs = add(add(mul(mul(u, u), target.n), mul(mul(u, c), target.t)),
                               mul(c, c));
    require(source.n == norm_rhs, Errc::NotNormPreserving,
            "norm equation n' = u^2*n + u*c*t + c^2 fails");
    return QuadHom(source, target, std::move(u), std::move(c));
}

bool operator==(const QuadHom& f, const QuadHom& g) {
    return f.source() == g.source() && f.target() == g.target() && f.u() == g.u() &&
           f.c() == g.c();
}

QuadHom identity_hom(const BasedQuadratic& q) {
    return make_hom(q, q, q.base->one(), q.base->zero());
}

QuadHom compose(const QuadHom& outer, const QuadHom& inner) {
    require(inner.target() == outer.source(), Errc::ChainMismatch,
            "compose: inner target differs from outer source");
    RingElement u = mul(inner.u(), outer.u());
    RingElement c = add(mul(inner.u(), outer.c()), inner.c());
    return make_hom(inner.source(), outer.target(), std::move(u), std::move(c));
}

bool is_isomorphism(const QuadHom& f) { return is_unit(f.u()); }

QuadHom inverse_hom(const QuadHom& f) {
    require(is_isomorphism(f), Errc::NotAUnit, "hom is not an isomorphism");
    RingElement u_inv = inverse(f.u());
    return make_hom(f.target(), f.source(), u_inv, neg(mul(u_inv, f.c())));
}

BasedQuadratic star(const BasedQuadratic& p, const BasedQuadratic& q) {
    require(same_ring(p.base, q.base), Errc::MixedRings, "star over different rings");
    const RingElement& s = p.t;
    const RingElement& m = p.n;
    const RingElement& t = q.t;
    const RingElement& n = q.n;
    RingElement four = p.base->from_int(4);
    RingElement t_out = mul(s, t);
    RingElement n_out = sub(add(mul(m, mul(t, t)), mul(n, mul(s, s))), mul(four, mul(m, n)));
    return make_quad(p.base, std::move(t_out), std::move(n_out));
}

RingElement discriminant(const BasedQuadratic& q) {
    RingElement four = q.base->from_int(4);
    return sub(mul(q.t, q.t), mul(four, q.n));
}

std::optional<QuadHom> find_isomorphism(const BasedQuadratic& p, const BasedQuadratic& q) {
    require(same_ring(p.base, q.base), Errc::MixedRings,
            "isomorphism search over different rings");
    auto elems = p.base->enumerate();
    require(elems.has_value(), Errc::InfiniteRing,
            "isomorphism search needs a finite base ring");
    RingElement two = p.base->from_int(2);
    for (const auto& u : *elems) {
        if (!is_unit(u)) continue;
        for (const auto& c : *elems) {
            if (!(p.t == add(mul(u, q.t), mul(two, c)))) continue;
            RingElement norm_rhs =
                add(add(mul(mul(u, u), q.n), mul(mul(u, c), q.t)), mul(c, c));
            if (!(p.n == norm_rhs)) continue;
            return make_hom(p, q, u, c);
        }
    }
    return std::nullopt;
}

BasedQuadratic push_quad(const BasedQuadratic& q, const RingHom& f) {
    require(same_ring(f.source(), q.base), Errc::HomMismatch,
            "push_quad: hom does not start at the quadratic's base");
    return make_quad(f.target(), f(q.t), f(q.n));
}

QuadHom push_hom(const QuadHom& h, const RingHom& f) {
    return make_hom(push_quad(h.source(), f), push_quad(h.target(), f), f(h.u()), f(h.c()));
}

} // namespace quadnorm
