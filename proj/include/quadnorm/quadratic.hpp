#pragma once

#include "quadnorm/algebra.hpp"

namespace quadnorm {

/// A based quadratic algebra A[x]/(x^2 - t*x + n), written (t, n).
struct BasedQuadratic {
    RingPtr base;
    RingElement t;
    RingElement n;
};

BasedQuadratic make_quad(const RingPtr& base, RingElement t, RingElement n);

bool operator==(const BasedQuadratic& p, const BasedQuadratic& q);
inline bool operator!=(const BasedQuadratic& p, const BasedQuadratic& q) { return !(p == q); }

/// The same algebra as a rank-2 algebra on basis {1, x} with x^2 = t*x - n.
AlgebraPtr as_rank2_algebra(const BasedQuadratic& q);

/// A norm-preserving homomorphism (t', n') -> (t, n), x |-> u*x + c, stored in
/// target coordinates. Valid exactly when t' = u*t + 2c and
/// n' = u^2*n + u*c*t + c^2; make_hom rejects anything else.
class QuadHom {
public:
    const BasedQuadratic& source() const noexcept { return source_; }
    const BasedQuadratic& target() const noexcept { return target_; }
    const RingElement& u() const noexcept { return u_; }
    const RingElement& c() const noexcept { return c_; }

private:
    friend QuadHom make_hom(const BasedQuadratic&, const BasedQuadratic&, RingElement,
                            RingElement);
    QuadHom(BasedQuadratic source, BasedQuadratic target, RingElement u, RingElement c);

    BasedQuadratic source_;
    BasedQuadratic target_;
    RingElement u_;
    RingElement c_;
};

QuadHom make_hom(const BasedQuadratic& source, const BasedQuadratic& target, RingElement u,
                 RingElement c);

bool operator==(const QuadHom& f, const QuadHom& g);
inline bool operator!=(const QuadHom& f, const QuadHom& g) { return !(f == g); }

QuadHom identity_hom(const BasedQuadratic& q);

/// outer after inner; requires inner.target == outer.source (ChainMismatch).
/// With inner (v,d) and outer (u,c), the composite is (v*u, v*c + d).
QuadHom compose(const QuadHom& outer, const QuadHom& inner);

bool is_isomorphism(const QuadHom& f);

/// Inverse of an isomorphism: (u^{-1}, -u^{-1} c).
QuadHom inverse_hom(const QuadHom& f);

/// The monoid operation: (s,m) * (t,n) = (s*t, m*t^2 + n*s^2 - 4*m*n).
BasedQuadratic star(const BasedQuadratic& p, const BasedQuadratic& q);

/// t^2 - 4n.
RingElement discriminant(const BasedQuadratic& q);

/// Exhaustively search a finite base ring for an isomorphism p -> q.
/// InfiniteRing if the base cannot be enumerated.
std::optional<QuadHom> find_isomorphism(const BasedQuadratic& p, const BasedQuadratic& q);

/// Push a based quadratic along a ring hom out of its base.
BasedQuadratic push_quad(const BasedQuadratic& q, const RingHom& f);

/// Push a hom along a base-change hom; the equations survive any ring hom.
QuadHom push_hom(const QuadHom& h, const RingHom& f);

} // namespace quadnorm
