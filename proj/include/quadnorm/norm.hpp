#pragma once

#include "quadnorm/quadratic.hpp"

namespace quadnorm {

/// A rank-n algebra B over A, viewed as the carrier of the norm functor
/// taking quadratic data over B down to quadratic data over A.
class Extension {
public:
    explicit Extension(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }
    const RingPtr& ring() const noexcept { return ring_; } // AlgebraRing(B)
    const RingPtr& base() const noexcept { return algebra_->base(); }
    size_t rank() const noexcept { return algebra_->rank(); }

    /// Norm of a based quadratic (T, N) over B:
    ///   ( s_n(T), sum_{k=1..n} (-4)^{k-1} s_{k,n-k}(N, T^2) )
    /// Computed both by the closed sum and by the lambda-fraction form
    ///   ((s_n(lam*N + T^2) - s_n(T^2)) / lam) at lam = -4;
    /// the two paths must agree (InternalContradiction otherwise).
    BasedQuadratic norm_quad(const BasedQuadratic& q) const;

    /// Norm of a norm-preserving hom (U, C): the hom with
    ///   u = s_n(U),  c = sum_{k=1..n} 2^{k-1} s_{k,n-k}(C, U*T)
    /// where T is the target's trace entry. The result is revalidated; the
    /// proposition guarantees validity, so a failure is an internal bug.
    QuadHom norm_hom(const QuadHom& f) const;

private:
    AlgebraPtr algebra_;
    RingPtr ring_;
};

/// Both routes down a tower A -> B -> C: (Nm_{C/A}(q), Nm_{B/A}(Nm_{C/B}(q))).
/// `q` lives over the algebra-ring view of c_over_b. Transitivity makes the
/// two components equal as (t, n) pairs; the caller asserts it.
std::pair<BasedQuadratic, BasedQuadratic> norm_tower_check(const Extension& a_to_b,
                                                           const Extension& b_to_c,
                                                           const BasedQuadratic& q);

/// Hom version: (Nm_{C/A}(f), Nm_{B/A}(Nm_{C/B}(f))).
std::pair<QuadHom, QuadHom> norm_tower_hom_check(const Extension& a_to_b,
                                                 const Extension& b_to_c, const QuadHom& f);

/// Count of closed-sum vs lambda-fraction agreement checks performed so far
/// (never decreases; a disagreement throws InternalContradiction instead).
size_t oracle_checks_performed();

} // namespace quadnorm
