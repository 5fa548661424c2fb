#pragma once

#include <map>

#include "quadnorm/norm.hpp"

namespace quadnorm {

/// A Zariski cover of a base ring: elements a_1..a_k generating the unit
/// ideal (with stored witnesses sum r_i a_i = 1), together with the piece
/// localizations A_{a_i}, pairwise overlaps A_{a_i a_j} and, for covers with
/// three or more elements, triple overlaps.
class Cover {
public:
    static Cover make(RingPtr base, std::vector<RingElement> elements,
                      std::vector<RingElement> witnesses);

    const RingPtr& base() const noexcept { return base_; }
    size_t size() const noexcept { return elements_.size(); }
    const std::vector<RingElement>& elements() const noexcept { return elements_; }
    const std::vector<RingElement>& witnesses() const noexcept { return witnesses_; }

    const Localization& piece(size_t i) const;
    const Localization& overlap(size_t i, size_t j) const;      // i != j, unordered
    const Localization& triple(size_t i, size_t j, size_t k) const;

    /// Value-preserving restriction A_{a_i} -> A_{a_i a_j}.
    const RingHom& piece_to_overlap(size_t i, size_t j) const;
    /// Value-preserving restriction A_{a_i a_j} -> A_{a_i a_j a_k}.
    RingHom overlap_to_triple(size_t i, size_t j, size_t k) const;

private:
    Cover() = default;

    RingPtr base_;
    std::vector<RingElement> elements_;
    std::vector<RingElement> witnesses_;
    std::vector<Localization> pieces_;
    std::map<std::pair<size_t, size_t>, Localization> overlaps_;          // key i<j
    std::map<std::pair<size_t, size_t>, RingHom> piece_to_overlap_;       // ordered (i, j)
    std::map<std::tuple<size_t, size_t, size_t>, Localization> triples_;  // key i<j<k
};

/// Quadratic algebras presented by gluing data over a cover. When `algebra`
/// is present it is a global rank-n algebra B over the cover's base and the
/// local data lives over the algebra-ring views of its piece localizations
/// B_{a_i}; when absent the local data lives over the pieces themselves
/// (the rank-1 case, e.g. the output of glue_norm).
struct QuadDescentDatum {
    Cover cover;
    std::optional<AlgebraPtr> algebra;
    std::vector<BasedQuadratic> locals;
    std::map<std::pair<size_t, size_t>, QuadHom> transitions; // ordered pairs, i != j

    /// Ring the local datum on piece i lives over.
    RingPtr piece_ring(size_t i) const;
    /// Ring the transition over overlap {i, j} lives over.
    RingPtr overlap_ring(size_t i, size_t j) const;
    /// Restriction hom piece_ring(i) -> overlap_ring(i, j).
    RingHom restrict_to_overlap(size_t i, size_t j) const;

    BasedQuadratic local_on_overlap(size_t i, size_t j) const;

    /// Checks base rings, transition endpoints, invertibility, the
    /// inverse-pair condition and (for covers of size >= 3) the triangle
    /// cocycle on triple overlaps. Throws CocycleViolation / BaseMismatch.
    void validate() const;
};

/// Line bundles presented by unit transitions over a cover; same conventions
/// for `algebra` as QuadDescentDatum.
struct LineDescentDatum {
    Cover cover;
    std::optional<AlgebraPtr> algebra;
    std::map<std::pair<size_t, size_t>, RingElement> transitions;

    RingPtr overlap_ring(size_t i, size_t j) const;
    void validate() const;
};

/// Glue the norms: per-piece norm_quad of the locals and norm_hom of the
/// transitions. The output datum lives directly over the cover's base pieces
/// and is revalidated; functoriality guarantees it passes, so a failure here
/// is an internal bug.
QuadDescentDatum glue_norm(const QuadDescentDatum& d);

/// Norm of a glued line bundle: transitions s_n(U_{ij}).
LineDescentDatum line_norm(const LineDescentDatum& d);

/// Determinant line bundle: forget c, keep the u-components.
LineDescentDatum det_bundle(const QuadDescentDatum& d);

/// Per-piece discriminants t_i^2 - 4 n_i.
std::vector<RingElement> disc_form(const QuadDescentDatum& d);

struct GlobalizeResult {
    BasedQuadratic global;
    std::vector<QuadHom> witnesses; // piece i: restriction of global -> locals[i]
};

/// Bounded search for a global based form matching the datum: candidate
/// witness homs are generator shifts x -> x + c with c drawn from a finite
/// set per base (all residues for modular bases, |c| <= 8 for the integers).
/// Requires a cover with at most two pieces over Integers, Modular or a
/// product of those (UnsupportedBase) and a rank-1 datum. nullopt means not
/// globalizable within the search bound.
std::optional<GlobalizeResult> globalize(const QuadDescentDatum& d);

} // namespace quadnorm
