#pragma once

#include <cstdint>

#include "quadnorm/descent.hpp"

namespace quadnorm {

/// Deterministic 64-bit generator (splitmix64); identical streams on every
/// platform for a given seed.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        state += 0x9E3779B97F4A7C15ull;
        uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t bound) { return bound ? next() % bound : 0; }

    long range(long lo, long hi) { // inclusive
        return lo + static_cast<long>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    /// Derived stream for an independent purpose (per-law seeding).
    SplitMix64 fork(uint64_t salt) const { return SplitMix64(state ^ (salt * 0x9E3779B97F4A7C15ull)); }
};

uint64_t fnv1a(const std::string& text);

/// Reproducible fixture generation for the verification harness and tests.
/// Everything produced here passes the relevant structural invariants by
/// construction; make_algebra re-checks and a rejection cap turns a generator
/// bug into GenerationExhausted instead of a silent loop.
class FixtureGen {
public:
    explicit FixtureGen(uint64_t seed) : rng_(seed) {}

    SplitMix64& rng() { return rng_; }

    RingElement random_element(const RingPtr& ring);
    RingElement random_unit(const RingPtr& ring);

    /// Monogenic / split / product recipes, ranks 1..4.
    AlgebraPtr random_algebra(const RingPtr& base, size_t rank);
    AlgebraPtr random_extension(const RingPtr& base); // rank drawn from 1..4

    BasedQuadratic random_quad(const RingPtr& ring);

    /// Valid by construction: target and (u, c) are drawn, the source is
    /// defined by the two norm-preserving equations.
    QuadHom random_hom(const RingPtr& ring);
    QuadHom random_hom_onto(const BasedQuadratic& target);

    /// f: Q' -> Q and g: Q'' -> Q', ready for compose(f, g).
    std::pair<QuadHom, QuadHom> random_chain(const RingPtr& ring);

    /// A rank-m algebra over the algebra-ring view of `lower`.
    AlgebraPtr random_upper_algebra(const AlgebraPtr& lower, size_t rank);

    /// Base-change homs out of a base ring, for base-change laws.
    std::vector<RingHom> base_change_homs(const RingPtr& base);

    /// Descent datum over a cover, built from a global quadratic by choosing
    /// a different local generator on each piece; transitions come from the
    /// generator changes, so the cocycle holds by construction.
    struct DescentFixture {
        QuadDescentDatum datum;
        BasedQuadratic global;       // over the extension ring (or the base)
        std::vector<QuadHom> changes; // piece i: locals[i] -> restricted global
    };
    DescentFixture descent_fixture(const Cover& cover, const std::optional<AlgebraPtr>& algebra);
    DescentFixture descent_fixture_from(const Cover& cover,
                                        const std::optional<AlgebraPtr>& algebra,
                                        const BasedQuadratic& global,
                                        const std::vector<QuadHom>& piece_changes);
    QuadDescentDatum random_descent_datum(const Cover& cover,
                                          const std::optional<AlgebraPtr>& algebra);

    /// Unit-transition line datum built from per-piece units of a global
    /// element, cocycle by construction.
    LineDescentDatum random_line_datum(const Cover& cover,
                                       const std::optional<AlgebraPtr>& algebra);

    /// Default ring family: Z/m for m in {2,3,4,5,6,7,8,9,12}, the integers
    /// and Z/5 x Z/7.
    static std::vector<RingPtr> default_ring_family();

    /// The Gaussian-integer tower Z -> Z[i] -> Z[i][y]/(y^2 - i).
    static std::pair<AlgebraPtr, AlgebraPtr> gaussian_tower();

    static Cover integer_cover_23();
    static Cover integer_cover_235();
    static Cover modular_cover_12();  // {4, 9} over Z/12
    static Cover modular_cover_60();  // {3, 4} over Z/60, overlap Z/5
    static Cover modular_cover_30();  // {6, 10, 15} over Z/30, three idempotent pieces

private:
    SplitMix64 rng_;
};

} // namespace quadnorm
