#include "quadnorm/descent.hpp"

#include <algorithm>

namespace quadnorm {

namespace {

std::pair<size_t, size_t> unordered(size_t i, size_t j) {
    return {std::min(i, j), std::max(i, j)};
}

std::tuple<size_t, size_t, size_t> sorted_triple(size_t i, size_t j, size_t k) {
    std::vector<size_t> v{i, j, k};
    std::sort(v.begin(), v.end());
    return {v[0], v[1], v[2]};
}

} // namespace

Cover Cover::make(RingPtr base, std::vector<RingElement> elements,
                  std::vector<RingElement> witnesses) {
    require(!elements.empty(), Errc::InvalidArgument, "cover needs >= 1 element");
    require(elements.size() == witnesses.size(), Errc::InvalidArgument,
            "one witness per cover element required");
    RingElement acc = base->zero();
    for (size_t i = 0; i < elements.size(); ++i) {
        require(same_ring(elements[i].ring(), base), Errc::MixedRings,
                "cover element from another ring");
        require(same_ring(witnesses[i].ring(), base), Errc::MixedRings,
                "witness from another ring");
        acc = add(acc, mul(elements[i], witnesses[i]));
    }
    require(acc.is_one(), Errc::InvalidArgument,
            "cover elements do not generate the unit ideal (witness check failed)");

    Cover cov;
    cov.base_ = base;
    cov.elements_ = elements;
    cov.witnesses_ = std::move(witnesses);
    for (const auto& a : elements) cov.pieces_.push_back(base->localize(a));
    const size_t k = elements.size();
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            Localization ov = base->localize(mul(elements[i], elements[j]));
            cov.piece_to_overlap_.emplace(std::make_pair(i, j),
                                          restriction_hom(cov.pieces_[i].ring, ov.ring));
            cov.piece_to_overlap_.emplace(std::make_pair(j, i),
                                          restriction_hom(cov.pieces_[j].ring, ov.ring));
            cov.overlaps_.emplace(std::make_pair(i, j), std::move(ov));
        }
    }
    if (k >= 3) {
        for (size_t i = 0; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                for (size_t l = j + 1; l < k; ++l)
                    cov.triples_.emplace(
                        std::make_tuple(i, j, l),
                        base->localize(mul(mul(elements[i], elements[j]), elements[l])));
    }
    return cov;
}

const Localization& Cover::piece(size_t i) const {
    require(i < pieces_.size(), Errc::InvalidArgument, "piece index out of range");
    return pieces_[i];
}

const Localization& Cover::overlap(size_t i, size_t j) const {
    auto it = overlaps_.find(unordered(i, j));
    require(it != overlaps_.end(), Errc::InvalidArgument, "no such overlap");
    return it->second;
}

const Localization& Cover::triple(size_t i, size_t j, size_t k) const {
    auto it = triples_.find(sorted_triple(i, j, k));
    require(it != triples_.end(), Errc::InvalidArgument, "no such triple overlap");
    return it->second;
}

const RingHom& Cover::piece_to_overlap(size_t i, size_t j) const {
    auto it = piece_to_overlap_.find({i, j});
    require(it != piece_to_overlap_.end(), Errc::InvalidArgument, "no such restriction");
    return it->second;
}

RingHom Cover::overlap_to_triple(size_t i, size_t j, size_t k) const {
    return restriction_hom(overlap(i, j).ring, triple(i, j, k).ring);
}

// ---------------------------------------------------------------------------
// QuadDescentDatum

namespace {

AlgebraPtr changed_algebra(const AlgebraPtr& global, const RingHom& to_local) {
    return base_change(global, to_local).algebra;
}

} // namespace

RingPtr QuadDescentDatum::piece_ring(size_t i) const {
    if (!algebra) return cover.piece(i).ring;
    return algebra_ring(changed_algebra(*algebra, cover.piece(i).map));
}

RingPtr QuadDescentDatum::overlap_ring(size_t i, size_t j) const {
    if (!algebra) return cover.overlap(i, j).ring;
    return algebra_ring(changed_algebra(*algebra, cover.overlap(i, j).map));
}

RingHom QuadDescentDatum::restrict_to_overlap(size_t i, size_t j) const {
    const RingHom& rh = cover.piece_to_overlap(i, j);
    if (!algebra) return rh;
    AlgebraPtr piece_alg = changed_algebra(*algebra, cover.piece(i).map);
    return base_change(piece_alg, rh).push;
}

BasedQuadratic QuadDescentDatum::local_on_overlap(size_t i, size_t j) const {
    return push_quad(locals[i], restrict_to_overlap(i, j));
}

void QuadDescentDatum::validate() const {
    const size_t k = cover.size();
    require(locals.size() == k, Errc::InvalidArgument, "one local per cover piece required");
    for (size_t i = 0; i < k; ++i)
        require(same_ring(locals[i].base, piece_ring(i)), Errc::BaseMismatch,
                "local datum lives over the wrong ring on piece " + std::to_string(i));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            auto it = transitions.find({i, j});
            require(it != transitions.end(), Errc::CocycleViolation,
                    "missing transition (" + std::to_string(i) + "," + std::to_string(j) + ")");
            const QuadHom& t = it->second;
            require(t.source() == local_on_overlap(i, j), Errc::CocycleViolation,
                    "transition source does not match the restricted local");
            require(t.target() == local_on_overlap(j, i), Errc::CocycleViolation,
                    "transition target does not match the restricted local");
            require(is_isomorphism(t), Errc::CocycleViolation,
                    "transition is not an isomorphism");
        }
    }
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = i + 1; j < k; ++j) {
            const QuadHom& forward = transitions.at({i, j});
            const QuadHom& backward = transitions.at({j, i});
            require(backward == inverse_hom(forward), Errc::CocycleViolation,
                    "transitions are not mutually inverse");
        }
    }
    if (k >= 3) {
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = 0; j < k; ++j) {
                for (size_t l = 0; l < k; ++l) {
                    if (i == j || j == l || i == l) continue;
                    auto push_to_triple = [&](const QuadHom& h, size_t a, size_t b,
                                              size_t third) {
                        RingHom rh = cover.overlap_to_triple(a, b, third);
                        if (!algebra) return push_hom(h, rh);
                        AlgebraPtr ov_alg = changed_algebra(*algebra, cover.overlap(a, b).map);
                        return push_hom(h, base_change(ov_alg, rh).push);
                    };
                    QuadHom tij = push_to_triple(transitions.at({i, j}), i, j, l);
                    QuadHom tjl = push_to_triple(transitions.at({j, l}), j, l, i);
                    QuadHom til = push_to_triple(transitions.at({i, l}), i, l, j);
                    require(compose(tjl, tij) == til, Errc::CocycleViolation,
                            "triangle cocycle fails on triple overlap");
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// LineDescentDatum

RingPtr LineDescentDatum::overlap_ring(size_t i, size_t j) const {
    if (!algebra) return cover.overlap(i, j).ring;
    return algebra_ring(changed_algebra(*algebra, cover.overlap(i, j).map));
}

void LineDescentDatum::validate() const {
    const size_t k = cover.size();
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            auto it = transitions.find({i, j});
            require(it != transitions.end(), Errc::CocycleViolation,
                    "missing line transition");
            require(same_ring(it->second.ring(), overlap_ring(i, j)), Errc::BaseMismatch,
                    "line transition lives over the wrong ring");
            require(is_unit(it->second), Errc::CocycleViolation,
                    "line transition is not a unit");
        }
    }
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i + 1; j < k; ++j)
            require(transitions.at({j, i}) == inverse(transitions.at({i, j})),
                    Errc::CocycleViolation, "line transitions are not mutually inverse");
    if (k >= 3) {
        for (size_t i = 0; i < k; ++i) {
            for (size_t j = 0; j < k; ++j) {
                for (size_t l = 0; l < k; ++l) {
                    if (i == j || j == l || i == l) continue;
                    auto push_to_triple = [&](const RingElement& x, size_t a, size_t b,
                                              size_t third) {
                        RingHom rh = cover.overlap_to_triple(a, b, third);
                        if (!algebra) return rh(x);
                        AlgebraPtr ov_alg = changed_algebra(*algebra, cover.overlap(a, b).map);
                        return base_change(ov_alg, rh).push(x);
                    };
                    RingElement uij = push_to_triple(transitions.at({i, j}), i, j, l);
                    RingElement ujl = push_to_triple(transitions.at({j, l}), j, l, i);
                    RingElement uil = push_to_triple(transitions.at({i, l}), i, l, j);
                    require(mul(uij, ujl) == uil, Errc::CocycleViolation,
                            "unit cocycle fails on triple overlap");
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Operations

QuadDescentDatum glue_norm(const QuadDescentDatum& d) {
    d.validate();
    if (!d.algebra) return d; // rank-1 norm is the identity
    QuadDescentDatum out{d.cover, std::nullopt, {}, {}};
    for (size_t i = 0; i < d.cover.size(); ++i) {
        Extension ext(changed_algebra(*d.algebra, d.cover.piece(i).map));
        out.locals.push_back(ext.norm_quad(d.locals[i]));
    }
    for (const auto& [ij, t] : d.transitions) {
        Extension ext(changed_algebra(*d.algebra, d.cover.overlap(ij.first, ij.second).map));
        out.transitions.emplace(ij, ext.norm_hom(t));
    }
    try {
        out.validate();
    } catch (const AlgebraError& e) {
        fail(Errc::InternalContradiction,
             std::string("glued norm violates descent invariants: ") + e.what());
    }
    return out;
}

LineDescentDatum line_norm(const LineDescentDatum& d) {
    d.validate();
    if (!d.algebra) return d;
    LineDescentDatum out{d.cover, std::nullopt, {}};
    for (const auto& [ij, u] : d.transitions) out.transitions.emplace(ij, norm_sn(u));
    try {
        out.validate();
    } catch (const AlgebraError& e) {
        fail(Errc::InternalContradiction,
             std::string("line norm violates descent invariants: ") + e.what());
    }
    return out;
}

LineDescentDatum det_bundle(const QuadDescentDatum& d) {
    d.validate();
    LineDescentDatum out{d.cover, d.algebra, {}};
    for (const auto& [ij, t] : d.transitions) out.transitions.emplace(ij, t.u());
    out.validate();
    return out;
}

std::vector<RingElement> disc_form(const QuadDescentDatum& d) {
    std::vector<RingElement> out;
    for (const auto& q : d.locals) out.push_back(discriminant(q));
    return out;
}

// ---------------------------------------------------------------------------
// globalize

namespace {

bool globalize_base_supported(const RingPtr& ring) {
    switch (ring->kind()) {
        case RingKind::Integers:
        case RingKind::Modular:
            return true;
        case RingKind::Product: {
            for (const auto& f : static_cast<const ProductRing&>(*ring).factors())
                if (!globalize_base_supported(f)) return false;
            return true;
        }
        default:
            return false;
    }
}

// Finite candidate set for generator shifts over a piece ring.
std::vector<RingElement> candidate_shifts(const RingPtr& ring) {
    if (auto elems = ring->enumerate()) return *elems;
    switch (ring->kind()) {
        case RingKind::Integers:
        case RingKind::Localized: {
            // 0 first so that an unshifted global is found before its translates
            std::vector<RingElement> out{ring->zero()};
            for (long v = 1; v <= 8; ++v) {
                out.push_back(ring->from_int(v));
                out.push_back(ring->from_int(-v));
            }
            return out;
        }
        case RingKind::Product: {
            const auto& pr = static_cast<const ProductRing&>(*ring);
            std::vector<std::vector<RingElement>> per;
            for (const auto& f : pr.factors()) per.push_back(candidate_shifts(f));
            std::vector<std::vector<RingElement>> tuples{{}};
            for (const auto& choices : per) {
                std::vector<std::vector<RingElement>> next;
                for (const auto& partial : tuples)
                    for (const auto& c : choices) {
                        auto copy = partial;
                        copy.push_back(c);
                        next.push_back(std::move(copy));
                    }
                tuples = std::move(next);
            }
            std::vector<RingElement> out;
            for (auto& t : tuples) out.push_back(pr.tuple(std::move(t)));
            return out;
        }
        default:
            fail(Errc::UnsupportedBase, "no candidate shifts for " + ring->describe());
    }
}

// Solve map_i(x) = values[i] for x in the cover's base, if possible.
std::optional<RingElement> unglue(const Cover& cov, const std::vector<RingElement>& values) {
    if (auto elems = cov.base()->enumerate()) {
        for (const auto& x : *elems) {
            bool ok = true;
            for (size_t i = 0; i < cov.size() && ok; ++i)
                ok = cov.piece(i).map(x) == values[i];
            if (ok) return x;
        }
        return std::nullopt;
    }
    require(cov.base()->kind() == RingKind::Integers, Errc::UnsupportedBase,
            "unglue supports finite rings and the integers");
    std::optional<mpz_class> candidate;
    for (size_t i = 0; i < cov.size(); ++i) {
        const RingPtr& pr = cov.piece(i).ring;
        if (pr->kind() == RingKind::Integers) {
            candidate = values[i].as_int();
            break;
        }
        if (pr->kind() == RingKind::Localized) {
            const mpq_class& v = values[i].as_fraction();
            if (v.get_den() != 1) return std::nullopt;
            candidate = mpz_class(v.get_num());
            break;
        }
    }
    if (!candidate) candidate = 0;
    RingElement x = cov.base()->from_int(*candidate);
    for (size_t i = 0; i < cov.size(); ++i)
        if (!(cov.piece(i).map(x) == values[i])) return std::nullopt;
    return x;
}

} // namespace

std::optional<GlobalizeResult> globalize(const QuadDescentDatum& d) {
    require(d.cover.size() <= 2, Errc::UnsupportedBase,
            "globalize supports covers with at most two pieces");
    require(!d.algebra.has_value(), Errc::UnsupportedBase,
            "globalize expects a rank-1 datum over the base");
    require(globalize_base_supported(d.cover.base()), Errc::UnsupportedBase,
            "globalize supports Integers, Modular and products of those");
    d.validate();

    const size_t k = d.cover.size();
    std::vector<std::vector<RingElement>> shift_sets;
    for (size_t i = 0; i < k; ++i) shift_sets.push_back(candidate_shifts(d.cover.piece(i).ring));

    std::vector<size_t> idx(k, 0);
    for (;;) {
        std::vector<RingElement> shifts;
        for (size_t i = 0; i < k; ++i) shifts.push_back(shift_sets[i][idx[i]]);

        std::vector<RingElement> vt, vn;
        for (size_t i = 0; i < k; ++i) {
            const RingPtr& pr = d.cover.piece(i).ring;
            RingElement two = pr->from_int(2);
            vt.push_back(add(d.locals[i].t, mul(two, shifts[i])));
            vn.push_back(add(add(d.locals[i].n, mul(shifts[i], d.locals[i].t)),
                             mul(shifts[i], shifts[i])));
        }
        auto t_glob = unglue(d.cover, vt);
        auto n_glob = t_glob ? unglue(d.cover, vn) : std::nullopt;
        if (t_glob && n_glob) {
            BasedQuadratic global = make_quad(d.cover.base(), *t_glob, *n_glob);
            std::vector<QuadHom> witnesses;
            bool ok = true;
            for (size_t i = 0; i < k && ok; ++i) {
                BasedQuadratic restricted = push_quad(global, d.cover.piece(i).map);
                try {
                    witnesses.push_back(make_hom(restricted, d.locals[i],
                                                 d.cover.piece(i).ring->one(), shifts[i]));
                } catch (const AlgebraError&) {
                    ok = false;
                }
            }
            if (ok) {
                for (size_t i = 0; i < k && ok; ++i) {
                    for (size_t j = 0; j < k && ok; ++j) {
                        if (i == j) continue;
                        QuadHom chi_i = push_hom(witnesses[i], d.cover.piece_to_overlap(i, j));
                        QuadHom chi_j = push_hom(witnesses[j], d.cover.piece_to_overlap(j, i));
                        ok = compose(d.transitions.at({i, j}), chi_i) == chi_j;
                    }
                }
                if (ok) return GlobalizeResult{std::move(global), std::move(witnesses)};
            }
        }

        size_t pos = 0;
        while (pos < k) {
            if (++idx[pos] < shift_sets[pos].size()) break;
            idx[pos] = 0;
            ++pos;
        }
        if (pos == k) break;
    }
    return std::nullopt;
}

} // namespace quadnorm
