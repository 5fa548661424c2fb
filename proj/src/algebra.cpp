#include "quadnorm/algebra.hpp"

#include <sstream>

namespace quadnorm {

FreeRankNAlgebra::FreeRankNAlgebra(RingPtr base, size_t rank, std::vector<RingElement> structure,
                                   std::vector<RingElement> unit)
    : base_(std::move(base)), rank_(rank), structure_(std::move(structure)),
      unit_(std::move(unit)) {}

bool FreeRankNAlgebra::same_as(const FreeRankNAlgebra& other) const {
    if (this == &other) return true;
    if (rank_ != other.rank_) return false;
    if (!base_->same_as(*other.base_)) return false;
    for (size_t i = 0; i < structure_.size(); ++i)
        if (!(structure_[i] == other.structure_[i])) return false;
    for (size_t i = 0; i < unit_.size(); ++i)
        if (!(unit_[i] == other.unit_[i])) return false;
    return true;
}

std::string FreeRankNAlgebra::describe() const {
    std::ostringstream os;
    os << "rank-" << rank_ << " algebra over " << base_->describe();
    return os.str();
}

std::vector<RingElement> FreeRankNAlgebra::coord_mul(const std::vector<RingElement>& x,
                                                     const std::vector<RingElement>& y) const {
    std::vector<RingElement> out(rank_, base_->zero());
    for (size_t i = 0; i < rank_; ++i) {
        if (x[i].is_zero()) continue;
        for (size_t j = 0; j < rank_; ++j) {
            if (y[j].is_zero()) continue;
            RingElement xy = mul(x[i], y[j]);
            for (size_t k = 0; k < rank_; ++k) {
                const RingElement& c = sc(i, j, k);
                if (c.is_zero()) continue;
                out[k] = add(out[k], mul(xy, c));
            }
        }
    }
    return out;
}

namespace {

std::vector<RingElement> basis_coords(const RingPtr& base, size_t rank, size_t index) {
    std::vector<RingElement> out(rank, base->zero());
    out[index] = base->one();
    return out;
}

void validate_algebra(const FreeRankNAlgebra& alg) {
    const size_t n = alg.rank();
    const RingPtr& base = alg.base();
    // commutativity of the structure constants
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                require(alg.sc(i, j, k) == alg.sc(j, i, k), Errc::InvalidArgument,
                        "structure constants are not commutative");
    // unit law
    for (size_t j = 0; j < n; ++j) {
        auto prod = alg.coord_mul(alg.unit_coords(), basis_coords(base, n, j));
        for (size_t k = 0; k < n; ++k)
            require(prod[k] == (k == j ? base->one() : base->zero()), Errc::InvalidArgument,
                    "unit coordinates do not act as the identity");
    }
    // associativity on basis triples
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            std::vector<RingElement> ij(n, base->zero());
            for (size_t k = 0; k < n; ++k) ij[k] = alg.sc(i, j, k);
            for (size_t l = 0; l < n; ++l) {
                auto lhs = alg.coord_mul(ij, basis_coords(base, n, l));
                std::vector<RingElement> jl(n, base->zero());
                for (size_t k = 0; k < n; ++k) jl[k] = alg.sc(j, l, k);
                auto rhs = alg.coord_mul(basis_coords(base, n, i), jl);
                for (size_t k = 0; k < n; ++k)
                    require(lhs[k] == rhs[k], Errc::InvalidArgument,
                            "structure constants are not associative");
            }
        }
    }
}

} // namespace

AlgebraPtr make_algebra(RingPtr base, size_t rank, std::vector<RingElement> structure,
                        std::vector<RingElement> unit, bool validate) {
    require(rank >= 1, Errc::InvalidArgument, "algebra rank must be >= 1");
    require(structure.size() == rank * rank * rank, Errc::InvalidArgument,
            "structure constant count must be rank^3");
    require(unit.size() == rank, Errc::InvalidArgument, "unit coordinate count must be rank");
    for (const auto& c : structure)
        require(same_ring(c.ring(), base), Errc::MixedRings,
                "structure constant from another ring");
    for (const auto& u : unit)
        require(same_ring(u.ring(), base), Errc::MixedRings, "unit coordinate from another ring");
    auto alg = AlgebraPtr(new FreeRankNAlgebra(std::move(base), rank, std::move(structure),
                                               std::move(unit)));
    if (validate) validate_algebra(*alg);
    return alg;
}

AlgebraPtr trivial_algebra(const RingPtr& base) {
    return make_algebra(base, 1, {base->one()}, {base->one()}, false);
}

AlgebraPtr monogenic_algebra(const RingPtr& base, const std::vector<RingElement>& power_coords) {
    const size_t n = power_coords.size();
    require(n >= 1, Errc::InvalidArgument, "monogenic algebra needs rank >= 1");
    // powers of x reduced mod x^n - f, for exponents 0 .. 2n-2
    std::vector<std::vector<RingElement>> pow;
    for (size_t i = 0; i < n; ++i) pow.push_back(basis_coords(base, n, i));
    for (size_t e = n; e <= 2 * n - 2; ++e) {
        if (e == n) {
            pow.push_back(power_coords);
            continue;
        }
        const auto& prev = pow.back();
        std::vector<RingElement> next(n, base->zero());
        const RingElement& top = prev[n - 1];
        next[0] = mul(top, power_coords[0]);
        for (size_t k = 1; k < n; ++k) next[k] = add(prev[k - 1], mul(top, power_coords[k]));
        pow.push_back(std::move(next));
    }
    std::vector<RingElement> structure;
    structure.reserve(n * n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k) structure.push_back(pow[i + j][k]);
    return make_algebra(base, n, std::move(structure), basis_coords(base, n, 0));
}

AlgebraPtr product_algebra(const AlgebraPtr& a1, const AlgebraPtr& a2) {
    require(same_ring(a1->base(), a2->base()), Errc::MixedRings,
            "product algebra factors must share the base ring");
    const RingPtr& base = a1->base();
    const size_t n1 = a1->rank(), n2 = a2->rank(), n = n1 + n2;
    std::vector<RingElement> structure(n * n * n, base->zero());
    auto at = [&](size_t i, size_t j, size_t k) -> RingElement& {
        return structure[(i * n + j) * n + k];
    };
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j)
            for (size_t k = 0; k < n1; ++k) at(i, j, k) = a1->sc(i, j, k);
    for (size_t i = 0; i < n2; ++i)
        for (size_t j = 0; j < n2; ++j)
            for (size_t k = 0; k < n2; ++k) at(n1 + i, n1 + j, n1 + k) = a2->sc(i, j, k);
    std::vector<RingElement> unit;
    unit.insert(unit.end(), a1->unit_coords().begin(), a1->unit_coords().end());
    unit.insert(unit.end(), a2->unit_coords().begin(), a2->unit_coords().end());
    return make_algebra(base, n, std::move(structure), std::move(unit), false);
}

// ---------------------------------------------------------------------------
// AlgebraRing

AlgebraRing::AlgebraRing(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

bool AlgebraRing::same_as(const Ring& other) const {
    if (other.kind() != RingKind::AlgebraRing) return false;
    return algebra_->same_as(*static_cast<const AlgebraRing&>(other).algebra_);
}

std::string AlgebraRing::describe() const { return algebra_->describe(); }

RingElement AlgebraRing::element(std::vector<RingElement> coords) const {
    require(coords.size() == algebra_->rank(), Errc::DimensionMismatch,
            "coordinate count does not match the algebra rank");
    for (const auto& c : coords)
        require(same_ring(c.ring(), algebra_->base()), Errc::MixedRings,
                "coordinate from another ring");
    return RingElement(self(), std::make_shared<const CoordsPayload>(CoordsPayload{std::move(coords)}));
}

RingElement AlgebraRing::zero() const {
    return element(std::vector<RingElement>(algebra_->rank(), algebra_->base()->zero()));
}

RingElement AlgebraRing::one() const {
    return element(algebra_->unit_coords());
}

RingElement AlgebraRing::from_int(const mpz_class& value) const {
    RingElement scalar = algebra_->base()->from_int(value);
    std::vector<RingElement> coords;
    for (const auto& u : algebra_->unit_coords()) coords.push_back(quadnorm::mul(scalar, u));
    return element(std::move(coords));
}

RingElement AlgebraRing::add(const RingElement& x, const RingElement& y) const {
    const auto& xs = x.as_coords();
    const auto& ys = y.as_coords();
    std::vector<RingElement> coords;
    coords.reserve(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) coords.push_back(quadnorm::add(xs[i], ys[i]));
    return element(std::move(coords));
}

RingElement AlgebraRing::mul(const RingElement& x, const RingElement& y) const {
    return element(algebra_->coord_mul(x.as_coords(), y.as_coords()));
}

RingElement AlgebraRing::neg(const RingElement& x) const {
    std::vector<RingElement> coords;
    for (const auto& c : x.as_coords()) coords.push_back(quadnorm::neg(c));
    return element(std::move(coords));
}

bool AlgebraRing::is_unit(const RingElement& x) const {
    // x is invertible iff multiplication by x is, iff s_n(x) is a unit below.
    return quadnorm::is_unit(norm_sn(x));
}

std::optional<RingElement> AlgebraRing::try_inverse(const RingElement& x) const {
    if (!is_unit(x)) return std::nullopt;
    // Cayley-Hamilton: sum p_k x^k = 0 with p_0 = (-1)^n s_n(x) a unit, so
    // x^{-1} = -p_0^{-1} (p_1 + p_2 x + ... + p_n x^{n-1}).
    auto p = char_poly_coeffs(x);
    RingElement acc = zero();
    RingElement power = one();
    for (size_t k = 1; k < p.size(); ++k) {
        acc = add(acc, scalar_mul(p[k], power));
        if (k + 1 < p.size()) power = mul(power, x);
    }
    RingElement scale = quadnorm::neg(quadnorm::inverse(p[0]));
    RingElement inv = scalar_mul(scale, acc);
    require(mul(inv, x) == one(), Errc::InternalContradiction, "algebra inverse check failed");
    return inv;
}

bool AlgebraRing::is_nilpotent(const RingElement& x) const {
    auto p = char_poly_coeffs(x);
    for (size_t k = 0; k + 1 < p.size(); ++k)
        if (!quadnorm::is_nilpotent(p[k])) return false;
    return true;
}

std::optional<std::vector<RingElement>> AlgebraRing::enumerate() const {
    auto base_elems = algebra_->base()->enumerate();
    if (!base_elems) return std::nullopt;
    std::vector<std::vector<RingElement>> tuples{{}};
    for (size_t i = 0; i < algebra_->rank(); ++i) {
        std::vector<std::vector<RingElement>> next;
        for (const auto& partial : tuples)
            for (const auto& c : *base_elems) {
                auto copy = partial;
                copy.push_back(c);
                next.push_back(std::move(copy));
            }
        tuples = std::move(next);
    }
    std::vector<RingElement> out;
    out.reserve(tuples.size());
    for (auto& t : tuples) out.push_back(element(std::move(t)));
    return out;
}

RingPtr algebra_ring(const AlgebraPtr& algebra) {
    return std::make_shared<AlgebraRing>(algebra);
}

const AlgebraPtr& algebra_of(const RingPtr& ring) {
    const auto* ar = dynamic_cast<const AlgebraRing*>(ring.get());
    require(ar != nullptr, Errc::BaseMismatch,
            "expected an algebra ring, got " + ring->describe());
    return ar->algebra();
}

RingElement algebra_element(const AlgebraPtr& algebra, std::vector<RingElement> coords) {
    return std::make_shared<AlgebraRing>(algebra)->element(std::move(coords));
}

RingElement scalar_mul(const RingElement& scalar, const RingElement& x) {
    const AlgebraPtr& alg = algebra_of(x.ring());
    require(same_ring(scalar.ring(), alg->base()), Errc::MixedRings,
            "scalar is not in the base ring");
    std::vector<RingElement> coords;
    for (const auto& c : x.as_coords()) coords.push_back(mul(scalar, c));
    return std::static_pointer_cast<const AlgebraRing>(x.ring())->element(std::move(coords));
}

Matrix mul_matrix(const RingElement& x) {
    const AlgebraPtr& alg = algebra_of(x.ring());
    const size_t n = alg->rank();
    const auto& xs = x.as_coords();
    Matrix m = Matrix::zero(alg->base(), n, n);
    for (size_t j = 0; j < n; ++j) {
        for (size_t k = 0; k < n; ++k) {
            RingElement acc = alg->base()->zero();
            for (size_t i = 0; i < n; ++i) acc = add(acc, mul(xs[i], alg->sc(i, j, k)));
            m.set(k, j, std::move(acc));
        }
    }
    return m;
}

RingElement norm_sn(const RingElement& x) { return det(mul_matrix(x)); }

RingElement trace(const RingElement& x) { return mat_trace(mul_matrix(x)); }

SnLambdaPoly sn_lambda_poly(const RingElement& x, const RingElement& y) {
    require_same_ring(x, y);
    const AlgebraPtr& alg = algebra_of(x.ring());
    auto names = fresh_variable_names(alg->base(), "lam", 1);
    auto adj = adjoin_variables(alg->base(), names);
    auto bc = base_change(alg, adj.embed);
    RingElement lam = poly_variable(adj.ring, names[0]);
    RingElement e = add(scalar_mul(lam, bc.push(x)), bc.push(y));
    return SnLambdaPoly{adj.ring, names[0], norm_sn(e)};
}

std::vector<RingElement> sn_lambda_coeffs(const RingElement& x, const RingElement& y) {
    const AlgebraPtr& alg = algebra_of(x.ring());
    auto sp = sn_lambda_poly(x, y);
    std::vector<RingElement> out;
    for (size_t k = 0; k <= alg->rank(); ++k)
        out.push_back(coefficient_of(sp.poly, {static_cast<unsigned>(k)}));
    return out;
}

RingElement polarized(const std::vector<std::pair<unsigned, RingElement>>& parts) {
    require(!parts.empty(), Errc::PartitionMismatch, "polarized form needs >= 1 part");
    const AlgebraPtr& alg = algebra_of(parts[0].second.ring());
    unsigned total = 0;
    for (const auto& [k, el] : parts) {
        require_same_ring(el, parts[0].second);
        total += k;
    }
    require(total == alg->rank(), Errc::PartitionMismatch,
            "polarized partition must sum to the algebra rank");
    auto names = fresh_variable_names(alg->base(), "lam", parts.size());
    auto adj = adjoin_variables(alg->base(), names);
    auto bc = base_change(alg, adj.embed);
    RingPtr bring = algebra_ring(bc.algebra);
    RingElement e = bring->zero();
    for (size_t i = 0; i < parts.size(); ++i) {
        RingElement lam = poly_variable(adj.ring, names[i]);
        e = add(e, scalar_mul(lam, bc.push(parts[i].second)));
    }
    RingElement s = norm_sn(e);
    std::vector<unsigned> exps;
    for (const auto& [k, el] : parts) exps.push_back(k);
    return coefficient_of(s, exps);
}

std::vector<RingElement> char_poly_coeffs(const RingElement& x) {
    const AlgebraPtr& alg = algebra_of(x.ring());
    const size_t n = alg->rank();
    auto c = sn_lambda_coeffs(x, x.ring()->one()); // c[j] = s_{j,n-j}(x, 1)
    std::vector<RingElement> out;
    out.reserve(n + 1);
    for (size_t k = 0; k <= n; ++k) {
        RingElement v = c[n - k];
        if ((n - k) % 2 == 1) v = neg(v);
        out.push_back(std::move(v));
    }
    return out;
}

BaseChangedAlgebra base_change(const AlgebraPtr& algebra, const RingHom& f) {
    require(same_ring(f.source(), algebra->base()), Errc::HomMismatch,
            "base change hom does not start at the algebra's base ring");
    std::vector<RingElement> structure;
    structure.reserve(algebra->structure().size());
    for (const auto& c : algebra->structure()) structure.push_back(f(c));
    std::vector<RingElement> unit;
    for (const auto& u : algebra->unit_coords()) unit.push_back(f(u));
    AlgebraPtr out = make_algebra(f.target(), algebra->rank(), std::move(structure),
                                  std::move(unit), false);
    RingPtr source_ring = algebra_ring(algebra);
    RingPtr target_ring = algebra_ring(out);
    auto tr = std::static_pointer_cast<const AlgebraRing>(target_ring);
    RingHom push(source_ring, target_ring, [f, tr](const RingElement& x) {
        std::vector<RingElement> coords;
        for (const auto& c : x.as_coords()) coords.push_back(f(c));
        return tr->element(std::move(coords));
    });
    return BaseChangedAlgebra{out, std::move(push)};
}

// ---------------------------------------------------------------------------
// Towers

namespace {

// phi index i runs fastest: position of phi_{i+1} theta_{j+1} is j*m + i.
size_t tower_index(size_t i, size_t j, size_t m) { return j * m + i; }

} // namespace

RingElement TowerAlgebra::to_composed(const RingElement& upper_element) const {
    require(upper_element.ring()->kind() == RingKind::AlgebraRing &&
                algebra_of(upper_element.ring())->same_as(*upper),
            Errc::TowerMismatch, "element does not live over the tower's upper algebra");
    const size_t m = upper->rank();
    const size_t n = lower->rank();
    std::vector<RingElement> flat(m * n, lower->base()->zero());
    const auto& phi_coords = upper_element.as_coords();
    for (size_t i = 0; i < m; ++i) {
        const auto& theta_coords = phi_coords[i].as_coords();
        for (size_t j = 0; j < n; ++j) flat[tower_index(i, j, m)] = theta_coords[j];
    }
    return algebra_element(composed, std::move(flat));
}

RingElement TowerAlgebra::from_composed(const RingElement& composed_element) const {
    require(composed_element.ring()->kind() == RingKind::AlgebraRing &&
                algebra_of(composed_element.ring())->same_as(*composed),
            Errc::TowerMismatch, "element does not live over the composed algebra");
    const size_t m = upper->rank();
    const size_t n = lower->rank();
    const auto& flat = composed_element.as_coords();
    RingPtr bring = algebra_ring(lower);
    auto br = std::static_pointer_cast<const AlgebraRing>(bring);
    std::vector<RingElement> phi_coords;
    for (size_t i = 0; i < m; ++i) {
        std::vector<RingElement> theta_coords;
        for (size_t j = 0; j < n; ++j) theta_coords.push_back(flat[tower_index(i, j, m)]);
        phi_coords.push_back(br->element(std::move(theta_coords)));
    }
    return algebra_element(upper, std::move(phi_coords));
}

TowerAlgebra tower_compose(const AlgebraPtr& b_over_a, const AlgebraPtr& c_over_b) {
    const auto* middle = dynamic_cast<const AlgebraRing*>(c_over_b->base().get());
    require(middle != nullptr, Errc::TowerMismatch,
            "upper algebra's base must be the algebra-ring view of the lower algebra");
    require(middle->algebra()->same_as(*b_over_a), Errc::TowerMismatch,
            "upper algebra's base does not match the lower algebra");

    const size_t n = b_over_a->rank();
    const size_t m = c_over_b->rank();
    const size_t N = m * n;
    const RingPtr& base = b_over_a->base();

    std::vector<RingElement> structure(N * N * N, base->zero());
    auto at = [&](size_t p, size_t q, size_t r) -> RingElement& {
        return structure[(p * N + q) * N + r];
    };
    for (size_t i = 0; i < m; ++i) {
        for (size_t i2 = 0; i2 < m; ++i2) {
            for (size_t j = 0; j < n; ++j) {
                for (size_t j2 = 0; j2 < n; ++j2) {
                    // theta_j theta_j2 in B, as coordinates over A
                    std::vector<RingElement> theta(n, base->zero());
                    for (size_t r = 0; r < n; ++r) theta[r] = b_over_a->sc(j, j2, r);
                    for (size_t q = 0; q < m; ++q) {
                        // phi coefficient M_q in B, multiplied into theta
                        const auto& mq = c_over_b->sc(i, i2, q).as_coords();
                        auto z = b_over_a->coord_mul(mq, theta);
                        for (size_t r = 0; r < n; ++r)
                            at(tower_index(i, j, m), tower_index(i2, j2, m),
                               tower_index(q, r, m)) = z[r];
                    }
                }
            }
        }
    }
    std::vector<RingElement> unit(N, base->zero());
    for (size_t q = 0; q < m; ++q) {
        const auto& uq = c_over_b->unit_coords()[q].as_coords();
        for (size_t r = 0; r < n; ++r) unit[tower_index(q, r, m)] = uq[r];
    }
    AlgebraPtr composed = make_algebra(base, N, std::move(structure), std::move(unit));
    return TowerAlgebra{b_over_a, c_over_b, composed};
}

} // namespace quadnorm
