#include "quadnorm/ring.hpp"

#include <sstream>

namespace quadnorm {

const char* ring_kind_name(RingKind kind) noexcept {
    switch (kind) {
        case RingKind::Integers: return "integers";
        case RingKind::Modular: return "modular";
        case RingKind::Polynomial: return "polynomial";
        case RingKind::Product: return "product";
        case RingKind::Localized: return "localized";
        case RingKind::AlgebraRing: return "algebra_ring";
    }
    return "unknown";
}

RingElement::RingElement(RingPtr ring, Payload payload)
    : ring_(std::move(ring)), payload_(std::move(payload)) {}

const mpz_class& RingElement::as_int() const {
    const auto* v = std::get_if<mpz_class>(&payload_);
    require(v != nullptr, Errc::InternalContradiction, "payload is not an integer");
    return *v;
}

const mpq_class& RingElement::as_fraction() const {
    const auto* v = std::get_if<mpq_class>(&payload_);
    require(v != nullptr, Errc::InternalContradiction, "payload is not a fraction");
    return *v;
}

const PolyPayload& RingElement::as_poly() const {
    const auto* v = std::get_if<std::shared_ptr<const PolyPayload>>(&payload_);
    require(v != nullptr, Errc::InternalContradiction, "payload is not a polynomial");
    return **v;
}

const std::vector<RingElement>& RingElement::as_tuple() const {
    const auto* v = std::get_if<std::shared_ptr<const TuplePayload>>(&payload_);
    require(v != nullptr, Errc::InternalContradiction, "payload is not a tuple");
    return (*v)->items;
}

const std::vector<RingElement>& RingElement::as_coords() const {
    const auto* v = std::get_if<std::shared_ptr<const CoordsPayload>>(&payload_);
    require(v != nullptr, Errc::InternalContradiction, "payload is not a coordinate vector");
    return (*v)->coords;
}

namespace {

bool payload_equal(const RingElement::Payload& a, const RingElement::Payload& b) {
    if (a.index() != b.index()) return false;
    switch (a.index()) {
        case 0:
            return std::get<0>(a) == std::get<0>(b);
        case 1:
            return std::get<1>(a) == std::get<1>(b);
        case 2: {
            const auto& pa = *std::get<2>(a);
            const auto& pb = *std::get<2>(b);
            if (pa.terms.size() != pb.terms.size()) return false;
            for (size_t i = 0; i < pa.terms.size(); ++i) {
                if (pa.terms[i].exps != pb.terms[i].exps) return false;
                if (!payload_equal(pa.terms[i].coeff.payload(), pb.terms[i].coeff.payload()))
                    return false;
            }
            return true;
        }
        case 3: {
            const auto& ta = std::get<3>(a)->items;
            const auto& tb = std::get<3>(b)->items;
            if (ta.size() != tb.size()) return false;
            for (size_t i = 0; i < ta.size(); ++i)
                if (!payload_equal(ta[i].payload(), tb[i].payload())) return false;
            return true;
        }
        case 4: {
            const auto& ca = std::get<4>(a)->coords;
            const auto& cb = std::get<4>(b)->coords;
            if (ca.size() != cb.size()) return false;
            for (size_t i = 0; i < ca.size(); ++i)
                if (!payload_equal(ca[i].payload(), cb[i].payload())) return false;
            return true;
        }
    }
    return false;
}

bool payload_is_zero(const RingElement::Payload& p) {
    switch (p.index()) {
        case 0: return std::get<0>(p) == 0;
        case 1: return std::get<1>(p) == 0;
        case 2: return std::get<2>(p)->terms.empty();
        case 3: {
            for (const auto& item : std::get<3>(p)->items)
                if (!payload_is_zero(item.payload())) return false;
            return true;
        }
        case 4: {
            for (const auto& c : std::get<4>(p)->coords)
                if (!payload_is_zero(c.payload())) return false;
            return true;
        }
    }
    return false;
}

} // namespace

bool RingElement::is_zero() const { return payload_is_zero(payload_); }

bool RingElement::is_one() const { return payload_equal(payload_, ring_->one().payload()); }

bool operator==(const RingElement& x, const RingElement& y) {
    if (!same_ring(x.ring(), y.ring())) return false;
    return payload_equal(x.payload(), y.payload());
}

RingElement operator+(const RingElement& x, const RingElement& y) { return add(x, y); }
RingElement operator*(const RingElement& x, const RingElement& y) { return mul(x, y); }
RingElement operator-(const RingElement& x, const RingElement& y) { return sub(x, y); }
RingElement operator-(const RingElement& x) { return neg(x); }

namespace {

void format_payload(std::ostringstream& os, const RingElement::Payload& p) {
    switch (p.index()) {
        case 0: os << std::get<0>(p).get_str(); break;
        case 1: os << std::get<1>(p).get_str(); break;
        case 2: {
            const auto& terms = std::get<2>(p)->terms;
            if (terms.empty()) { os << "0"; break; }
            bool first = true;
            for (const auto& t : terms) {
                if (!first) os << " + ";
                first = false;
                os << "(";
                format_payload(os, t.coeff.payload());
                os << ")*[";
                for (size_t i = 0; i < t.exps.size(); ++i) {
                    if (i) os << ",";
                    os << t.exps[i];
                }
                os << "]";
            }
            break;
        }
        case 3: {
            os << "(";
            const auto& items = std::get<3>(p)->items;
            for (size_t i = 0; i < items.size(); ++i) {
                if (i) os << ", ";
                format_payload(os, items[i].payload());
            }
            os << ")";
            break;
        }
        case 4: {
            os << "[";
            const auto& coords = std::get<4>(p)->coords;
            for (size_t i = 0; i < coords.size(); ++i) {
                if (i) os << ", ";
                format_payload(os, coords[i].payload());
            }
            os << "]";
            break;
        }
    }
}

} // namespace

std::string to_string(const RingElement& x) {
    std::ostringstream os;
    format_payload(os, x.payload());
    os << " in " << x.ring()->describe();
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const RingElement& x) { return os << to_string(x); }

RingHom::RingHom(RingPtr source, RingPtr target, Action action)
    : source_(std::move(source)), target_(std::move(target)), action_(std::move(action)) {}

RingElement RingHom::operator()(const RingElement& x) const {
    require(same_ring(x.ring(), source_), Errc::HomMismatch,
            "element not in the hom's source ring");
    return action_(x);
}

RingHom RingHom::identity(RingPtr ring) {
    return RingHom(ring, ring, [](const RingElement& x) { return x; });
}

RingHom RingHom::compose(const RingHom& outer, const RingHom& inner) {
    require(same_ring(inner.target(), outer.source()), Errc::HomMismatch,
            "hom composition: inner target differs from outer source");
    return RingHom(inner.source(), outer.target(),
                   [outer, inner](const RingElement& x) { return outer(inner(x)); });
}

Localization Ring::localize(const RingElement& a) const {
    require(same_ring(a.ring(), self()), Errc::MixedRings, "localize: element of another ring");
    if (is_unit(a)) return Localization{self(), RingHom::identity(self())};
    fail(Errc::LocalizationUnsupported,
         "ring " + describe() + " does not support localization at a non-unit");
}

std::optional<std::vector<RingElement>> Ring::enumerate() const { return std::nullopt; }

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return true;
    return a->same_as(*b);
}

void require_same_ring(const RingElement& x, const RingElement& y) {
    if (same_ring(x.ring(), y.ring())) return;
    Errc code = (x.ring()->kind() == RingKind::AlgebraRing &&
                 y.ring()->kind() == RingKind::AlgebraRing)
                    ? Errc::MixedAlgebras
                    : Errc::MixedRings;
    fail(code, "elements live in different rings: " + x.ring()->describe() + " vs " +
                   y.ring()->describe());
}

RingElement zero(const RingPtr& ring) { return ring->zero(); }
RingElement one(const RingPtr& ring) { return ring->one(); }
RingElement from_int(const RingPtr& ring, const mpz_class& value) { return ring->from_int(value); }
RingElement from_int(const RingPtr& ring, long value) { return ring->from_int(mpz_class(value)); }

RingElement add(const RingElement& x, const RingElement& y) {
    require_same_ring(x, y);
    return x.ring()->add(x, y);
}

RingElement mul(const RingElement& x, const RingElement& y) {
    require_same_ring(x, y);
    return x.ring()->mul(x, y);
}

RingElement sub(const RingElement& x, const RingElement& y) {
    require_same_ring(x, y);
    return x.ring()->add(x, x.ring()->neg(y));
}

RingElement neg(const RingElement& x) { return x.ring()->neg(x); }

bool is_unit(const RingElement& x) { return x.ring()->is_unit(x); }

RingElement inverse(const RingElement& x) {
    auto inv = x.ring()->try_inverse(x);
    require(inv.has_value(), Errc::NotAUnit, "inverse of a non-unit in " + x.ring()->describe());
    return *inv;
}

bool is_nilpotent(const RingElement& x) { return x.ring()->is_nilpotent(x); }

Localization localize(const RingPtr& ring, const RingElement& a) { return ring->localize(a); }

mpz_class zgcd(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

mpz_class zpow(const mpz_class& base, unsigned long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

} // namespace quadnorm
