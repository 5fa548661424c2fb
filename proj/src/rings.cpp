#include "quadnorm/rings.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace quadnorm {

namespace {

unsigned total_degree(const std::vector<unsigned>& exps) {
    return std::accumulate(exps.begin(), exps.end(), 0u);
}

bool grlex_less(const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

struct GrlexGreater {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        return grlex_less(b, a);
    }
};

mpz_class mod_norm(const mpz_class& v, const mpz_class& m) {
    mpz_class r = v % m;
    if (r < 0) r += m;
    return r;
}

// Largest divisor of m coprime to a (the modulus that survives inverting a).
mpz_class coprime_part(const mpz_class& m, const mpz_class& a) {
    mpz_class rest = m;
    for (;;) {
        mpz_class g = zgcd(rest, a);
        if (g == 1) break;
        rest /= g;
    }
    return rest;
}

} // namespace

RingHom RingHom::from_integers(RingPtr target) {
    return RingHom(integers(), target,
                   [target](const RingElement& x) { return target->from_int(x.as_int()); });
}

// ---------------------------------------------------------------------------
// Integers

bool IntegersRing::same_as(const Ring& other) const {
    return other.kind() == RingKind::Integers;
}

RingElement IntegersRing::zero() const { return RingElement(self(), mpz_class(0)); }
RingElement IntegersRing::one() const { return RingElement(self(), mpz_class(1)); }
RingElement IntegersRing::from_int(const mpz_class& value) const {
    return RingElement(self(), value);
}

RingElement IntegersRing::add(const RingElement& x, const RingElement& y) const {
    return RingElement(self(), mpz_class(x.as_int() + y.as_int()));
}
RingElement IntegersRing::mul(const RingElement& x, const RingElement& y) const {
    return RingElement(self(), mpz_class(x.as_int() * y.as_int()));
}
RingElement IntegersRing::neg(const RingElement& x) const {
    return RingElement(self(), mpz_class(-x.as_int()));
}

bool IntegersRing::is_unit(const RingElement& x) const {
    return x.as_int() == 1 || x.as_int() == -1;
}
std::optional<RingElement> IntegersRing::try_inverse(const RingElement& x) const {
    if (!is_unit(x)) return std::nullopt;
    return x;
}
bool IntegersRing::is_nilpotent(const RingElement& x) const { return x.as_int() == 0; }

Localization IntegersRing::localize(const RingElement& a) const {
    require(same_ring(a.ring(), self()), Errc::MixedRings, "localize: element of another ring");
    const mpz_class& v = a.as_int();
    if (v == 0) {
        RingPtr z = zero_ring();
        return Localization{z, RingHom(self(), z, [z](const RingElement&) { return z->zero(); })};
    }
    if (v == 1 || v == -1) return Localization{self(), RingHom::identity(self())};
    RingPtr loc = localized_integers(v);
    return Localization{loc, RingHom(self(), loc, [loc](const RingElement& x) {
                            return loc->from_int(x.as_int());
                        })};
}

// ---------------------------------------------------------------------------
// Modular

ModularRing::ModularRing(mpz_class modulus) : modulus_(std::move(modulus)) {
    require(modulus_ >= 1, Errc::InvalidArgument, "modulus must be >= 1");
}

bool ModularRing::same_as(const Ring& other) const {
    if (other.kind() != RingKind::Modular) return false;
    return static_cast<const ModularRing&>(other).modulus_ == modulus_;
}

RingElement ModularRing::zero() const { return RingElement(self(), mpz_class(0)); }
RingElement ModularRing::one() const {
    return RingElement(self(), mod_norm(mpz_class(1), modulus_));
}
RingElement ModularRing::from_int(const mpz_class& value) const {
    return RingElement(self(), mod_norm(value, modulus_));
}

RingElement ModularRing::add(const RingElement& x, const RingElement& y) const {
    return RingElement(self(), mod_norm(x.as_int() + y.as_int(), modulus_));
}
RingElement ModularRing::mul(const RingElement& x, const RingElement& y) const {
    return RingElement(self(), mod_norm(x.as_int() * y.as_int(), modulus_));
}
RingElement ModularRing::neg(const RingElement& x) const {
    return RingElement(self(), mod_norm(-x.as_int(), modulus_));
}

bool ModularRing::is_unit(const RingElement& x) const {
    return zgcd(x.as_int(), modulus_) == 1;
}

std::optional<RingElement> ModularRing::try_inverse(const RingElement& x) const {
    if (modulus_ == 1) return zero();
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), x.as_int().get_mpz_t(), modulus_.get_mpz_t()) == 0)
        return std::nullopt;
    return RingElement(self(), r);
}

bool ModularRing::is_nilpotent(const RingElement& x) const {
    return coprime_part(modulus_, x.as_int()) == 1;
}

Localization ModularRing::localize(const RingElement& a) const {
    require(same_ring(a.ring(), self()), Errc::MixedRings, "localize: element of another ring");
    mpz_class m2 = coprime_part(modulus_, a.as_int());
    if (m2 == modulus_) return Localization{self(), RingHom::identity(self())};
    RingPtr target = modular(m2);
    return Localization{target, RingHom(self(), target, [target](const RingElement& x) {
                            return target->from_int(x.as_int());
                        })};
}

std::optional<std::vector<RingElement>> ModularRing::enumerate() const {
    std::vector<RingElement> out;
    for (mpz_class v = 0; v < modulus_; ++v) out.push_back(RingElement(self(), v));
    return out;
}

// ---------------------------------------------------------------------------
// Polynomial

PolynomialRing::PolynomialRing(RingPtr base, std::vector<std::string> variables)
    : base_(std::move(base)), variables_(std::move(variables)) {
    require(!variables_.empty(), Errc::InvalidArgument, "polynomial ring needs >= 1 variable");
    std::set<std::string> seen(variables_.begin(), variables_.end());
    require(seen.size() == variables_.size(), Errc::InvalidArgument,
            "polynomial variables must be distinct");
}

size_t PolynomialRing::variable_index(const std::string& name) const {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    require(it != variables_.end(), Errc::UnknownVariable,
            "no variable named '" + name + "' in " + describe());
    return static_cast<size_t>(it - variables_.begin());
}

bool PolynomialRing::same_as(const Ring& other) const {
    if (other.kind() != RingKind::Polynomial) return false;
    const auto& o = static_cast<const PolynomialRing&>(other);
    return o.variables_ == variables_ && base_->same_as(*o.base_);
}

std::string PolynomialRing::describe() const {
    std::ostringstream os;
    os << base_->describe() << "[";
    for (size_t i = 0; i < variables_.size(); ++i) {
        if (i) os << ",";
        os << variables_[i];
    }
    os << "]";
    return os.str();
}

RingElement PolynomialRing::zero() const {
    return RingElement(self(), std::make_shared<const PolyPayload>());
}

RingElement PolynomialRing::one() const { return constant(base_->one()); }

RingElement PolynomialRing::from_int(const mpz_class& value) const {
    return constant(base_->from_int(value));
}

RingElement PolynomialRing::constant(const RingElement& base_value) const {
    require(same_ring(base_value.ring(), base_), Errc::MixedRings,
            "constant coefficient from a different ring");
    PolyPayload p;
    if (!base_value.is_zero())
        p.terms.push_back({std::vector<unsigned>(variables_.size(), 0u), base_value});
    return RingElement(self(), std::make_shared<const PolyPayload>(std::move(p)));
}

RingElement PolynomialRing::variable(size_t index) const {
    require(index < variables_.size(), Errc::UnknownVariable, "variable index out of range");
    std::vector<unsigned> exps(variables_.size(), 0u);
    exps[index] = 1;
    PolyPayload p;
    p.terms.push_back({std::move(exps), base_->one()});
    return RingElement(self(), std::make_shared<const PolyPayload>(std::move(p)));
}

RingElement PolynomialRing::from_terms(std::vector<PolyPayload::Term> terms) const {
    std::map<std::vector<unsigned>, RingElement, GrlexGreater> acc;
    for (auto& t : terms) {
        require(t.exps.size() == variables_.size(), Errc::InvalidArgument,
                "exponent vector length mismatch");
        require(same_ring(t.coeff.ring(), base_), Errc::MixedRings,
                "coefficient from a different ring");
        auto it = acc.find(t.exps);
        if (it == acc.end())
            acc.emplace(std::move(t.exps), std::move(t.coeff));
        else
            it->second = quadnorm::add(it->second, t.coeff);
    }
    PolyPayload p;
    for (auto& [exps, coeff] : acc)
        if (!coeff.is_zero()) p.terms.push_back({exps, coeff});
    return RingElement(self(), std::make_shared<const PolyPayload>(std::move(p)));
}

RingElement PolynomialRing::add(const RingElement& x, const RingElement& y) const {
    std::vector<PolyPayload::Term> terms = x.as_poly().terms;
    const auto& yt = y.as_poly().terms;
    terms.insert(terms.end(), yt.begin(), yt.end());
    return from_terms(std::move(terms));
}

RingElement PolynomialRing::mul(const RingElement& x, const RingElement& y) const {
    std::vector<PolyPayload::Term> terms;
    for (const auto& tx : x.as_poly().terms) {
        for (const auto& ty : y.as_poly().terms) {
            std::vector<unsigned> exps(tx.exps.size());
            for (size_t i = 0; i < exps.size(); ++i) exps[i] = tx.exps[i] + ty.exps[i];
            terms.push_back({std::move(exps), quadnorm::mul(tx.coeff, ty.coeff)});
        }
    }
    return from_terms(std::move(terms));
}

RingElement PolynomialRing::neg(const RingElement& x) const {
    PolyPayload p;
    for (const auto& t : x.as_poly().terms) p.terms.push_back({t.exps, quadnorm::neg(t.coeff)});
    return RingElement(self(), std::make_shared<const PolyPayload>(std::move(p)));
}

bool PolynomialRing::is_unit(const RingElement& x) const {
    // Unit iff the constant term is a unit and every other coefficient is nilpotent.
    bool constant_unit = false;
    for (const auto& t : x.as_poly().terms) {
        if (total_degree(t.exps) == 0) {
            constant_unit = base_->is_unit(t.coeff);
        } else if (!base_->is_nilpotent(t.coeff)) {
            return false;
        }
    }
    return constant_unit;
}

std::optional<RingElement> PolynomialRing::try_inverse(const RingElement& x) const {
    if (!is_unit(x)) return std::nullopt;
    RingElement c = coefficient_of(x, std::vector<unsigned>(variables_.size(), 0u));
    RingElement c_inv = constant(quadnorm::inverse(c));
    // x * c_inv = 1 - s with s nilpotent; invert by geometric series.
    RingElement s = quadnorm::sub(one(), quadnorm::mul(x, c_inv));
    RingElement acc = one();
    RingElement term = s;
    for (int i = 0; i < 256 && !term.is_zero(); ++i) {
        acc = quadnorm::add(acc, term);
        term = quadnorm::mul(term, s);
    }
    require(term.is_zero(), Errc::InternalContradiction, "nilpotent series did not terminate");
    RingElement inv = quadnorm::mul(c_inv, acc);
    require(quadnorm::mul(x, inv).is_one(), Errc::InternalContradiction,
            "polynomial inverse check failed");
    return inv;
}

bool PolynomialRing::is_nilpotent(const RingElement& x) const {
    for (const auto& t : x.as_poly().terms)
        if (!base_->is_nilpotent(t.coeff)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Product

ProductRing::ProductRing(std::vector<RingPtr> factors) : factors_(std::move(factors)) {
    require(!factors_.empty(), Errc::InvalidArgument, "product ring needs >= 1 factor");
}

bool ProductRing::same_as(const Ring& other) const {
    if (other.kind() != RingKind::Product) return false;
    const auto& o = static_cast<const ProductRing&>(other);
    if (o.factors_.size() != factors_.size()) return false;
    for (size_t i = 0; i < factors_.size(); ++i)
        if (!factors_[i]->same_as(*o.factors_[i])) return false;
    return true;
}

std::string ProductRing::describe() const {
    std::ostringstream os;
    for (size_t i = 0; i < factors_.size(); ++i) {
        if (i) os << " x ";
        os << factors_[i]->describe();
    }
    return os.str();
}

RingElement ProductRing::tuple(std::vector<RingElement> items) const {
    require(items.size() == factors_.size(), Errc::DimensionMismatch,
            "tuple length differs from factor count");
    for (size_t i = 0; i < items.size(); ++i)
        require(same_ring(items[i].ring(), factors_[i]), Errc::MixedRings,
                "tuple component from wrong factor ring");
    TuplePayload p{std::move(items)};
    return RingElement(self(), std::make_shared<const TuplePayload>(std::move(p)));
}

RingElement ProductRing::zero() const {
    std::vector<RingElement> items;
    for (const auto& f : factors_) items.push_back(f->zero());
    return tuple(std::move(items));
}

RingElement ProductRing::one() const {
    std::vector<RingElement> items;
    for (const auto& f : factors_) items.push_back(f->one());
    return tuple(std::move(items));
}

RingElement ProductRing::from_int(const mpz_class& value) const {
    std::vector<RingElement> items;
    for (const auto& f : factors_) items.push_back(f->from_int(value));
    return tuple(std::move(items));
}

RingElement ProductRing::add(const RingElement& x, const RingElement& y) const {
    std::vector<RingElement> items;
    const auto& xs = x.as_tuple();
    const auto& ys = y.as_tuple();
    for (size_t i = 0; i < factors_.size(); ++i) items.push_back(quadnorm::add(xs[i], ys[i]));
    return tuple(std::move(items));
}

RingElement ProductRing::mul(const RingElement& x, const RingElement& y) const {
    std::vector<RingElement> items;
    const auto& xs = x.as_tuple();
    const auto& ys = y.as_tuple();
    for (size_t i = 0; i < factors_.size(); ++i) items.push_back(quadnorm::mul(xs[i], ys[i]));
    return tuple(std::move(items));
}

RingElement ProductRing::neg(const RingElement& x) const {
    std::vector<RingElement> items;
    for (const auto& xi : x.as_tuple()) items.push_back(quadnorm::neg(xi));
    return tuple(std::move(items));
}

bool ProductRing::is_unit(const RingElement& x) const {
    for (const auto& xi : x.as_tuple())
        if (!quadnorm::is_unit(xi)) return false;
    return true;
}

std::optional<RingElement> ProductRing::try_inverse(const RingElement& x) const {
    std::vector<RingElement> items;
    for (const auto& xi : x.as_tuple()) {
        auto inv = xi.ring()->try_inverse(xi);
        if (!inv) return std::nullopt;
        items.push_back(*inv);
    }
    return tuple(std::move(items));
}

bool ProductRing::is_nilpotent(const RingElement& x) const {
    for (const auto& xi : x.as_tuple())
        if (!quadnorm::is_nilpotent(xi)) return false;
    return true;
}

Localization ProductRing::localize(const RingElement& a) const {
    require(same_ring(a.ring(), self()), Errc::MixedRings, "localize: element of another ring");
    std::vector<Localization> parts;
    std::vector<RingPtr> rings;
    for (const auto& ai : a.as_tuple()) {
        parts.push_back(ai.ring()->localize(ai));
        rings.push_back(parts.back().ring);
    }
    RingPtr target = product(rings);
    auto action = [parts, target](const RingElement& x) {
        std::vector<RingElement> items;
        const auto& xs = x.as_tuple();
        for (size_t i = 0; i < xs.size(); ++i) items.push_back(parts[i].map(xs[i]));
        return std::static_pointer_cast<const ProductRing>(target)->tuple(std::move(items));
    };
    return Localization{target, RingHom(self(), target, action)};
}

std::optional<std::vector<RingElement>> ProductRing::enumerate() const {
    std::vector<std::vector<RingElement>> per_factor;
    for (const auto& f : factors_) {
        auto e = f->enumerate();
        if (!e) return std::nullopt;
        per_factor.push_back(std::move(*e));
    }
    std::vector<std::vector<RingElement>> tuples{{}};
    for (const auto& choices : per_factor) {
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
    for (auto& t : tuples) out.push_back(tuple(std::move(t)));
    return out;
}

// ---------------------------------------------------------------------------
// Localized integers Z[1/a]

LocalizedIntegersRing::LocalizedIntegersRing(mpz_class inverted) : inverted_(std::move(inverted)) {
    require(inverted_ != 0 && inverted_ != 1 && inverted_ != -1, Errc::InvalidArgument,
            "localized integers require |a| >= 2");
}

bool LocalizedIntegersRing::same_as(const Ring& other) const {
    if (other.kind() != RingKind::Localized) return false;
    return static_cast<const LocalizedIntegersRing&>(other).inverted_ == inverted_;
}

RingElement LocalizedIntegersRing::zero() const { return RingElement(self(), mpq_class(0)); }
RingElement LocalizedIntegersRing::one() const { return RingElement(self(), mpq_class(1)); }
RingElement LocalizedIntegersRing::from_int(const mpz_class& value) const {
    return RingElement(self(), mpq_class(value));
}

RingElement LocalizedIntegersRing::add(const RingElement& x, const RingElement& y) const {
    return RingElement(self(), mpq_class(x.as_fraction() + y.as_fraction()));
}
RingElement LocalizedIntegersRing::mul(const RingElement& x, const RingElement& y) const {
    return RingElement(self(), mpq_class(x.as_fraction() * y.as_fraction()));
}
RingElement LocalizedIntegersRing::neg(const RingElement& x) const {
    return RingElement(self(), mpq_class(-x.as_fraction()));
}

bool LocalizedIntegersRing::is_unit(const RingElement& x) const {
    if (x.as_fraction() == 0) return false;
    // Unit iff the numerator is supported on the primes of a.
    mpz_class num = abs(mpz_class(x.as_fraction().get_num()));
    return coprime_part(num, inverted_) == 1;
}

std::optional<RingElement> LocalizedIntegersRing::try_inverse(const RingElement& x) const {
    if (!is_unit(x)) return std::nullopt;
    mpq_class inv = 1 / x.as_fraction();
    return from_rational(inv);
}

bool LocalizedIntegersRing::is_nilpotent(const RingElement& x) const {
    return x.as_fraction() == 0;
}

RingElement LocalizedIntegersRing::from_rational(const mpq_class& value) const {
    mpq_class v = value;
    v.canonicalize();
    mpz_class den = v.get_den();
    require(coprime_part(den, inverted_) == 1, Errc::NotRepresentable,
            "denominator " + den.get_str() + " is not supported on " + inverted_.get_str());
    return RingElement(self(), v);
}

std::pair<mpz_class, unsigned> LocalizedIntegersRing::fraction_form(const RingElement& x) const {
    mpq_class v = x.as_fraction();
    mpq_class scaled = v;
    unsigned k = 0;
    while (scaled.get_den() != 1) {
        scaled *= inverted_;
        scaled.canonicalize();
        ++k;
        require(k <= 4096, Errc::InternalContradiction, "fraction_form did not terminate");
    }
    return {mpz_class(scaled.get_num()), k};
}

Localization LocalizedIntegersRing::localize(const RingElement& a) const {
    require(same_ring(a.ring(), self()), Errc::MixedRings, "localize: element of another ring");
    if (a.as_fraction() == 0) {
        RingPtr z = zero_ring();
        return Localization{z, RingHom(self(), z, [z](const RingElement&) { return z->zero(); })};
    }
    if (is_unit(a)) return Localization{self(), RingHom::identity(self())};
    mpz_class num = a.as_fraction().get_num();
    RingPtr target = localized_integers(inverted_ * num);
    auto t = std::static_pointer_cast<const LocalizedIntegersRing>(target);
    return Localization{target, RingHom(self(), target, [t](const RingElement& x) {
                            return t->from_rational(x.as_fraction());
                        })};
}

// ---------------------------------------------------------------------------
// Factories

RingPtr integers() {
    static RingPtr instance = std::make_shared<IntegersRing>();
    return instance;
}

RingPtr modular(const mpz_class& modulus) { return std::make_shared<ModularRing>(modulus); }

RingPtr zero_ring() { return modular(1); }

RingPtr polynomial_ring(RingPtr base, std::vector<std::string> variables) {
    return std::make_shared<PolynomialRing>(std::move(base), std::move(variables));
}

RingPtr product(std::vector<RingPtr> factors) {
    return std::make_shared<ProductRing>(std::move(factors));
}

RingPtr localized_integers(const mpz_class& inverted) {
    return std::make_shared<LocalizedIntegersRing>(inverted);
}

// ---------------------------------------------------------------------------
// Polynomial operations

namespace {

void collect_variable_names(const RingPtr& ring, std::set<std::string>& out) {
    if (ring->kind() == RingKind::Polynomial) {
        const auto& pr = static_cast<const PolynomialRing&>(*ring);
        out.insert(pr.variables().begin(), pr.variables().end());
        collect_variable_names(pr.base(), out);
    }
}

const PolynomialRing& as_polynomial(const RingPtr& ring) {
    require(ring->kind() == RingKind::Polynomial, Errc::InvalidArgument,
            "expected a polynomial ring, got " + ring->describe());
    return static_cast<const PolynomialRing&>(*ring);
}

} // namespace

AdjoinedVariables adjoin_variables(const RingPtr& ring, const std::vector<std::string>& names) {
    std::set<std::string> used;
    collect_variable_names(ring, used);
    for (const auto& n : names)
        require(used.find(n) == used.end(), Errc::InvalidArgument,
                "variable name '" + n + "' is not fresh");
    RingPtr p = polynomial_ring(ring, names);
    auto pr = std::static_pointer_cast<const PolynomialRing>(p);
    RingHom embed(ring, p, [pr](const RingElement& x) { return pr->constant(x); });
    return AdjoinedVariables{p, std::move(embed)};
}

std::vector<std::string> fresh_variable_names(const RingPtr& ring, const std::string& prefix,
                                              size_t count) {
    std::set<std::string> used;
    collect_variable_names(ring, used);
    std::vector<std::string> out;
    size_t suffix = 1;
    while (out.size() < count) {
        std::string candidate = prefix + std::to_string(suffix++);
        if (used.find(candidate) == used.end()) out.push_back(candidate);
    }
    return out;
}

RingElement specialize(const RingElement& poly,
                       const std::map<std::string, RingElement>& assignment) {
    const auto& pr = as_polynomial(poly.ring());
    const auto& vars = pr.variables();
    std::vector<RingElement> values;
    values.reserve(vars.size());
    for (const auto& v : vars) {
        auto it = assignment.find(v);
        require(it != assignment.end(), Errc::UnknownVariable,
                "specialize: no value for variable '" + v + "'");
        require(same_ring(it->second.ring(), pr.base()), Errc::MixedRings,
                "specialize: value for '" + v + "' is not in the base ring");
        values.push_back(it->second);
    }
    for (const auto& [name, value] : assignment) {
        (void)value;
        require(std::find(vars.begin(), vars.end(), name) != vars.end(), Errc::UnknownVariable,
                "specialize: unknown variable '" + name + "'");
    }
    RingElement acc = pr.base()->zero();
    for (const auto& t : poly.as_poly().terms) {
        RingElement term = t.coeff;
        for (size_t i = 0; i < values.size(); ++i)
            for (unsigned e = 0; e < t.exps[i]; ++e) term = mul(term, values[i]);
        acc = add(acc, term);
    }
    return acc;
}

RingElement exact_divide_by_variable(const RingElement& poly, const std::string& name) {
    const auto& pr = as_polynomial(poly.ring());
    size_t idx = pr.variable_index(name);
    std::vector<PolyPayload::Term> terms;
    for (const auto& t : poly.as_poly().terms) {
        require(t.exps[idx] >= 1, Errc::NotDivisible,
                "a term of the polynomial lacks the variable '" + name + "'");
        auto exps = t.exps;
        exps[idx] -= 1;
        terms.push_back({std::move(exps), t.coeff});
    }
    return pr.from_terms(std::move(terms));
}

RingElement coefficient_of(const RingElement& poly, const std::vector<unsigned>& exps) {
    const auto& pr = as_polynomial(poly.ring());
    require(exps.size() == pr.variables().size(), Errc::InvalidArgument,
            "exponent vector length mismatch");
    for (const auto& t : poly.as_poly().terms)
        if (t.exps == exps) return t.coeff;
    return pr.base()->zero();
}

RingElement poly_variable(const RingPtr& ring, const std::string& name) {
    const auto& pr = as_polynomial(ring);
    return pr.variable(pr.variable_index(name));
}

RingHom polynomial_hom(const RingPtr& source, const RingHom& base_map,
                       const std::vector<RingElement>& variable_images) {
    const auto& pr = as_polynomial(source);
    require(same_ring(base_map.source(), pr.base()), Errc::HomMismatch,
            "polynomial_hom: base map source mismatch");
    require(variable_images.size() == pr.variables().size(), Errc::HomMismatch,
            "polynomial_hom: one image per variable required");
    RingPtr target = base_map.target();
    for (const auto& img : variable_images)
        require(same_ring(img.ring(), target), Errc::HomMismatch,
                "polynomial_hom: variable image not in the target ring");
    auto action = [base_map, variable_images, target](const RingElement& x) {
        RingElement acc = target->zero();
        for (const auto& t : x.as_poly().terms) {
            RingElement term = base_map(t.coeff);
            for (size_t i = 0; i < variable_images.size(); ++i)
                for (unsigned e = 0; e < t.exps[i]; ++e) term = mul(term, variable_images[i]);
            acc = add(acc, term);
        }
        return acc;
    };
    return RingHom(source, target, action);
}

RingHom product_hom(const RingPtr& source, const RingPtr& target, std::vector<RingHom> parts) {
    auto tp = std::static_pointer_cast<const ProductRing>(target);
    require(target->kind() == RingKind::Product && source->kind() == RingKind::Product,
            Errc::HomMismatch, "product_hom needs product rings");
    auto action = [parts, tp](const RingElement& x) {
        std::vector<RingElement> items;
        const auto& xs = x.as_tuple();
        for (size_t i = 0; i < xs.size(); ++i) items.push_back(parts[i](xs[i]));
        return tp->tuple(std::move(items));
    };
    return RingHom(source, target, action);
}

RingHom restriction_hom(const RingPtr& source, const RingPtr& target) {
    if (same_ring(source, target)) return RingHom::identity(source);
    // Map to the zero ring collapses everything.
    if (target->kind() == RingKind::Modular &&
        static_cast<const ModularRing&>(*target).modulus() == 1) {
        return RingHom(source, target, [target](const RingElement&) { return target->zero(); });
    }
    switch (source->kind()) {
        case RingKind::Integers:
            return RingHom(source, target, [target](const RingElement& x) {
                return target->from_int(x.as_int());
            });
        case RingKind::Modular: {
            require(target->kind() == RingKind::Modular, Errc::InternalContradiction,
                    "no restriction from " + source->describe() + " to " + target->describe());
            const auto& sm = static_cast<const ModularRing&>(*source);
            const auto& tm = static_cast<const ModularRing&>(*target);
            require(sm.modulus() % tm.modulus() == 0, Errc::InternalContradiction,
                    "restriction requires the target modulus to divide the source modulus");
            return RingHom(source, target, [target](const RingElement& x) {
                return target->from_int(x.as_int());
            });
        }
        case RingKind::Localized: {
            require(target->kind() == RingKind::Localized, Errc::InternalContradiction,
                    "no restriction from " + source->describe() + " to " + target->describe());
            auto t = std::static_pointer_cast<const LocalizedIntegersRing>(target);
            return RingHom(source, target, [t](const RingElement& x) {
                return t->from_rational(x.as_fraction());
            });
        }
        case RingKind::Product: {
            require(target->kind() == RingKind::Product, Errc::InternalContradiction,
                    "no restriction from " + source->describe() + " to " + target->describe());
            const auto& sp = static_cast<const ProductRing&>(*source);
            const auto& tp = static_cast<const ProductRing&>(*target);
            require(sp.factors().size() == tp.factors().size(), Errc::InternalContradiction,
                    "restriction between products of different lengths");
            std::vector<RingHom> parts;
            for (size_t i = 0; i < sp.factors().size(); ++i)
                parts.push_back(restriction_hom(sp.factors()[i], tp.factors()[i]));
            return product_hom(source, target, std::move(parts));
        }
        default:
            fail(Errc::InternalContradiction,
                 "no restriction from " + source->describe() + " to " + target->describe());
    }
}

} // namespace quadnorm
