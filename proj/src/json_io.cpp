#include "quadnorm/json_io.hpp"

namespace quadnorm {

namespace {

const json& expect(const json& j, const char* key) {
    require(j.is_object() && j.contains(key), Errc::ParseError,
            std::string("missing key '") + key + "'");
    return j.at(key);
}

unsigned long small_uint_from_json(const json& j) {
    mpz_class v = mpz_from_json(j);
    require(v >= 0 && v.fits_ulong_p(), Errc::ParseError, "expected a small nonnegative integer");
    return v.get_ui();
}

} // namespace

mpz_class mpz_from_json(const json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            fail(Errc::ParseError, "malformed integer string: " + j.get<std::string>());
        }
    }
    fail(Errc::ParseError, "expected an integer (number or decimal string)");
}

json ring_to_json(const RingPtr& ring) {
    json j;
    j["kind"] = ring_kind_name(ring->kind());
    switch (ring->kind()) {
        case RingKind::Integers:
            break;
        case RingKind::Modular:
            j["modulus"] = static_cast<const ModularRing&>(*ring).modulus().get_str();
            break;
        case RingKind::Polynomial: {
            const auto& pr = static_cast<const PolynomialRing&>(*ring);
            j["base"] = ring_to_json(pr.base());
            j["variables"] = pr.variables();
            break;
        }
        case RingKind::Product: {
            json factors = json::array();
            for (const auto& f : static_cast<const ProductRing&>(*ring).factors())
                factors.push_back(ring_to_json(f));
            j["factors"] = std::move(factors);
            break;
        }
        case RingKind::Localized: {
            const auto& lr = static_cast<const LocalizedIntegersRing&>(*ring);
            j["base"] = json{{"kind", "integers"}};
            j["inverted"] = lr.inverted().get_str();
            break;
        }
        case RingKind::AlgebraRing:
            j["algebra"] = algebra_to_json(algebra_of(ring));
            break;
    }
    return j;
}

RingPtr ring_from_json(const json& j) {
    std::string kind = expect(j, "kind").get<std::string>();
    if (kind == "integers") return integers();
    if (kind == "modular") return modular(mpz_from_json(expect(j, "modulus")));
    if (kind == "polynomial") {
        RingPtr base = ring_from_json(expect(j, "base"));
        std::vector<std::string> vars = expect(j, "variables").get<std::vector<std::string>>();
        return polynomial_ring(std::move(base), std::move(vars));
    }
    if (kind == "product") {
        std::vector<RingPtr> factors;
        for (const auto& f : expect(j, "factors")) factors.push_back(ring_from_json(f));
        return product(std::move(factors));
    }
    if (kind == "localized") {
        RingPtr base = ring_from_json(expect(j, "base"));
        require(base->kind() == RingKind::Integers, Errc::ParseError,
                "localized rings are supported over the integers");
        return localized_integers(mpz_from_json(expect(j, "inverted")));
    }
    if (kind == "algebra_ring") return algebra_ring(algebra_from_json(expect(j, "algebra")));
    fail(Errc::ParseError, "unknown ring kind '" + kind + "'");
}

json element_to_json(const RingElement& x) {
    switch (x.ring()->kind()) {
        case RingKind::Integers:
        case RingKind::Modular:
            return json(x.as_int().get_str());
        case RingKind::Localized: {
            const auto& lr = static_cast<const LocalizedIntegersRing&>(*x.ring());
            auto [num, exp] = lr.fraction_form(x);
            return json{{"num", num.get_str()},
                        {"den_base", lr.inverted().get_str()},
                        {"den_exp", exp}};
        }
        case RingKind::Polynomial: {
            json terms = json::array();
            for (const auto& t : x.as_poly().terms) {
                json exps = json::array();
                for (unsigned e : t.exps) exps.push_back(e);
                terms.push_back(json{{"coeff", element_to_json(t.coeff)}, {"exps", exps}});
            }
            return terms;
        }
        case RingKind::Product: {
            json items = json::array();
            for (const auto& xi : x.as_tuple()) items.push_back(element_to_json(xi));
            return items;
        }
        case RingKind::AlgebraRing: {
            json coords = json::array();
            for (const auto& c : x.as_coords()) coords.push_back(element_to_json(c));
            return coords;
        }
    }
    fail(Errc::InternalContradiction, "unhandled ring kind in element_to_json");
}

RingElement element_from_json(const RingPtr& ring, const json& j) {
    switch (ring->kind()) {
        case RingKind::Integers:
        case RingKind::Modular:
            return ring->from_int(mpz_from_json(j));
        case RingKind::Localized: {
            const auto& lr = static_cast<const LocalizedIntegersRing&>(*ring);
            if (j.is_object()) {
                mpz_class num = mpz_from_json(expect(j, "num"));
                unsigned long exp = small_uint_from_json(expect(j, "den_exp"));
                if (j.contains("den_base"))
                    require(mpz_from_json(j.at("den_base")) == lr.inverted(), Errc::ParseError,
                            "den_base does not match the ring's inverted element");
                mpq_class value(num, zpow(lr.inverted(), exp));
                value.canonicalize();
                return lr.from_rational(value);
            }
            return ring->from_int(mpz_from_json(j));
        }
        case RingKind::Polynomial: {
            const auto& pr = static_cast<const PolynomialRing&>(*ring);
            require(j.is_array(), Errc::ParseError, "polynomial element must be a term array");
            std::vector<PolyPayload::Term> terms;
            for (const auto& tj : j) {
                RingElement coeff = element_from_json(pr.base(), expect(tj, "coeff"));
                const json& ej = expect(tj, "exps");
                require(ej.is_array() && ej.size() == pr.variables().size(), Errc::ParseError,
                        "exps must list one exponent per variable");
                std::vector<unsigned> exps;
                for (const auto& e : ej) exps.push_back(static_cast<unsigned>(small_uint_from_json(e)));
                terms.push_back({std::move(exps), std::move(coeff)});
            }
            return pr.from_terms(std::move(terms));
        }
        case RingKind::Product: {
            const auto& pr = static_cast<const ProductRing&>(*ring);
            require(j.is_array() && j.size() == pr.factors().size(), Errc::ParseError,
                    "product element must list one value per factor");
            std::vector<RingElement> items;
            for (size_t i = 0; i < pr.factors().size(); ++i)
                items.push_back(element_from_json(pr.factors()[i], j.at(i)));
            return pr.tuple(std::move(items));
        }
        case RingKind::AlgebraRing: {
            const AlgebraPtr& alg = algebra_of(ring);
            require(j.is_array() && j.size() == alg->rank(), Errc::ParseError,
                    "algebra element must list one coordinate per basis vector");
            std::vector<RingElement> coords;
            for (const auto& cj : j) coords.push_back(element_from_json(alg->base(), cj));
            return std::static_pointer_cast<const AlgebraRing>(ring)->element(std::move(coords));
        }
    }
    fail(Errc::InternalContradiction, "unhandled ring kind in element_from_json");
}

json algebra_to_json(const AlgebraPtr& algebra) {
    const size_t n = algebra->rank();
    json structure = json::array();
    for (size_t i = 0; i < n; ++i) {
        json row = json::array();
        for (size_t j = 0; j < n; ++j) {
            json cell = json::array();
            for (size_t k = 0; k < n; ++k) cell.push_back(element_to_json(algebra->sc(i, j, k)));
            row.push_back(std::move(cell));
        }
        structure.push_back(std::move(row));
    }
    json unit = json::array();
    for (const auto& u : algebra->unit_coords()) unit.push_back(element_to_json(u));
    return json{{"base", ring_to_json(algebra->base())},
                {"rank", n},
                {"structure", std::move(structure)},
                {"unit", std::move(unit)}};
}

AlgebraPtr algebra_from_json(const json& j) {
    RingPtr base = ring_from_json(expect(j, "base"));
    size_t rank = small_uint_from_json(expect(j, "rank"));
    require(rank >= 1, Errc::ParseError, "algebra rank must be >= 1");
    const json& sj = expect(j, "structure");
    require(sj.is_array() && sj.size() == rank, Errc::ParseError,
            "structure must be a rank x rank x rank array");
    std::vector<RingElement> structure;
    structure.reserve(rank * rank * rank);
    for (const auto& row : sj) {
        require(row.is_array() && row.size() == rank, Errc::ParseError, "bad structure row");
        for (const auto& cell : row) {
            require(cell.is_array() && cell.size() == rank, Errc::ParseError,
                    "bad structure cell");
            for (const auto& cj : cell) structure.push_back(element_from_json(base, cj));
        }
    }
    const json& uj = expect(j, "unit");
    require(uj.is_array() && uj.size() == rank, Errc::ParseError,
            "unit must list one coordinate per basis vector");
    std::vector<RingElement> unit;
    for (const auto& cj : uj) unit.push_back(element_from_json(base, cj));
    try {
        return make_algebra(std::move(base), rank, std::move(structure), std::move(unit));
    } catch (const AlgebraError& e) {
        if (e.code() == Errc::InvalidArgument)
            fail(Errc::ParseError, std::string("algebra data invalid: ") + e.what());
        throw;
    }
}

json quad_to_json(const BasedQuadratic& q) {
    return json{{"base", ring_to_json(q.base)},
                {"t", element_to_json(q.t)},
                {"n", element_to_json(q.n)}};
}

BasedQuadratic quad_from_json(const json& j) {
    const json& body = j.contains("quad") ? j.at("quad") : j;
    RingPtr base = ring_from_json(expect(body, "base"));
    return quad_from_json(base, body);
}

BasedQuadratic quad_from_json(const RingPtr& base, const json& j) {
    const json& body = j.contains("quad") ? j.at("quad") : j;
    return make_quad(base, element_from_json(base, expect(body, "t")),
                     element_from_json(base, expect(body, "n")));
}

json hom_to_json(const QuadHom& f) {
    return json{{"u", element_to_json(f.u())}, {"c", element_to_json(f.c())}};
}

json descent_to_json(const QuadDescentDatum& d) {
    json body;
    json cover = json::array();
    for (const auto& a : d.cover.elements()) cover.push_back(element_to_json(a));
    json witnesses = json::array();
    for (const auto& r : d.cover.witnesses()) witnesses.push_back(element_to_json(r));
    json locals = json::array();
    for (const auto& q : d.locals)
        locals.push_back(json{{"t", element_to_json(q.t)}, {"n", element_to_json(q.n)}});
    json transitions = json::array();
    for (const auto& [ij, t] : d.transitions)
        transitions.push_back(json{{"i", ij.first},
                                   {"j", ij.second},
                                   {"u", element_to_json(t.u())},
                                   {"c", element_to_json(t.c())}});
    body["cover"] = std::move(cover);
    body["witnesses"] = std::move(witnesses);
    body["locals"] = std::move(locals);
    body["transitions"] = std::move(transitions);
    json out;
    out["base"] = ring_to_json(d.cover.base());
    if (d.algebra) out["algebra"] = algebra_to_json(*d.algebra);
    out["descent"] = std::move(body);
    return out;
}

QuadDescentDatum descent_from_json(const json& j) {
    RingPtr base = ring_from_json(expect(j, "base"));
    std::optional<AlgebraPtr> algebra;
    if (j.contains("algebra")) {
        algebra = algebra_from_json(j.at("algebra"));
        require(same_ring((*algebra)->base(), base), Errc::ParseError,
                "extension algebra is not over the declared base ring");
    }
    const json& body = expect(j, "descent");
    std::vector<RingElement> elements, witnesses;
    for (const auto& aj : expect(body, "cover")) elements.push_back(element_from_json(base, aj));
    for (const auto& rj : expect(body, "witnesses"))
        witnesses.push_back(element_from_json(base, rj));
    Cover cover = Cover::make(base, std::move(elements), std::move(witnesses));

    QuadDescentDatum d{std::move(cover), std::move(algebra), {}, {}};
    const json& lj = expect(body, "locals");
    require(lj.is_array() && lj.size() == d.cover.size(), Errc::ParseError,
            "one local per cover element required");
    for (size_t i = 0; i < d.cover.size(); ++i)
        d.locals.push_back(quad_from_json(d.piece_ring(i), lj.at(i)));

    for (const auto& tj : expect(body, "transitions")) {
        size_t i = small_uint_from_json(expect(tj, "i"));
        size_t jdx = small_uint_from_json(expect(tj, "j"));
        require(i < d.cover.size() && jdx < d.cover.size() && i != jdx, Errc::ParseError,
                "transition indices out of range");
        RingPtr ov = d.overlap_ring(i, jdx);
        RingElement u = element_from_json(ov, expect(tj, "u"));
        RingElement c = element_from_json(ov, expect(tj, "c"));
        d.transitions.emplace(std::make_pair(i, jdx),
                              make_hom(d.local_on_overlap(i, jdx), d.local_on_overlap(jdx, i),
                                       std::move(u), std::move(c)));
    }
    // Derive missing reverse transitions from the given direction.
    for (size_t i = 0; i < d.cover.size(); ++i) {
        for (size_t jdx = 0; jdx < d.cover.size(); ++jdx) {
            if (i == jdx) continue;
            if (d.transitions.count({i, jdx}) && !d.transitions.count({jdx, i}))
                d.transitions.emplace(std::make_pair(jdx, i),
                                      inverse_hom(d.transitions.at({i, jdx})));
        }
    }
    return d;
}

std::string canonical_print(const RingElement& x) { return element_to_json(x).dump(); }

RingElement parse_element(const RingPtr& ring, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(Errc::ParseError, std::string("malformed JSON: ") + e.what());
    }
    return element_from_json(ring, j);
}

} // namespace quadnorm
