#pragma once

#include <json.hpp>

#include "quadnorm/descent.hpp"

namespace quadnorm {

using json = nlohmann::json;

// Numeric values are emitted as decimal strings; parsers accept both strings
// and plain JSON integers.

json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const json& j);

json element_to_json(const RingElement& x);
RingElement element_from_json(const RingPtr& ring, const json& j);

json algebra_to_json(const AlgebraPtr& algebra);
AlgebraPtr algebra_from_json(const json& j);

json quad_to_json(const BasedQuadratic& q);                       // {"base":..,"t":..,"n":..}
BasedQuadratic quad_from_json(const json& j);                      // reads "base"
BasedQuadratic quad_from_json(const RingPtr& base, const json& j); // t/n only

json hom_to_json(const QuadHom& f); // {"u":..,"c":..}

json descent_to_json(const QuadDescentDatum& d);
QuadDescentDatum descent_from_json(const json& j);

/// Canonical printing: parse(print(x)) == x, and equal strings iff equal values.
std::string canonical_print(const RingElement& x);
RingElement parse_element(const RingPtr& ring, const std::string& text);

mpz_class mpz_from_json(const json& j);

} // namespace quadnorm
