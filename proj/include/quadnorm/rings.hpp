#pragma once

#include <map>

#include "quadnorm/ring.hpp"

namespace quadnorm {

/// The ring of integers, with arbitrary-precision payloads.
class IntegersRing final : public Ring {
public:
    RingKind kind() const noexcept override { return RingKind::Integers; }
    bool same_as(const Ring& other) const override;
    std::string describe() const override { return "Z"; }

    RingElement zero() const override;
    RingElement one() const override;
    RingElement from_int(const mpz_class& value) const override;

    RingElement add(const RingElement& x, const RingElement& y) const override;
    RingElement mul(const RingElement& x, const RingElement& y) const override;
    RingElement neg(const RingElement& x) const override;

    bool is_unit(const RingElement& x) const override;
    std::optional<RingElement> try_inverse(const RingElement& x) const override;
    bool is_nilpotent(const RingElement& x) const override;

    Localization localize(const RingElement& a) const override;
};

/// Z/m with residues normalized to [0, m). Modulus 1 is the zero ring.
class ModularRing final : public Ring {
public:
    explicit ModularRing(mpz_class modulus);

    const mpz_class& modulus() const noexcept { return modulus_; }

    RingKind kind() const noexcept override { return RingKind::Modular; }
    bool same_as(const Ring& other) const override;
    std::string describe() const override { return "Z/" + modulus_.get_str(); }

    RingElement zero() const override;
    RingElement one() const override;
    RingElement from_int(const mpz_class& value) const override;

    RingElement add(const RingElement& x, const RingElement& y) const override;
    RingElement mul(const RingElement& x, const RingElement& y) const override;
    RingElement neg(const RingElement& x) const override;

    bool is_unit(const RingElement& x) const override;
    std::optional<RingElement> try_inverse(const RingElement& x) const override;
    bool is_nilpotent(const RingElement& x) const override;

    Localization localize(const RingElement& a) const override;
    std::optional<std::vector<RingElement>> enumerate() const override;

private:
    mpz_class modulus_;
};

/// Sparse multivariate polynomials over an arbitrary base ring, terms kept in
/// descending graded-lexicographic order with no zero coefficients.
class PolynomialRing final : public Ring {
public:
    PolynomialRing(RingPtr base, std::vector<std::string> variables);

    const RingPtr& base() const noexcept { return base_; }
    const std::vector<std::string>& variables() const noexcept { return variables_; }
    size_t variable_index(const std::string& name) const;

    RingKind kind() const noexcept override { return RingKind::Polynomial; }
    bool same_as(const Ring& other) const override;
    std::string describe() const override;

    RingElement zero() const override;
    RingElement one() const override;
    RingElement from_int(const mpz_class& value) const override;

    RingElement add(const RingElement& x, const RingElement& y) const override;
    RingElement mul(const RingElement& x, const RingElement& y) const override;
    RingElement neg(const RingElement& x) const override;

    bool is_unit(const RingElement& x) const override;
    std::optional<RingElement> try_inverse(const RingElement& x) const override;
    bool is_nilpotent(const RingElement& x) const override;

    /// Canonicalizes: merges duplicate exponent vectors, drops zeros, sorts.
    RingElement from_terms(std::vector<PolyPayload::Term> terms) const;
    RingElement constant(const RingElement& base_value) const;
    RingElement variable(size_t index) const;

private:
    RingPtr base_;
    std::vector<std::string> variables_;
};

/// Finite product of rings; elements are tuples.
class ProductRing final : public Ring {
public:
    explicit ProductRing(std::vector<RingPtr> factors);

    const std::vector<RingPtr>& factors() const noexcept { return factors_; }

    RingKind kind() const noexcept override { return RingKind::Product; }
    bool same_as(const Ring& other) const override;
    std::string describe() const override;

    RingElement zero() const override;
    RingElement one() const override;
    RingElement from_int(const mpz_class& value) const override;

    RingElement add(const RingElement& x, const RingElement& y) const override;
    RingElement mul(const RingElement& x, const RingElement& y) const override;
    RingElement neg(const RingElement& x) const override;

    bool is_unit(const RingElement& x) const override;
    std::optional<RingElement> try_inverse(const RingElement& x) const override;
    bool is_nilpotent(const RingElement& x) const override;

    Localization localize(const RingElement& a) const override;
    std::optional<std::vector<RingElement>> enumerate() const override;

    RingElement tuple(std::vector<RingElement> items) const;

private:
    std::vector<RingPtr> factors_;
};

/// Z[1/a]: rationals whose denominator divides a power of `a`. The canonical
/// payload is the GMP rational in lowest terms; the b/a^k form with minimal k
/// is derived on demand (for printing and JSON).
class LocalizedIntegersRing final : public Ring {
public:
    explicit LocalizedIntegersRing(mpz_class inverted);

    const mpz_class& inverted() const noexcept { return inverted_; }

    RingKind kind() const noexcept override { return RingKind::Localized; }
    bool same_as(const Ring& other) const override;
    std::string describe() const override { return "Z[1/" + inverted_.get_str() + "]"; }

    RingElement zero() const override;
    RingElement one() const override;
    RingElement from_int(const mpz_class& value) const override;

    RingElement add(const RingElement& x, const RingElement& y) const override;
    RingElement mul(const RingElement& x, const RingElement& y) const override;
    RingElement neg(const RingElement& x) const override;

    bool is_unit(const RingElement& x) const override;
    std::optional<RingElement> try_inverse(const RingElement& x) const override;
    bool is_nilpotent(const RingElement& x) const override;

    Localization localize(const RingElement& a) const override;

    /// NotRepresentable if the denominator is not supported on `a`.
    RingElement from_rational(const mpq_class& value) const;
    /// Minimal k with value * a^k integral, and the matching numerator.
    std::pair<mpz_class, unsigned> fraction_form(const RingElement& x) const;

private:
    mpz_class inverted_;
};

RingPtr integers();
RingPtr modular(const mpz_class& modulus);
RingPtr zero_ring();
RingPtr polynomial_ring(RingPtr base, std::vector<std::string> variables);
RingPtr product(std::vector<RingPtr> factors);
RingPtr localized_integers(const mpz_class& inverted);

struct AdjoinedVariables {
    RingPtr ring;  // PolynomialRing over the original base
    RingHom embed; // base -> ring, constants
};

/// Adjoin fresh polynomial variables to any ring.
AdjoinedVariables adjoin_variables(const RingPtr& ring, const std::vector<std::string>& names);

/// Variable names that do not clash with anything reachable from `ring`.
std::vector<std::string> fresh_variable_names(const RingPtr& ring, const std::string& prefix,
                                              size_t count);

/// Evaluate a polynomial by substituting base-ring values for every variable.
RingElement specialize(const RingElement& poly,
                       const std::map<std::string, RingElement>& assignment);

/// Divide by a variable that divides every term; NotDivisible otherwise.
RingElement exact_divide_by_variable(const RingElement& poly, const std::string& name);

/// Coefficient of the monomial with the given exponent vector, as a base element.
RingElement coefficient_of(const RingElement& poly, const std::vector<unsigned>& exps);

RingElement poly_variable(const RingPtr& ring, const std::string& name);

/// Ring hom out of a polynomial ring: a map on the base plus variable images.
RingHom polynomial_hom(const RingPtr& source, const RingHom& base_map,
                       const std::vector<RingElement>& variable_images);

/// Value-preserving map between two localizations of one base ring, used for
/// restriction along covers (piece -> overlap -> triple overlap).
RingHom restriction_hom(const RingPtr& source, const RingPtr& target);

/// Componentwise hom between product rings of equal length.
RingHom product_hom(const RingPtr& source, const RingPtr& target, std::vector<RingHom> parts);

} // namespace quadnorm
