#pragma once

#include <gmpxx.h>

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "quadnorm/errors.hpp"

namespace quadnorm {

class Ring;
class RingElement;
class RingHom;
using RingPtr = std::shared_ptr<const Ring>;

struct PolyPayload;
struct TuplePayload;
struct CoordsPayload;

enum class RingKind { Integers, Modular, Polynomial, Product, Localized, AlgebraRing };

const char* ring_kind_name(RingKind kind) noexcept;

/// An element of some ring, held as a canonical payload plus the ring it
/// belongs to. Values are immutable once constructed and cheap to copy.
class RingElement {
public:
    using Payload = std::variant<mpz_class,
                                 mpq_class,
                                 std::shared_ptr<const PolyPayload>,
                                 std::shared_ptr<const TuplePayload>,
                                 std::shared_ptr<const CoordsPayload>>;

    RingElement(RingPtr ring, Payload payload);

    const RingPtr& ring() const noexcept { return ring_; }
    const Payload& payload() const noexcept { return payload_; }

    const mpz_class& as_int() const;
    const mpq_class& as_fraction() const;
    const PolyPayload& as_poly() const;
    const std::vector<RingElement>& as_tuple() const;
    const std::vector<RingElement>& as_coords() const;

    bool is_zero() const;
    bool is_one() const;

private:
    RingPtr ring_;
    Payload payload_;
};

bool operator==(const RingElement& x, const RingElement& y);
inline bool operator!=(const RingElement& x, const RingElement& y) { return !(x == y); }

RingElement operator+(const RingElement& x, const RingElement& y);
RingElement operator*(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x, const RingElement& y);
RingElement operator-(const RingElement& x);

std::string to_string(const RingElement& x);
std::ostream& operator<<(std::ostream& os, const RingElement& x);

/// A ring homomorphism carried as a total function on elements. The factories
/// on the concrete ring types are responsible for only building genuine
/// homomorphisms; the test suite spot-checks preservation of 0, 1, + and *.
class RingHom {
public:
    using Action = std::function<RingElement(const RingElement&)>;

    RingHom(RingPtr source, RingPtr target, Action action);

    const RingPtr& source() const noexcept { return source_; }
    const RingPtr& target() const noexcept { return target_; }

    RingElement operator()(const RingElement& x) const;

    static RingHom identity(RingPtr ring);
    static RingHom compose(const RingHom& outer, const RingHom& inner);
    /// The unique map from the integers, determined by 1.
    static RingHom from_integers(RingPtr target);

private:
    RingPtr source_;
    RingPtr target_;
    Action action_;
};

struct Localization {
    RingPtr ring;
    RingHom map;
};

class Ring : public std::enable_shared_from_this<Ring> {
public:
    virtual ~Ring() = default;

    virtual RingKind kind() const noexcept = 0;
    virtual bool same_as(const Ring& other) const = 0;
    virtual std::string describe() const = 0;

    virtual RingElement zero() const = 0;
    virtual RingElement one() const = 0;
    virtual RingElement from_int(const mpz_class& value) const = 0;

    virtual RingElement add(const RingElement& x, const RingElement& y) const = 0;
    virtual RingElement mul(const RingElement& x, const RingElement& y) const = 0;
    virtual RingElement neg(const RingElement& x) const = 0;

    virtual bool is_unit(const RingElement& x) const = 0;
    virtual std::optional<RingElement> try_inverse(const RingElement& x) const = 0;
    virtual bool is_nilpotent(const RingElement& x) const = 0;

    /// Invert `a`. The default implementation only knows how to invert units
    /// (which is a no-op); kinds with a genuine localization capability
    /// override this. Throws LocalizationUnsupported otherwise.
    virtual Localization localize(const RingElement& a) const;

    /// All elements of a finite ring, in a fixed order; nullopt when the ring
    /// is infinite or enumeration is not implemented.
    virtual std::optional<std::vector<RingElement>> enumerate() const;

protected:
    RingPtr self() const { return shared_from_this(); }
};

struct PolyPayload {
    struct Term {
        std::vector<unsigned> exps;
        RingElement coeff;
    };
    // Sorted descending in graded-lex order, no zero coefficients.
    std::vector<Term> terms;
};

struct TuplePayload {
    std::vector<RingElement> items;
};

struct CoordsPayload {
    std::vector<RingElement> coords;
};

bool same_ring(const RingPtr& a, const RingPtr& b);
void require_same_ring(const RingElement& x, const RingElement& y);

RingElement zero(const RingPtr& ring);
RingElement one(const RingPtr& ring);
RingElement from_int(const RingPtr& ring, const mpz_class& value);
RingElement from_int(const RingPtr& ring, long value);

RingElement add(const RingElement& x, const RingElement& y);
RingElement mul(const RingElement& x, const RingElement& y);
RingElement sub(const RingElement& x, const RingElement& y);
RingElement neg(const RingElement& x);

bool is_unit(const RingElement& x);
RingElement inverse(const RingElement& x);
bool is_nilpotent(const RingElement& x);

Localization localize(const RingPtr& ring, const RingElement& a);

// gcd helper on GMP integers (always nonnegative).
mpz_class zgcd(const mpz_class& a, const mpz_class& b);
mpz_class zpow(const mpz_class& base, unsigned long exp);

} // namespace quadnorm
