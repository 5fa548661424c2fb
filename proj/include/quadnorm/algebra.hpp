#pragma once

#include "quadnorm/matrix.hpp"
#include "quadnorm/rings.hpp"

namespace quadnorm {

class FreeRankNAlgebra;
using AlgebraPtr = std::shared_ptr<const FreeRankNAlgebra>;

/// A free rank-n algebra over a base ring, presented by structure constants
/// on a chosen basis theta_1..theta_n:
///     theta_i * theta_j = sum_k sc(i,j,k) * theta_k
/// together with the coordinates of 1.
class FreeRankNAlgebra {
public:
    const RingPtr& base() const noexcept { return base_; }
    size_t rank() const noexcept { return rank_; }
    const RingElement& sc(size_t i, size_t j, size_t k) const {
        return structure_[(i * rank_ + j) * rank_ + k];
    }
    const std::vector<RingElement>& structure() const noexcept { return structure_; }
    const std::vector<RingElement>& unit_coords() const noexcept { return unit_; }

    bool same_as(const FreeRankNAlgebra& other) const;
    std::string describe() const;

    std::vector<RingElement> coord_mul(const std::vector<RingElement>& x,
                                       const std::vector<RingElement>& y) const;

private:
    friend AlgebraPtr make_algebra(RingPtr, size_t, std::vector<RingElement>,
                                   std::vector<RingElement>, bool);
    FreeRankNAlgebra(RingPtr base, size_t rank, std::vector<RingElement> structure,
                     std::vector<RingElement> unit);

    RingPtr base_;
    size_t rank_;
    std::vector<RingElement> structure_; // flattened n^3, index (i*n + j)*n + k
    std::vector<RingElement> unit_;
};

/// Validates commutativity, associativity and the unit law unless `validate`
/// is false (used for homomorphic images, which inherit the laws).
AlgebraPtr make_algebra(RingPtr base, size_t rank, std::vector<RingElement> structure,
                        std::vector<RingElement> unit, bool validate = true);

/// The rank-1 algebra A itself.
AlgebraPtr trivial_algebra(const RingPtr& base);

/// A[x]/(x^n - f) on basis 1, x, ..., x^{n-1}; `power_coords` gives the
/// coordinates of x^n. Always commutative, associative and unital.
AlgebraPtr monogenic_algebra(const RingPtr& base, const std::vector<RingElement>& power_coords);

/// Block-diagonal product, rank n1 + n2, unit (1, 1).
AlgebraPtr product_algebra(const AlgebraPtr& a1, const AlgebraPtr& a2);

/// Any free rank-n algebra presented as a ring: elements are coordinate
/// vectors, arithmetic expands through the structure constants. This is the
/// one open-ended extension point of the ring abstraction.
class AlgebraRing final : public Ring {
public:
    explicit AlgebraRing(AlgebraPtr algebra);

    const AlgebraPtr& algebra() const noexcept { return algebra_; }

    RingKind kind() const noexcept override { return RingKind::AlgebraRing; }
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

    std::optional<std::vector<RingElement>> enumerate() const override;

    RingElement element(std::vector<RingElement> coords) const;

private:
    AlgebraPtr algebra_;
};

RingPtr algebra_ring(const AlgebraPtr& algebra);

/// The algebra behind an AlgebraRing; BaseMismatch if the ring is not one.
const AlgebraPtr& algebra_of(const RingPtr& ring);

RingElement algebra_element(const AlgebraPtr& algebra, std::vector<RingElement> coords);

/// Multiply an algebra element by a base-ring scalar.
RingElement scalar_mul(const RingElement& scalar, const RingElement& x);

/// Matrix of multiplication by x: mul_matrix(x) * coords(y) = coords(x*y).
Matrix mul_matrix(const RingElement& x);

/// The norm s_n: determinant of multiplication by x. A degree-n polynomial
/// law into the base ring, not a ring homomorphism.
RingElement norm_sn(const RingElement& x);

/// Trace of multiplication by x.
RingElement trace(const RingElement& x);

/// Polarized form s_{k_1,...,k_m}(x_1,...,x_m): the coefficient of
/// lam_1^{k_1}...lam_m^{k_m} in s_n(lam_1 x_1 + ... + lam_m x_m), computed
/// over base[lam_1..lam_m]. Requires sum k_i = n (PartitionMismatch).
RingElement polarized(const std::vector<std::pair<unsigned, RingElement>>& parts);

/// s_n(lam*x + y) as a raw polynomial in one fresh variable over the base.
struct SnLambdaPoly {
    RingPtr poly_ring;
    std::string variable;
    RingElement poly; // element of poly_ring
};
SnLambdaPoly sn_lambda_poly(const RingElement& x, const RingElement& y);

/// Coefficients c_k = s_{k,n-k}(x, y) of s_n(lam*x + y), k = 0..n.
std::vector<RingElement> sn_lambda_coeffs(const RingElement& x, const RingElement& y);

/// Characteristic polynomial coefficients of x, ascending in lambda:
/// result[k] = (-1)^{n-k} s_{k,n-k}(1, x); result[n] = 1.
std::vector<RingElement> char_poly_coeffs(const RingElement& x);

struct BaseChangedAlgebra {
    AlgebraPtr algebra;
    RingHom push; // AlgebraRing(source) -> AlgebraRing(result), coords entrywise
};

/// Apply a base-ring homomorphism to every structure constant; HomMismatch if
/// the hom's source is not the algebra's base.
BaseChangedAlgebra base_change(const AlgebraPtr& algebra, const RingHom& f);

/// B-over-A composed with C-over-B; basis phi_i * theta_j laid out with the
/// phi index fastest, matching the order phi_1 theta_1, phi_2 theta_1, ...
struct TowerAlgebra {
    AlgebraPtr lower;    // B over A
    AlgebraPtr upper;    // C over AlgebraRing(B)
    AlgebraPtr composed; // C over A, rank m*n

    RingElement to_composed(const RingElement& upper_element) const;
    RingElement from_composed(const RingElement& composed_element) const;
};

TowerAlgebra tower_compose(const AlgebraPtr& b_over_a, const AlgebraPtr& c_over_b);

} // namespace quadnorm
