#pragma once

// Test-only oracles, independent of the library's production paths.

#include "quadnorm/algebra.hpp"

namespace quadnorm::oracles {

/// Recursive cofactor expansion along the first row. Exponential, test-only.
inline RingElement laplace_det(const Matrix& m) {
    const size_t n = m.rows();
    if (n != m.cols()) fail(Errc::NotSquare, "laplace_det needs a square matrix");
    if (n == 0) return m.ring()->one();
    if (n == 1) return m.at(0, 0);
    RingElement acc = m.ring()->zero();
    for (size_t j = 0; j < n; ++j) {
        Matrix minor = Matrix::zero(m.ring(), n - 1, n - 1);
        for (size_t r = 1; r < n; ++r) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.set(r - 1, cc++, m.at(r, c));
            }
        }
        RingElement term = mul(m.at(0, j), laplace_det(minor));
        acc = (j % 2 == 0) ? add(acc, term) : sub(acc, term);
    }
    return acc;
}

/// Multiply two algebra elements by direct structure-constant expansion,
/// without going through the AlgebraRing multiplication.
inline RingElement expansion_mul(const AlgebraPtr& alg, const RingElement& x,
                                 const RingElement& y) {
    const size_t n = alg->rank();
    const auto& xs = x.as_coords();
    const auto& ys = y.as_coords();
    std::vector<RingElement> out(n, alg->base()->zero());
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < n; ++k)
                out[k] = add(out[k], mul(mul(xs[i], ys[j]), alg->sc(i, j, k)));
    return algebra_element(alg, out);
}

/// Evaluate a polynomial at a full assignment by direct term expansion.
inline RingElement evaluation_oracle(const RingElement& poly,
                                     const std::vector<RingElement>& values) {
    const auto& terms = poly.as_poly().terms;
    const RingPtr base = values.empty() ? poly.ring() : values[0].ring();
    RingElement acc = base->zero();
    for (const auto& t : terms) {
        RingElement term = t.coeff;
        for (size_t i = 0; i < values.size(); ++i)
            for (unsigned e = 0; e < t.exps[i]; ++e) term = mul(term, values[i]);
        acc = add(acc, term);
    }
    return acc;
}

} // namespace quadnorm::oracles
