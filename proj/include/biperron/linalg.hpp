#ifndef BIPERRON_LINALG_HPP
#define BIPERRON_LINALG_HPP

#include <optional>
#include <vector>

#include "biperron/algebraic.hpp"
#include "biperron/matrix.hpp"

namespace biperron {

/// Spectral radius (maximum root modulus of the characteristic polynomial)
/// as an exact algebraic real. Real/complex modulus ties are resolved
/// exactly (companion gcd tests over the relevant number field); a
/// strictly dominant conjugate pair is handled through the composed
/// product of the characteristic polynomial with itself.
AlgebraicReal spectral_radius(const IntMat& m);
AlgebraicReal spectral_radius(const RatMat& m);

/// True iff minpoly(a) divides charpoly(m) exactly.
bool is_eigenvalue(const IntMat& m, const AlgebraicReal& a);
bool is_eigenvalue(const RatMat& m, const AlgebraicReal& a);

struct EigenvectorCertificate {
    bool strictly_positive = false;
    /// coordinates normalized so the first nonzero coordinate is 1
    std::vector<std::pair<Rat, Rat>> coordinate_intervals;  // certified enclosures
    std::vector<int> signs;                                 // exact sign per coordinate
};

/// Exact eigenvector computation in Q(eigenvalue) for a symmetric rational
/// matrix and a simple eigenvalue; returns a strict-positivity verdict
/// with certified sign enclosures. Throws if the eigenvalue is not simple.
EigenvectorCertificate certified_positive_eigenvector(const RatMat& q, const AlgebraicReal& eigenvalue);

}  // namespace biperron

#endif
