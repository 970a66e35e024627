#ifndef BIPERRON_RESULTANT_HPP
#define BIPERRON_RESULTANT_HPP

#include <vector>

#include "biperron/poly.hpp"

namespace biperron {

/// Res_z(p(z), q(z, s)) as an exact integer polynomial in s.
/// `q_z_coeffs` lists the coefficients of q in z, ascending, each an
/// IntPoly in s; the formal z-degree is q_z_coeffs.size() - 1 (the
/// Sylvester matrix keeps this size even where the leading coefficient
/// vanishes at a sample point). Computed by evaluation/interpolation:
/// integer Sylvester determinants at sample points, exact Newton
/// interpolation, integrality asserted.
IntPoly resultant_eliminate(const IntPoly& p, const std::vector<IntPoly>& q_z_coeffs);

/// Polynomial with roots z^k over roots z of p (multiplicity kept):
/// +-Res_z(p(z), s - z^k), normalized primitive positive-leading.
IntPoly roots_power_poly(const IntPoly& p, int k);

/// Polynomial with roots z^k + z^-k over roots z of p; requires p(0) != 0.
IntPoly roots_power_trace_poly(const IntPoly& p, int k);

}  // namespace biperron

#endif
