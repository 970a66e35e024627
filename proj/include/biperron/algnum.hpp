#ifndef BIPERRON_ALGNUM_HPP
#define BIPERRON_ALGNUM_HPP

#include <map>
#include <optional>

#include "biperron/algebraic.hpp"
#include "biperron/poly.hpp"

namespace biperron {

/// Exact classification of the algebraic number defined by an irreducible
/// polynomial (flags all decided exactly; see classify()).
struct Classification {
    bool is_unit = false;
    bool is_perron = false;
    bool is_bi_perron = false;
    bool is_salem = false;
    bool is_reciprocal = false;
    bool has_minus_inverse_conjugate = false;
    bool conjugates_in_s1_union_r = false;
    bool totally_real = false;
    std::optional<AlgebraicReal> leading_root;  // largest real root, if any
};

/// Classify the (necessarily irreducible) input polynomial; throws
/// std::invalid_argument on reducible input. All flags exact:
///  - unit: monic with constant term +-1
///  - Perron: monic, real root > 1 strictly dominating all other moduli
///  - bi-Perron: unit, real root lambda > 1, all other conjugate moduli in
///    the open interval (1/lambda, lambda) except at most one of
///    +-1/lambda (both present disqualifies)
///  - Salem: reciprocal bi-Perron whose conjugates other than lambda and
///    1/lambda all lie exactly on the unit circle (at least one of them)
///  - conjugates_in_s1_union_r: squarefree trace polynomial totally real
Classification classify(const IntPoly& p);

/// Minimal polynomial of lambda^k for the Perron leading root lambda of
/// the irreducible p: resultant elimination, squarefree reduction, and
/// irreducible-factor selection verified by exact evaluation at lambda^k.
/// A degree drop signals a non-Perron input (contract violation).
IntPoly minimal_poly_power(const IntPoly& p, int k);

enum class ParityCase {
    OddDegree,
    EvenNoMinusInverse,
    EvenWithMinusInverse,
};

struct TraceFieldReport {
    int k_range = 0;
    std::map<int, int> degrees;  // k -> deg minpoly(lambda^k + lambda^-k)
    ParityCase parity_case = ParityCase::OddDegree;
};

/// Degrees of the trace fields Q(lambda^k + lambda^-k) for k <= k_max,
/// with the degree identities of the parity case asserted (violation is a
/// library defect and throws std::logic_error).
TraceFieldReport trace_field_report(const IntPoly& p, int k_max);

/// Minimal polynomial of lambda^k + lambda^-k (lambda = Perron leading
/// root of irreducible p).
IntPoly trace_power_minpoly(const IntPoly& p, int k);

const char* parity_case_name(ParityCase c);

}  // namespace biperron

#endif
