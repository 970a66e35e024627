#ifndef BIPERRON_FACTOR_HPP
#define BIPERRON_FACTOR_HPP

#include <utility>
#include <vector>

#include "biperron/poly.hpp"

namespace biperron {

/// p = sign * content * prod factor_i ^ mult_i, each factor irreducible
/// over Q, primitive with positive leading coefficient; factors sorted in
/// canonical order. Deterministic (fixed prime selection, seeded split).
struct Factorization {
    int sgn = 1;
    Int content = 1;
    std::vector<std::pair<IntPoly, int>> factors;
};

Factorization factor(const IntPoly& p);

/// Q-irreducibility of the primitive part (degree >= 1).
bool is_irreducible(const IntPoly& p);

}  // namespace biperron

#endif
