#ifndef BIPERRON_STURM_HPP
#define BIPERRON_STURM_HPP

#include <vector>

#include "biperron/poly.hpp"

namespace biperron {

/// Sturm chain of a squarefree integer polynomial; each member is kept as
/// a primitive integer polynomial (positive scaling preserves all signs).
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& squarefree);

    /// number of distinct real roots in the open interval (lo, hi);
    /// requires p(lo) != 0 and p(hi) != 0
    int count_open(const Rat& lo, const Rat& hi) const;
    /// number of real roots in [lo, hi] (endpoint roots included)
    int count_closed(const Rat& lo, const Rat& hi) const;
    int count_all() const;
    int count_below(const Rat& x) const;  // roots in (-inf, x)
    int count_above(const Rat& x) const;  // roots in (x, +inf)

    const IntPoly& polynomial() const { return p_; }

  private:
    int variations_at(const Rat& x) const;
    int variations_neg_inf() const;
    int variations_pos_inf() const;
    IntPoly p_;
    std::vector<IntPoly> chain_;
};

/// Exact real-root count of a squarefree polynomial in the open interval;
/// throws if an endpoint is a root (callers perturb rationally).
int sturm_count(const IntPoly& squarefree, const Rat& lo, const Rat& hi);
/// count over the whole real line
int sturm_count_all(const IntPoly& squarefree);

/// Isolating intervals (lo, hi) for every real root of a squarefree
/// polynomial: disjoint open intervals with rational endpoints that are
/// not roots, exactly one root each, sorted ascending.
std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& squarefree);

/// Halve an isolating interval of `p` (squarefree) containing one root.
void refine_interval(const IntPoly& p, Rat& lo, Rat& hi);

/// True iff every root of p is real and lies in [lo, hi] (multiplicities
/// via the squarefree part; p nonzero).
bool all_roots_in_closed(const IntPoly& p, const Rat& lo, const Rat& hi);

}  // namespace biperron

#endif
