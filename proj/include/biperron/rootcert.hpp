#ifndef BIPERRON_ROOTCERT_HPP
#define BIPERRON_ROOTCERT_HPP

#include <vector>

#include "biperron/poly.hpp"
#include "biperron/sturm.hpp"

namespace biperron {

/// A certified container for one nonreal root of a squarefree polynomial:
/// a disk with exact rational center and radius bound that is proven
/// (Smith's a-posteriori bound, evaluated in exact rational arithmetic) to
/// contain exactly one root, disjoint from the real axis.
struct ComplexRootDisk {
    Rat center_re, center_im;  // im > 0 representative; the conjugate is implied
    Rat radius;                // certified upper bound
    Rat modulus_lo, modulus_hi;
};

/// Certified picture of all roots of a squarefree polynomial: exact real
/// isolating intervals plus one disk per conjugate pair of nonreal roots.
/// refine() doubles the working precision and recertifies; throws
/// PrecisionExhausted past the 4096-bit cap.
class RootPicture {
  public:
    explicit RootPicture(IntPoly squarefree, int start_bits = 96);

    const IntPoly& polynomial() const { return p_; }
    const std::vector<std::pair<Rat, Rat>>& real_intervals() const { return real_; }
    const std::vector<ComplexRootDisk>& complex_disks() const { return disks_; }
    int precision_bits() const { return bits_; }

    void refine();
    void refine_reals_to_width(const Rat& width);

  private:
    void certify();
    IntPoly p_;
    int bits_;
    std::vector<std::pair<Rat, Rat>> real_;
    std::vector<ComplexRootDisk> disks_;
    std::vector<std::pair<double, double>> seeds_;  // warm start for iteration
};

/// The isolate-everything operation: regions for all roots of an arbitrary
/// nonzero polynomial with multiplicities via squarefree decomposition.
struct RootRegion {
    bool real = false;
    int multiplicity = 1;
    // real: isolating interval [lo,hi]; complex: disk data (conjugate pair
    // counted once, `multiplicity` applies to each of the pair)
    Rat lo, hi;
    ComplexRootDisk disk;
    Rat modulus_lo, modulus_hi;
};

std::vector<RootRegion> isolate_all_roots(const IntPoly& p, int precision_bits = 96);

}  // namespace biperron

#endif
