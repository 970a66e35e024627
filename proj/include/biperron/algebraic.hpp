#ifndef BIPERRON_ALGEBRAIC_HPP
#define BIPERRON_ALGEBRAIC_HPP

#include <optional>
#include <string>

#include "biperron/poly.hpp"
#include "biperron/sturm.hpp"

namespace biperron {

/// A real algebraic number: irreducible primitive minimal polynomial with
/// positive leading coefficient plus an isolating rational interval.
/// Values are immutable; refinement returns tightened copies of the
/// interval state via a mutable cache (safe under the usual read-sharing).
class AlgebraicReal {
  public:
    /// Validates that minpoly is irreducible and has exactly one root in
    /// (lo, hi) with nonzero endpoint values.
    AlgebraicReal(IntPoly minpoly, Rat lo, Rat hi);

    static AlgebraicReal from_rational(const Rat& x);
    static AlgebraicReal from_int(long v) { return from_rational(Rat(v)); }

    /// The unique real root of `factor_of` (need not be irreducible) in the
    /// isolating interval; picks the irreducible factor vanishing there.
    static AlgebraicReal select_root(const IntPoly& factor_of, const Rat& lo, const Rat& hi);

    const IntPoly& minpoly() const { return minpoly_; }
    int degree() const { return minpoly_.degree(); }
    Rat lower() const { return lo_; }
    Rat upper() const { return hi_; }
    bool is_rational() const { return minpoly_.degree() == 1; }
    Rat rational_value() const;  // requires is_rational()

    void refine() const;  // halve the isolating interval
    void refine_to_width(const Rat& width) const;

    int sign() const;
    int compare(const AlgebraicReal& o) const;
    bool operator==(const AlgebraicReal& o) const { return compare(o) == 0; }
    bool operator<(const AlgebraicReal& o) const { return compare(o) < 0; }
    int compare_rat(const Rat& x) const;

    AlgebraicReal negated() const;
    AlgebraicReal inverse() const;  // requires nonzero
    AlgebraicReal abs() const;

    /// Exact sign of g(alpha): zero iff minpoly divides g.
    int sign_of_poly_at(const IntPoly& g) const;

    std::string decimal(int digits = 12) const;
    double to_double() const;

  private:
    IntPoly minpoly_;
    mutable Rat lo_, hi_;
};

}  // namespace biperron

#endif
