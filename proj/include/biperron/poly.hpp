#ifndef BIPERRON_POLY_HPP
#define BIPERRON_POLY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "biperron/numeric.hpp"

namespace biperron {

class RatPoly;

/// Exact integer polynomial. Coefficients are stored ascending (constant
/// term first); the zero polynomial is the empty vector. The text format,
/// like every CLI/file format here, lists coefficients in descending
/// degree order ("1,-1,-1" is t^2 - t - 1).
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> ascending);
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Int c);
    static IntPoly variable();  // t
    static IntPoly from_descending(const std::vector<Int>& c);
    static IntPoly parse(const std::string& comma_separated_descending);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Int& coeff(int i) const;  // zero outside range
    const Int& leading() const;
    const Int& constant_term() const;
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    const std::vector<Int>& ascending() const { return c_; }
    std::vector<Int> descending() const;
    std::string to_string() const;  // descending, comma separated

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }
    /// lexicographic on (degree, descending coefficients); canonical order
    /// used wherever a deterministic tie-break over polynomials is needed
    bool operator<(const IntPoly& o) const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator*(const Int& k) const;
    IntPoly pow(unsigned e) const;
    IntPoly shifted_up(int k) const;  // * t^k

    IntPoly derivative() const;
    Int content() const;             // gcd of coefficients, >= 0 (0 for zero poly)
    IntPoly primitive_part() const;  // content removed, leading coefficient > 0
    Int height() const;              // max |coefficient|

    Int eval(const Int& x) const;
    Rat eval(const Rat& x) const;
    /// sign of p(a/b) without building the rational value
    int sign_at(const Rat& x) const;
    int sign_at_pos_inf() const;
    int sign_at_neg_inf() const;
    /// interval extension: p([lo,hi]) subset [out_lo, out_hi]
    void eval_interval(const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi) const;

    /// t^deg * p(1/t) (coefficient reversal); p(0) != 0 keeps the degree
    IntPoly reversed() const;
    /// p(-t)
    IntPoly mirrored() const;
    /// reversed() == +-p  (roots closed under z -> 1/z)
    bool is_reciprocal() const;
    /// primitive(t^deg p(-1/t)) == +-p  (roots closed under z -> -1/z)
    bool is_minus_reciprocal() const;
    /// p(-t) == +-p (roots closed under z -> -z)
    bool is_mirror_symmetric() const;

    /// Exact division: q with a = q * this over Z, if it exists.
    std::optional<IntPoly> exact_divide(const IntPoly& a) const;
    /// True iff this divides a over Q (primitive parts divide over Z).
    bool divides(const IntPoly& a) const;

    /// Pseudo-division: lc(b)^(deg a - deg b + 1) * a = q*b + r, deg r < deg b.
    static void pseudo_divrem(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r);

    /// Primitive gcd with positive leading coefficient.
    static IntPoly gcd(const IntPoly& a, const IntPoly& b);

    /// Product of distinct irreducible factors, primitive, positive leading.
    IntPoly squarefree_part() const;
    /// Yun decomposition: list of (factor, multiplicity), factors primitive
    /// positive-leading squarefree and pairwise coprime; product of
    /// factor^multiplicity equals +-primitive_part().
    std::vector<std::pair<IntPoly, int>> squarefree_decomposition() const;

    /// Exact square root if this == g^2 for integer g (leading > 0).
    std::optional<IntPoly> exact_sqrt() const;

    /// Roots z -> z + 1/z, multiplicities kept (degree preserved).
    /// Requires p(0) != 0. Result primitive with positive leading coefficient.
    IntPoly trace_poly() const;
    /// f -> t^deg(f) * f(t + 1/t); degree doubles, result is reciprocal.
    IntPoly inverse_trace() const;
    /// For reciprocal p of even degree 2m: the unique G of degree m with
    /// t^m G(t + 1/t) == p. Throws if p is not reciprocal of even degree.
    IntPoly symmetric_decompose() const;

  private:
    void trim();
    std::vector<Int> c_;
};

/// Rational-coefficient polynomial; the minimal surface needed for exact
/// charpoly handling and number-field elimination.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> ascending);
    explicit RatPoly(const IntPoly& p);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& coeff(int i) const;
    const Rat& leading() const;
    const std::vector<Rat>& ascending() const { return c_; }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }
    RatPoly operator-() const;
    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& k) const;

    Rat eval(const Rat& x) const;
    RatPoly monic() const;

    static void divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r);
    bool divides(const RatPoly& a) const;

    /// primitive integer polynomial with positive leading (same roots)
    IntPoly clear_denominators() const;
    /// true iff all coefficients are integers
    bool is_integral() const;
    IntPoly to_int() const;  // requires is_integral()

  private:
    void trim();
    std::vector<Rat> c_;
};

}  // namespace biperron

#endif
