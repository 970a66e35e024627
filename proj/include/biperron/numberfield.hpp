#ifndef BIPERRON_NUMBERFIELD_HPP
#define BIPERRON_NUMBERFIELD_HPP

#include <vector>

#include "biperron/algebraic.hpp"
#include "biperron/poly.hpp"

namespace biperron {

/// Arithmetic in Q(alpha) = Q[x]/(m) for an irreducible m (any leading
/// coefficient; reduction uses the monic rational image). Elements are
/// coefficient vectors of length deg m (ascending powers of alpha).
class NumberField {
  public:
    using Elem = std::vector<Rat>;

    explicit NumberField(IntPoly minpoly);

    const IntPoly& modulus() const { return m_; }
    int degree() const { return n_; }

    Elem zero() const { return Elem(n_, Rat(0)); }
    Elem one() const;
    Elem from_rat(const Rat& c) const;
    Elem generator() const;  // alpha
    Elem from_poly(const RatPoly& p) const;

    bool is_zero(const Elem& a) const;
    bool is_rational(const Elem& a) const;
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem mul_rat(const Elem& a, const Rat& c) const;
    Elem inv(const Elem& a) const;  // throws on zero
    Elem div(const Elem& a, const Elem& b) const;
    Elem pow(const Elem& a, unsigned e) const;

    /// alpha^k + alpha^(-k); requires m(0) != 0
    Elem power_trace(unsigned k) const;

    /// Minimal polynomial of the element over Q: primitive, irreducible,
    /// positive leading coefficient. Found as the first linear dependency
    /// among 1, a, a^2, ...
    IntPoly minpoly_of(const Elem& a) const;

    /// Exact sign of a evaluated at the real root alpha (alpha must be a
    /// root of modulus()).
    int sign_at(const Elem& a, const AlgebraicReal& alpha) const;

    /// Rational interval containing the value of a at alpha, of width at
    /// most `width`.
    std::pair<Rat, Rat> enclosure(const Elem& a, const AlgebraicReal& alpha, const Rat& width) const;

  private:
    Elem reduce(std::vector<Rat> raw) const;  // length may exceed n_
    IntPoly m_;
    int n_;
    std::vector<Rat> monic_;  // monic image of m, ascending, length n_+1
};

/// Polynomials over a number field, just enough for gcd degree queries.
using NFPoly = std::vector<NumberField::Elem>;  // ascending coefficients

int nf_poly_degree(const NFPoly& f);
NFPoly nf_poly_gcd(const NumberField& K, NFPoly a, NFPoly b);

/// deg gcd( p(t), t^n p(c/t) ) over Q(alpha) where c is the field element
/// `scale` and n = deg p: the number of roots z of p (squarefree) such
/// that scale/z is also a root. Exact modulus-equality detector.
int companion_gcd_degree(const NumberField& K, const IntPoly& p, const NumberField::Elem& scale);

}  // namespace biperron

#endif
