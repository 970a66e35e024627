#ifndef BIPERRON_NUMERIC_HPP
#define BIPERRON_NUMERIC_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace biperron {

using Int = mpz_class;
using Rat = mpq_class;

/// Raised when a certified predicate fails to resolve within the
/// refinement budget (hard cap 4096 bits).
class PrecisionExhausted : public std::runtime_error {
  public:
    explicit PrecisionExhausted(const std::string& what)
        : std::runtime_error(what) {}
};

constexpr int kPrecisionCapBits = 4096;

inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }
inline int sign(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }

inline Rat make_rat(Int num, Int den) {
    if (sign(den) == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

/// floor(sqrt(n)) for n >= 0.
Int isqrt_floor(const Int& n);

/// Rational enclosure of sqrt(q), q >= 0, accurate to about `bits`
/// fractional bits: lo <= sqrt(q) <= hi, hi - lo <= 2^-bits * max(1, sqrt(q)).
void sqrt_enclosure(const Rat& q, int bits, Rat& lo, Rat& hi);

/// "p/q" (or just "p" when q == 1).
std::string rat_to_string(const Rat& x);
Rat rat_from_string(const std::string& s);

/// Decimal approximation with `digits` significant digits, round half away
/// from zero. Deterministic, exact integer arithmetic only.
std::string decimal_string(const Rat& x, int digits);

double to_double(const Rat& x);

}  // namespace biperron

#endif
