#include "biperron/algebraic.hpp"

#include "biperron/factor.hpp"

namespace biperron {

AlgebraicReal::AlgebraicReal(IntPoly minpoly, Rat lo, Rat hi)
    : minpoly_(minpoly.primitive_part()), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!(lo_ < hi_)) throw std::invalid_argument("AlgebraicReal: empty interval");
    if (!is_irreducible(minpoly_))
        throw std::invalid_argument("AlgebraicReal: reducible minimal polynomial");
    if (minpoly_.sign_at(lo_) == 0 || minpoly_.sign_at(hi_) == 0)
        throw std::invalid_argument("AlgebraicReal: endpoint is a root");
    if (sturm_count(minpoly_, lo_, hi_) != 1)
        throw std::invalid_argument("AlgebraicReal: interval does not isolate one root");
}

AlgebraicReal AlgebraicReal::from_rational(const Rat& x) {
    IntPoly m(std::vector<Int>{-x.get_num(), x.get_den()});
    AlgebraicReal a(m, x - 1, x + 1);
    return a;
}

AlgebraicReal AlgebraicReal::select_root(const IntPoly& factor_of, const Rat& lo, const Rat& hi) {
    if (factor_of.is_zero()) throw std::invalid_argument("select_root: zero polynomial");
    IntPoly sf = factor_of.squarefree_part();
    if (sf.sign_at(lo) == 0 || sf.sign_at(hi) == 0 || sturm_count(sf, lo, hi) != 1)
        throw std::invalid_argument("select_root: interval must isolate one root, non-root endpoints");
    auto fac = factor(factor_of);
    for (const auto& [f, mult] : fac.factors) {
        if (f.degree() < 1) continue;
        if (f.sign_at(lo) != 0 && f.sign_at(hi) != 0 && sturm_count(f, lo, hi) == 1)
            return AlgebraicReal(f, lo, hi);
    }
    throw std::logic_error("select_root: no irreducible factor holds the root");
}

Rat AlgebraicReal::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value: degree > 1");
    return make_rat(-minpoly_.coeff(0), minpoly_.coeff(1));
}

void AlgebraicReal::refine() const {
    if (is_rational()) {
        Rat v = rational_value();
        Rat w = (hi_ - lo_) / 4;
        lo_ = v - w;
        hi_ = v + w;
        return;
    }
    refine_interval(minpoly_, lo_, hi_);
}

void AlgebraicReal::refine_to_width(const Rat& width) const {
    while (hi_ - lo_ > width) refine();
}

int AlgebraicReal::sign() const {
    if (is_rational()) return biperron::sign(rational_value());
    while (true) {
        if (biperron::sign(lo_) > 0) return 1;
        if (biperron::sign(hi_) < 0) return -1;
        refine();
    }
}

int AlgebraicReal::compare(const AlgebraicReal& o) const {
    // Distinct irreducible minimal polynomials never share a root, so
    // refinement always separates the intervals in that case.
    bool same_poly = minpoly_ == o.minpoly_;
    while (true) {
        if (hi_ <= o.lo_) return -1;  // endpoints are never roots
        if (o.hi_ <= lo_) return 1;
        if (same_poly) {
            Rat l = std::max(lo_, o.lo_), h = std::min(hi_, o.hi_);
            if (l < h && minpoly_.sign_at(l) != 0 && minpoly_.sign_at(h) != 0 &&
                sturm_count(minpoly_, l, h) == 1)
                return 0;
        }
        refine();
        o.refine();
    }
}

int AlgebraicReal::compare_rat(const Rat& x) const {
    int s = minpoly_.sign_at(x);
    if (s == 0) {
        // x is a root of the irreducible minpoly: degree 1 and equal value
        return 0;
    }
    while (true) {
        if (hi_ <= x) return -1;
        if (x <= lo_) return 1;
        refine();
    }
}

AlgebraicReal AlgebraicReal::negated() const {
    IntPoly m = minpoly_.mirrored().primitive_part();
    return AlgebraicReal(m, -hi_, -lo_);
}

AlgebraicReal AlgebraicReal::inverse() const {
    if (sign() == 0) throw std::invalid_argument("inverse of zero");
    IntPoly m = minpoly_.reversed().primitive_part();
    // establish an interval not containing 0
    while (biperron::sign(lo_) != biperron::sign(hi_)) refine();
    return AlgebraicReal(m, 1 / hi_, 1 / lo_);
}

AlgebraicReal AlgebraicReal::abs() const { return sign() >= 0 ? *this : negated(); }

int AlgebraicReal::sign_of_poly_at(const IntPoly& g) const {
    if (g.is_zero()) return 0;
    if (minpoly_.divides(g)) return 0;
    Rat glo, ghi;
    while (true) {
        g.eval_interval(lo_, hi_, glo, ghi);
        if (biperron::sign(glo) > 0) return 1;
        if (biperron::sign(ghi) < 0) return -1;
        refine();
    }
}

std::string AlgebraicReal::decimal(int digits) const {
    Rat width(1);
    for (int i = 0; i < digits + 4; ++i) width /= 10;
    // scale the precision to the magnitude so that significant digits hold
    Rat mag = std::max(Rat(abs(lo_)), Rat(abs(hi_)));
    if (mag > 1) width *= mag;
    refine_to_width(width);
    return decimal_string((lo_ + hi_) / 2, digits);
}

double AlgebraicReal::to_double() const {
    refine_to_width(make_rat(1, Int(1) << 60));
    return biperron::to_double((lo_ + hi_) / 2);
}

}  // namespace biperron
