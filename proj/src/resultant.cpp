#include "biperron/resultant.hpp"

#include "biperron/matrix.hpp"

namespace biperron {

namespace {

/// Determinant of the (n+m) x (n+m) Sylvester-style matrix of p (degree n)
/// and the formal-degree-m polynomial with integer coefficients qc
/// (ascending). This is the resultant when deg q == m; interpolation over
/// sample points relies on the fixed formal size.
Int sylvester_det(const IntPoly& p, const std::vector<Int>& qc) {
    int n = p.degree();
    int m = static_cast<int>(qc.size()) - 1;
    if (n < 1 || m < 1) throw std::invalid_argument("sylvester_det: degenerate degrees");
    int size = n + m;
    IntMat s(size, size);
    // m rows of p coefficients (descending), shifted
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) s(r, r + i) = p.coeff(n - i);
    // n rows of q coefficients (descending), shifted
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) s(m + r, r + i) = qc[m - i];
    return det_bareiss(std::move(s));
}

}  // namespace

IntPoly resultant_eliminate(const IntPoly& p, const std::vector<IntPoly>& q_z_coeffs) {
    if (p.is_zero()) throw std::invalid_argument("resultant_eliminate: zero p");
    int m = static_cast<int>(q_z_coeffs.size()) - 1;
    if (m < 1) throw std::invalid_argument("resultant_eliminate: q must have positive z-degree");
    int n = p.degree();
    if (n < 1) {
        // Res_z(c, q) = c^deg_z(q)
        IntPoly r = IntPoly::constant(1);
        Int c = p.leading();
        for (int i = 0; i < m; ++i) r = r * c;
        return r;
    }
    int ds = 0;
    for (const auto& qc : q_z_coeffs) ds = std::max(ds, qc.degree());
    int bound = n * ds;  // s-degree of the Sylvester determinant
    // sample points 0, 1, -1, 2, -2, ...
    std::vector<Rat> xs;
    std::vector<Rat> vals;
    std::vector<Int> qc(q_z_coeffs.size());
    for (int i = 0; i <= bound; ++i) {
        long x = (i + 1) / 2 * ((i % 2) ? 1 : -1);  // 0, 1, -1, 2, -2, ...
        for (size_t j = 0; j < q_z_coeffs.size(); ++j) qc[j] = q_z_coeffs[j].eval(Int(x));
        xs.emplace_back(x);
        vals.emplace_back(sylvester_det(p, qc));
    }
    // Newton interpolation (exact over Q)
    std::vector<Rat> divdiff = vals;
    for (int level = 1; level <= bound; ++level)
        for (int i = bound; i >= level; --i)
            divdiff[i] = (divdiff[i] - divdiff[i - 1]) / (xs[i] - xs[i - level]);
    RatPoly acc;  // result accumulated from the top Newton coefficient
    for (int i = bound; i >= 0; --i) {
        RatPoly lin(std::vector<Rat>{-xs[i], Rat(1)});
        acc = acc * lin + RatPoly(std::vector<Rat>{divdiff[i]});
    }
    if (!acc.is_integral())
        throw std::logic_error("resultant_eliminate: non-integral interpolation");
    return acc.to_int();
}

IntPoly IntPoly::trace_poly() const {
    if (is_zero() || sign(constant_term()) == 0)
        throw std::invalid_argument("trace_poly: zero constant term");
    if (degree() == 0) return IntPoly::constant(1);
    // Res_z(p(z), z^2 - s z + 1)
    std::vector<IntPoly> q{IntPoly::constant(1), IntPoly{0, -1}, IntPoly::constant(1)};
    return resultant_eliminate(*this, q).primitive_part();
}

IntPoly roots_power_poly(const IntPoly& p, int k) {
    if (p.is_zero()) throw std::invalid_argument("roots_power_poly: zero polynomial");
    if (k < 1) throw std::invalid_argument("roots_power_poly: k must be positive");
    if (p.degree() == 0) return IntPoly::constant(1);
    if (k == 1) return p.primitive_part();
    // Res_z(p(z), s - z^k)
    std::vector<IntPoly> q(k + 1);
    q[0] = IntPoly{0, 1};  // s
    q[k] = IntPoly::constant(-1);
    for (int i = 1; i < k; ++i) q[i] = IntPoly();
    return resultant_eliminate(p, q).primitive_part();
}

IntPoly roots_power_trace_poly(const IntPoly& p, int k) {
    if (p.is_zero() || sign(p.constant_term()) == 0)
        throw std::invalid_argument("roots_power_trace_poly: zero constant term");
    if (k < 1) throw std::invalid_argument("roots_power_trace_poly: k must be positive");
    if (p.degree() == 0) return IntPoly::constant(1);
    // Res_z(p(z), z^(2k) - s z^k + 1)
    std::vector<IntPoly> q(2 * k + 1);
    q[0] = IntPoly::constant(1);
    q[k] = IntPoly{0, -1};
    q[2 * k] = IntPoly::constant(1);
    return resultant_eliminate(p, q).primitive_part();
}

}  // namespace biperron
