#include "biperron/linalg.hpp"

#include <algorithm>

#include "biperron/factor.hpp"
#include "biperron/numberfield.hpp"
#include "biperron/resultant.hpp"
#include "biperron/rootcert.hpp"

namespace biperron {

namespace {

/// all roots of sf on the unit circle, decided exactly: the root set must
/// be closed under z -> 1/z (conjugation of unimodular roots) and the
/// trace polynomial totally real with values in [-2, 2]
bool all_roots_unimodular(const IntPoly& sf) {
    if (sf.degree() == 0) return true;
    if (sign(sf.constant_term()) == 0) return false;
    if (!sf.is_reciprocal()) return false;
    IntPoly tr = sf.trace_poly().squarefree_part();
    if (sturm_count_all(tr) != tr.degree()) return false;
    return all_roots_in_closed(tr, Rat(-2), Rat(2));
}

/// Largest real root of the pair-product polynomial (roots z_i * z_j over
/// all ordered pairs, including i = j) equals radius^2 exactly: every
/// product is bounded by radius^2 in modulus, and the bound is attained by
/// a real dominant root (z*z) or a dominant conjugate pair (z * conj z).
AlgebraicReal radius_via_pair_products(const IntPoly& sf) {
    int n = sf.degree();
    // q(z, x) = z^n sf(x/z): coefficient of z^(n-k) is sf_k x^k
    std::vector<IntPoly> q(n + 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<Int> c(k + 1, Int(0));
        c[k] = sf.coeff(k);
        q[n - k] = IntPoly(std::move(c));
    }
    IntPoly pairs = resultant_eliminate(sf, q).squarefree_part();
    auto ivs = isolate_real_roots(pairs);
    if (ivs.empty()) throw std::logic_error("pair products: no real root");
    AlgebraicReal rad2 = AlgebraicReal::select_root(pairs, ivs.back().first, ivs.back().second);
    if (rad2.sign() <= 0) throw std::logic_error("pair products: nonpositive radius^2");
    // minpoly of sqrt(rad2): factor of m2(x^2) at the sqrt interval
    const IntPoly& m2 = rad2.minpoly();
    std::vector<Int> comp(2 * m2.degree() + 1, Int(0));
    for (int i = 0; i <= m2.degree(); ++i) comp[2 * i] = m2.coeff(i);
    IntPoly squared(std::move(comp));
    IntPoly ssf = squared.squarefree_part();
    while (true) {
        Rat wlo, whi, tmp;
        sqrt_enclosure(std::max(Rat(0), rad2.lower()), 48, wlo, tmp);
        sqrt_enclosure(rad2.upper(), 48, tmp, whi);
        if (ssf.sign_at(wlo) != 0 && ssf.sign_at(whi) != 0 && sturm_count(ssf, wlo, whi) == 1)
            return AlgebraicReal::select_root(squared, wlo, whi);
        rad2.refine();
    }
}

AlgebraicReal radius_of_charpoly(IntPoly cp) {
    // strip zero eigenvalues
    int val = 0;
    while (val <= cp.degree() && sign(cp.coeff(val)) == 0) ++val;
    if (val > cp.degree()) throw std::logic_error("radius: zero charpoly");
    if (val > 0) {
        std::vector<Int> c(cp.ascending().begin() + val, cp.ascending().end());
        cp = IntPoly(std::move(c));
    }
    if (cp.degree() == 0) return AlgebraicReal::from_rational(Rat(0));
    IntPoly sf = cp.squarefree_part();

    // split off irreducible factors that live entirely on the unit circle
    // (the bulk of a Coxeter spectrum); they contribute radius exactly 1
    bool any_unimodular = false;
    IntPoly rest = IntPoly::constant(1);
    for (const auto& [f, mult] : factor(sf).factors) {
        if (f.degree() < 1) continue;
        if (all_roots_unimodular(f))
            any_unimodular = true;
        else
            rest = rest * f;
    }
    AlgebraicReal one = AlgebraicReal::from_rational(Rat(1));
    if (rest.degree() == 0) return one;
    sf = rest.primitive_part();

    auto real_ivs = isolate_real_roots(sf);
    std::optional<AlgebraicReal> real_cand;  // largest |real root|
    if (!real_ivs.empty()) {
        AlgebraicReal low = AlgebraicReal::select_root(sf, real_ivs.front().first, real_ivs.front().second);
        AlgebraicReal high = AlgebraicReal::select_root(sf, real_ivs.back().first, real_ivs.back().second);
        AlgebraicReal labs = low.abs(), habs = high.abs();
        real_cand = (labs.compare(habs) >= 0) ? labs : habs;
    }

    auto maybe_cap_one = [&](AlgebraicReal r) {
        if (any_unimodular && r.compare(one) < 0) return one;
        return r;
    };

    RootPicture pic(sf);
    if (pic.complex_disks().empty()) {
        if (!real_cand) throw std::logic_error("radius: no roots at all");
        return maybe_cap_one(*real_cand);
    }
    if (!real_cand) return maybe_cap_one(radius_via_pair_products(sf));

    // fast path: certify the real candidate dominates every disk, or detect
    // a disk strictly above it; fall back to the exact pair-product route
    // when neither resolves (possible exact modulus tie)
    for (int rounds = 0; rounds < 8; ++rounds) {
        bool all_below = true;
        bool some_above = false;
        for (const auto& d : pic.complex_disks()) {
            if (!(d.modulus_hi < real_cand->lower())) all_below = false;
            if (d.modulus_lo > real_cand->upper()) some_above = true;
        }
        if (all_below) return maybe_cap_one(*real_cand);
        if (some_above) break;
        real_cand->refine();
        pic.refine();
    }
    return maybe_cap_one(radius_via_pair_products(sf));
}

}  // namespace

AlgebraicReal spectral_radius(const IntMat& m) {
    if (!m.is_square()) throw std::invalid_argument("spectral_radius: not square");
    if (m.rows() == 0 || m.is_zero()) return AlgebraicReal::from_rational(Rat(0));
    return radius_of_charpoly(charpoly(m));
}

AlgebraicReal spectral_radius(const RatMat& m) {
    if (!m.is_square()) throw std::invalid_argument("spectral_radius: not square");
    if (m.rows() == 0 || m.is_zero()) return AlgebraicReal::from_rational(Rat(0));
    RatPoly cp = charpoly(m);
    // monic rational charpoly; radius comes from its primitive integer image
    return radius_of_charpoly(cp.clear_denominators());
}

bool is_eigenvalue(const IntMat& m, const AlgebraicReal& a) {
    return a.minpoly().divides(charpoly(m));
}

bool is_eigenvalue(const RatMat& m, const AlgebraicReal& a) {
    RatPoly cp = charpoly(m);
    return RatPoly(a.minpoly()).divides(cp);
}

EigenvectorCertificate certified_positive_eigenvector(const RatMat& q, const AlgebraicReal& eigenvalue) {
    if (!q.is_symmetric()) throw std::invalid_argument("eigenvector: matrix must be symmetric");
    int n = q.rows();
    IntPoly cp = charpoly(q).clear_denominators();
    const IntPoly& m = eigenvalue.minpoly();
    if (!m.divides(cp)) throw std::invalid_argument("eigenvector: not an eigenvalue");
    // simplicity: m divides cp exactly once
    auto once = m.exact_divide(cp.primitive_part());
    if (!once || m.divides(*once))
        throw std::invalid_argument("eigenvector: eigenvalue is not simple");

    NumberField K(m);
    auto alpha = K.generator();
    // kernel of (q - alpha I) over Q(alpha); dimension is 1 for a simple
    // eigenvalue of a symmetric matrix
    std::vector<std::vector<NumberField::Elem>> a(n, std::vector<NumberField::Elem>(n, K.zero()));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            a[i][j] = K.from_rat(q(i, j));
            if (i == j) a[i][j] = K.sub(a[i][j], alpha);
        }
    // Gaussian elimination with deterministic pivoting
    std::vector<int> pivot_col_of_row(n, -1);
    std::vector<bool> col_used(n, false);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (!K.is_zero(a[i][col])) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        auto inv = K.inv(a[rank][col]);
        for (int j = 0; j < n; ++j) a[rank][j] = K.mul(a[rank][j], inv);
        for (int i = 0; i < n; ++i) {
            if (i == rank || K.is_zero(a[i][col])) continue;
            auto f = a[i][col];
            for (int j = 0; j < n; ++j) a[i][j] = K.sub(a[i][j], K.mul(f, a[rank][j]));
        }
        pivot_col_of_row[rank] = col;
        col_used[col] = true;
        ++rank;
    }
    if (rank != n - 1) throw std::logic_error("eigenvector: kernel dimension != 1");
    int free_col = -1;
    for (int col = 0; col < n; ++col)
        if (!col_used[col]) {
            free_col = col;
            break;
        }
    std::vector<NumberField::Elem> v(n, K.zero());
    v[free_col] = K.one();
    for (int r = 0; r < rank; ++r) {
        int pc = pivot_col_of_row[r];
        v[pc] = K.neg(a[r][free_col]);
    }
    // normalize: first nonzero coordinate becomes 1
    int first = -1;
    for (int i = 0; i < n; ++i)
        if (!K.is_zero(v[i])) {
            first = i;
            break;
        }
    if (first < 0) throw std::logic_error("eigenvector: zero kernel vector");
    auto scale = K.inv(v[first]);
    for (auto& c : v) c = K.mul(c, scale);

    EigenvectorCertificate cert;
    cert.strictly_positive = true;
    Rat width = make_rat(1, 1000000);
    for (int i = 0; i < n; ++i) {
        int s = K.sign_at(v[i], eigenvalue);
        cert.signs.push_back(s);
        cert.coordinate_intervals.push_back(K.enclosure(v[i], eigenvalue, width));
        if (s <= 0) cert.strictly_positive = false;
    }
    return cert;
}

}  // namespace biperron
