#include "biperron/numberfield.hpp"

#include <algorithm>

#include "biperron/factor.hpp"

namespace biperron {

NumberField::NumberField(IntPoly minpoly) : m_(minpoly.primitive_part()) {
    if (m_.degree() < 1) throw std::invalid_argument("NumberField: constant modulus");
    n_ = m_.degree();
    monic_.resize(n_ + 1);
    Rat lc(m_.leading());
    for (int i = 0; i <= n_; ++i) monic_[i] = Rat(m_.coeff(i)) / lc;
}

NumberField::Elem NumberField::one() const { return from_rat(Rat(1)); }

NumberField::Elem NumberField::from_rat(const Rat& c) const {
    Elem e = zero();
    e[0] = c;
    return e;
}

NumberField::Elem NumberField::generator() const {
    if (n_ == 1) return from_rat(-monic_[0]);
    Elem e = zero();
    e[1] = 1;
    return e;
}

NumberField::Elem NumberField::from_poly(const RatPoly& p) const {
    return reduce(p.ascending());
}

NumberField::Elem NumberField::reduce(std::vector<Rat> raw) const {
    while (static_cast<int>(raw.size()) > n_) {
        Rat top = raw.back();
        raw.pop_back();
        if (sign(top) == 0) continue;
        size_t off = raw.size() - n_;
        for (int i = 0; i < n_; ++i) raw[off + i] -= top * monic_[i];
    }
    raw.resize(n_, Rat(0));
    return raw;
}

bool NumberField::is_zero(const Elem& a) const {
    for (const auto& v : a)
        if (sign(v) != 0) return false;
    return true;
}

bool NumberField::is_rational(const Elem& a) const {
    for (int i = 1; i < n_; ++i)
        if (sign(a[i]) != 0) return false;
    return true;
}

NumberField::Elem NumberField::add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (int i = 0; i < n_; ++i) r[i] += b[i];
    return r;
}

NumberField::Elem NumberField::sub(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (int i = 0; i < n_; ++i) r[i] -= b[i];
    return r;
}

NumberField::Elem NumberField::neg(const Elem& a) const {
    Elem r = a;
    for (auto& v : r) v = -v;
    return r;
}

NumberField::Elem NumberField::mul(const Elem& a, const Elem& b) const {
    std::vector<Rat> raw(2 * n_ - 1, Rat(0));
    for (int i = 0; i < n_; ++i) {
        if (sign(a[i]) == 0) continue;
        for (int j = 0; j < n_; ++j) raw[i + j] += a[i] * b[j];
    }
    return reduce(std::move(raw));
}

NumberField::Elem NumberField::mul_rat(const Elem& a, const Rat& c) const {
    Elem r = a;
    for (auto& v : r) v *= c;
    return r;
}

NumberField::Elem NumberField::inv(const Elem& a) const {
    if (is_zero(a)) throw std::invalid_argument("NumberField::inv: zero element");
    // extended Euclid over Q[x]: s * a + t * m = 1
    RatPoly r0(std::vector<Rat>(monic_));
    RatPoly r1(std::vector<Rat>(a));
    RatPoly s0, s1(std::vector<Rat>{Rat(1)});
    while (!r1.is_zero()) {
        RatPoly q, r;
        RatPoly::divrem(r0, r1, q, r);
        RatPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 = gcd; must be a nonzero constant since modulus is irreducible
    if (r0.degree() != 0) throw std::logic_error("NumberField::inv: modulus not irreducible?");
    RatPoly inv_poly = s0 * (1 / r0.coeff(0));
    return from_poly(inv_poly);
}

NumberField::Elem NumberField::div(const Elem& a, const Elem& b) const {
    return mul(a, inv(b));
}

NumberField::Elem NumberField::pow(const Elem& a, unsigned e) const {
    Elem acc = one();
    Elem base = a;
    while (e) {
        if (e & 1u) acc = mul(acc, base);
        e >>= 1u;
        if (e) base = mul(base, base);
    }
    return acc;
}

NumberField::Elem NumberField::power_trace(unsigned k) const {
    if (sign(m_.constant_term()) == 0)
        throw std::invalid_argument("power_trace: zero is a root of the modulus");
    Elem x = generator();
    Elem xk = pow(x, k);
    Elem xmk = inv(xk);
    return add(xk, xmk);
}

IntPoly NumberField::minpoly_of(const Elem& a) const {
    // rows: coordinates of a^0, a^1, ..., incremental Gaussian elimination;
    // the first dependent power gives the minimal polynomial.
    std::vector<std::vector<Rat>> echelon;       // reduced rows
    std::vector<std::vector<Rat>> combos;        // expression of each row in powers
    std::vector<int> pivots;
    Elem p = one();
    std::vector<Elem> powers;
    for (int k = 0;; ++k) {
        powers.push_back(p);
        std::vector<Rat> row = p;
        std::vector<Rat> combo(k + 1, Rat(0));
        combo[k] = 1;
        // eliminate against existing rows
        for (size_t r = 0; r < echelon.size(); ++r) {
            int piv = pivots[r];
            if (sign(row[piv]) == 0) continue;
            Rat f = row[piv] / echelon[r][piv];
            for (int i = 0; i < n_; ++i) row[i] -= f * echelon[r][i];
            for (size_t i = 0; i < combos[r].size(); ++i) combo[i] -= f * combos[r][i];
        }
        int piv = -1;
        for (int i = 0; i < n_; ++i)
            if (sign(row[i]) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) {
            // dependency: sum combo[i] * a^i = 0, combo[k] = 1 (monic)
            RatPoly mp{std::vector<Rat>(combo.begin(), combo.end())};
            return mp.clear_denominators();
        }
        echelon.push_back(row);
        combos.push_back(combo);
        pivots.push_back(piv);
        p = mul(p, a);
        if (k > n_) throw std::logic_error("minpoly_of: no dependency found");
    }
}

int NumberField::sign_at(const Elem& a, const AlgebraicReal& alpha) const {
    if (alpha.minpoly() != m_)
        throw std::invalid_argument("sign_at: alpha is not a root of the modulus");
    if (is_zero(a)) return 0;
    RatPoly ap{std::vector<Rat>(a)};
    IntPoly num = ap.clear_denominators();  // same sign pattern at alpha
    return alpha.sign_of_poly_at(num);
}

std::pair<Rat, Rat> NumberField::enclosure(const Elem& a, const AlgebraicReal& alpha,
                                           const Rat& width) const {
    RatPoly ap{std::vector<Rat>(a)};
    Rat lo, hi;
    while (true) {
        // rational interval Horner
        Rat alo = 0, ahi = 0;
        for (int i = ap.degree(); i >= 0; --i) {
            Rat p1 = alo * alpha.lower(), p2 = alo * alpha.upper();
            Rat p3 = ahi * alpha.lower(), p4 = ahi * alpha.upper();
            Rat mn = std::min(std::min(p1, p2), std::min(p3, p4));
            Rat mx = std::max(std::max(p1, p2), std::max(p3, p4));
            alo = mn + ap.coeff(i);
            ahi = mx + ap.coeff(i);
        }
        if (ahi - alo <= width) return {alo, ahi};
        alpha.refine();
    }
}

int nf_poly_degree(const NFPoly& f) { return static_cast<int>(f.size()) - 1; }

namespace {

void nf_poly_trim(const NumberField& K, NFPoly& f) {
    while (!f.empty() && K.is_zero(f.back())) f.pop_back();
}

/// remainder of a by b (b nonzero), over the field K
NFPoly nf_poly_rem(const NumberField& K, NFPoly a, const NFPoly& b) {
    int db = nf_poly_degree(b);
    auto lead_inv = K.inv(b[db]);
    while (static_cast<int>(a.size()) - 1 >= db) {
        int da = static_cast<int>(a.size()) - 1;
        auto f = K.mul(a[da], lead_inv);
        if (!K.is_zero(f)) {
            for (int i = 0; i <= db; ++i)
                a[da - db + i] = K.sub(a[da - db + i], K.mul(f, b[i]));
        }
        a.pop_back();
        nf_poly_trim(K, a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

NFPoly nf_poly_gcd(const NumberField& K, NFPoly a, NFPoly b) {
    nf_poly_trim(K, a);
    nf_poly_trim(K, b);
    while (!b.empty()) {
        NFPoly r = nf_poly_rem(K, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        auto inv = K.inv(a.back());
        for (auto& c : a) c = K.mul(c, inv);
    }
    return a;
}

int companion_gcd_degree(const NumberField& K, const IntPoly& p, const NumberField::Elem& scale) {
    int n = p.degree();
    // q(t) = t^n p(scale / t) = sum_i p_i scale^i t^(n-i)
    NFPoly q(n + 1, K.zero());
    NFPoly f(n + 1, K.zero());
    auto spow = K.one();
    for (int i = 0; i <= n; ++i) {
        f[i] = K.from_rat(Rat(p.coeff(i)));
        q[n - i] = K.mul_rat(spow, Rat(p.coeff(i)));
        if (i < n) spow = K.mul(spow, scale);
    }
    auto g = nf_poly_gcd(K, f, q);
    return nf_poly_degree(g);
}

}  // namespace biperron
