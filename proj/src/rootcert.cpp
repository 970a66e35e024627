#include "biperron/rootcert.hpp"

#include <algorithm>
#include <cmath>

namespace biperron {

namespace {

/// complex arithmetic over GMP floats at a fixed working precision
struct CF {
    mpf_class re, im;
};

CF cf_make(int bits) { return CF{mpf_class(0, bits), mpf_class(0, bits)}; }

CF operator-(const CF& a, const CF& b) { return CF{a.re - b.re, a.im - b.im}; }
CF operator+(const CF& a, const CF& b) { return CF{a.re + b.re, a.im + b.im}; }
CF operator*(const CF& a, const CF& b) {
    return CF{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
CF operator/(const CF& a, const CF& b) {
    mpf_class d = b.re * b.re + b.im * b.im;
    return CF{(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
mpf_class abs2(const CF& a) { return a.re * a.re + a.im * a.im; }

/// Aberth-Ehrlich iteration; p squarefree with nonzero constant term.
std::vector<CF> aberth(const IntPoly& p, int bits, const std::vector<std::pair<Rat, Rat>>& seeds) {
    int n = p.degree();
    std::vector<mpf_class> pc(n + 1), dc(n);
    for (int i = 0; i <= n; ++i) pc[i] = mpf_class(p.coeff(i), bits);
    for (int i = 1; i <= n; ++i) dc[i - 1] = mpf_class(p.coeff(i) * i, bits);
    std::vector<CF> z(n, cf_make(bits));
    if (static_cast<int>(seeds.size()) == n) {
        for (int i = 0; i < n; ++i) {
            z[i].re = mpf_class(seeds[i].first, bits);
            z[i].im = mpf_class(seeds[i].second, bits);
        }
    } else {
        // spread over an annulus inside the Cauchy bound
        double upper = 1.0 + to_double(Rat(p.height()) / Rat(abs(p.leading())));
        for (int i = 0; i < n; ++i) {
            double r = upper * (0.3 + 0.65 * (i + 1) / n);
            double th = 2.0 * 3.14159265358979323846 * i / n + 0.31;
            z[i].re = mpf_class(r * std::cos(th), bits);
            z[i].im = mpf_class(r * std::sin(th), bits);
        }
    }
    mpf_class tol(1, bits);
    tol >>= (bits * 3) / 4;
    auto horner = [&](const std::vector<mpf_class>& cs, const CF& x) {
        CF acc = cf_make(bits);
        for (int i = static_cast<int>(cs.size()) - 1; i >= 0; --i) {
            acc = acc * x;
            acc.re += cs[i];
        }
        return acc;
    };
    for (int iter = 0; iter < 400; ++iter) {
        mpf_class worst(0, bits);
        for (int i = 0; i < n; ++i) {
            CF P = horner(pc, z[i]);
            CF Pd = horner(dc, z[i]);
            if (sgn(abs2(Pd)) == 0) {  // degenerate pole; nudge
                z[i].re += tol;
                continue;
            }
            CF w = P / Pd;
            CF s = cf_make(bits);
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                CF d = z[i] - z[j];
                if (sgn(abs2(d)) == 0) {
                    d.re += tol;  // break exact collision
                }
                CF one = cf_make(bits);
                one.re = 1;
                s = s + one / d;
            }
            CF one = cf_make(bits);
            one.re = 1;
            CF denom = one - w * s;
            CF corr = (sgn(abs2(denom)) == 0) ? w : w / denom;
            z[i] = z[i] - corr;
            mpf_class rel = abs2(corr) / (abs2(z[i]) + 1);
            if (rel > worst) worst = rel;
        }
        if (worst < tol * tol) break;
    }
    return z;
}

Rat rat_from_mpf(const mpf_class& x) {
    mpq_class q;
    mpq_set_f(q.get_mpq_t(), x.get_mpf_t());
    return q;
}

struct ExactPoint {
    Rat re, im;
};

/// |p(w)|^2 exactly
Rat abs2_poly_at(const IntPoly& p, const ExactPoint& w) {
    Rat re = 0, im = 0;
    for (int i = p.degree(); i >= 0; --i) {
        Rat nre = re * w.re - im * w.im + Rat(p.coeff(i));
        Rat nim = re * w.im + im * w.re;
        re = nre;
        im = nim;
    }
    return re * re + im * im;
}

Rat dist2(const ExactPoint& a, const ExactPoint& b) {
    Rat dr = a.re - b.re, di = a.im - b.im;
    return dr * dr + di * di;
}

}  // namespace

RootPicture::RootPicture(IntPoly squarefree, int start_bits)
    : p_(squarefree.primitive_part()), bits_(start_bits) {
    if (p_.is_zero()) throw std::invalid_argument("RootPicture: zero polynomial");
    if (p_ != p_.squarefree_part())
        throw std::invalid_argument("RootPicture: polynomial must be squarefree");
    real_ = isolate_real_roots(p_);
    certify();
}

void RootPicture::refine() {
    if (bits_ >= kPrecisionCapBits)
        throw PrecisionExhausted("root certification beyond 4096 bits");
    bits_ = std::min(bits_ * 2, kPrecisionCapBits);
    for (auto& [lo, hi] : real_) refine_interval(p_, lo, hi);
    certify();
}

void RootPicture::refine_reals_to_width(const Rat& width) {
    for (auto& [lo, hi] : real_)
        while (hi - lo > width) refine_interval(p_, lo, hi);
}

void RootPicture::certify() {
    int n = p_.degree();
    int n_real = static_cast<int>(real_.size());
    int n_complex = n - n_real;
    disks_.clear();
    if (n_complex == 0) return;
    if (n_complex % 2 != 0) throw std::logic_error("odd number of nonreal roots");

    // work on the polynomial with zero roots removed (0 is always real)
    IntPoly q = p_;
    if (sign(q.constant_term()) == 0) {
        std::vector<Int> c(q.ascending().begin() + 1, q.ascending().end());
        q = IntPoly(std::move(c));
    }
    int m = q.degree();

    int bits = bits_;
    while (true) {
        auto z = aberth(q, bits, seeds_);
        // classify approximations: the m_real smallest |Im| become real
        int m_real = m - n_complex;
        std::vector<int> order(m);
        for (int i = 0; i < m; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return cmp(::abs(z[a].im), ::abs(z[b].im)) < 0;
        });
        std::vector<ExactPoint> pts;
        pts.reserve(m);
        for (int k = 0; k < m_real; ++k) {
            ExactPoint e{rat_from_mpf(z[order[k]].re), Rat(0)};
            pts.push_back(e);
        }
        // pair the rest into conjugates
        std::vector<int> ups, downs;
        for (int k = m_real; k < m; ++k) {
            (sgn(z[order[k]].im) >= 0 ? ups : downs).push_back(order[k]);
        }
        bool ok = ups.size() == downs.size();
        std::vector<ExactPoint> uppers;
        if (ok) {
            std::vector<bool> used(downs.size(), false);
            for (int u : ups) {
                int best = -1;
                mpf_class bd;
                for (size_t t = 0; t < downs.size(); ++t) {
                    if (used[t]) continue;
                    CF d{z[u].re - z[downs[t]].re, z[u].im + z[downs[t]].im};
                    mpf_class dd = abs2(d);
                    if (best < 0 || dd < bd) {
                        best = static_cast<int>(t);
                        bd = dd;
                    }
                }
                if (best < 0) {
                    ok = false;
                    break;
                }
                used[best] = true;
                ExactPoint e{(rat_from_mpf(z[u].re) + rat_from_mpf(z[downs[best]].re)) / 2,
                             (rat_from_mpf(z[u].im) - rat_from_mpf(z[downs[best]].im)) / 2};
                if (sign(e.im) <= 0) {
                    ok = false;
                    break;
                }
                uppers.push_back(e);
            }
        }
        if (ok) {
            // assemble the full exact point set: reals, uppers, conjugates
            std::vector<ExactPoint> all = pts;
            for (const auto& e : uppers) all.push_back(e);
            for (const auto& e : uppers) all.push_back(ExactPoint{e.re, -e.im});
            // Smith radii: rho_i = m |q(w_i)| / (|lc| prod_{j!=i} |w_i - w_j|)
            std::vector<Rat> rho(all.size());
            Rat lc2 = Rat(q.leading()) * Rat(q.leading());
            for (size_t i = 0; i < all.size() && ok; ++i) {
                Rat num2 = abs2_poly_at(q, all[i]);  // |q|^2
                Rat den2 = lc2;
                for (size_t j = 0; j < all.size(); ++j) {
                    if (j == i) continue;
                    Rat d2 = dist2(all[i], all[j]);
                    if (sign(d2) == 0) {
                        ok = false;
                        break;
                    }
                    den2 *= d2;
                }
                if (!ok) break;
                // rho^2 <= m^2 * num2 / den2; take a rational upper bound
                Rat r2 = Rat(m) * Rat(m) * num2 / den2;
                Rat lo, hi;
                sqrt_enclosure(r2, 24, lo, hi);
                rho[i] = hi;
            }
            // disjointness of all disks
            for (size_t i = 0; i < all.size() && ok; ++i)
                for (size_t j = i + 1; j < all.size() && ok; ++j) {
                    Rat s = rho[i] + rho[j];
                    if (!(s * s < dist2(all[i], all[j]))) ok = false;
                }
            // complex disks must avoid the real axis
            size_t base = pts.size();
            for (size_t k = 0; k < uppers.size() && ok; ++k)
                if (!(rho[base + k] < uppers[k].im)) ok = false;
            if (ok) {
                disks_.clear();
                for (size_t k = 0; k < uppers.size(); ++k) {
                    ComplexRootDisk d;
                    d.center_re = uppers[k].re;
                    d.center_im = uppers[k].im;
                    d.radius = rho[base + k];
                    Rat c2 = uppers[k].re * uppers[k].re + uppers[k].im * uppers[k].im;
                    Rat clo, chi;
                    sqrt_enclosure(c2, 24, clo, chi);
                    d.modulus_lo = clo - d.radius;
                    if (sign(d.modulus_lo) < 0) d.modulus_lo = 0;
                    d.modulus_hi = chi + d.radius;
                    disks_.push_back(std::move(d));
                }
                std::sort(disks_.begin(), disks_.end(), [](const auto& a, const auto& b) {
                    if (a.center_re != b.center_re) return a.center_re < b.center_re;
                    return a.center_im < b.center_im;
                });
                // warm-start seeds for the next refinement
                seeds_.clear();
                for (int i = 0; i < m; ++i)
                    seeds_.emplace_back(rat_from_mpf(z[i].re), rat_from_mpf(z[i].im));
                bits_ = bits;
                return;
            }
        }
        if (bits >= kPrecisionCapBits)
            throw PrecisionExhausted("complex root certification beyond 4096 bits");
        bits = std::min(bits * 2, kPrecisionCapBits);
        seeds_.clear();  // fresh start at higher precision
    }
}

std::vector<RootRegion> isolate_all_roots(const IntPoly& p, int precision_bits) {
    if (p.is_zero()) throw std::invalid_argument("isolate_all_roots: zero polynomial");
    std::vector<RootRegion> out;
    for (const auto& [sf, mult] : p.squarefree_decomposition()) {
        RootPicture pic(sf, precision_bits);
        for (const auto& [lo, hi] : pic.real_intervals()) {
            RootRegion r;
            r.real = true;
            r.multiplicity = mult;
            r.lo = lo;
            r.hi = hi;
            // certified modulus bounds from the interval
            Rat alo = ::abs(lo), ahi = ::abs(hi);
            if (sign(lo) <= 0 && sign(hi) >= 0) {
                r.modulus_lo = 0;
                r.modulus_hi = std::max(alo, ahi);
            } else {
                r.modulus_lo = std::min(alo, ahi);
                r.modulus_hi = std::max(alo, ahi);
            }
            out.push_back(std::move(r));
        }
        for (const auto& d : pic.complex_disks()) {
            RootRegion r;
            r.real = false;
            r.multiplicity = mult;
            r.disk = d;
            r.modulus_lo = d.modulus_lo;
            r.modulus_hi = d.modulus_hi;
            out.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace biperron
