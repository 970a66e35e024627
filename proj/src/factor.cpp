#include "biperron/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace biperron {

namespace {

// ----------------------------------------------------------------- mod p ---

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) d >>= 1, ++s;
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t inv_mod(uint64_t a, uint64_t p) { return powmod_u64(a % p, p - 2, p); }

/// dense polynomial over F_p, ascending coefficients, trimmed
struct FpPoly {
    uint64_t p;
    std::vector<uint64_t> c;

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    uint64_t leading() const { return c.empty() ? 0 : c.back(); }
};

FpPoly fp_from(const IntPoly& f, uint64_t p) {
    FpPoly r{p, {}};
    r.c.resize(f.ascending().size());
    for (size_t i = 0; i < r.c.size(); ++i) {
        Int m = f.ascending()[i] % Int(static_cast<unsigned long>(p));
        if (sign(m) < 0) m += Int(static_cast<unsigned long>(p));
        r.c[i] = m.get_ui();
    }
    r.trim();
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, {}};
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, 0);
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (!a.c[i]) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = (r.c[i + j] + mulmod(a.c[i], b.c[j], a.p)) % a.p;
    }
    r.trim();
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b) {
    FpPoly r{a.p, {}};
    r.c.assign(std::max(a.c.size(), b.c.size()), 0);
    for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
    r.trim();
    return r;
}

FpPoly fp_make_monic(FpPoly a) {
    if (a.is_zero()) return a;
    uint64_t inv = inv_mod(a.leading(), a.p);
    for (auto& v : a.c) v = mulmod(v, inv, a.p);
    return a;
}

void fp_divrem(const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    q = FpPoly{a.p, {}};
    r = a;
    if (b.is_zero()) throw std::logic_error("fp_divrem: zero divisor");
    int db = b.degree();
    if (r.degree() < db) return;
    q.c.assign(r.degree() - db + 1, 0);
    uint64_t linv = inv_mod(b.leading(), a.p);
    for (int k = r.degree() - db; k >= 0; --k) {
        if (r.degree() < db + k) continue;
        uint64_t coef = (static_cast<int>(r.c.size()) > db + k) ? r.c[db + k] : 0;
        if (!coef) continue;
        uint64_t f = mulmod(coef, linv, a.p);
        q.c[k] = f;
        for (int i = 0; i <= db; ++i) {
            uint64_t sub = mulmod(f, b.c[i], a.p);
            r.c[k + i] = (r.c[k + i] + a.p - sub) % a.p;
        }
        r.trim();
    }
    q.trim();
}

FpPoly fp_mod(const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fp_divrem(a, b, q, r);
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_make_monic(a);
}

/// extended gcd: returns (g, s, t) with s*a + t*b = g (g monic)
void fp_xgcd(const FpPoly& a, const FpPoly& b, FpPoly& g, FpPoly& s, FpPoly& t) {
    uint64_t p = a.p;
    FpPoly r0 = a, r1 = b;
    FpPoly s0{p, {1}}, s1{p, {}};
    FpPoly t0{p, {}}, t1{p, {1}};
    while (!r1.is_zero()) {
        FpPoly q, r;
        fp_divrem(r0, r1, q, r);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1));
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    uint64_t inv = inv_mod(r0.leading(), p);
    auto scale = [&](FpPoly& f) {
        for (auto& v : f.c) v = mulmod(v, inv, p);
    };
    scale(r0); scale(s0); scale(t0);
    g = std::move(r0);
    s = std::move(s0);
    t = std::move(t0);
}

FpPoly fp_derivative(const FpPoly& a) {
    FpPoly r{a.p, {}};
    if (a.degree() <= 0) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mulmod(a.c[i], i % a.p, a.p);
    r.trim();
    return r;
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod) {
    FpPoly r{base.p, {1}};
    FpPoly b = fp_mod(base, mod);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t i = bits; i-- > 0;) {
        r = fp_mod(fp_mul(r, r), mod);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = fp_mod(fp_mul(r, b), mod);
    }
    return r;
}

/// deterministic splitmix64 stream for equal-degree splitting
struct Rng {
    uint64_t state;
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

/// distinct-degree then equal-degree (Cantor–Zassenhaus) factorization of a
/// monic squarefree polynomial over F_p (p odd)
std::vector<FpPoly> fp_factor_squarefree(const FpPoly& f_in, Rng& rng) {
    std::vector<FpPoly> out;
    FpPoly f = fp_make_monic(f_in);
    uint64_t p = f.p;
    std::vector<std::pair<FpPoly, int>> stages;  // (product of irreducibles, degree)
    FpPoly x{p, {0, 1}};
    FpPoly h = x;
    FpPoly rest = f;
    for (int d = 1; rest.degree() >= 2 * d; ++d) {
        h = fp_powmod(h, Int(static_cast<unsigned long>(p)), rest);
        FpPoly g = fp_gcd(fp_sub(h, x), rest);
        if (g.degree() > 0) {
            stages.emplace_back(g, d);
            FpPoly q, r;
            fp_divrem(rest, g, q, r);
            rest = fp_make_monic(q);
            h = fp_mod(h, rest);
        }
    }
    if (rest.degree() > 0) stages.emplace_back(rest, rest.degree());
    // equal-degree splitting
    for (auto& [prod, d] : stages) {
        std::vector<FpPoly> work{prod};
        Int pd;
        mpz_pow_ui(pd.get_mpz_t(), Int(static_cast<unsigned long>(p)).get_mpz_t(),
                   static_cast<unsigned long>(d));
        Int e = (pd - 1) / 2;
        while (!work.empty()) {
            FpPoly g = work.back();
            work.pop_back();
            if (g.degree() == d) {
                out.push_back(fp_make_monic(g));
                continue;
            }
            // random split
            FpPoly r{p, {}};
            r.c.resize(g.degree());
            for (auto& v : r.c) v = rng.next() % p;
            r.trim();
            if (r.degree() < 1) {
                work.push_back(g);
                continue;
            }
            FpPoly t = fp_powmod(r, e, g);
            if (!t.is_zero()) t.c[0] = (t.c[0] + p - 1) % p;  // t = r^e - 1
            else t = FpPoly{p, {p - 1}};
            t.trim();
            FpPoly u = fp_gcd(t, g);
            if (u.degree() == 0 || u.degree() == g.degree()) {
                work.push_back(g);
                continue;
            }
            FpPoly q, rr;
            fp_divrem(g, u, q, rr);
            work.push_back(fp_make_monic(q));
            work.push_back(u);
        }
    }
    return out;
}

// --------------------------------------------------------- mod m lifting ---

/// coefficients reduced into [0, m)
IntPoly mod_reduce(const IntPoly& f, const Int& m) {
    std::vector<Int> c = f.ascending();
    for (auto& v : c) {
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    }
    return IntPoly(std::move(c));
}

/// coefficients centered into (-m/2, m/2]
IntPoly mod_center(const IntPoly& f, const Int& m) {
    std::vector<Int> c = f.ascending();
    Int half = m / 2;
    for (auto& v : c) {
        mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
        if (v > half) v -= m;
    }
    return IntPoly(std::move(c));
}

IntPoly mod_mul(const IntPoly& a, const IntPoly& b, const Int& m) {
    return mod_reduce(a * b, m);
}

/// division by a monic divisor, all coefficients mod m
void mod_divrem_monic(const IntPoly& a, const IntPoly& b, const Int& m, IntPoly& q, IntPoly& r) {
    if (!b.is_monic()) throw std::logic_error("mod_divrem_monic: divisor not monic");
    std::vector<Int> rem = mod_reduce(a, m).ascending();
    int da = static_cast<int>(rem.size()) - 1, db = b.degree();
    if (da < db) {
        q = IntPoly();
        r = IntPoly(std::move(rem));
        return;
    }
    std::vector<Int> qq(da - db + 1, Int(0));
    for (int k = da - db; k >= 0; --k) {
        Int coef = (static_cast<int>(rem.size()) > db + k) ? rem[db + k] : Int(0);
        if (sign(coef) == 0) continue;
        qq[k] = coef;
        for (int i = 0; i <= db; ++i) {
            rem[k + i] -= coef * b.coeff(i);
            mpz_mod(rem[k + i].get_mpz_t(), rem[k + i].get_mpz_t(), m.get_mpz_t());
        }
    }
    q = mod_reduce(IntPoly(std::move(qq)), m);
    r = mod_reduce(IntPoly(std::move(rem)), m);
}

/// one quadratic Hensel step: from modulus m to m^2
void hensel_step(const IntPoly& f, IntPoly& g, IntPoly& h, IntPoly& s, IntPoly& t, const Int& m) {
    Int m2 = m * m;
    IntPoly e = mod_reduce(f - g * h, m2);
    IntPoly q, r;
    mod_divrem_monic(mod_mul(s, e, m2), h, m2, q, r);
    IntPoly g1 = mod_reduce(g + t * e + q * g, m2);
    IntPoly h1 = mod_reduce(h + r, m2);
    IntPoly b = mod_reduce(s * g1 + t * h1 - IntPoly::constant(1), m2);
    IntPoly c, d;
    mod_divrem_monic(mod_mul(s, b, m2), h1, m2, c, d);
    IntPoly s1 = mod_reduce(s - d, m2);
    IntPoly t1 = mod_reduce(t - t * b - c * g1, m2);
    g = g1; h = h1; s = s1; t = t1;
}

IntPoly fp_to_int(const FpPoly& f) {
    std::vector<Int> c(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) c[i] = Int(static_cast<unsigned long>(f.c[i]));
    return IntPoly(std::move(c));
}

/// lift the factorization f = prod(parts) (mod p) to modulus >= target;
/// f monic, parts monic and pairwise coprime mod p
std::vector<IntPoly> hensel_lift_list(const IntPoly& f, const std::vector<FpPoly>& parts,
                                      uint64_t p, const Int& target, Int& modulus_out) {
    Int pz(static_cast<unsigned long>(p));
    if (parts.size() == 1) {
        Int m = pz;
        while (m < target) m = m * m;
        modulus_out = m;
        return {mod_reduce(f, m)};
    }
    size_t half = parts.size() / 2;
    FpPoly gp{p, {1}}, hp{p, {1}};
    for (size_t i = 0; i < half; ++i) gp = fp_mul(gp, parts[i]);
    for (size_t i = half; i < parts.size(); ++i) hp = fp_mul(hp, parts[i]);
    FpPoly gg, ss, tt;
    fp_xgcd(gp, hp, gg, ss, tt);
    if (gg.degree() != 0) throw std::logic_error("hensel: factors not coprime mod p");
    IntPoly g = fp_to_int(gp), h = fp_to_int(hp), s = fp_to_int(ss), t = fp_to_int(tt);
    Int m = pz;
    while (m < target) {
        hensel_step(mod_reduce(f, m * m), g, h, s, t, m);
        m = m * m;
    }
    std::vector<FpPoly> left(parts.begin(), parts.begin() + half);
    std::vector<FpPoly> right(parts.begin() + half, parts.end());
    Int msub;
    auto lg = hensel_lift_list(g, left, p, target, msub);
    auto lh = hensel_lift_list(h, right, p, target, msub);
    modulus_out = m;
    // re-reduce children to the common modulus m (children lifted at least to target)
    std::vector<IntPoly> out;
    for (auto& v : lg) out.push_back(mod_reduce(v, m));
    for (auto& v : lh) out.push_back(mod_reduce(v, m));
    return out;
}

// ------------------------------------------------------------ zassenhaus ---

/// factor a primitive squarefree monic polynomial of degree >= 2
std::vector<IntPoly> factor_monic_squarefree(const IntPoly& f) {
    int n = f.degree();
    // pick a prime keeping f squarefree mod p, with few modular factors
    uint64_t best_p = 0;
    std::vector<FpPoly> best_parts;
    uint64_t candidate = 101;
    int tried = 0;
    uint64_t seed = 0x9ddfea08eb382d69ull ^ static_cast<uint64_t>(n);
    for (const auto& cc : f.ascending())
        seed = seed * 1099511628211ull + mpz_get_ui(cc.get_mpz_t());
    while (tried < 4) {
        while (!is_prime_u64(candidate)) ++candidate;
        uint64_t p = candidate;
        candidate += 2;
        if (sign(f.leading() % Int(static_cast<unsigned long>(p))) == 0) continue;
        FpPoly fp = fp_from(f, p);
        if (fp.degree() != n) continue;
        FpPoly d = fp_derivative(fp);
        if (d.is_zero()) continue;
        if (fp_gcd(fp, d).degree() != 0) continue;  // not squarefree mod p
        ++tried;
        Rng rng{seed ^ (p * 0x2545F4914F6CDD1Dull)};
        auto parts = fp_factor_squarefree(fp, rng);
        if (best_p == 0 || parts.size() < best_parts.size()) {
            best_p = p;
            best_parts = std::move(parts);
            if (best_parts.size() == 1) break;
        }
    }
    if (best_parts.size() == 1) return {f};
    // canonical order of modular factors for determinism
    std::sort(best_parts.begin(), best_parts.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    });
    // Mignotte-style bound on factor coefficients: 2^n * sqrt(n+1) * height
    Int bound = (isqrt_floor(Int(n + 1)) + 1) * f.height();
    bound <<= n;
    Int target = 2 * bound + 1;
    Int modulus;
    auto lifted = hensel_lift_list(f, best_parts, best_p, target, modulus);

    std::vector<IntPoly> result;
    std::vector<int> live(lifted.size());
    std::iota(live.begin(), live.end(), 0);
    IntPoly rest = f;
    size_t subset_size = 1;
    while (2 * subset_size <= live.size()) {
        // combinations of `live` indices of size subset_size, lexicographic
        std::vector<size_t> idx(subset_size);
        std::iota(idx.begin(), idx.end(), 0);
        bool found = false;
        while (true) {
            IntPoly cand = IntPoly::constant(1);
            for (size_t i : idx) cand = mod_mul(cand, lifted[live[i]], modulus);
            cand = mod_center(cand, modulus);
            // quick constant-term divisibility filter before trial division
            Int c0 = cand.constant_term();
            bool quick_ok = sign(c0) != 0 && sign(rest.constant_term() % c0) == 0;
            if (quick_ok) {
                auto quo = cand.exact_divide(rest);
                if (quo) {
                    result.push_back(cand);
                    rest = *quo;
                    std::vector<int> nl;
                    for (size_t i = 0, j = 0; i < live.size(); ++i) {
                        if (j < idx.size() && idx[j] == i) {
                            ++j;
                            continue;
                        }
                        nl.push_back(live[i]);
                    }
                    live = std::move(nl);
                    found = true;
                    break;
                }
            }
            // next combination
            int pos = static_cast<int>(subset_size) - 1;
            while (pos >= 0 && idx[pos] == live.size() - subset_size + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (size_t j = pos + 1; j < subset_size; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++subset_size;
    }
    if (rest.degree() > 0) result.push_back(rest);
    return result;
}

}  // namespace

Factorization factor(const IntPoly& p) {
    Factorization out;
    if (p.is_zero()) throw std::invalid_argument("factor: zero polynomial");
    out.sgn = sign(p.leading());
    out.content = p.content();
    IntPoly prim = p.primitive_part();
    if (prim.degree() == 0) return out;
    // strip powers of t
    int val = 0;
    while (sign(prim.coeff(val)) == 0) ++val;
    if (val > 0) {
        std::vector<Int> c(prim.ascending().begin() + val, prim.ascending().end());
        prim = IntPoly(std::move(c));
        out.factors.emplace_back(IntPoly::variable(), val);
    }
    for (const auto& [sf, mult] : prim.squarefree_decomposition()) {
        if (sf.degree() == 1) {
            out.factors.emplace_back(sf, mult);
            continue;
        }
        // monicize: F(y) = lc^(n-1) f(y/lc) is monic with integer coefficients
        const Int lc = sf.leading();
        IntPoly work = sf;
        if (lc != 1) {
            int n = sf.degree();
            std::vector<Int> c(n + 1);
            for (int i = 0; i < n; ++i) {
                Int e;
                mpz_pow_ui(e.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(n - 1 - i));
                c[i] = sf.coeff(i) * e;
            }
            c[n] = 1;
            work = IntPoly(std::move(c));
        }
        auto monic_factors = factor_monic_squarefree(work);
        for (auto& mf : monic_factors) {
            IntPoly g = mf;
            if (lc != 1) {
                // map back y -> lc * t and take the primitive part
                std::vector<Int> c(g.degree() + 1);
                Int pw = 1;
                for (int i = 0; i <= g.degree(); ++i) {
                    c[i] = g.coeff(i) * pw;
                    pw *= lc;
                }
                g = IntPoly(std::move(c)).primitive_part();
            }
            out.factors.emplace_back(g, mult);
        }
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

bool is_irreducible(const IntPoly& p) {
    if (p.is_zero() || p.degree() < 1) return false;
    if (p.degree() == 1) return true;
    auto f = factor(p);
    return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace biperron
