#include "biperron/poly.hpp"

#include <algorithm>
#include <sstream>

namespace biperron {

namespace {
const Int kZeroInt = 0;
const Rat kZeroRat = 0;
}  // namespace

IntPoly::IntPoly(std::vector<Int> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    c_.reserve(ascending.size());
    for (long v : ascending) c_.emplace_back(v);
    trim();
}

void IntPoly::trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

IntPoly IntPoly::constant(Int c) {
    IntPoly p;
    p.c_.push_back(std::move(c));
    p.trim();
    return p;
}

IntPoly IntPoly::variable() { return IntPoly{0, 1}; }

IntPoly IntPoly::from_descending(const std::vector<Int>& c) {
    std::vector<Int> asc(c.rbegin(), c.rend());
    return IntPoly(std::move(asc));
}

IntPoly IntPoly::parse(const std::string& s) {
    std::vector<Int> desc;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        // strip whitespace
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw std::invalid_argument("empty coefficient in polynomial: " + s);
        tok = tok.substr(a, b - a + 1);
        Int v;
        if (mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
            throw std::invalid_argument("bad integer coefficient '" + tok + "'");
        desc.push_back(v);
    }
    if (desc.empty()) throw std::invalid_argument("empty polynomial string");
    if (desc.size() > 1 && sign(desc.front()) == 0)
        throw std::invalid_argument("leading coefficient must be nonzero");
    return from_descending(desc);
}

const Int& IntPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroInt;
    return c_[i];
}

const Int& IntPoly::leading() const {
    if (c_.empty()) return kZeroInt;
    return c_.back();
}

const Int& IntPoly::constant_term() const {
    if (c_.empty()) return kZeroInt;
    return c_.front();
}

std::vector<Int> IntPoly::descending() const {
    return std::vector<Int>(c_.rbegin(), c_.rend());
}

std::string IntPoly::to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        out += c_[i].get_str();
        if (i) out += ",";
    }
    return out;
}

bool IntPoly::operator<(const IntPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    for (int i = degree(); i >= 0; --i)
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    return false;
}

IntPoly IntPoly::operator-() const {
    IntPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
    IntPoly r = *this;
    for (auto& v : r.c_) v *= k;
    r.trim();
    return r;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly acc = IntPoly::constant(1);
    IntPoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        e >>= 1u;
        if (e) base = base * base;
    }
    return acc;
}

IntPoly IntPoly::shifted_up(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Int> r(c_.size() + k, Int(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (degree() <= 0) return IntPoly();
    std::vector<Int> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
}

Int IntPoly::content() const {
    Int g = 0;
    for (const auto& v : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    Int g = content();
    if (sign(leading()) < 0) g = -g;
    IntPoly r = *this;
    for (auto& v : r.c_) v /= g;
    return r;
}

Int IntPoly::height() const {
    Int h = 0;
    for (const auto& v : c_) {
        Int a = abs(v);
        if (a > h) h = a;
    }
    return h;
}

Int IntPoly::eval(const Int& x) const {
    Int acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

Rat IntPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + Rat(c_[i]);
    return acc;
}

int IntPoly::sign_at(const Rat& x) const {
    if (is_zero()) return 0;
    // homogeneous evaluation: sign of sum c_i a^i b^(n-i), x = a/b, b > 0
    const Int& a = x.get_num();
    const Int& b = x.get_den();
    Int acc = 0, bp = 1;
    std::vector<Int> apow(c_.size());
    Int ap = 1;
    for (size_t i = 0; i < c_.size(); ++i) {
        apow[i] = ap;
        ap *= a;
    }
    for (int i = degree(); i >= 0; --i) {
        acc += c_[i] * apow[i] * bp;
        bp *= b;
    }
    return sign(acc);
}

int IntPoly::sign_at_pos_inf() const { return sign(leading()); }

int IntPoly::sign_at_neg_inf() const {
    if (is_zero()) return 0;
    return degree() % 2 == 0 ? sign(leading()) : -sign(leading());
}

void IntPoly::eval_interval(const Rat& lo, const Rat& hi, Rat& out_lo, Rat& out_hi) const {
    // Horner with interval arithmetic
    Rat alo = 0, ahi = 0;
    for (int i = degree(); i >= 0; --i) {
        // [alo,ahi] * [lo,hi]
        Rat p1 = alo * lo, p2 = alo * hi, p3 = ahi * lo, p4 = ahi * hi;
        Rat mn = std::min(std::min(p1, p2), std::min(p3, p4));
        Rat mx = std::max(std::max(p1, p2), std::max(p3, p4));
        alo = mn + Rat(c_[i]);
        ahi = mx + Rat(c_[i]);
    }
    out_lo = alo;
    out_hi = ahi;
}

IntPoly IntPoly::reversed() const {
    std::vector<Int> r(c_.rbegin(), c_.rend());
    return IntPoly(std::move(r));
}

IntPoly IntPoly::mirrored() const {
    IntPoly r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i)
        if (i % 2 == 1) r.c_[i] = -r.c_[i];
    return r;
}

bool IntPoly::is_reciprocal() const {
    if (is_zero()) return false;
    IntPoly rev = reversed();
    return rev == *this || rev == -*this;
}

bool IntPoly::is_minus_reciprocal() const {
    if (is_zero()) return false;
    IntPoly q = mirrored().reversed();  // t^n p(-1/t) up to sign of mirror
    return q == *this || q == -*this;
}

bool IntPoly::is_mirror_symmetric() const {
    if (is_zero()) return false;
    IntPoly m = mirrored();
    return m == *this || m == -*this;
}

std::optional<IntPoly> IntPoly::exact_divide(const IntPoly& a) const {
    const IntPoly& b = *this;
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<Int> rem = a.c_;
    std::vector<Int> q(a.degree() - b.degree() + 1, Int(0));
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Int num = rem[k + b.degree()];
        if (sign(num) == 0) continue;
        Int c, r;
        mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), b.leading().get_mpz_t());
        if (sign(r) != 0) return std::nullopt;
        q[k] = c;
        for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= c * b.c_[i];
    }
    for (const auto& v : rem)
        if (sign(v) != 0) return std::nullopt;
    return IntPoly(std::move(q));
}

bool IntPoly::divides(const IntPoly& a) const {
    if (is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    return primitive_part().exact_divide(a.primitive_part()).has_value();
}

void IntPoly::pseudo_divrem(const IntPoly& a, const IntPoly& b, IntPoly& q, IntPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("pseudo_divrem: zero divisor");
    int da = a.degree(), db = b.degree();
    if (da < db) {
        q = IntPoly();
        r = a;
        return;
    }
    const Int& lb = b.leading();
    std::vector<Int> rem = a.c_;
    std::vector<Int> qq(da - db + 1, Int(0));
    for (int k = da - db; k >= 0; --k) {
        // scale remainder and accumulated quotient by lb
        for (auto& v : rem) v *= lb;
        for (auto& v : qq) v *= lb;
        Int c = rem[k + db];
        qq[k] += c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b.c_[i];
    }
    q = IntPoly(std::move(qq));
    r = IntPoly(std::move(rem));
}

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPoly f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    // primitive PRS
    while (!g.is_zero()) {
        IntPoly q, r;
        pseudo_divrem(f, g, q, r);
        f = g;
        g = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    return f.primitive_part();
}

IntPoly IntPoly::squarefree_part() const {
    if (is_zero()) return IntPoly();
    if (degree() == 0) return IntPoly::constant(1);
    IntPoly p = primitive_part();
    IntPoly g = gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    auto q = g.exact_divide(p);
    if (!q) throw std::logic_error("squarefree_part: inexact division");
    return q->primitive_part();
}

std::vector<std::pair<IntPoly, int>> IntPoly::squarefree_decomposition() const {
    // Yun's algorithm on the primitive part
    std::vector<std::pair<IntPoly, int>> out;
    if (is_zero() || degree() == 0) return out;
    IntPoly p = primitive_part();
    IntPoly dp = p.derivative();
    IntPoly a = gcd(p, dp);
    IntPoly b = *a.exact_divide(p);
    IntPoly c = *a.exact_divide(dp);
    IntPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPoly f = gcd(b, d);
        if (f.degree() > 0) out.emplace_back(f.primitive_part(), i);
        b = *f.exact_divide(b);
        c = *f.exact_divide(d);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::optional<IntPoly> IntPoly::exact_sqrt() const {
    if (is_zero()) return IntPoly();
    if (degree() % 2 != 0) return std::nullopt;
    if (sign(leading()) < 0) return std::nullopt;
    Int lc = isqrt_floor(leading());
    if (lc * lc != leading()) return std::nullopt;
    int m = degree() / 2;
    std::vector<Int> g(m + 1, Int(0));
    g[m] = lc;
    // determine g from the top down: coefficient matching of g^2
    for (int k = m - 1; k >= 0; --k) {
        // coefficient of t^(m+k) in g^2: 2*g[m]*g[k] plus the part from
        // already-known entries g[k+1..m]
        Int s = 0;
        for (int i = k + 1; i <= m; ++i) {
            int j = m + k - i;
            if (j < k + 1 || j > m || j > i) continue;
            Int term = g[i] * g[j];
            s += (i == j) ? term : term * 2;
        }
        Int num = coeff(m + k) - s;
        Int den = 2 * g[m];
        Int q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (sign(r) != 0) return std::nullopt;
        g[k] = q;
    }
    IntPoly cand{std::vector<Int>(g.begin(), g.end())};
    if (cand * cand == *this) return cand;
    return std::nullopt;
}

IntPoly IntPoly::inverse_trace() const {
    // t^n f(t + 1/t) = sum_i f_i t^(n-i) (t^2+1)^i
    if (is_zero()) return IntPoly();
    int n = degree();
    IntPoly t2p1{1, 0, 1};
    IntPoly acc;
    IntPoly pw = IntPoly::constant(1);
    for (int i = 0; i <= n; ++i) {
        if (sign(c_[i]) != 0) acc = acc + pw.shifted_up(n - i) * c_[i];
        if (i < n) pw = pw * t2p1;
    }
    return acc;
}

IntPoly IntPoly::symmetric_decompose() const {
    if (is_zero() || degree() % 2 != 0 || reversed() != *this)
        throw std::invalid_argument("symmetric_decompose: not reciprocal of even degree");
    int m = degree() / 2;
    // p / t^m = a_m + sum_{k=1..m} a_{m+k} (t^k + t^-k), and
    // t^k + t^-k = u_k(y) with u_0 = 2, u_1 = y, u_{k+1} = y u_k - u_{k-1}.
    IntPoly y = IntPoly::variable();
    IntPoly ukm1 = IntPoly::constant(2), uk = y;
    IntPoly g = IntPoly::constant(c_[m]);
    for (int k = 1; k <= m; ++k) {
        if (sign(c_[m + k]) != 0) g = g + uk * c_[m + k];
        IntPoly next = y * uk - ukm1;
        ukm1 = uk;
        uk = next;
    }
    return g;
}

// ---------------------------------------------------------------------------

RatPoly::RatPoly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }

RatPoly::RatPoly(const IntPoly& p) {
    c_.reserve(p.ascending().size());
    for (const auto& v : p.ascending()) c_.emplace_back(v);
}

void RatPoly::trim() {
    while (!c_.empty() && sign(c_.back()) == 0) c_.pop_back();
}

const Rat& RatPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZeroRat;
    return c_[i];
}

const Rat& RatPoly::leading() const {
    if (c_.empty()) return kZeroRat;
    return c_.back();
}

RatPoly RatPoly::operator-() const {
    RatPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& k) const {
    RatPoly r = *this;
    for (auto& v : r.c_) v *= k;
    r.trim();
    return r;
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc = 0;
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    RatPoly r = *this;
    Rat inv = 1 / leading();
    for (auto& v : r.c_) v *= inv;
    return r;
}

void RatPoly::divrem(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
    if (b.is_zero()) throw std::invalid_argument("RatPoly::divrem: zero divisor");
    std::vector<Rat> rem = a.c_;
    int da = a.degree(), db = b.degree();
    if (da < db) {
        q = RatPoly();
        r = a;
        return;
    }
    std::vector<Rat> qq(da - db + 1, Rat(0));
    for (int k = da - db; k >= 0; --k) {
        Rat c = rem[k + db] / b.leading();
        qq[k] = c;
        if (sign(c) == 0) continue;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b.c_[i];
    }
    q = RatPoly(std::move(qq));
    r = RatPoly(std::move(rem));
}

bool RatPoly::divides(const RatPoly& a) const {
    if (is_zero()) return a.is_zero();
    RatPoly q, r;
    divrem(a, *this, q, r);
    return r.is_zero();
}

IntPoly RatPoly::clear_denominators() const {
    if (is_zero()) return IntPoly();
    Int l = 1;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) {
        Rat scaled = c_[i] * Rat(l);
        r[i] = scaled.get_num();
    }
    return IntPoly(std::move(r)).primitive_part();
}

bool RatPoly::is_integral() const {
    for (const auto& v : c_)
        if (v.get_den() != 1) return false;
    return true;
}

IntPoly RatPoly::to_int() const {
    if (!is_integral()) throw std::logic_error("RatPoly::to_int: non-integral");
    std::vector<Int> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i].get_num();
    return IntPoly(std::move(r));
}

}  // namespace biperron
