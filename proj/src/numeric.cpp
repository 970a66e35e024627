#include "biperron/numeric.hpp"

#include <sstream>

namespace biperron {

Int isqrt_floor(const Int& n) {
    if (sign(n) < 0) throw std::invalid_argument("isqrt_floor: negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

void sqrt_enclosure(const Rat& q, int bits, Rat& lo, Rat& hi) {
    if (sign(q) < 0) throw std::invalid_argument("sqrt_enclosure: negative");
    if (sign(q) == 0) {
        lo = 0;
        hi = 0;
        return;
    }
    // sqrt(a/b) = sqrt(a*b)/b; scale by 4^bits for precision.
    Int a = q.get_num(), b = q.get_den();
    Int scale = Int(1) << bits;
    Int s = isqrt_floor(a * b * scale * scale);
    lo = make_rat(s, b * scale);
    hi = make_rat(s + 1, b * scale);
}

std::string rat_to_string(const Rat& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

std::string decimal_string(const Rat& x, int digits) {
    if (digits < 1) digits = 1;
    if (sign(x) == 0) return "0";
    std::string out = sign(x) < 0 ? "-" : "";
    Int a = abs(x.get_num()), b = x.get_den();
    // exponent e with 10^e <= a/b < 10^(e+1)
    int e = 0;
    if (a >= b) {
        Int t = a / b;
        e = static_cast<int>(mpz_sizeinbase(t.get_mpz_t(), 10)) - 1;
        // sizeinbase may overestimate by one digit
        Int p10;
        mpz_ui_pow_ui(p10.get_mpz_t(), 10, e);
        if (t < p10) --e;
    } else {
        while (true) {
            ++e;
            Int p10;
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, e);
            if (a * p10 >= b) break;
        }
        e = -e;
    }
    // mantissa rounded to `digits` digits: round(a * 10^(digits-1-e) / b)
    auto mantissa = [&](int exp10) {
        Int num = a, den = b;
        int k = digits - 1 - exp10;
        Int p10;
        if (k >= 0) {
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, k);
            num *= p10;
        } else {
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, -k);
            den *= p10;
        }
        Int qq, rr;
        mpz_fdiv_qr(qq.get_mpz_t(), rr.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        if (rr * 2 >= den) ++qq;
        return qq;
    };
    Int m = mantissa(e);
    Int limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 10, digits);
    if (m >= limit) {  // rounded up across a power of ten
        ++e;
        m = mantissa(e);
    }
    std::string digs = m.get_str();
    while ((int)digs.size() < digits) digs = "0" + digs;  // defensive
    // plain fixed notation
    std::string res;
    if (e >= digits - 1) {
        res = digs + std::string(e - digits + 1, '0');
    } else if (e >= 0) {
        res = digs.substr(0, e + 1) + "." + digs.substr(e + 1);
    } else {
        res = "0." + std::string(-e - 1, '0') + digs;
    }
    // trim trailing zeros after a decimal point (keep at least one digit)
    if (res.find('.') != std::string::npos) {
        size_t last = res.find_last_not_of('0');
        if (res[last] == '.') --last;
        res.erase(last + 1);
    }
    return out + res;
}

double to_double(const Rat& x) { return x.get_d(); }

}  // namespace biperron
