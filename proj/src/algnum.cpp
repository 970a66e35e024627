#include "biperron/algnum.hpp"

#include <algorithm>

#include "biperron/factor.hpp"
#include "biperron/numberfield.hpp"
#include "biperron/resultant.hpp"
#include "biperron/rootcert.hpp"

namespace biperron {

namespace {

std::optional<AlgebraicReal> largest_real_root(const IntPoly& irreducible) {
    auto ivs = isolate_real_roots(irreducible);
    if (ivs.empty()) return std::nullopt;
    return AlgebraicReal(irreducible, ivs.back().first, ivs.back().second);
}

/// Strict window check on every nonreal conjugate: modulus in (win_lo,
/// win_hi); win_lo absent means only the upper side. Callers must have
/// excluded exact-equality cases (companion gcd tests), so the refinement
/// loop terminates (or hits the precision cap on library misuse).
bool complex_moduli_strictly_inside(const IntPoly& p, const AlgebraicReal* win_lo,
                                    const AlgebraicReal& win_hi) {
    RootPicture pic(p);
    if (pic.complex_disks().empty()) return true;
    while (true) {
        bool all_inside = true;
        for (const auto& d : pic.complex_disks()) {
            if (d.modulus_lo > win_hi.upper()) return false;   // certainly above
            if (win_lo && d.modulus_hi < win_lo->lower()) return false;  // certainly below
            bool hi_ok = d.modulus_hi < win_hi.lower();
            bool lo_ok = !win_lo || d.modulus_lo > win_lo->upper();
            if (!(hi_ok && lo_ok)) all_inside = false;
        }
        if (all_inside) return true;
        win_hi.refine();
        if (win_lo) win_lo->refine();
        pic.refine();
    }
}

}  // namespace

Classification classify(const IntPoly& input) {
    IntPoly p = input.primitive_part();
    if (p.degree() < 1) throw std::invalid_argument("classify: degree must be >= 1");
    if (!is_irreducible(p)) throw std::invalid_argument("classify: reducible polynomial");

    Classification c;
    c.is_reciprocal = p.is_reciprocal();
    c.has_minus_inverse_conjugate = p.is_minus_reciprocal();
    c.totally_real = sturm_count_all(p) == p.degree();
    if (sign(p.constant_term()) != 0) {
        IntPoly tracep = p.trace_poly().squarefree_part();
        c.conjugates_in_s1_union_r = sturm_count_all(tracep) == tracep.degree();
    } else {
        c.conjugates_in_s1_union_r = true;  // p == t, single conjugate 0
    }
    c.leading_root = largest_real_root(p);

    bool monic = p.is_monic();
    c.is_unit = monic && abs(p.constant_term()) == 1;

    if (!c.leading_root || !monic) return c;
    const AlgebraicReal& lambda = *c.leading_root;
    if (lambda.compare_rat(Rat(1)) <= 0) return c;
    if (p.degree() == 1) {
        c.is_perron = true;  // an integer > 1 has no other conjugates
        return c;            // |constant| > 1, so never a unit / bi-Perron
    }

    // -lambda conjugate (p(-t) = +-p) puts a conjugate at modulus lambda.
    bool mirror_self = p.is_mirror_symmetric();

    NumberField K(p);
    auto gen = K.generator();
    auto lam_sq = K.mul(gen, gen);

    // Roots z != lambda with lambda^2/z also a root force max(|z|,|w|) >=
    // lambda; their absence makes every strict comparison below resolvable.
    bool top_equalities_clear = !mirror_self && companion_gcd_degree(K, p, lam_sq) == 1;

    bool top_ok = top_equalities_clear;
    if (top_ok) {
        auto ivs = isolate_real_roots(p);
        for (size_t i = 0; i + 1 < ivs.size() && top_ok; ++i) {
            AlgebraicReal r(p, ivs[i].first, ivs[i].second);
            if (r.abs().compare(lambda) >= 0) top_ok = false;
        }
    }
    if (top_ok) top_ok = complex_moduli_strictly_inside(p, nullptr, lambda);
    c.is_perron = top_ok;

    if (!c.is_unit || !top_ok) return c;

    // bottom side for bi-Perron: exceptions +-1/lambda, at most one
    int exceptions = (c.is_reciprocal ? 1 : 0) + (c.has_minus_inverse_conjugate ? 1 : 0);
    if (exceptions > 1) return c;  // both +1/lambda and -1/lambda present

    auto lam_sq_inv = K.inv(lam_sq);
    int bottom_matches = companion_gcd_degree(K, p, lam_sq_inv);
    if (bottom_matches != exceptions) return c;  // some |z| <= 1/lambda beyond the exception

    AlgebraicReal inv_lambda = lambda.inverse();
    AlgebraicReal minus_inv_lambda = inv_lambda.negated();
    bool bottom_ok = true;
    auto ivs = isolate_real_roots(p);
    for (size_t i = 0; i + 1 < ivs.size() && bottom_ok; ++i) {
        AlgebraicReal r(p, ivs[i].first, ivs[i].second);
        if (c.is_reciprocal && r.compare(inv_lambda) == 0) continue;  // the allowed exception
        if (c.has_minus_inverse_conjugate && r.compare(minus_inv_lambda) == 0) continue;
        if (r.abs().compare(inv_lambda) <= 0) bottom_ok = false;
    }
    if (bottom_ok)
        bottom_ok = complex_moduli_strictly_inside(p, &inv_lambda, lambda);
    c.is_bi_perron = bottom_ok;

    // Salem: reciprocal bi-Perron whose non-exceptional conjugates all sit
    // exactly on the unit circle (so at least one exists: degree >= 4).
    if (c.is_bi_perron && c.is_reciprocal && p.degree() >= 4 && c.conjugates_in_s1_union_r) {
        IntPoly tracep = p.trace_poly().squarefree_part();
        SturmChain chain(tracep);
        Rat two(2), mtwo(-2);
        if (tracep.sign_at(two) != 0 && tracep.sign_at(mtwo) != 0 &&
            chain.count_above(two) == 1 && chain.count_below(mtwo) == 0)
            c.is_salem = true;
    }
    return c;
}

IntPoly minimal_poly_power(const IntPoly& input, int k) {
    IntPoly p = input.primitive_part();
    if (k < 1) throw std::invalid_argument("minimal_poly_power: k must be positive");
    if (!is_irreducible(p)) throw std::invalid_argument("minimal_poly_power: reducible input");
    auto lead = largest_real_root(p);
    if (!lead) throw std::invalid_argument("minimal_poly_power: no real root");
    IntPoly result = roots_power_poly(p, k).squarefree_part();
    // For an irreducible input the power roots form a single Galois orbit,
    // so the squarefree part is the minimal polynomial of lambda^k.
    if (!is_irreducible(result))
        throw std::logic_error("minimal_poly_power: squarefree resultant not irreducible");
    NumberField K(p);
    auto powk = K.pow(K.generator(), static_cast<unsigned>(k));
    // exact verification that lambda^k is a root
    NumberField::Elem acc = K.zero();
    for (int i = result.degree(); i >= 0; --i) {
        acc = K.mul(acc, powk);
        acc = K.add(acc, K.from_rat(Rat(result.coeff(i))));
    }
    if (!K.is_zero(acc))
        throw std::logic_error("minimal_poly_power: verification failed");
    if (result.degree() != p.degree())
        throw std::invalid_argument(
            "minimal_poly_power: degree drop detected (leading root is not Perron)");
    return result;
}

IntPoly trace_power_minpoly(const IntPoly& input, int k) {
    IntPoly p = input.primitive_part();
    if (sign(p.constant_term()) == 0)
        throw std::invalid_argument("trace_power_minpoly: zero constant term");
    IntPoly pk = minimal_poly_power(p, k);
    IntPoly result = pk.trace_poly().squarefree_part();
    if (!is_irreducible(result))
        throw std::logic_error("trace_power_minpoly: squarefree trace not irreducible");
    return result;
}

TraceFieldReport trace_field_report(const IntPoly& input, int k_max) {
    IntPoly p = input.primitive_part();
    if (k_max < 1) throw std::invalid_argument("trace_field_report: k_max must be positive");
    if (!is_irreducible(p)) throw std::invalid_argument("trace_field_report: reducible input");
    int n = p.degree();
    bool minus_inverse = p.is_minus_reciprocal();
    TraceFieldReport rep;
    rep.k_range = k_max;
    if (n % 2 == 1) {
        if (minus_inverse) throw std::logic_error("odd degree cannot carry -1/lambda");
        rep.parity_case = ParityCase::OddDegree;
    } else {
        rep.parity_case = minus_inverse ? ParityCase::EvenWithMinusInverse
                                        : ParityCase::EvenNoMinusInverse;
    }
    for (int k = 1; k <= k_max; ++k) {
        int d = trace_power_minpoly(p, k).degree();
        rep.degrees[k] = d;
        if (n % d != 0)
            throw std::logic_error("trace_field_report: degree does not divide field degree");
    }
    // degree identities per parity case
    int d1 = rep.degrees.at(1);
    switch (rep.parity_case) {
        case ParityCase::OddDegree:
        case ParityCase::EvenNoMinusInverse:
            for (int k = 1; k <= k_max; ++k)
                if (rep.degrees.at(k) != d1)
                    throw std::logic_error("trace_field_report: degrees not all equal");
            break;
        case ParityCase::EvenWithMinusInverse:
            if (d1 != n) throw std::logic_error("trace_field_report: odd-trace degree mismatch");
            for (int k = 1; k <= k_max; ++k) {
                int expect = (k % 2 == 1) ? n : n / 2;
                if (rep.degrees.at(k) != expect)
                    throw std::logic_error("trace_field_report: parity degree identity failed");
            }
            break;
    }
    return rep;
}

const char* parity_case_name(ParityCase c) {
    switch (c) {
        case ParityCase::OddDegree:
            return "odd-degree";
        case ParityCase::EvenNoMinusInverse:
            return "even-no-minus-inverse";
        case ParityCase::EvenWithMinusInverse:
            return "even-with-minus-inverse";
    }
    return "?";
}

}  // namespace biperron
