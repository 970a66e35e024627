#include "biperron/sturm.hpp"

#include <algorithm>

namespace biperron {

SturmChain::SturmChain(const IntPoly& squarefree) : p_(squarefree.primitive_part()) {
    if (p_.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
    chain_.push_back(p_);
    if (p_.degree() == 0) return;
    chain_.push_back(p_.derivative().primitive_part());
    while (chain_.back().degree() > 0) {
        const IntPoly& a = chain_[chain_.size() - 2];
        const IntPoly& b = chain_.back();
        IntPoly q, r;
        IntPoly::pseudo_divrem(a, b, q, r);
        if (r.is_zero()) break;
        // pseudo-division scaled a by lc(b)^(da-db+1); force an even (hence
        // positive) scaling so remainder signs match the rational remainder
        int delta = a.degree() - b.degree() + 1;
        if (delta % 2 == 1 && sign(b.leading()) < 0) r = -r;
        chain_.push_back((-r).primitive_part());
    }
}

int SturmChain::variations_at(const Rat& x) const {
    int var = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at(x);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_neg_inf() const {
    int var = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at_neg_inf();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::variations_pos_inf() const {
    int var = 0, prev = 0;
    for (const auto& q : chain_) {
        int s = q.sign_at_pos_inf();
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_open(const Rat& lo, const Rat& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("sturm count: lo must be < hi");
    if (p_.sign_at(lo) == 0 || p_.sign_at(hi) == 0)
        throw std::invalid_argument("sturm count: endpoint is a root; perturb rationally");
    return variations_at(lo) - variations_at(hi);
}

int SturmChain::count_closed(const Rat& lo, const Rat& hi) const {
    if (!(lo <= hi)) throw std::invalid_argument("sturm count: lo must be <= hi");
    // Deflate exact rational roots sitting at the endpoints (they are
    // simple: the chain is built from a squarefree polynomial), then count
    // the open interval on what is left.
    IntPoly q = p_;
    int hits = 0;
    for (const Rat& e : {lo, hi}) {
        if (hits == 1 && lo == hi) break;
        if (q.sign_at(e) == 0) {
            ++hits;
            IntPoly lin(std::vector<Int>{-e.get_num(), e.get_den()});  // den*t - num
            auto quotient = lin.primitive_part().exact_divide(q.primitive_part());
            if (!quotient) throw std::logic_error("count_closed: endpoint deflation failed");
            q = *quotient;
        }
    }
    if (lo == hi) return hits;
    if (q.degree() == 0) return hits;
    return hits + SturmChain(q).count_open(lo, hi);
}

int SturmChain::count_all() const { return variations_neg_inf() - variations_pos_inf(); }

int SturmChain::count_below(const Rat& x) const {
    if (p_.sign_at(x) == 0)
        throw std::invalid_argument("sturm count: endpoint is a root; perturb rationally");
    return variations_neg_inf() - variations_at(x);
}

int SturmChain::count_above(const Rat& x) const {
    if (p_.sign_at(x) == 0)
        throw std::invalid_argument("sturm count: endpoint is a root; perturb rationally");
    return variations_at(x) - variations_pos_inf();
}

int sturm_count(const IntPoly& squarefree, const Rat& lo, const Rat& hi) {
    return SturmChain(squarefree).count_open(lo, hi);
}

int sturm_count_all(const IntPoly& squarefree) { return SturmChain(squarefree).count_all(); }

std::vector<std::pair<Rat, Rat>> isolate_real_roots(const IntPoly& squarefree) {
    std::vector<std::pair<Rat, Rat>> out;
    if (squarefree.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    if (squarefree.degree() == 0) return out;
    SturmChain chain(squarefree);
    const IntPoly& p = chain.polynomial();
    // Cauchy bound: all roots have |z| < 1 + max|c_i| / |lc|
    Rat bound = Rat(p.height()) / Rat(abs(p.leading())) + 2;
    // make the initial endpoints non-roots (they are: |roots| < bound)
    struct Seg {
        Rat lo, hi;
        int count;
    };
    int total = chain.count_open(-bound, bound);
    std::vector<Seg> stack{{-bound, bound, total}};
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1) {
            out.emplace_back(s.lo, s.hi);
            continue;
        }
        Rat mid = (s.lo + s.hi) / 2;
        while (p.sign_at(mid) == 0) {
            // exact rational root at the midpoint; shift the cut point
            mid = (s.lo + 2 * mid) / 3;
        }
        int left = chain.count_open(s.lo, mid);
        stack.push_back({s.lo, mid, left});
        stack.push_back({mid, s.hi, s.count - left});
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void refine_interval(const IntPoly& p, Rat& lo, Rat& hi) {
    Rat mid = (lo + hi) / 2;
    int sm = p.sign_at(mid);
    if (sm == 0) {
        // rational root: tighten symmetrically around it
        Rat w = (hi - lo) / 8;
        Rat nl = mid - w, nh = mid + w;
        if (p.sign_at(nl) == 0 || p.sign_at(nh) == 0)
            throw std::logic_error("refine_interval: repeated root in interval");
        lo = nl;
        hi = nh;
        return;
    }
    int sl = p.sign_at(lo);
    if (sl == 0) throw std::invalid_argument("refine_interval: endpoint is a root");
    if (sl != sm)
        hi = mid;
    else
        lo = mid;
}

bool all_roots_in_closed(const IntPoly& p, const Rat& lo, const Rat& hi) {
    if (p.is_zero()) throw std::invalid_argument("all_roots_in_closed: zero polynomial");
    IntPoly sf = p.squarefree_part();
    if (sf.degree() == 0) return true;
    SturmChain chain(sf);
    return chain.count_all() == sf.degree() &&
           chain.count_closed(lo, hi) == sf.degree();
}

}  // namespace biperron
