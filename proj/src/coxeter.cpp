#include "biperron/coxeter.hpp"

#include "biperron/resultant.hpp"
#include "biperron/rootcert.hpp"

namespace biperron {

CoxeterTransform coxeter_transform(const Graph& g) {
    auto bp = bipartition(g);
    if (!bp.parts) throw std::invalid_argument("coxeter_transform: graph is not bipartite");
    int n = g.n;
    CoxeterTransform t;
    t.graph = g;
    t.parts = *bp.parts;
    IntMat a = g.adjacency_matrix();
    t.cartan = IntMat::identity(n) * Int(2) - a;

    auto reflection = [&](int i) {
        IntMat s = IntMat::identity(n);
        for (int j = 0; j < n; ++j) s(i, j) = (i == j ? Int(1) : Int(0)) - t.cartan(i, j);
        return s;
    };
    IntMat m = IntMat::identity(n);
    for (int v : t.parts.part0) m = m * reflection(v);
    for (int v : t.parts.part1) m = m * reflection(v);
    t.matrix = m;
    return t;
}

SpectraRelationReport verify_spectra_relation(const Graph& g) {
    CoxeterTransform t = coxeter_transform(g);
    IntPoly adj_cp = charpoly(g.adjacency_matrix());
    IntPoly cox_cp = charpoly(t.matrix);

    // prod over adjacency eigenvalues of (x^2 - (alpha^2 - 2) x + 1):
    // q(z, x) = -x z^2 + (x^2 + 2x + 1) as a polynomial in z
    std::vector<IntPoly> q(3);
    q[0] = IntPoly{1, 2, 1};
    q[1] = IntPoly();
    q[2] = IntPoly{0, -1};
    IntPoly lhs = resultant_eliminate(adj_cp, q);
    IntPoly rhs = cox_cp * cox_cp;

    SpectraRelationReport rep;
    rep.verified = (lhs == rhs);
    rep.residual_bound = rep.verified ? "0" : "unverified";

    // decimal pairing witness: alpha -> the eigenvalue lambda with
    // lambda + 1/lambda = alpha^2 - 2 (larger solution shown)
    IntPoly adj_sf = adj_cp.squarefree_part();
    for (auto& [lo, hi] : isolate_real_roots(adj_sf)) {
        AlgebraicReal alpha = AlgebraicReal::select_root(adj_sf, lo, hi);
        double av = alpha.to_double();
        double y = av * av - 2;
        double disc = y * y - 4;
        std::string lam;
        if (disc >= 0) {
            double root = (y + std::sqrt(disc)) / 2;
            lam = decimal_string(Rat(root), 8);
        } else {
            double re = y / 2, im = std::sqrt(-disc) / 2;
            lam = decimal_string(Rat(re), 8) + "+" + decimal_string(Rat(im), 8) + "i";
        }
        rep.pairing.emplace_back(alpha.decimal(8), lam);
    }
    return rep;
}

AlgebraicReal coxeter_spectral_radius(const Graph& g) {
    CoxeterTransform t = coxeter_transform(g);
    return spectral_radius(t.matrix);
}

bool acampo_check(const Graph& tree) {
    if (!tree.is_tree()) throw std::invalid_argument("acampo_check: input is not a tree");
    CoxeterTransform t = coxeter_transform(tree);
    IntPoly cp = charpoly(t.matrix);
    IntPoly sf = cp.squarefree_part();
    // eigenvalues in S^1 union R_{>0}: trace polynomial totally real
    // (eigenvalues in S^1 union R) and no negative real eigenvalue other
    // than the unimodular -1
    if (sign(sf.constant_term()) == 0) return false;  // 0 eigenvalue: det must be +-1
    IntPoly tr = sf.trace_poly().squarefree_part();
    if (sturm_count_all(tr) != tr.degree()) return false;
    // negative real eigenvalues: count roots of sf in (-inf, 0), excluding -1
    IntPoly shifted = sf;  // deflate -1 if present
    Rat minus_one(-1);
    if (shifted.sign_at(minus_one) == 0) {
        IntPoly lin{1, 1};
        auto quo = lin.exact_divide(shifted.primitive_part());
        if (!quo) throw std::logic_error("acampo_check: deflation failed");
        shifted = *quo;
        if (shifted.sign_at(minus_one) == 0) return false;  // -1 had multiplicity in sf
    }
    if (shifted.degree() == 0) return true;
    SturmChain chain(shifted);
    Rat zero(0);
    if (shifted.sign_at(zero) == 0) return false;
    return chain.count_below(zero) == 0;
}

}  // namespace biperron
