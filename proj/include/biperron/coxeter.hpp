#ifndef BIPERRON_COXETER_HPP
#define BIPERRON_COXETER_HPP

#include <string>
#include <vector>

#include "biperron/algebraic.hpp"
#include "biperron/graph.hpp"
#include "biperron/linalg.hpp"

namespace biperron {

/// Bipartite Coxeter transformation of a simply-laced diagram (every edge
/// weight 3, so the Coxeter adjacency matrix is the plain adjacency
/// matrix). Reflections act on the simple-root basis by
/// e_j -> e_j - C_ij e_i with Cartan matrix C = 2I - A; the matrix is the
/// product of all part-one reflections followed by all part-two
/// reflections (reflections within a part commute).
struct CoxeterTransform {
    Graph graph;
    Bipartition parts;
    IntMat cartan;
    IntMat matrix;
};

CoxeterTransform coxeter_transform(const Graph& g);

/// Exact verification that Coxeter eigenvalues pair with adjacency
/// eigenvalues under alpha^2 - 2 = lambda + 1/lambda: the polynomial
/// identity prod_i (x^2 - (alpha_i^2 - 2) x + 1) == charpoly(Coxeter)^2,
/// plus a decimal pairing witness for human consumption.
struct SpectraRelationReport {
    bool verified = false;
    /// one entry per adjacency eigenvalue: (alpha approx, lambda approx);
    /// residual of the defining relation is exactly zero when verified
    std::vector<std::pair<std::string, std::string>> pairing;
    std::string residual_bound;  // decimal upper bound, "0" when exact
};

SpectraRelationReport verify_spectra_relation(const Graph& g);

AlgebraicReal coxeter_spectral_radius(const Graph& g);

/// Trees only: every Coxeter eigenvalue lies in S^1 or in the positive
/// reals (exact: squarefree trace polynomial totally real and no negative
/// real eigenvalue).
bool acampo_check(const Graph& tree);

}  // namespace biperron

#endif
