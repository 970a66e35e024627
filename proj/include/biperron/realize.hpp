#ifndef BIPERRON_REALIZE_HPP
#define BIPERRON_REALIZE_HPP

#include <optional>
#include <set>
#include <string>

#include "biperron/graph.hpp"
#include "biperron/linalg.hpp"

namespace biperron {

/// Bounds for the bounded searches that stand in for the nonconstructive
/// existence results (symmetric-matrix realization, tree realization).
struct StepOneConfig {
    int max_dimension = 5;
    int max_entry = 6;
    std::set<int> allow_e = {0, 1, 2};
    int cayley_attempts = 64;
    int k_max = 60;
    int max_vertices = 12;  // tree search bound

    std::string cache_fingerprint() const;
};

struct SymmetricRealization {
    bool found = false;
    RatMat q;           // integer entries unless a Cayley conjugation fired
    int e = 0;          // charpoly(q) == f * (t-1)^e
    int cayley_index = -1;  // -1: no conjugation needed
    EigenvectorCertificate eigencert;
};

/// Search for a symmetric rational matrix with characteristic polynomial
/// f * (t-1)^e (e in cfg.allow_e, smallest dimension first) whose dominant
/// eigenvector is certified strictly positive. Deterministic: integer
/// symmetric candidates enumerated in descending row-major order of the
/// upper triangle, then Cayley conjugation retries in a fixed seed order.
SymmetricRealization find_symmetric_Q(const IntPoly& f, const StepOneConfig& cfg);

/// U^T q U for U = (I-S)(I+S)^{-1} with the skew-symmetric rational seed
/// S; the characteristic polynomial is unchanged.
RatMat cayley_orthogonal_conjugate(const RatMat& q, const RatMat& skew_seed);

/// M = [[Q, -I], [I, 0]]: doubles the dimension, det = 1, and
/// charpoly(M)(t) = t^n charpoly(Q)(t + 1/t).
RatMat build_M(const RatMat& q);

/// Q_k by the three-term recurrence Q_{k+1} = Q Q_k - Q_{k-1}, Q_0 = 2I,
/// Q_1 = Q; equals the diagonal block of M^k + M^{-k}.
RatMat block_Qk(const RatMat& q, int k);

struct RealizingK {
    bool found = false;
    int k = 0;
    RatMat qk;
    std::string diagnostics;  // set when exhausted
};

/// Minimal k <= k_max with Q_k entrywise positive with integer entries;
/// the spectral radius agreement with the independently computed minimal
/// polynomial of lambda^k + lambda^-k is asserted by the caller pipeline.
RealizingK find_realizing_k(const RatMat& q, int k_max);

struct HoffmanResult {
    bool found = false;
    Graph graph;
    std::string construction;  // "complete-bipartite", "bipartite-double", "inflation", "atlas"
    std::string failure;       // set when not realized within bounds
};

/// Bipartite simple graph whose adjacency spectral radius equals the
/// spectral radius of the nonnegative symmetric integer matrix, with the
/// exact divisibility certificate checked before returning. Explicit
/// failure (never silent) when the constructions exceed desk bounds.
HoffmanResult hoffman_bipartite(const IntMat& m);

struct TreeSearchResult {
    bool found = false;
    Graph tree;
    int vertices_tried = 0;
    std::string failure;
};

/// Smallest tree (canonical order) whose adjacency matrix has the given
/// totally real polynomial as an exact divisor of its characteristic
/// polynomial.
TreeSearchResult find_tree_with_eigenvalue(const IntPoly& mu_minpoly, int max_vertices);

/// Trace of one end-to-end symmetric-matrix realization.
struct PipelineTrace {
    IntPoly f;
    bool used_square = false;
    RatMat q;
    int e = 0;
    RatMat m;
    int k = 0;
    RatMat qk;
};

}  // namespace biperron

#endif
