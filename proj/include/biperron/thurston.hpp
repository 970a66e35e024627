#ifndef BIPERRON_THURSTON_HPP
#define BIPERRON_THURSTON_HPP

#include <optional>
#include <string>
#include <vector>

#include "biperron/algnum.hpp"
#include "biperron/coxeter.hpp"
#include "biperron/numberfield.hpp"
#include "biperron/realize.hpp"

namespace biperron {

/// Product [[1, r], [0, 1]] * [[1, 0], [-r, 1]] = [[1 - r^2, r], [-r, 1]]
/// computed exactly in Q(r). For r > 2 the product is of Anosov type and
/// the stretch factor (spectral radius) satisfies x + 1/x = r^2 - 2; for
/// r <= 2 the eigenvalues are unimodular and the outcome is explicitly
/// non-pseudo-Anosov.
struct ThurstonProduct {
    AlgebraicReal r;
    std::vector<std::vector<Rat>> matrix_entries;  // 2x2 over Q(r), coeff vectors
    std::vector<Rat> trace;                        // 2 - r^2 as an element of Q(r)
    bool pseudo_anosov = false;
    std::optional<AlgebraicReal> stretch;
    bool identities_verified = false;  // det = 1, x * x^-1 = 1, x + 1/x = r^2 - 2
};

ThurstonProduct thurston_product(const AlgebraicReal& r);

enum class RealizeStatus { Found, Inconclusive, PreconditionViolation };

struct CheckEntry {
    std::string name;
    bool pass = false;
};

/// Full witness chain for one bi-Perron input: classification, the
/// symmetric-matrix realization, the bipartite graph, the Coxeter spectral
/// radius and the Thurston product, all tied together by exact
/// minimal-polynomial identities.
struct RealizationCertificate {
    IntPoly input;
    Classification classification;
    bool used_square = false;
    PipelineTrace pipeline;
    EigenvectorCertificate eigencert;
    int cayley_index = -1;
    Graph graph;
    std::string graph_construction;
    IntPoly coxeter_radius_minpoly;
    AlgebraicReal coxeter_radius;
    ThurstonProduct thurston;
    int power_realized = 0;
    std::vector<CheckEntry> checks;
};

struct RealizeOutcome {
    RealizeStatus status = RealizeStatus::Inconclusive;
    std::string failing_step;
    std::optional<RealizationCertificate> certificate;
};

RealizeOutcome realize_biperron(const IntPoly& p, const StepOneConfig& cfg);

/// Tree realization for a conjugate of a bi-Perron number (squares only):
/// a tree whose Coxeter transformation has lambda^2 as an eigenvalue.
struct TreeRealization {
    RealizeStatus status = RealizeStatus::Inconclusive;
    std::string failing_step;
    IntPoly input;
    IntPoly mu_minpoly;       // minpoly of lambda + 1/lambda
    IntPoly lambda2_minpoly;  // minpoly of lambda^2
    Graph tree;
    bool eigenvalue_verified = false;
    int max_vertices = 0;
};

TreeRealization realize_conjugate_tree(const IntPoly& p, int max_vertices);

struct GeneratorConfig {
    int max_degree = 3;
    int max_height = 8;
};

struct SmallBiPerronEntry {
    IntPoly minpoly;
    AlgebraicReal value;
    IntPoly seed;  // the window polynomial it came from
};

struct SmallBiPerronBatch {
    Rat epsilon;
    AlgebraicReal bound;  // 1 + eps + sqrt(2 eps + eps^2)
    std::vector<SmallBiPerronEntry> found;  // sorted ascending by value
};

/// Enumerate monic integer seeds with all roots in [-2+eps, 2+2eps] and
/// leading root in (2, 2+2eps], lift through t^n p(t + 1/t), and keep every
/// maximal real root that verifies bi-Perron with conjugates in
/// S^1 union R_{>0} and value strictly below the bound.
SmallBiPerronBatch generate_small_biperron(const Rat& epsilon, const GeneratorConfig& cfg);

/// Exact window enumeration used by the generator: monic polynomials of
/// the given degree, coefficients bounded by height, all roots real inside
/// [lo, hi] (derivative-chain pruning, Sturm tests).
std::vector<IntPoly> monic_polys_with_roots_in(int degree, int height, const Rat& lo, const Rat& hi);

}  // namespace biperron

#endif
