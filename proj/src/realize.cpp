#include "biperron/realize.hpp"

#include <algorithm>
#include <sstream>

#include "biperron/factor.hpp"
#include "biperron/rootcert.hpp"

namespace biperron {

std::string StepOneConfig::cache_fingerprint() const {
    std::ostringstream out;
    out << "dim=" << max_dimension << ";entry=" << max_entry << ";e=";
    for (int e : allow_e) out << e << ",";
    out << ";cayley=" << cayley_attempts << ";kmax=" << k_max << ";verts=" << max_vertices;
    return out.str();
}

namespace {

long floor_of(const AlgebraicReal& a) {
    auto rat_floor = [](const Rat& x) {
        Int fl;
        mpz_fdiv_q(fl.get_mpz_t(), x.get_num().get_mpz_t(), x.get_den().get_mpz_t());
        return fl;
    };
    if (a.is_rational()) return rat_floor(a.rational_value()).get_si();
    // irrational: endpoint floors agree after finitely many refinements
    while (true) {
        Int flo = rat_floor(a.lower()), fhi = rat_floor(a.upper());
        if (flo == fhi) return flo.get_si();
        a.refine();
    }
}

/// deterministic recursive search over symmetric integer matrices
struct SymSearch {
    int dim;
    int max_entry;
    Int trace_target;
    long diag_lo, diag_hi;
    Int row_norm_bound;  // max allowed sum of squares per row
    const IntPoly& target;
    RatMat result;
    bool found = false;
    const std::function<bool(const RatMat&)>& accept;

    std::vector<std::vector<Int>> m;
    std::vector<Int> row_norm;
    Int diag_sum = 0;

    SymSearch(int n, int me, Int tt, long dlo, long dhi, Int rnb, const IntPoly& tgt,
              const std::function<bool(const RatMat&)>& acc)
        : dim(n), max_entry(me), trace_target(std::move(tt)), diag_lo(dlo), diag_hi(dhi),
          row_norm_bound(std::move(rnb)), target(tgt), accept(acc),
          m(n, std::vector<Int>(n, Int(0))), row_norm(n, Int(0)) {}

    bool fill(int i, int j) {
        if (found) return true;
        if (i == dim) {
            RatMat q(dim, dim);
            for (int a = 0; a < dim; ++a)
                for (int b = 0; b < dim; ++b) q(a, b) = Rat(m[a][b]);
            IntPoly cp = charpoly(q).clear_denominators();
            if (cp == target && accept(q)) {
                result = q;
                found = true;
                return true;
            }
            return false;
        }
        int ni = (j == dim - 1) ? i + 1 : i;
        int nj = (j == dim - 1) ? ni : j + 1;
        if (i == j) {
            // diagonal entry; the last one is forced by the trace
            if (i == dim - 1) {
                Int d = trace_target - diag_sum;
                long lo = std::max<long>(diag_lo, -max_entry);
                long hi = std::min<long>(diag_hi, max_entry);
                if (d < lo || d > hi) return false;
                Int norm = row_norm[i] + d * d;
                if (norm > row_norm_bound) return false;
                m[i][i] = d;
                row_norm[i] += d * d;
                diag_sum += d;
                bool r = fill(ni, nj);
                diag_sum -= d;
                row_norm[i] -= d * d;
                m[i][i] = 0;
                return r;
            }
            long lo = std::max<long>(diag_lo, -max_entry);
            long hi = std::min<long>(diag_hi, max_entry);
            for (long v = hi; v >= lo; --v) {
                Int vi(v);
                if (row_norm[i] + vi * vi > row_norm_bound) continue;
                m[i][i] = vi;
                row_norm[i] += vi * vi;
                diag_sum += vi;
                if (fill(ni, nj)) return true;
                diag_sum -= vi;
                row_norm[i] -= vi * vi;
                m[i][i] = 0;
            }
            return false;
        }
        for (long v = max_entry; v >= -max_entry; --v) {
            Int vi(v);
            Int sq = vi * vi;
            if (row_norm[i] + sq > row_norm_bound || row_norm[j] + sq > row_norm_bound) continue;
            m[i][j] = vi;
            m[j][i] = vi;
            row_norm[i] += sq;
            row_norm[j] += sq;
            if (fill(ni, nj)) return true;
            row_norm[i] -= sq;
            row_norm[j] -= sq;
            m[i][j] = 0;
            m[j][i] = 0;
        }
        return false;
    }
};

/// deterministic skew seeds for the Cayley retries
std::vector<RatMat> cayley_seeds(int n, int attempts) {
    static const std::vector<Rat> values = {make_rat(1, 2), make_rat(-1, 2), Rat(1), Rat(-1),
                                            make_rat(1, 3), make_rat(-1, 3), Rat(2), Rat(-2)};
    std::vector<RatMat> seeds;
    int pairs = n * (n - 1) / 2;
    // single nonzero entry first, then two, in lexicographic order
    for (size_t vi = 0; vi < values.size() && static_cast<int>(seeds.size()) < attempts; ++vi) {
        for (int p = 0; p < pairs && static_cast<int>(seeds.size()) < attempts; ++p) {
            RatMat s(n, n);
            int idx = 0;
            for (int a = 0; a < n && idx <= p; ++a)
                for (int b = a + 1; b < n && idx <= p; ++b, ++idx)
                    if (idx == p) {
                        s(a, b) = values[vi];
                        s(b, a) = -values[vi];
                    }
            seeds.push_back(std::move(s));
        }
    }
    for (size_t vi = 0; vi < values.size() && static_cast<int>(seeds.size()) < attempts; ++vi) {
        for (size_t vj = 0; vj < values.size() && static_cast<int>(seeds.size()) < attempts; ++vj) {
            for (int p = 0; p < pairs && static_cast<int>(seeds.size()) < attempts; ++p) {
                for (int r = p + 1; r < pairs && static_cast<int>(seeds.size()) < attempts; ++r) {
                    RatMat s(n, n);
                    int idx = 0;
                    for (int a = 0; a < n; ++a)
                        for (int b = a + 1; b < n; ++b, ++idx) {
                            if (idx == p) {
                                s(a, b) = values[vi];
                                s(b, a) = -values[vi];
                            } else if (idx == r) {
                                s(a, b) = values[vj];
                                s(b, a) = -values[vj];
                            }
                        }
                    seeds.push_back(std::move(s));
                }
            }
        }
    }
    return seeds;
}

AlgebraicReal dominant_root(const IntPoly& f) {
    auto ivs = isolate_real_roots(f.squarefree_part());
    if (ivs.empty()) throw std::invalid_argument("dominant root: no real roots");
    return AlgebraicReal::select_root(f, ivs.back().first, ivs.back().second);
}

}  // namespace

SymmetricRealization find_symmetric_Q(const IntPoly& f, const StepOneConfig& cfg) {
    if (f.degree() < 1) throw std::invalid_argument("find_symmetric_Q: constant polynomial");
    if (!f.is_monic()) throw std::invalid_argument("find_symmetric_Q: f must be monic");
    if (f.squarefree_part() != f.primitive_part())
        throw std::invalid_argument("find_symmetric_Q: f must be squarefree");
    if (sturm_count_all(f) != f.degree())
        throw std::invalid_argument("find_symmetric_Q: f must be totally real");
    AlgebraicReal dom = dominant_root(f);
    if (dom.compare_rat(Rat(2)) <= 0)
        throw std::invalid_argument("find_symmetric_Q: dominant root must exceed 2");

    SymmetricRealization out;
    for (int e : cfg.allow_e) {
        if (e < 0 || e > 2) continue;
        int dim = f.degree() + e;
        if (dim > cfg.max_dimension) continue;
        IntPoly target = f;
        IntPoly tm1{-1, 1};
        for (int i = 0; i < e; ++i) target = target * tm1;
        // eigenvalue box for the target spectrum
        auto ivs = isolate_real_roots(target.squarefree_part());
        AlgebraicReal lo_eig = AlgebraicReal::select_root(target, ivs.front().first, ivs.front().second);
        AlgebraicReal hi_eig = AlgebraicReal::select_root(target, ivs.back().first, ivs.back().second);
        long dlo = floor_of(lo_eig);
        long dhi = floor_of(hi_eig) + 1;
        AlgebraicReal lo_abs = lo_eig.abs();
        AlgebraicReal hi_abs = hi_eig.abs();
        const AlgebraicReal& big = (lo_abs.compare(hi_abs) >= 0) ? lo_abs : hi_abs;
        big.refine_to_width(make_rat(1, 64));
        Rat b2 = big.upper() * big.upper();
        Int row_bound = b2.get_num() / b2.get_den() + 1;
        Int trace_target = -target.coeff(target.degree() - 1);

        // positivity acceptance, with Cayley retries per charpoly match
        int match_cayley = -1;
        EigenvectorCertificate match_cert;
        RatMat match_q;
        std::function<bool(const RatMat&)> accept = [&](const RatMat& q) {
            auto cert = certified_positive_eigenvector(q, dom);
            if (cert.strictly_positive) {
                match_cayley = -1;
                match_cert = cert;
                match_q = q;
                return true;
            }
            auto seeds = cayley_seeds(dim, cfg.cayley_attempts);
            for (size_t s = 0; s < seeds.size(); ++s) {
                RatMat conj;
                try {
                    conj = cayley_orthogonal_conjugate(q, seeds[s]);
                } catch (const std::invalid_argument&) {
                    continue;  // singular I + S
                }
                auto c2 = certified_positive_eigenvector(conj, dom);
                if (c2.strictly_positive) {
                    match_cayley = static_cast<int>(s);
                    match_cert = c2;
                    match_q = conj;
                    return true;
                }
            }
            return false;
        };

        SymSearch search(dim, cfg.max_entry, trace_target, dlo, dhi, row_bound, target, accept);
        if (search.fill(0, 0)) {
            out.found = true;
            out.q = match_q;
            out.e = e;
            out.cayley_index = match_cayley;
            out.eigencert = match_cert;
            return out;
        }
    }
    return out;
}

RatMat cayley_orthogonal_conjugate(const RatMat& q, const RatMat& skew_seed) {
    int n = q.rows();
    if (skew_seed.rows() != n || skew_seed.cols() != n)
        throw std::invalid_argument("cayley: seed shape mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (skew_seed(i, j) != -skew_seed(j, i))
                throw std::invalid_argument("cayley: seed not skew-symmetric");
    RatMat id = RatMat::identity(n);
    RatMat ips = id + skew_seed;
    RatMat u = (id - skew_seed) * inverse(ips);  // throws on singular I + S
    return u.transposed() * q * u;
}

RatMat build_M(const RatMat& q) {
    if (!q.is_square()) throw std::invalid_argument("build_M: not square");
    int n = q.rows();
    RatMat m(2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = q(i, j);
        m(i, n + i) = Rat(-1);
        m(n + i, i) = Rat(1);
    }
    // contract: det(M) = 1 and charpoly(M)(t) = t^n charpoly(Q)(t + 1/t)
    if (det(m) != 1) throw std::logic_error("build_M: determinant is not 1");
    RatPoly cpq = charpoly(q);
    if (!cpq.is_integral()) throw std::logic_error("build_M: charpoly(Q) non-integral");
    IntPoly expected = cpq.to_int().inverse_trace();
    RatPoly cpm = charpoly(m);
    if (!cpm.is_integral() || cpm.to_int() != expected)
        throw std::logic_error("build_M: characteristic polynomial identity failed");
    return m;
}

RatMat block_Qk(const RatMat& q, int k) {
    if (!q.is_square()) throw std::invalid_argument("block_Qk: not square");
    if (k < 0) throw std::invalid_argument("block_Qk: negative k");
    int n = q.rows();
    RatMat prev = RatMat::identity(n) * Rat(2);  // Q_0
    if (k == 0) return prev;
    RatMat cur = q;  // Q_1
    for (int i = 1; i < k; ++i) {
        RatMat next = q * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

RealizingK find_realizing_k(const RatMat& q, int k_max) {
    RealizingK out;
    int n = q.rows();
    RatMat prev = RatMat::identity(n) * Rat(2);
    RatMat cur = q;
    for (int k = 1; k <= k_max; ++k) {
        bool ok = is_integral(cur);
        if (ok) {
            for (int i = 0; i < n && ok; ++i)
                for (int j = 0; j < n && ok; ++j)
                    if (sign(cur(i, j)) <= 0) ok = false;
        }
        if (ok) {
            out.found = true;
            out.k = k;
            out.qk = cur;
            return out;
        }
        RatMat next = q * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    std::ostringstream diag;
    diag << "no positive integer Q_k for k <= " << k_max
         << "; the dominant-to-second eigenvalue ratio grows like (lambda/|lambda_2|)^k,"
         << " so a larger k_max eventually succeeds for valid inputs";
    out.diagnostics = diag.str();
    return out;
}

namespace {

bool hoffman_certificate(const IntMat& m, const Graph& g) {
    AlgebraicReal rho_m = spectral_radius(m);
    IntPoly cp_g = charpoly(g.adjacency_matrix());
    if (!rho_m.minpoly().divides(cp_g)) return false;
    AlgebraicReal rho_g = spectral_radius(g.adjacency_matrix());
    return rho_g.compare(rho_m) == 0;
}

}  // namespace

HoffmanResult hoffman_bipartite(const IntMat& m) {
    HoffmanResult out;
    if (!m.is_square() || !m.is_symmetric())
        throw std::invalid_argument("hoffman_bipartite: matrix must be symmetric");
    int n = m.rows();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (sign(m(i, j)) < 0)
                throw std::invalid_argument("hoffman_bipartite: entries must be nonnegative");

    auto finish = [&](Graph g, const char* how) {
        if (hoffman_certificate(m, g)) {
            out.found = true;
            out.graph = std::move(g);
            out.construction = how;
            return true;
        }
        return false;
    };

    if (n == 1) {
        if (m(0, 0) > 31) {
            out.failure = "entry too large for the complete-bipartite construction";
            return out;
        }
        long c = m(0, 0).get_si();
        if (c == 0) {
            Graph g(1);
            if (finish(g, "single-vertex")) return out;
        } else {
            if (finish(complete_bipartite(static_cast<int>(c), static_cast<int>(c)),
                       "complete-bipartite"))
                return out;
        }
    } else {
        bool zero_one = true;
        Int maxe = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (m(i, j) > 1) zero_one = false;
                if (m(i, j) > maxe) maxe = m(i, j);
            }
        if (zero_one) {
            Graph g(2 * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (m(i, j) == 1) g.add_edge(i, n + j);
            if (finish(g, "bipartite-double")) return out;
        } else {
            // inflation: bipartite double quotient with N-fold equitable
            // blow-up, circulant biregular blocks of the required degrees
            long N = maxe.get_si();
            long total = 2LL * n * N;
            if (maxe > 31 || total > 64) {
                out.failure = "inflation exceeds the 64-vertex desk bound";
                return out;
            }
            Graph g(static_cast<int>(total));
            auto vertex = [&](int side, int cls, long copy) {
                return static_cast<int>((side * n + cls) * N + copy);
            };
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    long w = m(i, j).get_si();
                    for (long a = 0; a < N; ++a)
                        for (long t = 0; t < w; ++t)
                            g.add_edge(vertex(0, i, a), vertex(1, j, (a + t) % N));
                }
            if (finish(g, "inflation")) return out;
        }
    }
    // bounded fallback: smallest connected bipartite graph that certifies
    for (const Graph& g : connected_bipartite_atlas(8)) {
        if (finish(g, "atlas")) return out;
    }
    if (out.failure.empty()) out.failure = "no bipartite realization within the search bounds";
    return out;
}

TreeSearchResult find_tree_with_eigenvalue(const IntPoly& mu_minpoly, int max_vertices) {
    TreeSearchResult out;
    IntPoly mu = mu_minpoly.primitive_part();
    if (mu.degree() < 1) throw std::invalid_argument("tree search: constant polynomial");
    if (sturm_count_all(mu.squarefree_part()) != mu.squarefree_part().degree())
        throw std::invalid_argument("tree search: polynomial is not totally real");
    if (max_vertices < 1 || max_vertices > 20)
        throw std::invalid_argument("tree search: vertex bound out of range");
    auto ivs = isolate_real_roots(mu.squarefree_part());
    AlgebraicReal lo = AlgebraicReal::select_root(mu, ivs.front().first, ivs.front().second);
    AlgebraicReal hi = AlgebraicReal::select_root(mu, ivs.back().first, ivs.back().second);
    AlgebraicReal biggest = (lo.abs().compare(hi.abs()) >= 0) ? lo.abs() : hi.abs();

    for (const Graph& t : tree_atlas(max_vertices)) {
        ++out.vertices_tried;
        // spectral radius of a graph is at most its maximum degree; skip
        // trees that certainly cannot carry the required eigenvalue
        int maxdeg = 0;
        for (int v = 0; v < t.n; ++v) maxdeg = std::max(maxdeg, t.degree(v));
        if (biggest.compare_rat(Rat(maxdeg)) > 0 && t.n > 1) continue;
        if (mu.divides(charpoly(t.adjacency_matrix()))) {
            out.found = true;
            out.tree = t;
            return out;
        }
    }
    std::ostringstream diag;
    diag << "no tree on <= " << max_vertices
         << " vertices carries the eigenvalue; existence is guaranteed only at some size,"
         << " so enlarge the bound";
    out.failure = diag.str();
    return out;
}

}  // namespace biperron
