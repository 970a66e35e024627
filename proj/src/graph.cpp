#include "biperron/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

namespace biperron {

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge out of range");
    if (u == v) throw std::invalid_argument("loops are not allowed");
    adj[u] |= (1ull << v);
    adj[v] |= (1ull << u);
}

int Graph::edge_count() const {
    int c = 0;
    for (int v = 0; v < n; ++v) c += __builtin_popcountll(adj[v]);
    return c / 2;
}

int Graph::degree(int v) const { return __builtin_popcountll(adj[v]); }

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) e.emplace_back(u, v);
    return e;
}

bool Graph::is_connected() const {
    if (n == 0) return false;
    uint64_t seen = 1;
    std::deque<int> q{0};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        uint64_t fresh = adj[u] & ~seen;
        while (fresh) {
            int v = __builtin_ctzll(fresh);
            fresh &= fresh - 1;
            seen |= (1ull << v);
            q.push_back(v);
        }
    }
    return seen == ((n == 64) ? ~0ull : ((1ull << n) - 1));
}

IntMat Graph::adjacency_matrix() const {
    IntMat m(n, n);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (has_edge(u, v)) m(u, v) = 1;
    return m;
}

bool Graph::operator<(const Graph& o) const {
    if (n != o.n) return n < o.n;
    return adj < o.adj;
}

BipartitionResult bipartition(const Graph& g) {
    BipartitionResult res;
    std::vector<int> side(g.n, -1), parent(g.n, -1);
    int components = 0;
    for (int start = 0; start < g.n; ++start) {
        if (side[start] != -1) continue;
        ++components;
        side[start] = 0;
        std::deque<int> q{start};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v = 0; v < g.n; ++v) {
                if (!g.has_edge(u, v)) continue;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    parent[v] = u;
                    q.push_back(v);
                } else if (side[v] == side[u]) {
                    // odd cycle: walk both ancestries to the common root
                    std::vector<int> pu, pv;
                    for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
                    for (int x = v; x != -1; x = parent[x]) pv.push_back(x);
                    std::reverse(pu.begin(), pu.end());
                    std::reverse(pv.begin(), pv.end());
                    size_t common = 0;
                    while (common + 1 < pu.size() && common + 1 < pv.size() &&
                           pu[common + 1] == pv[common + 1])
                        ++common;
                    OddCycle cyc;
                    for (size_t i = common; i < pu.size(); ++i) cyc.vertices.push_back(pu[i]);
                    for (size_t i = pv.size(); i-- > common + 1;) cyc.vertices.push_back(pv[i]);
                    res.odd_cycle = std::move(cyc);
                    res.connected = g.is_connected();
                    return res;
                }
            }
        }
    }
    Bipartition b;
    b.side = side;
    for (int v = 0; v < g.n; ++v) (side[v] == 0 ? b.part0 : b.part1).push_back(v);
    res.parts = std::move(b);
    res.connected = components == 1 && g.n > 0;
    return res;
}

namespace {

/// branch-and-bound minimal adjacency encoding; true twins share subtrees
/// and only the first of each twin class is branched on
struct CanonSearch {
    const Graph& g;
    std::vector<int> best_perm;
    std::vector<uint64_t> best_rows;  // adjacency rows under best_perm (prefix grows)
    bool have_best = false;

    explicit CanonSearch(const Graph& graph) : g(graph) {}

    /// encode row `pos` of the permuted graph: bits for already-placed columns
    uint64_t encode_row(const std::vector<int>& perm, int pos) const {
        uint64_t row = 0;
        for (int j = 0; j < pos; ++j)
            if (g.has_edge(perm[pos], perm[j])) row |= (1ull << j);
        return row;
    }

    /// `tight`: the current prefix equals the best prefix (best can only
    /// improve, which keeps the prune sound; see the leaf full-compare).
    void search(std::vector<int>& perm, std::vector<uint64_t>& rows, uint64_t used, bool tight) {
        int pos = static_cast<int>(perm.size());
        if (pos == g.n) {
            if (!have_best || rows < best_rows) {
                best_rows = rows;
                best_perm = perm;
                have_best = true;
            }
            return;
        }
        // candidates deduplicated by full neighborhood: non-adjacent twins
        // (identical rows) produce identical subtrees
        std::set<std::pair<uint64_t, uint64_t>> seen_sig;
        for (int v = 0; v < g.n; ++v) {
            if ((used >> v) & 1u) continue;
            perm.push_back(v);
            uint64_t row = encode_row(perm, pos);
            perm.pop_back();
            if (!seen_sig.insert({row, g.adj[v] & ~used}).second) continue;
            bool child_tight = false;
            if (have_best && tight) {
                if (row > best_rows[pos]) continue;  // prefix equal, row worse
                child_tight = (row == best_rows[pos]);
            }
            perm.push_back(v);
            rows.push_back(row);
            search(perm, rows, used | (1ull << v), child_tight);
            rows.pop_back();
            perm.pop_back();
        }
    }
};

}  // namespace

Graph canonical_form(const Graph& g) {
    if (g.n == 0) return g;
    CanonSearch cs(g);
    std::vector<int> perm;
    std::vector<uint64_t> rows;
    perm.reserve(g.n);
    cs.search(perm, rows, 0, true);
    Graph out(g.n);
    // best_perm[i] = original vertex placed at canonical position i
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < i; ++j)
            if (g.has_edge(cs.best_perm[i], cs.best_perm[j])) out.add_edge(i, j);
    return out;
}

std::vector<uint64_t> canonical_key(const Graph& g) {
    Graph c = canonical_form(g);
    std::vector<uint64_t> key;
    key.push_back(static_cast<uint64_t>(c.n));
    for (int v = 0; v < c.n; ++v) key.push_back(c.adj[v]);
    return key;
}

std::vector<Graph> connected_graph_atlas(int max_vertices) {
    if (max_vertices < 1 || max_vertices > 10)
        throw std::invalid_argument("atlas limited to 10 vertices");
    std::vector<Graph> all;
    std::vector<Graph> level;
    Graph single(1);
    level.push_back(single);
    all.push_back(single);
    for (int n = 2; n <= max_vertices; ++n) {
        std::set<std::vector<uint64_t>> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            // add vertex n-1 with every nonempty neighborhood; every
            // connected graph arises this way from a non-cut vertex removal
            for (uint64_t nb = 1; nb < (1ull << (n - 1)); ++nb) {
                Graph h(n);
                h.adj.assign(g.adj.begin(), g.adj.end());
                h.adj.resize(n, 0);
                uint64_t rest = nb;
                while (rest) {
                    int v = __builtin_ctzll(rest);
                    rest &= rest - 1;
                    h.add_edge(n - 1, v);
                }
                Graph canon = canonical_form(h);
                std::vector<uint64_t> key;
                key.push_back(static_cast<uint64_t>(canon.n));
                for (int v = 0; v < canon.n; ++v) key.push_back(canon.adj[v]);
                if (seen.insert(key).second) next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end());
        for (const Graph& g : next) all.push_back(g);
        level = std::move(next);
    }
    return all;
}

std::vector<Graph> connected_bipartite_atlas(int max_vertices) {
    std::vector<Graph> out;
    for (const Graph& g : connected_graph_atlas(max_vertices))
        if (bipartition(g).parts) out.push_back(g);
    return out;
}

std::vector<Graph> tree_atlas(int max_vertices) {
    if (max_vertices < 1 || max_vertices > 20)
        throw std::invalid_argument("tree atlas limited to 20 vertices");
    std::vector<Graph> all;
    std::vector<Graph> level;
    Graph single(1);
    level.push_back(single);
    all.push_back(single);
    for (int n = 2; n <= max_vertices; ++n) {
        std::set<std::vector<uint64_t>> seen;
        std::vector<Graph> next;
        for (const Graph& g : level) {
            for (int v = 0; v < n - 1; ++v) {
                Graph h(n);
                h.adj.assign(g.adj.begin(), g.adj.end());
                h.adj.resize(n, 0);
                h.add_edge(n - 1, v);
                Graph canon = canonical_form(h);
                std::vector<uint64_t> key;
                key.push_back(static_cast<uint64_t>(canon.n));
                for (int w = 0; w < canon.n; ++w) key.push_back(canon.adj[w]);
                if (seen.insert(key).second) next.push_back(canon);
            }
        }
        std::sort(next.begin(), next.end());
        for (const Graph& g : next) all.push_back(g);
        level = std::move(next);
    }
    return all;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1 || a + b > 64) throw std::invalid_argument("complete_bipartite size");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph path_graph(int n) {
    if (n < 1 || n > 64) throw std::invalid_argument("path size");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 1 || leaves + 1 > 64) throw std::invalid_argument("star size");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph named_graph(const std::string& name) {
    auto starts_with = [&](const char* pre) { return name.rfind(pre, 0) == 0; };
    if (starts_with("K")) {
        auto comma = name.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad complete bipartite name");
        int a = std::stoi(name.substr(1, comma - 1));
        int b = std::stoi(name.substr(comma + 1));
        return complete_bipartite(a, b);
    }
    if (starts_with("path")) return path_graph(std::stoi(name.substr(4)));
    if (starts_with("star")) return star_graph(std::stoi(name.substr(4)));
    if (starts_with("A")) return path_graph(std::stoi(name.substr(1)));
    if (starts_with("D")) {
        int n = std::stoi(name.substr(1));
        if (n < 4) throw std::invalid_argument("D_n needs n >= 4");
        // two leaves attached to one end of a path
        Graph g(n);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        for (int i = 2; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    if (starts_with("E")) {
        int n = std::stoi(name.substr(1));
        if (n < 6 || n > 10) throw std::invalid_argument("E_n supported for 6 <= n <= 10");
        // path of n-1 vertices with a pendant vertex at the third position
        Graph g(n);
        for (int i = 0; i + 2 < n; ++i) g.add_edge(i, i + 1);
        g.add_edge(2, n - 1);
        return g;
    }
    throw std::invalid_argument("unknown graph name: " + name);
}

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::pair<int, int>> edge_list;
    int n = -1;
    bool first = true;
    while (std::getline(in, line)) {
        // strip whitespace
        auto a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        auto b = line.find_last_not_of(" \t\r");
        line = line.substr(a, b - a + 1);
        if (line.empty() || line[0] == '#') continue;
        if (first && line.find(';') != std::string::npos) {
            n = std::stoi(line.substr(0, line.find(';')));
            first = false;
            continue;  // the bipartition part is advisory; recomputed exactly
        }
        first = false;
        auto dash = line.find('-');
        if (dash == std::string::npos) throw std::invalid_argument("bad edge line: " + line);
        int u = std::stoi(line.substr(0, dash));
        int v = std::stoi(line.substr(dash + 1));
        edge_list.emplace_back(u, v);
    }
    int maxv = -1;
    for (auto& [u, v] : edge_list) maxv = std::max(maxv, std::max(u, v));
    if (n < 0) n = maxv + 1;
    if (n <= 0) throw std::invalid_argument("empty graph description");
    Graph g(n);
    for (auto& [u, v] : edge_list) g.add_edge(u, v);
    return g;
}

std::string graph_to_text(const Graph& g) {
    std::ostringstream out;
    auto bp = bipartition(g);
    out << g.n << ";";
    if (bp.parts) {
        out << " ";
        for (size_t i = 0; i < bp.parts->part0.size(); ++i) {
            if (i) out << ",";
            out << bp.parts->part0[i];
        }
        out << " / ";
        for (size_t i = 0; i < bp.parts->part1.size(); ++i) {
            if (i) out << ",";
            out << bp.parts->part1[i];
        }
    }
    out << "\n";
    for (auto& [u, v] : g.edges()) out << u << "-" << v << "\n";
    return out.str();
}

}  // namespace biperron
