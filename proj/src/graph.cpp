#include "ctxkit/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <numeric>
#include <sstream>

namespace ctxkit {

Graph Graph::empty(int n) {
    if (n < 1 || n > 64) throw DimensionError("graph order must be between 1 and 64");
    Graph g;
    g.n = n;
    g.adj.assign(static_cast<size_t>(n), 0);
    return g;
}

void Graph::add_edge(int i, int j) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("edge endpoint out of range");
    if (i == j) throw DomainError("self-loops are not allowed");
    adj[static_cast<size_t>(i)] |= (std::uint64_t{1} << j);
    adj[static_cast<size_t>(j)] |= (std::uint64_t{1} << i);
}

bool Graph::has_edge(int i, int j) const {
    if (i < 0 || j < 0 || i >= n || j >= n) throw DomainError("edge endpoint out of range");
    return (adj[static_cast<size_t>(i)] >> j) & 1;
}

int Graph::edge_count() const {
    int total = 0;
    for (std::uint64_t row : adj) total += std::popcount(row);
    return total / 2;
}

int Graph::degree(int i) const {
    if (i < 0 || i >= n) throw DomainError("vertex out of range");
    return std::popcount(adj[static_cast<size_t>(i)]);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((adj[static_cast<size_t>(i)] >> j) & 1) out.emplace_back(i, j);
    return out;
}

namespace {

// Greedy clique cover of the vertices in `mask`: each clique contributes at
// most one vertex to an independent set, so the cover size bounds alpha.
int clique_cover_bound(const Graph& g, std::uint64_t mask) {
    int cliques = 0;
    while (mask) {
        int v = std::countr_zero(mask);
        std::uint64_t clique = std::uint64_t{1} << v;
        std::uint64_t cand = mask & g.adj[static_cast<size_t>(v)];
        mask &= ~(std::uint64_t{1} << v);
        while (cand) {
            int u = std::countr_zero(cand);
            clique |= std::uint64_t{1} << u;
            mask &= ~(std::uint64_t{1} << u);
            cand &= g.adj[static_cast<size_t>(u)];
        }
        ++cliques;
    }
    return cliques;
}

void alpha_search(const Graph& g, std::uint64_t mask, int depth, int& best) {
    if (mask == 0) {
        best = std::max(best, depth);
        return;
    }
    if (depth + clique_cover_bound(g, mask) <= best) return;
    int v = std::countr_zero(mask);
    // Include v first, then exclude, in index order.
    alpha_search(g, mask & ~(g.adj[static_cast<size_t>(v)] | (std::uint64_t{1} << v)), depth + 1,
                 best);
    alpha_search(g, mask & ~(std::uint64_t{1} << v), depth, best);
}

} // namespace

int independence_number(const Graph& g) {
    int best = 0;
    std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    alpha_search(g, all, 0, best);
    return best;
}

namespace {

void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::vector<int>>& out) {
    if (p == 0 && x == 0) {
        std::vector<int> clique;
        std::uint64_t m = r;
        while (m) {
            clique.push_back(std::countr_zero(m));
            m &= m - 1;
        }
        out.push_back(std::move(clique));
        return;
    }
    // Pivot: vertex of P|X with the most neighbors in P.
    int pivot = -1, best_cover = -1;
    std::uint64_t px = p | x;
    std::uint64_t m = px;
    while (m) {
        int u = std::countr_zero(m);
        m &= m - 1;
        int cover = std::popcount(p & g.adj[static_cast<size_t>(u)]);
        if (cover > best_cover) { best_cover = cover; pivot = u; }
    }
    std::uint64_t ext = p & ~g.adj[static_cast<size_t>(pivot)];
    while (ext) {
        int v = std::countr_zero(ext);
        ext &= ext - 1;
        std::uint64_t vb = std::uint64_t{1} << v;
        bron_kerbosch(g, r | vb, p & g.adj[static_cast<size_t>(v)], x & g.adj[static_cast<size_t>(v)],
                      out);
        p &= ~vb;
        x |= vb;
    }
}

} // namespace

std::vector<std::vector<int>> maximal_cliques(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::uint64_t all = g.n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << g.n) - 1);
    bron_kerbosch(g, 0, all, 0, out);
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool ks_assignment_valid(const Graph& g, const std::vector<Basis>& bases,
                         const KSAssignment& assignment) {
    if (static_cast<int>(assignment.colors.size()) != g.n) return false;
    for (int c : assignment.colors)
        if (c != 0 && c != 1) return false;
    for (auto [i, j] : g.edges())
        if (assignment.colors[static_cast<size_t>(i)] == 1 &&
            assignment.colors[static_cast<size_t>(j)] == 1)
            return false;
    for (const Basis& b : bases) {
        int ones = 0;
        for (int v : b.member_indices) {
            if (v < 0 || v >= g.n) return false;
            ones += assignment.colors[static_cast<size_t>(v)];
        }
        if (ones != 1) return false;
    }
    return true;
}

namespace {

struct KSSearcher {
    const Graph& g;
    const std::vector<Basis>& bases;
    std::vector<int> color;             // -1 unset, 0, 1
    std::vector<std::vector<int>> vertex_bases;
    std::vector<int> order;

    explicit KSSearcher(const Graph& g_, const std::vector<Basis>& bases_)
        : g(g_), bases(bases_), color(static_cast<size_t>(g_.n), -1),
          vertex_bases(static_cast<size_t>(g_.n)) {
        for (size_t b = 0; b < bases.size(); ++b)
            for (int v : bases[b].member_indices)
                vertex_bases[static_cast<size_t>(v)].push_back(static_cast<int>(b));
        order.resize(static_cast<size_t>(g.n));
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g.degree(a) > g.degree(b); });
    }

    bool basis_feasible(int b) const {
        int ones = 0, unset = 0;
        for (int v : bases[static_cast<size_t>(b)].member_indices) {
            if (color[static_cast<size_t>(v)] == 1) ++ones;
            else if (color[static_cast<size_t>(v)] == -1) ++unset;
        }
        if (ones > 1) return false;
        if (ones == 0 && unset == 0) return false;
        return true;
    }

    bool consistent_after(int v) {
        if (color[static_cast<size_t>(v)] == 1) {
            std::uint64_t nbrs = g.adj[static_cast<size_t>(v)];
            while (nbrs) {
                int u = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (color[static_cast<size_t>(u)] == 1) return false;
            }
        }
        for (int b : vertex_bases[static_cast<size_t>(v)])
            if (!basis_feasible(b)) return false;
        return true;
    }

    bool solve(size_t k) {
        if (k == order.size()) {
            KSAssignment a;
            a.colors.assign(color.begin(), color.end());
            return ks_assignment_valid(g, bases, a);
        }
        int v = order[k];
        for (int c : {1, 0}) {
            color[static_cast<size_t>(v)] = c;
            if (consistent_after(v) && solve(k + 1)) return true;
        }
        color[static_cast<size_t>(v)] = -1;
        return false;
    }
};

} // namespace

std::optional<KSAssignment> ks_assignment_search(const Graph& g, const std::vector<Basis>& bases) {
    for (const Basis& b : bases) {
        for (size_t i = 0; i < b.member_indices.size(); ++i) {
            int u = b.member_indices[i];
            if (u < 0 || u >= g.n) throw DomainError("basis member out of range");
            for (size_t j = i + 1; j < b.member_indices.size(); ++j)
                if (!g.has_edge(u, b.member_indices[j]))
                    throw DomainError("basis is not a clique of the graph");
        }
    }
    KSSearcher s(g, bases);
    if (!s.solve(0)) return std::nullopt;
    KSAssignment a;
    a.colors.assign(s.color.begin(), s.color.end());
    return a;
}

namespace {

Graph make_c5() {
    Graph g = Graph::empty(5);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    return g;
}

Graph make_k4() {
    Graph g = Graph::empty(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) g.add_edge(i, j);
    return g;
}

constexpr int kIcosaEdges[30][2] = {
    {0, 2}, {0, 4}, {0, 6}, {0, 8}, {0, 9},  {1, 3},  {1, 4},  {1, 6},  {1, 10}, {1, 11},
    {2, 5}, {2, 7}, {2, 8}, {2, 9}, {3, 5},  {3, 7},  {3, 10}, {3, 11}, {4, 6},  {4, 8},
    {4, 10}, {5, 7}, {5, 8}, {5, 10}, {6, 9}, {6, 11}, {7, 9},  {7, 11}, {8, 10}, {9, 11}};

Graph make_icosahedron() {
    Graph g = Graph::empty(12);
    for (const auto& e : kIcosaEdges) g.add_edge(e[0], e[1]);
    return g;
}

// Four extra vertices, one per face of a disjoint-face quadruple, each
// adjacent to exactly the three vertices of its face.
constexpr int kAuxFaces[4][3] = {{0, 6, 9}, {1, 4, 10}, {2, 5, 8}, {3, 7, 11}};

Graph make_icosahedron_aux() {
    Graph g = Graph::empty(16);
    for (const auto& e : kIcosaEdges) g.add_edge(e[0], e[1]);
    for (int k = 0; k < 4; ++k)
        for (int v : kAuxFaces[k]) g.add_edge(12 + k, v);
    return g;
}

} // namespace

Graph builtin_graph(const std::string& name) {
    if (name == "c5") return make_c5();
    if (name == "k4") return make_k4();
    if (name == "icosahedron") return make_icosahedron();
    if (name == "icosahedron_aux") return make_icosahedron_aux();
    throw DomainError("unknown builtin graph '" + name + "'");
}

namespace {

std::string trim_line(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

} // namespace

Graph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool have_n = false;
    Graph g;
    while (std::getline(in, line)) {
        ++line_no;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim_line(line);
        if (line.empty()) continue;
        std::istringstream row(line);
        if (!have_n) {
            std::string kw;
            int n = 0;
            row >> kw >> n;
            if (kw != "n" || row.fail() || n < 1 || n > 64)
                throw ParseError("expected 'n <count>' header, got '" + line + "'", line_no);
            g = Graph::empty(n);
            have_n = true;
            continue;
        }
        int i = 0, j = 0;
        row >> i >> j;
        std::string rest;
        if (row.fail() || (row >> rest))
            throw ParseError("expected edge line 'i j', got '" + line + "'", line_no);
        if (i < 0 || j < 0 || i >= g.n || j >= g.n)
            throw ParseError("edge endpoint out of range in '" + line + "'", line_no);
        if (i == j) throw ParseError("self-loop in '" + line + "'", line_no);
        g.add_edge(i, j);
    }
    if (!have_n) throw ParseError("missing 'n <count>' header");
    return g;
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    return parse_graph(in);
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream os;
    os << "n " << g.n << "\n";
    for (auto [i, j] : g.edges()) os << i << " " << j << "\n";
    return os.str();
}

} // namespace ctxkit
