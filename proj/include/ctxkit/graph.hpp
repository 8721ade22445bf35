// Exclusivity graphs and the combinatorial machinery on them: exact
// independence number, maximal cliques, and the Kochen-Specker coloring
// search.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ctxkit/common.hpp"

namespace ctxkit {

// Vertex indices forming one complete orthonormal measurement context.
struct Basis {
    std::vector<int> member_indices;
};

// Simple undirected graph, at most 64 vertices, adjacency kept as one
// 64-bit neighbor mask per vertex.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;
    std::vector<std::string> labels; // optional, empty or size n

    static Graph empty(int n);
    void add_edge(int i, int j);
    bool has_edge(int i, int j) const;
    int edge_count() const;
    int degree(int i) const;
    std::vector<std::pair<int, int>> edges() const; // i<j, lexicographic
};

// 0/1 vertex coloring obeying the two Kochen-Specker rules: adjacent
// vertices never both 1, and every registered basis has exactly one 1.
struct KSAssignment {
    std::vector<int> colors;
};

// Exact alpha(G): branch and bound, include-branch first, vertices in index
// order, greedy clique-cover upper bound for pruning. Deterministic.
int independence_number(const Graph& g);

// Bron-Kerbosch with pivoting; result cliques sorted ascending internally and
// the list ordered lexicographically.
std::vector<std::vector<int>> maximal_cliques(const Graph& g);

// Exhaustive backtracking over vertices in degree-descending order (ties by
// index). Returns an assignment satisfying both rules, or nullopt when the
// rays admit no noncontextual value assignment. Every basis must be a clique.
std::optional<KSAssignment> ks_assignment_search(const Graph& g, const std::vector<Basis>& bases);

// Re-check both rules on a finished assignment.
bool ks_assignment_valid(const Graph& g, const std::vector<Basis>& bases, const KSAssignment& a);

// name in {c5, k4, icosahedron, icosahedron_aux}
Graph builtin_graph(const std::string& name);

Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string serialize_graph(const Graph& g);

} // namespace ctxkit
