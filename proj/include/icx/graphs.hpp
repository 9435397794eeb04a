#ifndef ICX_GRAPHS_HPP
#define ICX_GRAPHS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "icx/instance.hpp"

namespace icx {

// Side-information digraph: arc i→j iff receiver i already has x_j.
// Vertices are 1-indexed; arc(i, j) with i == j is always false.
struct digraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;  // adj[i][j], (n+1)^2, row/col 0 unused

    explicit digraph(int n_ = 0);
    bool arc(int i, int j) const { return adj[i][j]; }
    void set_arc(int i, int j, bool v = true);
    int arc_count() const;
    bool operator==(const digraph&) const = default;
};

// Simple undirected graph on 1..n, no loops.
struct ugraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    explicit ugraph(int n_ = 0);
    bool edge(int i, int j) const { return adj[i][j]; }
    void set_edge(int i, int j, bool v = true);
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // i < j, lexicographic
    bool operator==(const ugraph&) const = default;
};

// D from the instance's side information.
digraph side_info_digraph(const instance& inst);

// G_o: complete bipartite between P_1-requesting and P_2-requesting vertices.
ugraph sender_constraint_graph(const instance& inst);

// Complement of G_o on the same vertices.
ugraph sender_constraint_complement(const instance& inst);

// U_{D̄,G_o}: underlying undirected graph of the complement digraph, union G_o.
// Edge {i,j} iff (i→j) ∉ A(D) or (j→i) ∉ A(D) or (i,j) ∈ E(G_o).
ugraph union_graph(const instance& inst);

// D̄: arc present iff absent in D (no self-loops). Involution.
digraph complement(const digraph& d);

// A simple directed cycle, stored in canonical rotation: verts[0] is the
// smallest vertex, consecutive pairs (and last→first) are arcs of D.
struct cycle {
    std::vector<int> verts;
    bool operator==(const cycle&) const = default;
};

// All distinct simple cycles of d (length ≥ 2), Johnson's algorithm.
// Deterministic order: ascending root vertex, then DFS with ascending
// neighbors. Throws cap_exceeded once more than max_count cycles exist.
std::vector<cycle> enumerate_simple_cycles(const digraph& d, int max_count);

// True iff the subgraph of Ḡ_o induced by V(C) is connected. Fast path:
// a vertex requesting a common message makes any cycle message connected.
bool is_message_connected(const cycle& c, const instance& inst);

// Spanning tree of g[verts]: Kruskal over lexicographically ordered edges,
// hence the deterministic lexicographically-smallest tree. Throws
// validation_error if g[verts] is disconnected.
std::vector<std::pair<int, int>> spanning_tree(const ugraph& g,
                                               const std::vector<int>& verts);

// Exact maximum acyclic induced sub-digraph order. Searches vertex subsets
// in decreasing size with a sink-peeling acyclicity test.
// Throws cap_exceeded if d.n > mais_cap.
int mais(const digraph& d, int mais_cap = 20);

// A proper coloring in canonical (restricted-growth) form: colors are
// 1..num_colors and the first occurrence of color c precedes the first
// occurrence of c+1, i.e. color classes are ordered by smallest member.
struct coloring {
    std::vector<int> color_of;  // color_of[v-1] for v in 1..n
    int num_colors = 0;

    int color(int v) const { return color_of[v - 1]; }
    std::vector<std::vector<int>> classes() const;
    bool proper_on(const ugraph& g) const;
    bool operator==(const coloring&) const = default;
};

// Exact chromatic number with the lexicographically-smallest canonical
// witness. Clique lower bound + greedy upper bound around an RGS
// backtracking search. Throws cap_exceeded if g.n > coloring_cap.
std::pair<int, coloring> chromatic_number(const ugraph& g,
                                          int coloring_cap = 12);

// Visits every canonical proper coloring of g with at most max_colors
// colors, in lexicographic restricted-growth order, exactly once per
// partition into independent sets. Visitor returns false to stop early.
// Throws cap_exceeded if g.n > coloring_cap.
void for_each_coloring(const ugraph& g, int max_colors,
                       const std::function<bool(const coloring&)>& visit,
                       int coloring_cap = 12);

// Collecting wrapper over for_each_coloring.
std::vector<coloring> enumerate_colorings(const ugraph& g, int max_colors,
                                          int coloring_cap = 12);

}  // namespace icx

#endif
