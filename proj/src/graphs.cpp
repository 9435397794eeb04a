#include "icx/graphs.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "icx/errors.hpp"

namespace icx {

digraph::digraph(int n_) : n(n_), adj(n_ + 1, std::vector<bool>(n_ + 1, false)) {}

void digraph::set_arc(int i, int j, bool v) {
    if (i == j) return;  // no self-loops
    adj[i][j] = v;
}

int digraph::arc_count() const {
    int m = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) m += adj[i][j] ? 1 : 0;
    }
    return m;
}

ugraph::ugraph(int n_) : n(n_), adj(n_ + 1, std::vector<bool>(n_ + 1, false)) {}

void ugraph::set_edge(int i, int j, bool v) {
    if (i == j) return;
    adj[i][j] = v;
    adj[j][i] = v;
}

int ugraph::edge_count() const {
    int m = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) m += adj[i][j] ? 1 : 0;
    }
    return m;
}

std::vector<std::pair<int, int>> ugraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            if (adj[i][j]) out.emplace_back(i, j);
        }
    }
    return out;
}

digraph side_info_digraph(const instance& inst) {
    digraph d(inst.n);
    for (int r = 1; r <= inst.n; ++r) {
        for (int msg : inst.side_info[r - 1]) d.set_arc(r, msg);
    }
    return d;
}

ugraph sender_constraint_graph(const instance& inst) {
    ugraph g(inst.n);
    for (int i : inst.private1()) {
        for (int j : inst.private2()) g.set_edge(i, j);
    }
    return g;
}

ugraph sender_constraint_complement(const instance& inst) {
    ugraph go = sender_constraint_graph(inst);
    ugraph g(inst.n);
    for (int i = 1; i <= inst.n; ++i) {
        for (int j = i + 1; j <= inst.n; ++j) g.set_edge(i, j, !go.edge(i, j));
    }
    return g;
}

ugraph union_graph(const instance& inst) {
    digraph d = side_info_digraph(inst);
    ugraph go = sender_constraint_graph(inst);
    ugraph u(inst.n);
    for (int i = 1; i <= inst.n; ++i) {
        for (int j = i + 1; j <= inst.n; ++j) {
            u.set_edge(i, j, !d.arc(i, j) || !d.arc(j, i) || go.edge(i, j));
        }
    }
    return u;
}

digraph complement(const digraph& d) {
    digraph out(d.n);
    for (int i = 1; i <= d.n; ++i) {
        for (int j = 1; j <= d.n; ++j) {
            if (i != j) out.adj[i][j] = !d.adj[i][j];
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Simple cycle enumeration (Johnson 1975, without the SCC refinement —
// instances here are far below the sizes where it pays off).

namespace {

struct johnson_state {
    const digraph* d;
    int root = 0;
    int max_count = 0;
    std::vector<bool> blocked;
    std::vector<std::vector<int>> block_list;  // B sets
    std::vector<int> path;
    std::vector<cycle>* out;

    void unblock(int v) {
        blocked[v] = false;
        for (int w : block_list[v]) {
            if (blocked[w]) unblock(w);
        }
        block_list[v].clear();
    }

    bool circuit(int v) {
        bool found = false;
        path.push_back(v);
        blocked[v] = true;
        for (int w = root; w <= d->n; ++w) {  // vertices < root excluded
            if (!d->arc(v, w)) continue;
            if (w == root) {
                if (path.size() >= 2) {
                    if (static_cast<int>(out->size()) >= max_count) {
                        throw cap_exceeded("cycle budget of " +
                                           std::to_string(max_count) +
                                           " exceeded");
                    }
                    out->push_back(cycle{path});
                    found = true;
                }
            } else if (!blocked[w]) {
                if (circuit(w)) found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (int w = root; w <= d->n; ++w) {
                if (!d->arc(v, w) || w == root) continue;
                auto& b = block_list[w];
                if (std::find(b.begin(), b.end(), v) == b.end()) b.push_back(v);
            }
        }
        path.pop_back();
        return found;
    }
};

}  // namespace

std::vector<cycle> enumerate_simple_cycles(const digraph& d, int max_count) {
    std::vector<cycle> out;
    johnson_state st;
    st.d = &d;
    st.max_count = max_count;
    st.out = &out;
    for (int s = 1; s <= d.n; ++s) {
        st.root = s;
        st.blocked.assign(d.n + 1, false);
        st.block_list.assign(d.n + 1, {});
        st.path.clear();
        st.circuit(s);
    }
    return out;
}

bool is_message_connected(const cycle& c, const instance& inst) {
    for (int v : c.verts) {
        if (inst.in_m1(v) && inst.in_m2(v)) return true;  // common message
    }
    ugraph gbar = sender_constraint_complement(inst);
    // BFS on gbar restricted to the cycle's vertices
    std::vector<int> verts = c.verts;
    std::vector<bool> seen(inst.n + 1, false);
    std::vector<int> queue{verts[0]};
    seen[verts[0]] = true;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : verts) {
            if (!seen[w] && gbar.edge(v, w)) {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    return queue.size() == verts.size();
}

namespace {

struct union_find {
    std::vector<int> parent;
    explicit union_find(int n) : parent(n + 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

std::vector<std::pair<int, int>> spanning_tree(const ugraph& g,
                                               const std::vector<int>& verts) {
    std::vector<int> vs = verts;
    std::sort(vs.begin(), vs.end());
    std::vector<std::pair<int, int>> tree;
    if (vs.size() <= 1) return tree;
    union_find uf(g.n);
    for (size_t a = 0; a < vs.size() && tree.size() + 1 < vs.size(); ++a) {
        for (size_t b = a + 1; b < vs.size(); ++b) {
            if (g.edge(vs[a], vs[b]) && uf.unite(vs[a], vs[b])) {
                tree.emplace_back(vs[a], vs[b]);
                if (tree.size() + 1 == vs.size()) break;
            }
        }
    }
    if (tree.size() + 1 != vs.size()) {
        throw validation_error("induced subgraph is disconnected");
    }
    return tree;
}

namespace {

bool subset_acyclic(const std::vector<std::uint32_t>& out_mask,
                    std::uint32_t subset) {
    std::uint32_t s = subset;
    while (s != 0) {
        std::uint32_t sink = 0;
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if ((out_mask[v] & s) == 0) {
                sink = std::uint32_t{1} << v;
                break;
            }
        }
        if (sink == 0) return false;
        s &= ~sink;
    }
    return true;
}

}  // namespace

int mais(const digraph& d, int mais_cap) {
    if (d.n > mais_cap || d.n > 31) {
        throw cap_exceeded("mais: n = " + std::to_string(d.n) +
                           " exceeds cap " + std::to_string(std::min(mais_cap, 31)));
    }
    if (d.n == 0) return 0;
    std::vector<std::uint32_t> out_mask(d.n);  // bit v-1 for vertex v
    for (int i = 1; i <= d.n; ++i) {
        for (int j = 1; j <= d.n; ++j) {
            if (d.arc(i, j)) out_mask[i - 1] |= std::uint32_t{1} << (j - 1);
        }
    }
    const std::uint32_t full = (std::uint32_t{1} << d.n) - 1;
    for (int k = d.n; k >= 1; --k) {
        // Gosper's hack: all k-subsets ascending
        std::uint32_t s = (std::uint32_t{1} << k) - 1;
        while (s <= full) {
            if (subset_acyclic(out_mask, s)) return k;
            std::uint32_t c = s & -s;
            std::uint32_t r = s + c;
            if (r > full) break;
            s = (((r ^ s) >> 2) / c) | r;
        }
    }
    return 0;  // unreachable: singletons are acyclic
}

std::vector<std::vector<int>> coloring::classes() const {
    std::vector<std::vector<int>> out(num_colors);
    for (size_t i = 0; i < color_of.size(); ++i) {
        out[color_of[i] - 1].push_back(static_cast<int>(i) + 1);
    }
    return out;
}

bool coloring::proper_on(const ugraph& g) const {
    for (int i = 1; i <= g.n; ++i) {
        for (int j = i + 1; j <= g.n; ++j) {
            if (g.edge(i, j) && color(i) == color(j)) return false;
        }
    }
    return true;
}

namespace {

// Lexicographic restricted-growth backtracking. Visits canonical colorings
// (classes ordered by smallest member) of g with ≤ max_colors colors.
// Returns false if the visitor aborted.
bool rgs_walk(const ugraph& g, int max_colors, std::vector<int>& color,
              int v, int max_used,
              const std::function<bool(const coloring&)>& visit) {
    if (v > g.n) {
        coloring c;
        c.color_of = color;
        c.num_colors = max_used;
        return visit(c);
    }
    int limit = std::min(max_colors, max_used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (int u = 1; u < v; ++u) {
            if (color[u - 1] == c && g.edge(u, v)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        color[v - 1] = c;
        if (!rgs_walk(g, max_colors, color, v + 1, std::max(max_used, c), visit))
            return false;
        color[v - 1] = 0;
    }
    return true;
}

int greedy_clique_bound(const ugraph& g) {
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 1);
    std::vector<int> degree(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) {
        for (int u = 1; u <= g.n; ++u) degree[v] += g.edge(v, u) ? 1 : 0;
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return degree[a] > degree[b]; });
    std::vector<int> clique;
    for (int v : order) {
        bool fits = std::all_of(clique.begin(), clique.end(),
                                [&](int u) { return g.edge(u, v); });
        if (fits) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace

void for_each_coloring(const ugraph& g, int max_colors,
                       const std::function<bool(const coloring&)>& visit,
                       int coloring_cap) {
    if (g.n > coloring_cap) {
        throw cap_exceeded("coloring enumeration: n = " + std::to_string(g.n) +
                           " exceeds cap " + std::to_string(coloring_cap));
    }
    if (g.n == 0) return;
    std::vector<int> color(g.n, 0);
    rgs_walk(g, max_colors, color, 1, 0, visit);
}

std::vector<coloring> enumerate_colorings(const ugraph& g, int max_colors,
                                          int coloring_cap) {
    std::vector<coloring> out;
    for_each_coloring(
        g, max_colors,
        [&](const coloring& c) {
            out.push_back(c);
            return true;
        },
        coloring_cap);
    return out;
}

std::pair<int, coloring> chromatic_number(const ugraph& g, int coloring_cap) {
    if (g.n > coloring_cap) {
        throw cap_exceeded("chromatic number: n = " + std::to_string(g.n) +
                           " exceeds cap " + std::to_string(coloring_cap));
    }
    if (g.n == 0) return {0, coloring{}};
    for (int k = std::max(1, greedy_clique_bound(g)); k <= g.n; ++k) {
        coloring witness;
        bool found = false;
        std::vector<int> color(g.n, 0);
        rgs_walk(g, k, color, 1, 0, [&](const coloring& c) {
            witness = c;
            found = true;
            return false;  // first = lexicographically smallest
        });
        if (found) return {k, witness};
    }
    // a proper coloring with n colors always exists
    throw std::logic_error("chromatic search fell through");
}

}  // namespace icx
