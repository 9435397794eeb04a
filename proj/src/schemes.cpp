#include "icx/schemes.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <limits>
#include <numeric>

#include "icx/errors.hpp"
#include "icx/gf.hpp"

namespace icx {

namespace {

// Tags a row with a sender whose message set contains the whole support.
// Rows fitting both senders go to S1.
int tag_for_support(const instance& inst, const std::vector<int>& support) {
    bool fits1 = true, fits2 = true;
    for (int msg : support) {
        fits1 = fits1 && inst.in_m1(msg);
        fits2 = fits2 && inst.in_m2(msg);
    }
    if (fits1) return 1;
    if (fits2) return 2;
    throw std::logic_error("constructed row fits neither sender");
}

code_row xor_row(const instance& inst, const std::vector<int>& support) {
    code_row row;
    std::vector<int> msgs = support;
    std::sort(msgs.begin(), msgs.end());
    for (int msg : msgs) row.coeffs.emplace_back(msg, 1);
    row.sender = tag_for_support(inst, msgs);
    return row;
}

std::uint32_t vertex_mask(const std::vector<int>& verts) {
    std::uint32_t mask = 0;
    for (int v : verts) mask |= std::uint32_t{1} << (v - 1);
    return mask;
}

}  // namespace

// ---------------------------------------------------------------------------
// Cycle cover

namespace {

struct packing_candidate {
    std::uint32_t mask = 0;
    std::vector<int> verts;  // canonical cycle order
};

// Exact maximum-cardinality disjoint packing, include-first branch and bound.
std::vector<int> max_disjoint_packing(const std::vector<packing_candidate>& cand,
                                      int n) {
    std::vector<int> best, pick;
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::function<void(size_t, std::uint32_t)> dfs = [&](size_t idx,
                                                         std::uint32_t used) {
        int free_bound = std::popcount(full & ~used) / 2;
        int rem_bound = static_cast<int>(cand.size() - idx);
        if (static_cast<int>(pick.size()) +
                std::min(free_bound, rem_bound) <=
            static_cast<int>(best.size()))
            return;
        if (idx == cand.size()) return;
        if ((cand[idx].mask & used) == 0) {
            pick.push_back(static_cast<int>(idx));
            if (pick.size() > best.size()) best = pick;
            dfs(idx + 1, used | cand[idx].mask);
            pick.pop_back();
        }
        dfs(idx + 1, used);
    };
    dfs(0, 0);
    return best;
}

}  // namespace

scheme_result cycle_cover(const instance& inst, const caps& cp) {
    if (inst.n > 31) {
        throw cap_exceeded("cycle cover: n = " + std::to_string(inst.n) +
                           " exceeds the packing search range");
    }
    digraph d = side_info_digraph(inst);
    ugraph gbar = sender_constraint_complement(inst);
    std::vector<cycle> cycles = enumerate_simple_cycles(d, cp.cycle_budget);

    // Only message-connected cycles are usable; packing depends on vertex
    // sets alone, so keep the first cycle seen per set.
    std::vector<packing_candidate> cand;
    for (const auto& c : cycles) {
        if (!is_message_connected(c, inst)) continue;
        std::uint32_t mask = vertex_mask(c.verts);
        bool dup = std::any_of(cand.begin(), cand.end(), [&](const auto& p) {
            return p.mask == mask;
        });
        if (!dup) cand.push_back({mask, c.verts});
    }
    std::sort(cand.begin(), cand.end(), [](const auto& a, const auto& b) {
        if (a.verts[0] != b.verts[0]) return a.verts[0] < b.verts[0];
        if (a.verts.size() != b.verts.size()) return a.verts.size() < b.verts.size();
        return a.verts < b.verts;
    });
    std::vector<int> picked = max_disjoint_packing(cand, inst.n);

    scheme_result result;
    result.scheme = "cycle";
    std::vector<bool> covered(inst.n + 1, false);
    result.diagnostics["cycles"] = nlohmann::json::array();
    for (int idx : picked) {
        const auto& c = cand[idx];
        result.diagnostics["cycles"].push_back(c.verts);
        for (int v : c.verts) covered[v] = true;
        for (auto [a, b] : spanning_tree(gbar, c.verts)) {
            result.code.rows.push_back(xor_row(inst, {a, b}));
        }
    }
    result.diagnostics["uncovered"] = nlohmann::json::array();
    for (int v = 1; v <= inst.n; ++v) {
        if (!covered[v]) {
            result.diagnostics["uncovered"].push_back(v);
            result.code.rows.push_back(xor_row(inst, {v}));
        }
    }
    result.code.q = 2;
    result.length = result.code.length();
    return result;
}

// ---------------------------------------------------------------------------
// Clique cover

scheme_result clique_cover(const instance& inst, const caps& cp) {
    ugraph u = union_graph(inst);
    auto [chi, witness] = chromatic_number(u, cp.coloring_cap);

    scheme_result result;
    result.scheme = "clique";
    result.diagnostics["chromatic_number"] = chi;
    result.diagnostics["classes"] = nlohmann::json::array();
    for (const auto& cls : witness.classes()) {
        result.diagnostics["classes"].push_back(cls);
        result.code.rows.push_back(xor_row(inst, cls));
    }
    result.code.q = 2;
    result.length = result.code.length();
    return result;
}

// ---------------------------------------------------------------------------
// Local-chromatic machinery

namespace {

// A sub-instance view: vertex subset in original labels, with the induced
// union graph, complement digraph and G_o incidence reindexed to 1..k.
struct induced_view {
    std::vector<int> verts;  // sorted original labels; position p ↔ verts[p-1]
    ugraph u;
    digraph dbar;
    std::vector<bool> go_incident;  // per position 1..k, within the subset
};

induced_view make_view(const digraph& dbar_full, const ugraph& go_full,
                       const ugraph& u_full, std::vector<int> verts) {
    std::sort(verts.begin(), verts.end());
    int k = static_cast<int>(verts.size());
    induced_view view{verts, ugraph(k), digraph(k), std::vector<bool>(k + 1, false)};
    for (int a = 1; a <= k; ++a) {
        for (int b = 1; b <= k; ++b) {
            if (a != b) {
                view.dbar.adj[a][b] = dbar_full.arc(verts[a - 1], verts[b - 1]);
            }
            if (a < b) {
                view.u.set_edge(a, b, u_full.edge(verts[a - 1], verts[b - 1]));
            }
        }
    }
    for (int a = 1; a <= k; ++a) {
        for (int b = 1; b <= k; ++b) {
            if (a != b && go_full.edge(verts[a - 1], verts[b - 1])) {
                view.go_incident[a] = true;
            }
        }
    }
    return view;
}

induced_view full_view(const instance& inst) {
    std::vector<int> verts(inst.n);
    std::iota(verts.begin(), verts.end(), 1);
    return make_view(complement(side_info_digraph(inst)),
                     sender_constraint_graph(inst), union_graph(inst), verts);
}

// max_i |{J(u) : u ∈ N⁺_{D̄}(i)}| + 1 over the view's vertices.
int local_color_count(const induced_view& view, const coloring& col) {
    int k = static_cast<int>(view.verts.size());
    int worst = 0;
    for (int i = 1; i <= k; ++i) {
        std::uint32_t colors_seen = 0;
        for (int j = 1; j <= k; ++j) {
            if (view.dbar.arc(i, j)) {
                colors_seen |= std::uint32_t{1} << (col.color(j) - 1);
            }
        }
        worst = std::max(worst, std::popcount(colors_seen));
    }
    return worst + 1;
}

std::vector<int> go_colors(const induced_view& view, const coloring& col) {
    std::vector<int> out;
    int k = static_cast<int>(view.verts.size());
    for (int i = 1; i <= k; ++i) {
        if (view.go_incident[i]) out.push_back(col.color(i));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct alpha_selection {
    int alpha = 0;
    int n_ell = 0;
    std::vector<int> jo_colors;
    coloring best;
};

// Minimizes max{N_ℓ(J'), |J_o(J')|} over all canonical proper colorings of
// the view's union graph with at most |view| colors; ties go to the first
// coloring in canonical order.
alpha_selection select_alpha_coloring(const induced_view& view, const caps& cp) {
    alpha_selection sel;
    sel.alpha = std::numeric_limits<int>::max();
    int k = static_cast<int>(view.verts.size());
    for_each_coloring(
        view.u, k,
        [&](const coloring& col) {
            int n_ell = local_color_count(view, col);
            std::vector<int> jo = go_colors(view, col);
            int value = std::max(n_ell, static_cast<int>(jo.size()));
            if (value < sel.alpha) {
                sel.alpha = value;
                sel.n_ell = n_ell;
                sel.jo_colors = std::move(jo);
                sel.best = col;
            }
            return true;
        },
        cp.coloring_cap);
    return sel;
}

// [I_α | P] code rows for the view under its selected coloring: J_o colors
// take the first identity columns, remaining colors fill the rest ascending.
// Row supports carry original message labels.
std::vector<code_row> build_local_rows(const instance& inst,
                                       const induced_view& view,
                                       const alpha_selection& sel,
                                       const field& f) {
    int m = sel.best.num_colors;
    int alpha = sel.alpha;
    std::vector<int> column_of_color(m + 1, -1);
    int next = 0;
    for (int c : sel.jo_colors) column_of_color[c] = next++;
    for (int c = 1; c <= m; ++c) {
        if (column_of_color[c] < 0) column_of_color[c] = next++;
    }
    fmatrix g = systematic_mds_generator(alpha, m, f);

    int k = static_cast<int>(view.verts.size());
    std::vector<code_row> rows;
    for (int r = 0; r < alpha; ++r) {
        code_row row;
        for (int p = 1; p <= k; ++p) {
            std::uint32_t coeff = g.at(r, column_of_color[sel.best.color(p)]);
            if (coeff != 0) row.coeffs.emplace_back(view.verts[p - 1], coeff);
        }
        row.sender = tag_for_support(inst, code_row{1, row.coeffs}.support());
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json coloring_json(const induced_view& view, const coloring& col) {
    nlohmann::json j = nlohmann::json::object();
    for (size_t p = 0; p < view.verts.size(); ++p) {
        j[std::to_string(view.verts[p])] = col.color_of[p];
    }
    return j;
}

}  // namespace

int two_sender_local_chromatic_number(const instance& inst, const caps& cp) {
    induced_view view = full_view(inst);
    int best = std::numeric_limits<int>::max();
    for_each_coloring(
        view.u, inst.n,
        [&](const coloring& col) {
            best = std::min(best, local_color_count(view, col));
            return true;
        },
        cp.coloring_cap);
    return best;
}

scheme_result local_chromatic_code(const instance& inst, const caps& cp) {
    induced_view view = full_view(inst);
    alpha_selection sel = select_alpha_coloring(view, cp);
    field f = field::make(
        smallest_prime_at_least(std::max(2, sel.best.num_colors)));

    scheme_result result;
    result.scheme = "local";
    result.code.q = f.q();
    result.code.rows = build_local_rows(inst, view, sel, f);
    result.length = sel.alpha;
    result.diagnostics["alpha"] = sel.alpha;
    result.diagnostics["n_ell"] = sel.n_ell;
    result.diagnostics["jo_colors"] = sel.jo_colors;
    result.diagnostics["colors"] = sel.best.num_colors;
    result.diagnostics["coloring"] = coloring_json(view, sel.best);
    result.diagnostics["q"] = f.q();
    return result;
}

// ---------------------------------------------------------------------------
// Set-partition minimizations (partitioned local chromatic + trivial scheme)

namespace {

// Weighted set-partition DP over subset masks. cost[mask] may be INT_MAX
// (disallowed part). Returns chosen parts as masks, lowest vertex first.
std::vector<std::uint32_t> partition_dp(int n, const std::vector<int>& cost,
                                        int& total) {
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const int inf = std::numeric_limits<int>::max();
    std::vector<int> best(full + 1, inf);
    std::vector<std::uint32_t> choice(full + 1, 0);
    best[0] = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t low = mask & -mask;
        // submasks of mask containing the lowest set bit
        for (std::uint32_t sub = mask;; sub = (sub - 1) & mask) {
            if ((sub & low) && cost[sub] != inf && best[mask ^ sub] != inf) {
                int val = cost[sub] + best[mask ^ sub];
                if (val < best[mask]) {
                    best[mask] = val;
                    choice[mask] = sub;
                }
            }
            if (sub == 0) break;
        }
    }
    total = best[full];
    std::vector<std::uint32_t> parts;
    for (std::uint32_t rest = full; rest != 0; rest ^= choice[rest]) {
        parts.push_back(choice[rest]);
    }
    std::sort(parts.begin(), parts.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::countr_zero(a) < std::countr_zero(b);
    });
    return parts;
}

std::vector<int> mask_vertices(std::uint32_t mask) {
    std::vector<int> verts;
    for (std::uint32_t rest = mask; rest != 0; rest &= rest - 1) {
        verts.push_back(std::countr_zero(rest) + 1);
    }
    return verts;
}

}  // namespace

scheme_result partitioned_local_chromatic(const instance& inst, const caps& cp) {
    if (inst.n > cp.partition_cap) {
        throw cap_exceeded("partitioned local chromatic: n = " +
                           std::to_string(inst.n) + " exceeds cap " +
                           std::to_string(cp.partition_cap));
    }
    digraph dbar = complement(side_info_digraph(inst));
    ugraph go = sender_constraint_graph(inst);
    ugraph u = union_graph(inst);

    const std::uint32_t full = (std::uint32_t{1} << inst.n) - 1;
    std::vector<int> alpha_of(full + 1, std::numeric_limits<int>::max());
    std::vector<alpha_selection> sel_of(full + 1);
    std::vector<induced_view> view_of(full + 1);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        view_of[mask] = make_view(dbar, go, u, mask_vertices(mask));
        sel_of[mask] = select_alpha_coloring(view_of[mask], cp);
        alpha_of[mask] = sel_of[mask].alpha;
    }
    int total = 0;
    std::vector<std::uint32_t> parts = partition_dp(inst.n, alpha_of, total);

    // One field for the concatenated code: large enough for every part.
    int max_colors = 2;
    for (std::uint32_t part : parts) {
        max_colors = std::max(max_colors, sel_of[part].best.num_colors);
    }
    field f = field::make(smallest_prime_at_least(max_colors));

    scheme_result result;
    result.scheme = "plocal";
    result.code.q = f.q();
    result.length = total;
    result.diagnostics["parts"] = nlohmann::json::array();
    result.diagnostics["q"] = f.q();
    for (std::uint32_t part : parts) {
        auto rows = build_local_rows(inst, view_of[part], sel_of[part], f);
        result.code.rows.insert(result.code.rows.end(), rows.begin(), rows.end());
        nlohmann::json jp;
        jp["vertices"] = view_of[part].verts;
        jp["alpha"] = sel_of[part].alpha;
        jp["coloring"] = coloring_json(view_of[part], sel_of[part].best);
        result.diagnostics["parts"].push_back(jp);
    }
    return result;
}

base_scheme parse_base_scheme(const std::string& name) {
    if (name == "cycle") return base_scheme::cycle;
    if (name == "clique") return base_scheme::clique;
    if (name == "local") return base_scheme::local;
    throw parse_error("unknown base scheme '" + name + "'");
}

namespace {

instance induced_single_sender_instance(const instance& inst,
                                        const std::vector<int>& verts) {
    instance sub;
    sub.n = static_cast<int>(verts.size());
    std::vector<int> position(inst.n + 1, 0);
    for (size_t p = 0; p < verts.size(); ++p) {
        position[verts[p]] = static_cast<int>(p) + 1;
    }
    sub.side_info.assign(sub.n, {});
    for (size_t p = 0; p < verts.size(); ++p) {
        for (int msg : inst.side_info[verts[p] - 1]) {
            if (position[msg] != 0) sub.side_info[p].push_back(position[msg]);
        }
    }
    sub.sender1.resize(sub.n);
    std::iota(sub.sender1.begin(), sub.sender1.end(), 1);
    sub.sender2 = sub.sender1;
    return sub;
}

scheme_result run_base_scheme(base_scheme base, const instance& sub,
                              const caps& cp) {
    switch (base) {
        case base_scheme::cycle: return cycle_cover(sub, cp);
        case base_scheme::clique: return clique_cover(sub, cp);
        case base_scheme::local: return local_chromatic_code(sub, cp);
    }
    throw std::logic_error("bad base scheme");
}

std::string base_scheme_name(base_scheme base) {
    switch (base) {
        case base_scheme::cycle: return "cycle";
        case base_scheme::clique: return "clique";
        case base_scheme::local: return "local";
    }
    return "?";
}

}  // namespace

scheme_result trivial_partition_scheme(const instance& inst, base_scheme base,
                                       const caps& cp) {
    if (inst.n > cp.partition_cap) {
        throw cap_exceeded("trivial partition scheme: n = " +
                           std::to_string(inst.n) + " exceeds cap " +
                           std::to_string(cp.partition_cap));
    }
    const std::uint32_t full = (std::uint32_t{1} << inst.n) - 1;
    std::uint32_t m1_requesters = 0, m2_requesters = 0;
    for (int v = 1; v <= inst.n; ++v) {
        if (inst.in_m1(v)) m1_requesters |= std::uint32_t{1} << (v - 1);
        if (inst.in_m2(v)) m2_requesters |= std::uint32_t{1} << (v - 1);
    }

    const int inf = std::numeric_limits<int>::max();
    std::vector<int> cost(full + 1, inf);
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        bool allowed = (mask & ~m1_requesters) == 0 || (mask & ~m2_requesters) == 0;
        if (!allowed) continue;
        instance sub = induced_single_sender_instance(inst, mask_vertices(mask));
        cost[mask] = run_base_scheme(base, sub, cp).length;
    }
    int total = 0;
    std::vector<std::uint32_t> parts = partition_dp(inst.n, cost, total);

    scheme_result result;
    result.scheme = "trivial:" + base_scheme_name(base);
    result.length = total;
    result.diagnostics["base"] = base_scheme_name(base);
    result.diagnostics["parts"] = nlohmann::json::array();

    std::uint32_t joint_q = 2;
    std::vector<scheme_result> part_results;
    for (std::uint32_t part : parts) {
        instance sub = induced_single_sender_instance(inst, mask_vertices(part));
        part_results.push_back(run_base_scheme(base, sub, cp));
        joint_q = std::max(joint_q, part_results.back().code.q);
    }
    if (base == base_scheme::local) {
        // rebuild over the joint field when parts disagree
        for (size_t i = 0; i < parts.size(); ++i) {
            if (part_results[i].code.q != joint_q) {
                caps sub_cp = cp;
                instance sub = induced_single_sender_instance(
                    inst, mask_vertices(parts[i]));
                induced_view view = full_view(sub);
                alpha_selection sel = select_alpha_coloring(view, sub_cp);
                field f = field::make(joint_q);
                part_results[i].code.q = joint_q;
                part_results[i].code.rows = build_local_rows(sub, view, sel, f);
            }
        }
    }
    result.code.q = joint_q;
    for (size_t i = 0; i < parts.size(); ++i) {
        std::vector<int> verts = mask_vertices(parts[i]);
        int sender = ((parts[i] & ~m1_requesters) == 0) ? 1 : 2;
        for (code_row row : part_results[i].code.rows) {
            for (auto& [msg, coeff] : row.coeffs) msg = verts[msg - 1];
            std::sort(row.coeffs.begin(), row.coeffs.end());
            row.sender = sender;
            result.code.rows.push_back(std::move(row));
        }
        nlohmann::json jp;
        jp["vertices"] = verts;
        jp["length"] = part_results[i].length;
        jp["sender"] = sender;
        result.diagnostics["parts"].push_back(jp);
    }
    return result;
}

}  // namespace icx
