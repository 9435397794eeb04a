#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "icx/errors.hpp"
#include "icx/graphs.hpp"
#include "icx/instance.hpp"

using namespace icx;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

instance make(int n, std::vector<std::vector<int>> side,
              std::vector<int> s1, std::vector<int> s2) {
    instance inst;
    inst.n = n;
    inst.side_info = std::move(side);
    inst.sender1 = std::move(s1);
    inst.sender2 = std::move(s2);
    return inst;
}

}  // namespace

TEST_CASE("load_instance accepts a small valid instance") {
    instance inst = load_instance(
        R"({"n": 2, "side_info": [[2], [1]], "sender1": [1, 2], "sender2": [2]})");
    CHECK(inst.n == 2);
    CHECK(inst.common() == std::vector<int>{2});
    CHECK(inst.private1() == std::vector<int>{1});
    CHECK(inst.private2().empty());
}

TEST_CASE("load_instance rejects self-knowledge") {
    const char* text =
        R"({"n": 4, "side_info": [[1, 2], [3], [4], []],
            "sender1": [1, 2, 3, 4], "sender2": []})";
    CHECK_THROWS_WITH_AS(load_instance(text), "receiver 1 knows own message",
                         validation_error);
}

TEST_CASE("load_instance rejects a message at no sender") {
    const char* text =
        R"({"n": 3, "side_info": [[], [], []], "sender1": [1], "sender2": [2]})";
    CHECK_THROWS_WITH_AS(load_instance(text), "message 3 at no sender",
                         validation_error);
}

TEST_CASE("load_instance rejects out-of-range indices and bad json") {
    CHECK_THROWS_AS(load_instance(
                        R"({"n": 2, "side_info": [[5], []],
                            "sender1": [1, 2], "sender2": []})"),
                    validation_error);
    CHECK_THROWS_AS(load_instance("{"), parse_error);
    CHECK_THROWS_AS(load_instance(R"({"n": 2})"), parse_error);
}

TEST_CASE("unsorted input is normalized on read") {
    instance inst = load_instance(
        R"({"n": 3, "side_info": [[3, 2], [], []], "sender1": [3, 1, 2],
            "sender2": [2]})");
    CHECK(inst.side_info[0] == std::vector<int>{2, 3});
    CHECK(inst.sender1 == std::vector<int>{1, 2, 3});
}

TEST_CASE("serialize/load round-trips random instances") {
    for (std::uint32_t seed = 0; seed < 40; ++seed) {
        int n = 1 + seed % 8;
        instance inst = generate_random_instance(
            n, 0.4, static_cast<sender_split>(seed % 3), seed, std::min(2, n));
        instance again = load_instance(serialize_instance(inst));
        CHECK(again == inst);
    }
}

TEST_CASE("sender-constraint graph of the Fig. 1 senders is one edge") {
    instance inst = load_instance(slurp(std::string(ICX_DATA_DIR) + "/fig1.json"));
    ugraph go = sender_constraint_graph(inst);
    CHECK(go.edge_count() == 1);
    CHECK(go.edge(1, 4));
}

TEST_CASE("identical sender sets give an empty constraint graph") {
    instance inst = make(3, {{2}, {3}, {1}}, {1, 2, 3}, {1, 2, 3});
    CHECK(sender_constraint_graph(inst).edge_count() == 0);
}

TEST_CASE("Fig. 3 senders give the complete bipartite {1,2}x{3,4,5,6}") {
    instance inst = load_instance(slurp(std::string(ICX_DATA_DIR) + "/fig3.json"));
    ugraph go = sender_constraint_graph(inst);
    CHECK(go.edge_count() == 8);
    for (int i : {1, 2}) {
        for (int j : {3, 4, 5, 6}) CHECK(go.edge(i, j));
    }
    CHECK_FALSE(go.edge(1, 2));
    CHECK_FALSE(go.edge(1, 7));
}

TEST_CASE("constraint graph edge count is |P1|*|P2| on random instances") {
    for (std::uint32_t seed = 100; seed < 140; ++seed) {
        instance inst = generate_random_instance(
            2 + seed % 7, 0.3, static_cast<sender_split>(seed % 3), seed, 1);
        ugraph go = sender_constraint_graph(inst);
        int expect = static_cast<int>(inst.private1().size() *
                                      inst.private2().size());
        CHECK(go.edge_count() == expect);
    }
}

TEST_CASE("union graph edge cases") {
    // complete digraph, all messages common: nothing left to separate
    instance everything = make(3, {{2, 3}, {1, 3}, {1, 2}}, {1, 2, 3}, {1, 2, 3});
    CHECK(union_graph(everything).edge_count() == 0);

    // no side information: complement digraph is complete
    instance nothing = make(3, {{}, {}, {}}, {1, 2, 3}, {1, 2, 3});
    CHECK(union_graph(nothing).edge_count() == 3);
}

TEST_CASE("union graph is monotone under added arcs and common messages") {
    for (std::uint32_t seed = 300; seed < 330; ++seed) {
        instance inst = generate_random_instance(2 + seed % 6, 0.3,
                                                 sender_split::disjoint, seed);
        ugraph before = union_graph(inst);

        // add one missing arc
        instance more_arcs = inst;
        bool added = false;
        for (int r = 1; r <= inst.n && !added; ++r) {
            for (int m = 1; m <= inst.n && !added; ++m) {
                if (m != r && !inst.knows(r, m)) {
                    more_arcs.side_info[r - 1].push_back(m);
                    std::sort(more_arcs.side_info[r - 1].begin(),
                              more_arcs.side_info[r - 1].end());
                    added = true;
                }
            }
        }
        if (added) {
            ugraph after = union_graph(more_arcs);
            for (int i = 1; i <= inst.n; ++i) {
                for (int j = i + 1; j <= inst.n; ++j) {
                    if (after.edge(i, j)) CHECK(before.edge(i, j));
                }
            }
        }

        // make one private message common
        if (!inst.private1().empty()) {
            instance more_common = inst;
            more_common.sender2.push_back(inst.private1().front());
            std::sort(more_common.sender2.begin(), more_common.sender2.end());
            ugraph after = union_graph(more_common);
            for (int i = 1; i <= inst.n; ++i) {
                for (int j = i + 1; j <= inst.n; ++j) {
                    if (after.edge(i, j)) CHECK(before.edge(i, j));
                }
            }
        }
    }
}

TEST_CASE("generator: zero density gives empty side information") {
    instance inst = generate_random_instance(5, 0.0, sender_split::disjoint, 7);
    for (const auto& h : inst.side_info) CHECK(h.empty());
}

TEST_CASE("generator: one-covers-all puts every message at sender 1") {
    instance inst = generate_random_instance(4, 0.5, sender_split::one_covers_all, 3);
    CHECK(inst.sender1 == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("generator: overlap split yields exactly k common messages") {
    for (int k = 0; k <= 6; ++k) {
        instance inst = generate_random_instance(6, 0.2, sender_split::overlap, 11, k);
        CHECK(static_cast<int>(inst.common().size()) == k);
    }
    CHECK_THROWS_AS(
        generate_random_instance(3, 0.2, sender_split::overlap, 11, 4),
        validation_error);
}

TEST_CASE("generator is deterministic: same seed, bit-exact instance") {
    instance a = generate_random_instance(6, 0.4, sender_split::overlap, 42, 2);
    instance b = generate_random_instance(6, 0.4, sender_split::overlap, 42, 2);
    CHECK(serialize_instance(a) == serialize_instance(b));
    CHECK(a == b);
    instance c = generate_random_instance(6, 0.4, sender_split::overlap, 43, 2);
    CHECK(a != c);  // a different seed should move something
}

TEST_CASE("split names round-trip") {
    for (auto split : {sender_split::disjoint, sender_split::overlap,
                       sender_split::one_covers_all}) {
        CHECK(parse_split(split_name(split)) == split);
    }
    CHECK_THROWS_AS(parse_split("bogus"), parse_error);
}
