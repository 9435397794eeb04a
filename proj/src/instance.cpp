#include "icx/instance.hpp"

#include <algorithm>
#include <random>
#include <set>

#include <json.hpp>

#include "icx/errors.hpp"

namespace icx {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

bool instance::in_m1(int msg) const { return contains(sender1, msg); }
bool instance::in_m2(int msg) const { return contains(sender2, msg); }

bool instance::knows(int receiver, int msg) const {
    return contains(side_info[receiver - 1], msg);
}

std::vector<int> instance::private1() const {
    std::vector<int> out;
    std::set_difference(sender1.begin(), sender1.end(), sender2.begin(),
                        sender2.end(), std::back_inserter(out));
    return out;
}

std::vector<int> instance::private2() const {
    std::vector<int> out;
    std::set_difference(sender2.begin(), sender2.end(), sender1.begin(),
                        sender1.end(), std::back_inserter(out));
    return out;
}

std::vector<int> instance::common() const {
    std::vector<int> out;
    std::set_intersection(sender1.begin(), sender1.end(), sender2.begin(),
                          sender2.end(), std::back_inserter(out));
    return out;
}

void instance::validate() const {
    if (n < 1) throw validation_error("n must be positive");
    if (static_cast<int>(side_info.size()) != n) {
        throw validation_error("side_info must list exactly n receivers");
    }
    auto check_range = [this](int msg, const std::string& where) {
        if (msg < 1 || msg > n) {
            throw validation_error("message index " + std::to_string(msg) +
                                   " out of range 1.." + std::to_string(n) +
                                   " in " + where);
        }
    };
    for (int r = 1; r <= n; ++r) {
        for (int msg : side_info[r - 1]) {
            check_range(msg, "side_info of receiver " + std::to_string(r));
            if (msg == r) {
                throw validation_error("receiver " + std::to_string(r) +
                                       " knows own message");
            }
        }
    }
    for (int msg : sender1) check_range(msg, "sender1");
    for (int msg : sender2) check_range(msg, "sender2");
    for (int msg = 1; msg <= n; ++msg) {
        if (!in_m1(msg) && !in_m2(msg)) {
            throw validation_error("message " + std::to_string(msg) +
                                   " at no sender");
        }
    }
}

instance load_instance(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("instance parse: ") + e.what());
    }
    instance inst;
    try {
        inst.n = j.at("n").get<int>();
        for (const auto& row : j.at("side_info")) {
            inst.side_info.push_back(sorted_unique(row.get<std::vector<int>>()));
        }
        inst.sender1 = sorted_unique(j.at("sender1").get<std::vector<int>>());
        inst.sender2 = sorted_unique(j.at("sender2").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("instance parse: ") + e.what());
    }
    inst.validate();
    return inst;
}

std::string serialize_instance(const instance& inst) {
    nlohmann::json j;
    j["n"] = inst.n;
    j["side_info"] = inst.side_info;
    j["sender1"] = inst.sender1;
    j["sender2"] = inst.sender2;
    return j.dump(2) + "\n";
}

sender_split parse_split(const std::string& name) {
    if (name == "disjoint") return sender_split::disjoint;
    if (name == "overlap") return sender_split::overlap;
    if (name == "one-covers-all") return sender_split::one_covers_all;
    throw parse_error("unknown sender split '" + name + "'");
}

std::string split_name(sender_split split) {
    switch (split) {
        case sender_split::disjoint: return "disjoint";
        case sender_split::overlap: return "overlap";
        case sender_split::one_covers_all: return "one-covers-all";
    }
    return "?";
}

namespace {

// Platform-independent draws: std distributions are not pinned by the
// standard, mt19937's output sequence is.
int draw_below(std::mt19937& rng, int bound) {  // uniform-ish in [0, bound)
    return static_cast<int>(rng() % static_cast<std::uint32_t>(bound));
}

bool draw_bernoulli(std::mt19937& rng, double p) {
    return (rng() >> 8) < p * 16777216.0;  // 24-bit mantissa compare
}

std::vector<int> shuffled_messages(std::mt19937& rng, int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    for (int i = n - 1; i > 0; --i) {
        std::swap(v[i], v[draw_below(rng, i + 1)]);
    }
    return v;
}

}  // namespace

instance generate_random_instance(int n, double density, sender_split split,
                                  std::uint32_t seed, int common_k) {
    if (n < 1) throw validation_error("n must be positive");
    if (density < 0.0 || density > 1.0) {
        throw validation_error("density must lie in [0,1]");
    }
    std::mt19937 rng(seed);
    instance inst;
    inst.n = n;

    std::vector<int> order = shuffled_messages(rng, n);
    switch (split) {
        case sender_split::disjoint: {
            int cut = (n == 1) ? 1 : 1 + draw_below(rng, n - 1);
            inst.sender1.assign(order.begin(), order.begin() + cut);
            inst.sender2.assign(order.begin() + cut, order.end());
            break;
        }
        case sender_split::overlap: {
            if (common_k < 0 || common_k > n) {
                throw validation_error("overlap size " + std::to_string(common_k) +
                                       " infeasible for n = " + std::to_string(n));
            }
            int cut = common_k + draw_below(rng, n - common_k + 1);
            inst.sender1.assign(order.begin(), order.begin() + cut);
            inst.sender2.assign(order.begin() + cut, order.end());
            for (int i = 0; i < common_k; ++i) inst.sender2.push_back(order[i]);
            break;
        }
        case sender_split::one_covers_all: {
            inst.sender1.resize(n);
            for (int i = 0; i < n; ++i) inst.sender1[i] = i + 1;
            for (int msg = 1; msg <= n; ++msg) {
                if (draw_bernoulli(rng, 0.5)) inst.sender2.push_back(msg);
            }
            break;
        }
    }
    std::sort(inst.sender1.begin(), inst.sender1.end());
    std::sort(inst.sender2.begin(), inst.sender2.end());

    inst.side_info.assign(n, {});
    for (int r = 1; r <= n; ++r) {
        for (int msg = 1; msg <= n; ++msg) {
            if (msg != r && draw_bernoulli(rng, density)) {
                inst.side_info[r - 1].push_back(msg);
            }
        }
    }
    inst.validate();
    return inst;
}

}  // namespace icx
