#ifndef ICX_INSTANCE_HPP
#define ICX_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace icx {

// A two-sender unicast index-coding instance: n messages/receivers,
// per-receiver side information, and the two senders' message sets.
// Messages and receivers are 1-indexed throughout to match the file format.
// All containers are kept sorted ascending; treat instances as immutable
// after validate().
struct instance {
    int n = 0;
    std::vector<std::vector<int>> side_info;  // side_info[r-1] = H_r, sorted
    std::vector<int> sender1;                 // M_1, sorted
    std::vector<int> sender2;                 // M_2, sorted

    bool in_m1(int msg) const;
    bool in_m2(int msg) const;
    bool knows(int receiver, int msg) const;  // msg in H_receiver

    std::vector<int> private1() const;  // P_1 = M_1 \ M_2
    std::vector<int> private2() const;  // P_2 = M_2 \ M_1
    std::vector<int> common() const;    // P_c = M_1 ∩ M_2

    // Throws validation_error naming the violated invariant.
    void validate() const;

    bool operator==(const instance&) const = default;
};

// Parses the instance file format:
//   {"n": int, "side_info": [[int,...],...], "sender1": [...], "sender2": [...]}
// Unsorted arrays are accepted and sorted; duplicates collapse.
// Throws parse_error on malformed text, validation_error on bad instances.
instance load_instance(const std::string& text);

// Serializes with arrays sorted ascending. load_instance(serialize_instance(x))
// round-trips exactly.
std::string serialize_instance(const instance& inst);

enum class sender_split {
    disjoint,        // M_1, M_2 partition the messages
    overlap,         // k common messages, rest split
    one_covers_all,  // M_1 = all messages, M_2 a random subset
};

sender_split parse_split(const std::string& name);  // throws parse_error
std::string split_name(sender_split split);

// Deterministic for a fixed seed (mt19937 with fixed draw scheme; no
// platform-dependent distributions). arc i→j sampled with prob `density`.
// `common_k` is only read for sender_split::overlap; throws validation_error
// if common_k > n or common_k < 0.
instance generate_random_instance(int n, double density, sender_split split,
                                  std::uint32_t seed, int common_k = 0);

}  // namespace icx

#endif
