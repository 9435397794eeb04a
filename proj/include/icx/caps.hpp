#ifndef ICX_CAPS_HPP
#define ICX_CAPS_HPP

namespace icx {

// Exactness caps for the search-based operations. Exceeding a cap raises
// cap_exceeded; nothing falls back to a heuristic.
struct caps {
    int mais_cap = 20;       // max n for the MAIS subset search
    int coloring_cap = 12;   // max n for chromatic number / coloring enumeration
    int partition_cap = 10;  // max n for set-partition minimizations
    int cycle_budget = 10000;  // max number of simple cycles enumerated
    int oracle_cap = 6;      // max n for the exact linear-code oracle
};

}  // namespace icx

#endif
