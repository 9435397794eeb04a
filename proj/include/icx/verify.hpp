#ifndef ICX_VERIFY_HPP
#define ICX_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "icx/caps.hpp"
#include "icx/codes.hpp"
#include "icx/instance.hpp"

namespace icx {

struct row_verdict {
    int row = 0;  // 1-based position in the code
    bool pass = false;
    std::string reason;  // empty when pass
};

struct receiver_verdict {
    int receiver = 0;
    bool pass = false;
};

struct verify_report {
    std::vector<row_verdict> rows;
    std::vector<receiver_verdict> receivers;
    bool pass = false;  // all rows and all receivers
    int length = 0;
};

nlohmann::json to_json(const verify_report& rep);

// Per-row sender check: a row tagged S_s passes iff its support ⊆ M_s.
std::vector<row_verdict> check_sender_constraint(const instance& inst,
                                                 const index_code& code);

// Receiver r passes iff e_r ∈ span(code rows ∪ {e_j : j ∈ H_r}) over F_q.
// Fills receivers, length, and pass over the receivers.
verify_report check_decodability(const instance& inst, const index_code& code);

// Both checks combined; pass iff every row and every receiver passes.
verify_report verify_code(const instance& inst, const index_code& code);

// Exact smallest ℓ_1+ℓ_2 over all pairs of row spaces (sender-1 rows
// supported in M_1, sender-2 rows in M_2) that decode every receiver;
// scalar-linear over F_2. Searched in increasing total length starting at
// MAIS(D). Returns nullopt if the optimum exceeds max_length (max_length < 0
// means unbounded; the optimum is always ≤ n). Throws cap_exceeded when
// n > oracle_cap.
std::optional<int> oracle_beta1_linear(const instance& inst, int max_length = -1,
                                       const caps& cp = {});

enum class reduction_kind { single_sender_equivalent, decomposable, irreducible };

struct sub_instance {
    instance inst;
    std::vector<int> vertex_map;  // sub vertex v (1-based) → original vertex
};

struct reduction_report {
    reduction_kind kind = reduction_kind::irreducible;
    int covering_sender = 0;           // for single_sender_equivalent
    std::vector<sub_instance> parts;   // for decomposable: the two sub-instances
};

nlohmann::json to_json(const reduction_report& rep);

// Reductions: single-sender-equivalent if some M_s = M;
// decomposable into the sub-instances induced by each sender's messages if
// P_c = ∅; irreducible otherwise.
reduction_report reduce_instance(const instance& inst);

// A bound value, or the reason its cap was exceeded.
struct bound_field {
    std::optional<int> value;
    std::string cap_reason;
};

struct bounds_report {
    bound_field mais;              // lower bound
    bound_field cycle_cover_len;   // ℓ_CY
    bound_field clique_cover_len;  // ℓ_CL = χ(U_{D̄,G_o})
    bound_field local_chromatic;   // χ_ℓ(D̄,G_o)
    bound_field alpha;             // α
    bound_field partitioned_len;   // ℓ_p
    bound_field oracle_linear;     // exact scalar-linear optimum over F_2
    std::string reduction;         // reduce_instance kind
    bool ordering_violation = false;
    std::vector<std::string> violations;
};

nlohmann::json to_json(const bounds_report& rep);

// Assembles every bound, checking MAIS ≤ oracle ≤ ℓ_p ≤ α ≤ ℓ_CL and
// ℓ_CY ≥ MAIS over the fields that were computable. Cap overflows yield a
// partial report, never a failure.
bounds_report make_bounds_report(const instance& inst, bool include_oracle,
                                 const caps& cp = {});

}  // namespace icx

#endif
