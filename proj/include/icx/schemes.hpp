#ifndef ICX_SCHEMES_HPP
#define ICX_SCHEMES_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "icx/caps.hpp"
#include "icx/codes.hpp"
#include "icx/graphs.hpp"
#include "icx/instance.hpp"

namespace icx {

// Output of one constructive upper-bound scheme: the achieved length and a
// concrete code witnessing it, plus the structures the scheme picked
// (cycles / color classes / partition) for inspection.
struct scheme_result {
    std::string scheme;
    int length = 0;
    index_code code;
    nlohmann::json diagnostics;
};

// Two-sender cycle-cover scheme: exact maximum packing of vertex-disjoint
// message-connected cycles; per-cycle spanning-tree XOR rows over F_2 plus
// uncoded rows for uncovered vertices. length = |V(D)| − (#cycles packed).
scheme_result cycle_cover(const instance& inst, const caps& cp = {});

// Two-sender clique-cover scheme: length = χ(U_{D̄,G_o}); one XOR row per
// color class of the witness coloring.
scheme_result clique_cover(const instance& inst, const caps& cp = {});

// χ_ℓ(D̄,G_o): minimum over proper colorings of U_{D̄,G_o} (≤ n colors) of
// the maximum closed out-neighborhood color count in D̄.
int two_sender_local_chromatic_number(const instance& inst, const caps& cp = {});

// Achievable local-chromatic code: picks J* minimizing
// max{N_ℓ(J'), |J_o(J')|}, builds the [I_α | P] MDS code with J_o colors on
// identity columns, and returns the α rows of G_N · x.
scheme_result local_chromatic_code(const instance& inst, const caps& cp = {});

// ℓ_p: exact minimum of Σ α_i over all set partitions of the vertex set,
// each part an induced sub-instance. Witness concatenates per-part codes
// over one common field.
scheme_result partitioned_local_chromatic(const instance& inst, const caps& cp = {});

enum class base_scheme { cycle, clique, local };
base_scheme parse_base_scheme(const std::string& name);  // throws parse_error

// Trivial extension: exact minimum of Σ ℓ_X(D_i) over partitions whose parts
// are each fully requested from one sender; the base scheme runs single-sender
// on each part.
scheme_result trivial_partition_scheme(const instance& inst, base_scheme base,
                                       const caps& cp = {});

}  // namespace icx

#endif
