#ifndef ICX_CODES_HPP
#define ICX_CODES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace icx {

// One transmitted symbol: a sparse coefficient vector over messages 1..n,
// attributed to the sender that broadcasts it.
struct code_row {
    int sender = 1;  // 1 or 2
    std::vector<std::pair<int, std::uint32_t>> coeffs;  // (msg, coeff≠0), sorted by msg

    std::vector<int> support() const;
    bool operator==(const code_row&) const = default;
};

// A scalar linear index code over F_q. length ℓ = ℓ_1 + ℓ_2 = row count.
struct index_code {
    std::uint32_t q = 2;
    std::vector<code_row> rows;

    int length() const { return static_cast<int>(rows.size()); }
    int length_of_sender(int s) const;
    bool operator==(const index_code&) const = default;
};

// Code file format:
//   {"q": int, "rows": [{"sender": 1|2, "coeffs": [[msg, coeff], ...]}, ...]}
index_code load_code(const std::string& text);
std::string serialize_code(const index_code& code);

}  // namespace icx

#endif
