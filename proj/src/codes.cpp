#include "icx/codes.hpp"

#include <algorithm>

#include <json.hpp>

#include "icx/errors.hpp"
#include "icx/gf.hpp"

namespace icx {

std::vector<int> code_row::support() const {
    std::vector<int> out;
    out.reserve(coeffs.size());
    for (const auto& [msg, coeff] : coeffs) out.push_back(msg);
    return out;
}

int index_code::length_of_sender(int s) const {
    int count = 0;
    for (const auto& row : rows) count += (row.sender == s) ? 1 : 0;
    return count;
}

index_code load_code(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("code parse: ") + e.what());
    }
    index_code code;
    try {
        code.q = j.at("q").get<std::uint32_t>();
        for (const auto& row : j.at("rows")) {
            code_row r;
            r.sender = row.at("sender").get<int>();
            for (const auto& pair : row.at("coeffs")) {
                r.coeffs.emplace_back(pair.at(0).get<int>(),
                                      pair.at(1).get<std::uint32_t>());
            }
            std::sort(r.coeffs.begin(), r.coeffs.end());
            code.rows.push_back(std::move(r));
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("code parse: ") + e.what());
    }
    if (!is_prime(code.q)) {
        throw validation_error("code field size " + std::to_string(code.q) +
                               " is not prime");
    }
    for (size_t i = 0; i < code.rows.size(); ++i) {
        const auto& r = code.rows[i];
        if (r.sender != 1 && r.sender != 2) {
            throw validation_error("row " + std::to_string(i + 1) +
                                   ": sender must be 1 or 2");
        }
        for (const auto& [msg, coeff] : r.coeffs) {
            if (msg < 1) {
                throw validation_error("row " + std::to_string(i + 1) +
                                       ": message index must be positive");
            }
            if (coeff == 0 || coeff >= code.q) {
                throw validation_error("row " + std::to_string(i + 1) +
                                       ": coefficients must lie in 1..q-1");
            }
        }
        for (size_t k = 1; k < r.coeffs.size(); ++k) {
            if (r.coeffs[k].first == r.coeffs[k - 1].first) {
                throw validation_error("row " + std::to_string(i + 1) +
                                       ": duplicate message index");
            }
        }
    }
    return code;
}

std::string serialize_code(const index_code& code) {
    nlohmann::json j;
    j["q"] = code.q;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : code.rows) {
        nlohmann::json jr;
        jr["sender"] = row.sender;
        jr["coeffs"] = nlohmann::json::array();
        for (const auto& [msg, coeff] : row.coeffs) {
            jr["coeffs"].push_back({msg, coeff});
        }
        j["rows"].push_back(jr);
    }
    return j.dump(2) + "\n";
}

}  // namespace icx
