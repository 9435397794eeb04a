#include "icx/gf.hpp"

#include <algorithm>

#include "icx/errors.hpp"

namespace icx {

bool is_prime(std::uint32_t q) {
    if (q < 2) return false;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) return false;
    }
    return true;
}

std::uint32_t smallest_prime_at_least(std::uint32_t q) {
    std::uint32_t p = std::max(q, 2u);
    while (!is_prime(p)) ++p;
    return p;
}

field field::make(std::uint32_t q) {
    if (!is_prime(q)) {
        throw validation_error("field modulus " + std::to_string(q) +
                               " is not prime");
    }
    return field(q);
}

std::uint32_t field::inv(std::uint32_t a) const {
    a %= q_;
    if (a == 0) throw validation_error("zero has no inverse");
    // extended Euclid on (a, q)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = q_, new_r = a;
    while (new_r != 0) {
        std::int64_t quot = r / new_r;
        t -= quot * new_t;
        std::swap(t, new_t);
        r -= quot * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += q_;
    return static_cast<std::uint32_t>(t);
}

std::vector<std::uint32_t> fmatrix::row(int r) const {
    return std::vector<std::uint32_t>(a.begin() + static_cast<size_t>(r) * cols,
                                      a.begin() + static_cast<size_t>(r + 1) * cols);
}

std::vector<std::uint32_t> fmatrix::col(int c) const {
    std::vector<std::uint32_t> out(rows);
    for (int r = 0; r < rows; ++r) out[r] = at(r, c);
    return out;
}

fmatrix systematic_mds_generator(int alpha, int total_cols, const field& f) {
    if (alpha < 1 || total_cols < alpha) {
        throw validation_error("bad MDS generator shape");
    }
    if (f.q() < static_cast<std::uint32_t>(total_cols)) {
        throw validation_error("field of size " + std::to_string(f.q()) +
                               " too small for " + std::to_string(total_cols) +
                               " columns");
    }
    fmatrix g(alpha, total_cols);
    for (int i = 0; i < alpha; ++i) g.at(i, i) = 1;

    int pcols = total_cols - alpha;
    if (pcols > 0) {
        // x_i = i, y_j = alpha + j + shift, all mod q; shift until no sum is 0.
        const std::uint32_t q = f.q();
        std::uint32_t shift = 0;
        for (; shift < q; ++shift) {
            bool ok = true;
            for (int i = 0; i < alpha && ok; ++i) {
                for (int j = 0; j < pcols && ok; ++j) {
                    if ((static_cast<std::uint32_t>(i + alpha + j) + shift) % q == 0)
                        ok = false;
                }
            }
            if (ok) break;
        }
        // sums cover ≤ total_cols − 1 < q residues, so some shift works
        for (int i = 0; i < alpha; ++i) {
            for (int j = 0; j < pcols; ++j) {
                std::uint32_t sum = (static_cast<std::uint32_t>(i + alpha + j) + shift) % f.q();
                g.at(i, alpha + j) = f.inv(sum);
            }
        }
    }
    return g;
}

int rank(const fmatrix& m, const field& f) {
    fmatrix w = m;
    int rk = 0;
    for (int c = 0; c < w.cols && rk < w.rows; ++c) {
        int pivot = -1;
        for (int r = rk; r < w.rows; ++r) {
            if (w.at(r, c) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        for (int k = 0; k < w.cols; ++k) std::swap(w.at(rk, k), w.at(pivot, k));
        std::uint32_t piv_inv = f.inv(w.at(rk, c));
        for (int k = 0; k < w.cols; ++k) w.at(rk, k) = f.mul(w.at(rk, k), piv_inv);
        for (int r = 0; r < w.rows; ++r) {
            if (r == rk || w.at(r, c) == 0) continue;
            std::uint32_t factor = w.at(r, c);
            for (int k = 0; k < w.cols; ++k) {
                w.at(r, k) = f.sub(w.at(r, k), f.mul(factor, w.at(rk, k)));
            }
        }
        ++rk;
    }
    return rk;
}

bool in_span(const fmatrix& rows, const std::vector<std::uint32_t>& target,
             const field& f) {
    fmatrix base = rows;
    for (auto& v : base.a) v %= f.q();
    fmatrix stacked(base.rows + 1, base.cols);
    stacked.a.assign(base.a.begin(), base.a.end());
    stacked.a.insert(stacked.a.end(), target.begin(), target.end());
    for (auto& v : stacked.a) v %= f.q();
    return rank(stacked, f) == rank(base, f);
}

}  // namespace icx
