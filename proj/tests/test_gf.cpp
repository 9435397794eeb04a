#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "icx/errors.hpp"
#include "icx/gf.hpp"

using namespace icx;

namespace {

// Independent oracle: target is in the span iff some of the q^k coefficient
// combinations of the rows reproduces it.
bool in_span_exhaustive(const fmatrix& rows, const std::vector<std::uint32_t>& target,
                        const field& f) {
    std::uint64_t combos = 1;
    for (int i = 0; i < rows.rows; ++i) combos *= f.q();
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
        std::vector<std::uint32_t> sum(rows.cols, 0);
        std::uint64_t rest = idx;
        for (int r = 0; r < rows.rows; ++r) {
            std::uint32_t coeff = rest % f.q();
            rest /= f.q();
            for (int c = 0; c < rows.cols; ++c) {
                sum[c] = f.add(sum[c], f.mul(coeff, rows.at(r, c)));
            }
        }
        if (sum == target) return true;
    }
    return false;
}

fmatrix submatrix(const fmatrix& m, const std::vector<int>& rows,
                  const std::vector<int>& cols) {
    fmatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t c = 0; c < cols.size(); ++c) {
            out.at(static_cast<int>(r), static_cast<int>(c)) = m.at(rows[r], cols[c]);
        }
    }
    return out;
}

void for_each_combination(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

TEST_CASE("field construction and arithmetic") {
    field f2 = field::make(2);
    CHECK(f2.add(1, 1) == 0);  // XOR
    CHECK(f2.mul(1, 1) == 1);  // AND
    field f5 = field::make(5);
    CHECK(f5.inv(2) == 3);
    CHECK(f5.mul(2, f5.inv(2)) == 1);
    CHECK_THROWS_AS(field::make(4), validation_error);
    CHECK_THROWS_AS(field::make(1), validation_error);
    CHECK_THROWS_AS(field::make(0), validation_error);
}

TEST_CASE("field axioms hold for small primes") {
    for (std::uint32_t q : {2u, 3u, 5u, 7u}) {
        field f = field::make(q);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(f.add(a, b), b) == a);
            }
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
        }
        CHECK_THROWS_AS(f.inv(0), validation_error);
    }
}

TEST_CASE("smallest_prime_at_least") {
    CHECK(smallest_prime_at_least(0) == 2);
    CHECK(smallest_prime_at_least(2) == 2);
    CHECK(smallest_prime_at_least(4) == 5);
    CHECK(smallest_prime_at_least(8) == 11);
}

TEST_CASE("mds generator: alpha == total_cols gives the identity") {
    field f = field::make(5);
    fmatrix g = systematic_mds_generator(3, 3, f);
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) CHECK(g.at(r, c) == (r == c ? 1u : 0u));
    }
}

TEST_CASE("mds generator 2x3 over F5: every column pair invertible") {
    field f = field::make(5);
    fmatrix g = systematic_mds_generator(2, 3, f);
    CHECK(g.at(0, 2) != 0);
    CHECK(g.at(1, 2) != 0);
    for_each_combination(3, 2, [&](const std::vector<int>& cols) {
        CHECK(rank(submatrix(g, {0, 1}, cols), f) == 2);
    });
}

TEST_CASE("mds generator 3x6 over F7: every square P-minor nonsingular") {
    field f = field::make(7);
    fmatrix g = systematic_mds_generator(3, 6, f);
    for (int r = 0; r < 3; ++r) {
        for (int c = 3; c < 6; ++c) CHECK(g.at(r, c) != 0);
    }
    for (int size = 1; size <= 3; ++size) {
        for_each_combination(3, size, [&](const std::vector<int>& rsel) {
            for_each_combination(3, size, [&](const std::vector<int>& csel) {
                std::vector<int> pcols;
                for (int c : csel) pcols.push_back(3 + c);
                CHECK(rank(submatrix(g, rsel, pcols), f) == size);
            });
        });
    }
}

TEST_CASE("mds generator rejects too-small fields") {
    field f = field::make(3);
    CHECK_THROWS_AS(systematic_mds_generator(2, 4, f), validation_error);
}

TEST_CASE("mds property across shapes: any alpha columns independent") {
    for (int cols = 1; cols <= 7; ++cols) {
        for (int alpha = 1; alpha <= cols; ++alpha) {
            field f = field::make(smallest_prime_at_least(std::max(2, cols)));
            fmatrix g = systematic_mds_generator(alpha, cols, f);
            std::vector<int> all_rows(alpha);
            for (int i = 0; i < alpha; ++i) all_rows[i] = i;
            for_each_combination(cols, alpha, [&](const std::vector<int>& csel) {
                CHECK(rank(submatrix(g, all_rows, csel), f) == alpha);
            });
        }
    }
}

TEST_CASE("in_span basic examples over F2") {
    field f = field::make(2);
    fmatrix rows(2, 3);
    rows.at(0, 0) = 1;
    rows.at(0, 1) = 1;  // e1+e2
    rows.at(1, 1) = 1;  // e2
    CHECK(in_span(rows, {1, 0, 0}, f));
    fmatrix one(1, 3);
    one.at(0, 0) = 1;
    one.at(0, 1) = 1;
    CHECK_FALSE(in_span(one, {1, 0, 0}, f));
}

TEST_CASE("in_span agrees with exhaustive combination oracle") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::uint32_t q = std::vector<std::uint32_t>{2, 3, 5, 7}[rng() % 4];
        field f = field::make(q);
        int cols = 2 + rng() % 5;   // ≤ 6
        int nrows = 1 + rng() % 4;  // keep q^rows small
        fmatrix rows(nrows, cols);
        for (auto& v : rows.a) v = rng() % q;
        std::vector<std::uint32_t> target(cols);
        for (auto& v : target) v = rng() % q;
        CHECK(in_span(rows, target, f) == in_span_exhaustive(rows, target, f));
    }
}

TEST_CASE("in_span is monotone and consistent with rank") {
    std::mt19937 rng(7);
    field f = field::make(3);
    for (int trial = 0; trial < 40; ++trial) {
        int cols = 3 + rng() % 3;
        fmatrix rows(2, cols);
        for (auto& v : rows.a) v = rng() % 3;
        std::vector<std::uint32_t> target(cols);
        for (auto& v : target) v = rng() % 3;
        bool before = in_span(rows, target, f);
        // rank consistency
        fmatrix stacked(3, cols);
        std::copy(rows.a.begin(), rows.a.end(), stacked.a.begin());
        std::copy(target.begin(), target.end(), stacked.a.begin() + 2 * cols);
        CHECK(before == (rank(stacked, f) == rank(rows, f)));
        // monotone: adding a row never flips true -> false
        fmatrix wider(3, cols);
        std::copy(rows.a.begin(), rows.a.end(), wider.a.begin());
        for (int c = 0; c < cols; ++c) wider.at(2, c) = rng() % 3;
        if (before) CHECK(in_span(wider, target, f));
    }
}
