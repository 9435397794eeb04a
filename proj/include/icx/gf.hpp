#ifndef ICX_GF_HPP
#define ICX_GF_HPP

#include <cstdint>
#include <vector>

namespace icx {

// Prime field F_q with exact modular arithmetic. Extension fields are out
// of scope; every construction here picks a large enough prime instead.
class field {
  public:
    // Throws validation_error unless q is prime and ≥ 2.
    static field make(std::uint32_t q);

    std::uint32_t q() const { return q_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % q_; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return (a + q_ - b % q_) % q_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % q_);
    }
    std::uint32_t neg(std::uint32_t a) const { return (q_ - a % q_) % q_; }
    std::uint32_t inv(std::uint32_t a) const;  // throws validation_error on 0

  private:
    explicit field(std::uint32_t q) : q_(q) {}
    std::uint32_t q_ = 2;
};

bool is_prime(std::uint32_t q);
std::uint32_t smallest_prime_at_least(std::uint32_t q);

// Dense row-major matrix over a prime field. Entries are reduced mod q.
struct fmatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint32_t> a;  // rows*cols

    fmatrix() = default;
    fmatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
    std::uint32_t& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    std::uint32_t at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
    std::vector<std::uint32_t> row(int r) const;
    std::vector<std::uint32_t> col(int c) const;
};

// Systematic generator [I_alpha | P] of a (total_cols, alpha)-MDS code.
// P is an alpha × (total_cols − alpha) Cauchy block P[i][j] = 1/(x_i + y_j)
// with x_i = i−1 and y_j = alpha+j−1 shifted until no sum hits zero, so all
// entries are nonzero and every square submatrix of P is nonsingular.
// Requires f.q() ≥ total_cols ≥ alpha ≥ 1; throws validation_error otherwise.
fmatrix systematic_mds_generator(int alpha, int total_cols, const field& f);

int rank(const fmatrix& m, const field& f);

// True iff target lies in the row space of rows (exact Gaussian elimination).
bool in_span(const fmatrix& rows, const std::vector<std::uint32_t>& target,
             const field& f);

}  // namespace icx

#endif
