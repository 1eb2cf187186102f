#ifndef SYZ_MATRIX_HPP
#define SYZ_MATRIX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "syz/field.hpp"

namespace syz {

// Dense matrix over a coefficient field. Fine for the moderate sizes that
// appear outside the strand/homology hot paths; the large sparse rank
// computations go through sparse_rank_* below.
class ExactMatrix {
public:
    ExactMatrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols),
          data_(rows * cols, Scalar::zero(f)) {}

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Scalar& v);

    ExactMatrix transpose() const;
    ExactMatrix multiply(const ExactMatrix& o) const;
    bool is_zero() const;

    static ExactMatrix identity(const Field& f, std::size_t n);

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> data_;
};

struct RowReduceResult {
    ExactMatrix echelon;      // reduced row-echelon form
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<std::vector<Scalar>> kernel_basis; // right null space
};

// Gauss-Jordan with deterministic pivoting (first nonzero in column order).
RowReduceResult row_reduce(const ExactMatrix& m);

std::size_t rank(const ExactMatrix& m);

// Solves m * x = b; returns false if inconsistent.
bool solve(const ExactMatrix& m, const std::vector<Scalar>& b, std::vector<Scalar>& x);

// ---- sparse rank kernels ----

// One row: sorted (column, value) pairs, value nonzero.
using SparseRowGF = std::vector<std::pair<std::int32_t, std::uint32_t>>;
using SparseRowQ = std::vector<std::pair<std::int32_t, mpq_class>>;

std::size_t sparse_rank_gfp(std::vector<SparseRowGF> rows, std::size_t ncols, std::uint32_t p);
std::size_t sparse_rank_q(std::vector<SparseRowQ> rows, std::size_t ncols);

// Generic sparse row in Scalar form, dispatched to the kernels above.
using SparseRow = std::vector<std::pair<std::int32_t, Scalar>>;
std::size_t sparse_rank(const Field& f, const std::vector<SparseRow>& rows, std::size_t ncols);

} // namespace syz

#endif
