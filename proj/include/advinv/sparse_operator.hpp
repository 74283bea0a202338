#pragma once

#include <complex>
#include <span>
#include <vector>

#include "advinv/coefficients.hpp"
#include "advinv/grid.hpp"

namespace advinv {

// Compressed sparse row matrix built from (row, col, value) triplets.
// Duplicate triplets are summed; entries are kept sorted by (row, col) so
// application order and serialized form are deterministic.
class SparseOperator {
public:
    struct Triplet {
        int row, col;
        double value;
    };

    SparseOperator() = default;
    SparseOperator(int n, std::vector<Triplet> triplets, bool symmetric = false);

    int size() const { return n_; }
    bool symmetry_flag() const { return symmetric_; }
    int num_entries() const { return static_cast<int>(values_.size()); }

    std::span<const int> row_ptr() const { return row_ptr_; }
    std::span<const int> cols() const { return cols_; }
    std::span<const double> values() const { return values_; }

    std::vector<Triplet> triplets() const;

    template <class T>
    void apply(std::span<const T> x, std::span<T> y) const {
        for (int r = 0; r < n_; ++r) {
            T acc{};
            for (int k = row_ptr_[static_cast<size_t>(r)]; k < row_ptr_[static_cast<size_t>(r) + 1]; ++k)
                acc += values_[static_cast<size_t>(k)] * x[static_cast<size_t>(cols_[static_cast<size_t>(k)])];
            y[static_cast<size_t>(r)] = acc;
        }
    }

    // exact transpose; the symmetry flag carries over (a symmetric matrix
    // transposes to itself entrywise)
    SparseOperator transpose() const;

    // alpha*I + beta*this
    SparseOperator shifted(double alpha, double beta) const;

    bool equals(const SparseOperator& other) const;

private:
    int n_ = 0;
    bool symmetric_ = false;
    std::vector<int> row_ptr_{0};
    std::vector<int> cols_;
    std::vector<double> values_;
};

// Second-order finite-difference discretization of
//   L u = sum_ij d_i(a_ij d_j u) + sum_j b_j d_j u + c u
// with homogeneous Dirichlet boundary handled by elimination. Flux form uses
// arithmetic-mean midpoint values of a; advection is central-differenced.
// The symmetry flag is set iff b vanishes at every node.
SparseOperator assemble_operator(const Grid& grid, const CoefficientSet& coeffs);

Field apply_operator(const SparseOperator& op, const Field& v);
ComplexField apply_operator(const SparseOperator& op, const ComplexField& v);

SparseOperator adjoint_operator(const SparseOperator& op);

}  // namespace advinv
