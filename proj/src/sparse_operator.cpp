#include "advinv/sparse_operator.hpp"

#include <algorithm>
#include <string>

#include "advinv/errors.hpp"

namespace advinv {

SparseOperator::SparseOperator(int n, std::vector<Triplet> triplets, bool symmetric)
    : n_(n), symmetric_(symmetric) {
    for (const auto& t : triplets)
        if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n)
            throw ValidationError("SparseOperator: triplet (" + std::to_string(t.row) + "," +
                                  std::to_string(t.col) + ") outside dimension " +
                                  std::to_string(n));
    std::stable_sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    row_ptr_.assign(static_cast<size_t>(n) + 1, 0);
    cols_.clear();
    values_.clear();
    for (size_t i = 0; i < triplets.size();) {
        const int r = triplets[i].row, c = triplets[i].col;
        double v = 0.0;
        for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i)
            v += triplets[i].value;
        cols_.push_back(c);
        values_.push_back(v);
        ++row_ptr_[static_cast<size_t>(r) + 1];
    }
    for (int r = 0; r < n; ++r) row_ptr_[static_cast<size_t>(r) + 1] += row_ptr_[static_cast<size_t>(r)];
}

std::vector<SparseOperator::Triplet> SparseOperator::triplets() const {
    std::vector<Triplet> out;
    out.reserve(values_.size());
    for (int r = 0; r < n_; ++r)
        for (int k = row_ptr_[static_cast<size_t>(r)]; k < row_ptr_[static_cast<size_t>(r) + 1]; ++k)
            out.push_back({r, cols_[static_cast<size_t>(k)], values_[static_cast<size_t>(k)]});
    return out;
}

SparseOperator SparseOperator::transpose() const {
    std::vector<Triplet> t;
    t.reserve(values_.size());
    for (const auto& e : triplets()) t.push_back({e.col, e.row, e.value});
    return SparseOperator(n_, std::move(t), symmetric_);
}

SparseOperator SparseOperator::shifted(double alpha, double beta) const {
    std::vector<Triplet> t;
    t.reserve(values_.size() + static_cast<size_t>(n_));
    for (const auto& e : triplets()) t.push_back({e.row, e.col, beta * e.value});
    for (int i = 0; i < n_; ++i) t.push_back({i, i, alpha});
    return SparseOperator(n_, std::move(t), symmetric_);
}

bool SparseOperator::equals(const SparseOperator& other) const {
    return n_ == other.n_ && row_ptr_ == other.row_ptr_ && cols_ == other.cols_ &&
           values_ == other.values_;
}

namespace {

void append_1d(std::vector<SparseOperator::Triplet>& t, const Grid& g,
               const CoefficientSet& coeffs) {
    const int n = g.n_interior(0);
    const double h = g.spacing(0);
    const double inv_h2 = 1.0 / (h * h);
    const double inv_2h = 1.0 / (2.0 * h);
    for (int i = 0; i < n; ++i) {
        const int ci = i + 1;  // closed index
        const double a_w = 0.5 * (coeffs.a(0, ci - 1) + coeffs.a(0, ci));
        const double a_e = 0.5 * (coeffs.a(0, ci) + coeffs.a(0, ci + 1));
        const double b = coeffs.b(0, ci);
        // flux form: [a_e (u_{i+1} - u_i) - a_w (u_i - u_{i-1})] / h^2
        if (i > 0) t.push_back({i, i - 1, a_w * inv_h2 - b * inv_2h});
        t.push_back({i, i, -(a_w + a_e) * inv_h2 + coeffs.c(ci)});
        if (i < n - 1) t.push_back({i, i + 1, a_e * inv_h2 + b * inv_2h});
    }
}

void append_2d(std::vector<SparseOperator::Triplet>& t, const Grid& g,
               const CoefficientSet& coeffs) {
    const int nx = g.n_interior(0), ny = g.n_interior(1);
    const double hx = g.spacing(0), hy = g.spacing(1);
    const double ihx2 = 1.0 / (hx * hx), ihy2 = 1.0 / (hy * hy);
    const double i2hx = 1.0 / (2.0 * hx), i2hy = 1.0 / (2.0 * hy);
    const double ixy = 1.0 / (4.0 * hx * hy);

    auto add = [&](int row, int ix, int iy, double v) {
        if (ix < 0 || ix >= nx || iy < 0 || iy >= ny) return;  // ghost value 0
        t.push_back({row, g.flat(ix, iy), v});
    };

    for (int iy = 0; iy < ny; ++iy) {
        for (int ix = 0; ix < nx; ++ix) {
            const int row = g.flat(ix, iy);
            const int cx = ix + 1, cy = iy + 1;
            const int cc = g.closed_flat(cx, cy);
            const double a11_w = 0.5 * (coeffs.a(0, g.closed_flat(cx - 1, cy)) + coeffs.a(0, cc));
            const double a11_e = 0.5 * (coeffs.a(0, cc) + coeffs.a(0, g.closed_flat(cx + 1, cy)));
            const double a22_s = 0.5 * (coeffs.a(2, g.closed_flat(cx, cy - 1)) + coeffs.a(2, cc));
            const double a22_n = 0.5 * (coeffs.a(2, cc) + coeffs.a(2, g.closed_flat(cx, cy + 1)));
            const double a12_e = coeffs.a(1, g.closed_flat(cx + 1, cy));
            const double a12_w = coeffs.a(1, g.closed_flat(cx - 1, cy));
            const double a12_n = coeffs.a(1, g.closed_flat(cx, cy + 1));
            const double a12_s = coeffs.a(1, g.closed_flat(cx, cy - 1));
            const double b1 = coeffs.b(0, cc), b2 = coeffs.b(1, cc);

            add(row, ix - 1, iy, a11_w * ihx2 - b1 * i2hx);
            add(row, ix + 1, iy, a11_e * ihx2 + b1 * i2hx);
            add(row, ix, iy - 1, a22_s * ihy2 - b2 * i2hy);
            add(row, ix, iy + 1, a22_n * ihy2 + b2 * i2hy);
            add(row, ix, iy, -(a11_w + a11_e) * ihx2 - (a22_s + a22_n) * ihy2 + coeffs.c(cc));

            // mixed terms d_x(a12 d_y u) + d_y(a12 d_x u), corner stencil
            add(row, ix + 1, iy + 1, (a12_e + a12_n) * ixy);
            add(row, ix - 1, iy - 1, (a12_w + a12_s) * ixy);
            add(row, ix + 1, iy - 1, -(a12_e + a12_s) * ixy);
            add(row, ix - 1, iy + 1, -(a12_w + a12_n) * ixy);
        }
    }
}

}  // namespace

SparseOperator assemble_operator(const Grid& grid, const CoefficientSet& coeffs) {
    if (coeffs.grid() != grid)
        throw ValidationError("assemble_operator: coefficient set built for a different grid");
    check_ellipticity(coeffs);

    std::vector<SparseOperator::Triplet> t;
    t.reserve(static_cast<size_t>(grid.num_unknowns()) * (grid.dim() == 1 ? 3 : 9));
    if (grid.dim() == 1)
        append_1d(t, grid, coeffs);
    else
        append_2d(t, grid, coeffs);
    return SparseOperator(grid.num_unknowns(), std::move(t), coeffs.advection_vanishes());
}

namespace {
template <class T>
BasicField<T> apply_impl(const SparseOperator& op, const BasicField<T>& v) {
    if (op.size() != v.size())
        throw ValidationError("apply_operator: dimension mismatch (" + std::to_string(op.size()) +
                              " vs " + std::to_string(v.size()) + ")");
    BasicField<T> out(v.grid);
    op.apply<T>(v.values, out.values);
    return out;
}
}  // namespace

Field apply_operator(const SparseOperator& op, const Field& v) { return apply_impl(op, v); }
ComplexField apply_operator(const SparseOperator& op, const ComplexField& v) {
    return apply_impl(op, v);
}

SparseOperator adjoint_operator(const SparseOperator& op) { return op.transpose(); }

}  // namespace advinv
