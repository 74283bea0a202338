#pragma once

#include <array>
#include <complex>
#include <vector>

namespace advinv {

// Uniform structured grid on an interval (1D) or axis-aligned rectangle (2D).
// Unknowns live at interior nodes only; homogeneous Dirichlet values on the
// boundary are eliminated. The "closed" index range 0..n+1 per axis includes
// the boundary nodes and is used for coefficient sampling.
//
// Interior node i on an axis sits at lo + (i+1)*h with h = (hi-lo)/(n+1).
// Flat ordering is lexicographic with axis 0 (x) fastest.
class Grid {
public:
    Grid() = default;

    int dim() const { return dim_; }
    int n_interior(int axis) const { return n_[axis]; }
    double lo(int axis) const { return lo_[axis]; }
    double hi(int axis) const { return hi_[axis]; }
    double spacing(int axis) const { return h_[axis]; }

    int num_unknowns() const { return dim_ == 1 ? n_[0] : n_[0] * n_[1]; }
    int n_closed(int axis) const { return n_[axis] + 2; }
    int num_closed() const { return dim_ == 1 ? n_closed(0) : n_closed(0) * n_closed(1); }

    // product of spacings; the quadrature weight of the discrete L2 norm
    double cell_weight() const { return dim_ == 1 ? h_[0] : h_[0] * h_[1]; }

    double coord(int axis, int i) const { return lo_[axis] + (i + 1) * h_[axis]; }
    double closed_coord(int axis, int i) const { return lo_[axis] + i * h_[axis]; }

    int flat(int ix, int iy = 0) const { return dim_ == 1 ? ix : iy * n_[0] + ix; }
    std::array<int, 2> unflatten(int idx) const {
        if (dim_ == 1) return {idx, 0};
        return {idx % n_[0], idx / n_[0]};
    }

    int closed_flat(int cx, int cy = 0) const {
        return dim_ == 1 ? cx : cy * n_closed(0) + cx;
    }

    // coordinates of interior node `idx` (y is 0 for 1D)
    std::array<double, 2> position(int idx) const {
        auto mi = unflatten(idx);
        return {coord(0, mi[0]), dim_ == 2 ? coord(1, mi[1]) : 0.0};
    }

    std::array<double, 2> closed_position(int cidx) const {
        if (dim_ == 1) return {closed_coord(0, cidx), 0.0};
        int cx = cidx % n_closed(0), cy = cidx / n_closed(0);
        return {closed_coord(0, cx), closed_coord(1, cy)};
    }

    bool operator==(const Grid&) const = default;

    friend Grid build_grid(int dim, const std::vector<std::array<double, 2>>& extents,
                           const std::vector<int>& n_interior);

private:
    int dim_ = 0;
    std::array<int, 2> n_{0, 0};
    std::array<double, 2> lo_{0, 0}, hi_{0, 0}, h_{0, 0};
};

// Rejects dim outside {1,2}, n_interior < 2, and degenerate intervals.
Grid build_grid(int dim, const std::vector<std::array<double, 2>>& extents,
                const std::vector<int>& n_interior);

// One scalar per interior node, real or complex per instantiation.
template <class T>
struct BasicField {
    Grid grid;
    std::vector<T> values;

    BasicField() = default;
    explicit BasicField(const Grid& g, T init = T{})
        : grid(g), values(static_cast<size_t>(g.num_unknowns()), init) {}

    int size() const { return static_cast<int>(values.size()); }
    T& operator[](int i) { return values[static_cast<size_t>(i)]; }
    const T& operator[](int i) const { return values[static_cast<size_t>(i)]; }
};

using Field = BasicField<double>;
using ComplexField = BasicField<std::complex<double>>;

double l2_norm(const Field& f);
double l2_norm(const ComplexField& f);
double max_norm(const Field& f);
double max_norm(const ComplexField& f);

// weighted inner products; conjugate-linear in the first argument
double dot(const Field& a, const Field& b);
std::complex<double> dot(const ComplexField& a, const ComplexField& b);

ComplexField to_complex(const Field& f);

// discrete H1 norm: sqrt(||f||^2 + ||grad_h f||^2), forward differences with
// zero ghost values on the Dirichlet boundary
double h1_norm(const ComplexField& f);

}  // namespace advinv
