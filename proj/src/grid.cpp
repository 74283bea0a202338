#include "advinv/grid.hpp"

#include <cmath>
#include <string>

#include "advinv/errors.hpp"

namespace advinv {

Grid build_grid(int dim, const std::vector<std::array<double, 2>>& extents,
                const std::vector<int>& n_interior) {
    if (dim != 1 && dim != 2)
        throw ValidationError("build_grid: dim must be 1 or 2, got " + std::to_string(dim));
    if (static_cast<int>(extents.size()) != dim || static_cast<int>(n_interior.size()) != dim)
        throw ValidationError("build_grid: need one extent and one count per axis");

    Grid g;
    g.dim_ = dim;
    for (int ax = 0; ax < dim; ++ax) {
        if (n_interior[ax] < 2)
            throw ValidationError("build_grid: n_interior must be >= 2 on axis " +
                                  std::to_string(ax) + ", got " + std::to_string(n_interior[ax]));
        if (!(extents[ax][1] > extents[ax][0]))
            throw ValidationError("build_grid: degenerate interval on axis " + std::to_string(ax));
        g.n_[ax] = n_interior[ax];
        g.lo_[ax] = extents[ax][0];
        g.hi_[ax] = extents[ax][1];
        g.h_[ax] = (extents[ax][1] - extents[ax][0]) / (n_interior[ax] + 1);
    }
    return g;
}

namespace {

template <class T>
double l2_norm_impl(const BasicField<T>& f) {
    double acc = 0.0;
    for (const T& v : f.values) acc += std::norm(std::complex<double>(v));
    return std::sqrt(f.grid.cell_weight() * acc);
}

template <class T>
double max_norm_impl(const BasicField<T>& f) {
    double m = 0.0;
    for (const T& v : f.values) m = std::max(m, std::abs(std::complex<double>(v)));
    return m;
}

}  // namespace

double l2_norm(const Field& f) { return l2_norm_impl(f); }
double l2_norm(const ComplexField& f) { return l2_norm_impl(f); }
double max_norm(const Field& f) { return max_norm_impl(f); }
double max_norm(const ComplexField& f) { return max_norm_impl(f); }

double dot(const Field& a, const Field& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) acc += a.values[i] * b.values[i];
    return a.grid.cell_weight() * acc;
}

std::complex<double> dot(const ComplexField& a, const ComplexField& b) {
    std::complex<double> acc = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) acc += std::conj(a.values[i]) * b.values[i];
    return a.grid.cell_weight() * acc;
}

ComplexField to_complex(const Field& f) {
    ComplexField out(f.grid);
    for (size_t i = 0; i < f.values.size(); ++i) out.values[i] = f.values[i];
    return out;
}

double h1_norm(const ComplexField& f) {
    const Grid& g = f.grid;
    double grad_sq = 0.0;
    auto edge = [](std::complex<double> a, std::complex<double> b, double h) {
        return std::norm((b - a) / h);
    };
    if (g.dim() == 1) {
        const double h = g.spacing(0);
        const int n = g.n_interior(0);
        // edges between consecutive unknowns plus the two boundary edges
        grad_sq += edge(0.0, f[0], h) + edge(f[n - 1], 0.0, h);
        for (int i = 0; i + 1 < n; ++i) grad_sq += edge(f[i], f[i + 1], h);
        grad_sq *= h;
    } else {
        const int nx = g.n_interior(0), ny = g.n_interior(1);
        const double hx = g.spacing(0), hy = g.spacing(1);
        auto at = [&](int ix, int iy) -> std::complex<double> {
            if (ix < 0 || ix >= nx || iy < 0 || iy >= ny) return 0.0;
            return f[g.flat(ix, iy)];
        };
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = -1; ix < nx; ++ix) grad_sq += edge(at(ix, iy), at(ix + 1, iy), hx) * hx * hy;
        for (int ix = 0; ix < nx; ++ix)
            for (int iy = -1; iy < ny; ++iy) grad_sq += edge(at(ix, iy), at(ix, iy + 1), hy) * hx * hy;
    }
    const double l2 = l2_norm(f);
    return std::sqrt(l2 * l2 + grad_sq);
}

}  // namespace advinv
