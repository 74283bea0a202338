#include "advinv/coefficients.hpp"

#include <cmath>
#include <string>

#include "advinv/errors.hpp"

namespace advinv {

double ScalarSpec::eval(double x, double y) const {
    switch (kind) {
        case Kind::Constant:
            return value;
        case Kind::Affine:
            return value + slope_x * x + slope_y * y;
        case Kind::Sinusoidal:
            return value + amp * std::sin(wavenumber * (axis == 0 ? x : y) + phase);
    }
    return value;
}

namespace {

std::vector<double> sample_closed(const Grid& grid, const ScalarSpec& spec) {
    std::vector<double> out(static_cast<size_t>(grid.num_closed()));
    for (int c = 0; c < grid.num_closed(); ++c) {
        auto p = grid.closed_position(c);
        out[static_cast<size_t>(c)] = spec.eval(p[0], p[1]);
    }
    return out;
}

void require_size(const std::vector<double>& v, int expected, const std::string& name) {
    if (static_cast<int>(v.size()) != expected)
        throw ValidationError("coefficients: array '" + name + "' has " +
                              std::to_string(v.size()) + " entries, grid has " +
                              std::to_string(expected) + " closed nodes");
}

}  // namespace

CoefficientSet CoefficientSet::from_specs(const Grid& grid,
                                          const std::vector<ScalarSpec>& a_specs,
                                          const std::vector<ScalarSpec>& b_specs,
                                          const ScalarSpec& c_spec) {
    const size_t n_a = grid.dim() == 1 ? 1 : 3;
    if (a_specs.size() != n_a)
        throw ValidationError("coefficients: expected " + std::to_string(n_a) +
                              " a-components, got " + std::to_string(a_specs.size()));
    if (static_cast<int>(b_specs.size()) != grid.dim())
        throw ValidationError("coefficients: expected " + std::to_string(grid.dim()) +
                              " b-components, got " + std::to_string(b_specs.size()));
    CoefficientSet cs;
    cs.grid_ = grid;
    for (const auto& s : a_specs) cs.a_.push_back(sample_closed(grid, s));
    for (const auto& s : b_specs) cs.b_.push_back(sample_closed(grid, s));
    cs.c_ = sample_closed(grid, c_spec);
    cs.compute_a0();
    return cs;
}

CoefficientSet CoefficientSet::from_arrays(const Grid& grid,
                                           const std::vector<std::vector<double>>& a_components,
                                           const std::vector<std::vector<double>>& b_components,
                                           const std::vector<double>& c) {
    const size_t n_a = grid.dim() == 1 ? 1 : 3;
    if (a_components.size() != n_a)
        throw ValidationError("coefficients: expected " + std::to_string(n_a) +
                              " a-components, got " + std::to_string(a_components.size()));
    if (static_cast<int>(b_components.size()) != grid.dim())
        throw ValidationError("coefficients: expected " + std::to_string(grid.dim()) +
                              " b-components, got " + std::to_string(b_components.size()));
    CoefficientSet cs;
    cs.grid_ = grid;
    const int nc = grid.num_closed();
    for (size_t k = 0; k < a_components.size(); ++k) {
        require_size(a_components[k], nc, "a[" + std::to_string(k) + "]");
        cs.a_.push_back(a_components[k]);
    }
    for (size_t k = 0; k < b_components.size(); ++k) {
        require_size(b_components[k], nc, "b[" + std::to_string(k) + "]");
        cs.b_.push_back(b_components[k]);
    }
    require_size(c, nc, "c");
    cs.c_ = c;
    cs.compute_a0();
    return cs;
}

CoefficientSet CoefficientSet::from_full_matrix_arrays(
    const Grid& grid, const std::vector<std::vector<double>>& a_full,
    const std::vector<std::vector<double>>& b_components, const std::vector<double>& c) {
    if (grid.dim() == 1) return from_arrays(grid, a_full, b_components, c);
    if (a_full.size() != 4)
        throw ValidationError("coefficients: full-matrix form needs {a11,a12,a21,a22}");
    const int nc = grid.num_closed();
    for (int k = 0; k < 4; ++k) require_size(a_full[static_cast<size_t>(k)], nc, "a");
    for (int i = 0; i < nc; ++i) {
        if (a_full[1][static_cast<size_t>(i)] != a_full[2][static_cast<size_t>(i)]) {
            auto p = grid.closed_position(i);
            throw ValidationError("coefficients: a12 != a21 at node (" + std::to_string(p[0]) +
                                  ", " + std::to_string(p[1]) + ")");
        }
    }
    return from_arrays(grid, {a_full[0], a_full[1], a_full[3]}, b_components, c);
}

void CoefficientSet::compute_a0() {
    double best = std::numeric_limits<double>::infinity();
    int best_node = 0;
    const int nc = grid_.num_closed();
    for (int i = 0; i < nc; ++i) {
        double lam;
        if (grid_.dim() == 1) {
            lam = a(0, i);
        } else {
            const double a11 = a(0, i), a12 = a(1, i), a22 = a(2, i);
            const double mean = 0.5 * (a11 + a22);
            const double dev = std::sqrt(0.25 * (a11 - a22) * (a11 - a22) + a12 * a12);
            lam = mean - dev;
        }
        if (lam < best) {
            best = lam;
            best_node = i;
        }
    }
    a0_ = best;
    a0_node_ = best_node;
}

bool CoefficientSet::advection_vanishes() const {
    for (const auto& comp : b_)
        for (double v : comp)
            if (v != 0.0) return false;
    return true;
}

double CoefficientSet::max_abs_b() const {
    double m = 0.0;
    const int nc = grid_.num_closed();
    for (int i = 0; i < nc; ++i) {
        double sq = 0.0;
        for (const auto& comp : b_) sq += comp[static_cast<size_t>(i)] * comp[static_cast<size_t>(i)];
        m = std::max(m, std::sqrt(sq));
    }
    return m;
}

double CoefficientSet::max_abs_c() const {
    double m = 0.0;
    for (double v : c_) m = std::max(m, std::abs(v));
    return m;
}

double check_ellipticity(const CoefficientSet& coeffs) {
    if (!(coeffs.a0() > 0.0)) {
        auto p = coeffs.grid().closed_position(coeffs.a0_node());
        throw NumericalError(
            "ellipticity violated: smallest eigenvalue of a_ij is " + std::to_string(coeffs.a0()) +
            " at node (" + std::to_string(p[0]) +
            (coeffs.grid().dim() == 2 ? ", " + std::to_string(p[1]) : std::string()) + ")");
    }
    return coeffs.a0();
}

double grid_peclet(const CoefficientSet& coeffs) {
    const Grid& g = coeffs.grid();
    double hmax = g.spacing(0);
    if (g.dim() == 2) hmax = std::max(hmax, g.spacing(1));
    return coeffs.max_abs_b() * hmax / (2.0 * coeffs.a0());
}

}  // namespace advinv
