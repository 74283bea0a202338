#pragma once

#include <string>
#include <vector>

#include "advinv/grid.hpp"

namespace advinv {

// Closed-form scalar field catalog: constant, affine, sinusoidal along one
// axis. Reproducible configs without an expression parser.
struct ScalarSpec {
    enum class Kind { Constant, Affine, Sinusoidal };
    Kind kind = Kind::Constant;
    double value = 0.0;                   // constant term / offset
    double slope_x = 0.0, slope_y = 0.0;  // affine
    int axis = 0;                         // sinusoidal
    double amp = 0.0, wavenumber = 1.0, phase = 0.0;

    static ScalarSpec constant(double v) {
        ScalarSpec s;
        s.value = v;
        return s;
    }
    static ScalarSpec affine(double v, double sx, double sy = 0.0) {
        ScalarSpec s;
        s.kind = Kind::Affine;
        s.value = v;
        s.slope_x = sx;
        s.slope_y = sy;
        return s;
    }
    static ScalarSpec sinusoidal(double offset, double amp, double k, int axis = 0,
                                 double phase = 0.0) {
        ScalarSpec s;
        s.kind = Kind::Sinusoidal;
        s.value = offset;
        s.amp = amp;
        s.wavenumber = k;
        s.axis = axis;
        s.phase = phase;
        return s;
    }

    double eval(double x, double y = 0.0) const;
};

// Diffusion matrix a_ij (symmetric), advection b_j, reaction c, sampled at
// every node of the closed grid (boundary included: the flux midpoints next
// to the boundary average a nodal value from each side).
//
// Storage per closed node: 1D a = {a11}; 2D a = {a11, a12, a22}.
class CoefficientSet {
public:
    CoefficientSet() = default;

    static CoefficientSet from_specs(const Grid& grid, const std::vector<ScalarSpec>& a_specs,
                                     const std::vector<ScalarSpec>& b_specs,
                                     const ScalarSpec& c_spec);

    // a_components: 1D {a11}; 2D {a11, a12, a22}, each sized num_closed().
    static CoefficientSet from_arrays(const Grid& grid,
                                      const std::vector<std::vector<double>>& a_components,
                                      const std::vector<std::vector<double>>& b_components,
                                      const std::vector<double>& c);

    // Full 2x2 variant {a11, a12, a21, a22}; rejects a12 != a21.
    static CoefficientSet from_full_matrix_arrays(const Grid& grid,
                                                  const std::vector<std::vector<double>>& a_full,
                                                  const std::vector<std::vector<double>>& b_components,
                                                  const std::vector<double>& c);

    const Grid& grid() const { return grid_; }

    // component index: 0 -> a11, 1 -> a12, 2 -> a22 (2D); 0 -> a11 (1D)
    double a(int comp, int closed_idx) const { return a_[comp][static_cast<size_t>(closed_idx)]; }
    double b(int comp, int closed_idx) const { return b_[comp][static_cast<size_t>(closed_idx)]; }
    double c(int closed_idx) const { return c_[static_cast<size_t>(closed_idx)]; }

    // min over closed nodes of the smallest eigenvalue of [a_ij]; computed at
    // construction, not validated here (see check_ellipticity)
    double a0() const { return a0_; }
    int a0_node() const { return a0_node_; }

    bool advection_vanishes() const;
    double max_abs_b() const;
    double max_abs_c() const;

private:
    Grid grid_;
    std::vector<std::vector<double>> a_;  // 1 or 3 components
    std::vector<std::vector<double>> b_;  // 0..2 components (always dim entries)
    std::vector<double> c_;
    double a0_ = 0.0;
    int a0_node_ = 0;

    void compute_a0();
};

// Returns a0 > 0 or throws NumericalError naming the offending node.
double check_ellipticity(const CoefficientSet& coeffs);

// grid Peclet number max|b| * max(h) / (2 a0); < 1 keeps central differencing
// of the advection term well behaved
double grid_peclet(const CoefficientSet& coeffs);

}  // namespace advinv
