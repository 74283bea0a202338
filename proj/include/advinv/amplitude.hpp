#pragma once

#include <string>
#include <vector>

#include "advinv/time_grid.hpp"

namespace advinv {

// Temporal source factor rho(t) on [0, T]. Catalog kinds evaluate in closed
// form; the tabulated kind interpolates linearly between samples.
//
// rho0 is the reported infimum over [0, T] (exact for constant/affine,
// dense-sampled otherwise) and c1_norm a reported upper bound for the
// C^1[0,T] norm sup|rho| + sup|rho'|.
class AmplitudeFunction {
public:
    enum class Kind { Constant, Affine, SinusoidalOffset, Tabulated };

    static AmplitudeFunction constant(double value, double T);
    static AmplitudeFunction affine(double value, double slope, double T);
    // rho(t) = offset + amp * sin(omega t + phase)
    static AmplitudeFunction sinusoidal_offset(double offset, double amp, double omega,
                                               double phase, double T);
    static AmplitudeFunction tabulated(const TimeGrid& tg, std::vector<double> samples);

    Kind kind() const { return kind_; }
    double T() const { return T_; }
    double rho0() const { return rho0_; }
    double c1_norm() const { return c1_norm_; }
    double sup_norm() const { return sup_norm_; }

    double operator()(double t) const;

    std::string describe() const;

private:
    Kind kind_ = Kind::Constant;
    double T_ = 0.0;
    double p0_ = 0.0, p1_ = 0.0, p2_ = 0.0, p3_ = 0.0;
    std::vector<double> table_t_, table_v_;
    double rho0_ = 0.0, c1_norm_ = 0.0, sup_norm_ = 0.0;

    void finalize_bounds();
};

}  // namespace advinv
