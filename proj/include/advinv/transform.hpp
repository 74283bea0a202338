#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "advinv/amplitude.hpp"
#include "advinv/forward.hpp"
#include "advinv/grid.hpp"

namespace advinv {

using Complex = std::complex<double>;

// Complex-plane regions of the uniqueness proof. A covers Re s >= 0; B the
// part of the left half-plane with N|Im s| + Re s >= 0 (closed under
// conjugation, which is harmless for real data since the transforms are
// conjugate-symmetric); C the remaining upper wedge and Cbar its conjugate.
// Boundary points take the earlier label in the order A, B, C, Cbar.
enum class Sector { A, B, C, Cbar };

std::string to_string(Sector s);

Sector classify_sector(Complex s, double N);

enum class QuadMode { GridTrapezoid, GaussAdaptive };

// Largest exponent magnitude |Re(s)+M|*T tolerated before e^x leaves the
// double range; transforms reject samples beyond it.
inline constexpr double kExponentGuard = 700.0;

void check_exponent_guard(Complex s, double M, double T);

// rho_hat(s) = int_0^T rho(t) e^{-(s+M)t} dt.
//
// GaussAdaptive: panel-doubling composite Gauss-Legendre, relative error
// <= rel_tol against refinement (absolute floor near zeros of rho_hat).
// GridTrapezoid: trapezoid on the supplied time nodes, matching u_hat's rule
// so that ratios of the two transforms see cancelling quadrature error.
Complex rho_hat_adaptive(const AmplitudeFunction& rho, Complex s, double M, double T,
                         double rel_tol = 1e-12);
Complex rho_hat_grid(const AmplitudeFunction& rho, Complex s, double M,
                     std::span<const double> times);
Complex rho_hat(const AmplitudeFunction& rho, Complex s, double M, double T, QuadMode mode,
                std::span<const double> times = {});

// u_hat(s) = int_0^T u(t) e^{-(s+M)t} dt, node-wise trapezoid over the stored
// snapshots. Linear in the trajectory.
ComplexField u_hat(const Trajectory& traj, Complex s, double M);

// Relative L2 residual of the elliptic identity
//   -L u_hat + (s+M) u_hat + u(T) e^{-(s+M)T} = rho_hat f,
// (absolute norm if f vanishes). The final-data term is the boundary part of
// the integration by parts, which drops only when u(T) = 0.
double transform_residual(const Trajectory& traj, const SparseOperator& op, const Field& f,
                          const AmplitudeFunction& rho, Complex s, double M);

// Log-spaced radii times an angular fan strictly inside one sector.
struct SamplePlanConfig {
    double r_min = 0.1;
    double r_max = 0.0;  // 0 -> 100 * max(1, 1/T)
    int n_radii = 8;
    int n_angles = 8;

    double resolved_r_max(double T) const;
};

std::vector<Complex> sector_fan(Sector sector, double N, double T, const SamplePlanConfig& cfg);
// union of all four sector fans, sorted by (Re s, Im s)
std::vector<Complex> full_plane_plan(double N, double T, const SamplePlanConfig& cfg);

}  // namespace advinv
