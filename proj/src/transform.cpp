#include "advinv/transform.hpp"

#include <algorithm>
#include <cmath>

#include "advinv/errors.hpp"
#include "advinv/sparse_operator.hpp"

namespace advinv {

std::string to_string(Sector s) {
    switch (s) {
        case Sector::A: return "A";
        case Sector::B: return "B";
        case Sector::C: return "C";
        case Sector::Cbar: return "Cbar";
    }
    return "?";
}

Sector classify_sector(Complex s, double N) {
    if (!(N > 1.0)) throw ValidationError("classify_sector: N must be > 1");
    if (s.real() >= 0.0) return Sector::A;
    if (N * std::abs(s.imag()) + s.real() >= 0.0) return Sector::B;
    return s.imag() >= 0.0 ? Sector::C : Sector::Cbar;
}

void check_exponent_guard(Complex s, double M, double T) {
    if (std::abs(s.real() + M) * T > kExponentGuard)
        throw NumericalError("transform: |Re(s)+M|*T = " +
                             std::to_string(std::abs(s.real() + M) * T) +
                             " exceeds the exponent guard " + std::to_string(kExponentGuard));
}

namespace {

// 15-point Gauss-Legendre rule on [-1, 1]
constexpr int kGL = 15;
constexpr double kGLNodes[kGL] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272, -0.7244177313601701,
    -0.5709721726085388, -0.3941513470775634, -0.2011940939974345, 0.0,
    0.2011940939974345,  0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr double kGLWeights[kGL] = {
    0.03075324199611727, 0.07036604748810812, 0.10715922046717194, 0.13957067792615431,
    0.16626920581699393, 0.18616100001556221, 0.19843148532711158, 0.20257824192556127,
    0.19843148532711158, 0.18616100001556221, 0.16626920581699393, 0.13957067792615431,
    0.10715922046717194, 0.07036604748810812, 0.03075324199611727};

Complex gl_panels(const AmplitudeFunction& rho, Complex z, double T, int panels) {
    Complex acc = 0.0;
    const double w = T / panels;
    for (int p = 0; p < panels; ++p) {
        const double mid = (p + 0.5) * w;
        for (int k = 0; k < kGL; ++k) {
            const double t = mid + 0.5 * w * kGLNodes[k];
            acc += kGLWeights[k] * rho(t) * std::exp(-z * t);
        }
    }
    return acc * (0.5 * w);
}

std::vector<double> trapezoid_weights(std::span<const double> times) {
    const size_t m = times.size();
    std::vector<double> w(m, 0.0);
    for (size_t i = 0; i + 1 < m; ++i) {
        const double half = 0.5 * (times[i + 1] - times[i]);
        w[i] += half;
        w[i + 1] += half;
    }
    return w;
}

}  // namespace

Complex rho_hat_adaptive(const AmplitudeFunction& rho, Complex s, double M, double T,
                         double rel_tol) {
    if (!(T > 0.0)) throw ValidationError("rho_hat: T must be positive");
    check_exponent_guard(s, M, T);
    const Complex z = s + M;
    // absolute floor for near-zeros of rho_hat, where relative refinement stalls
    const double scale = rho.sup_norm() * T * std::exp(std::max(0.0, -z.real()) * T);
    Complex prev = gl_panels(rho, z, T, 4);
    for (int panels = 8; panels <= (1 << 15); panels *= 2) {
        const Complex cur = gl_panels(rho, z, T, panels);
        const double diff = std::abs(cur - prev);
        if (diff <= rel_tol * std::abs(cur) || diff <= 1e-15 * scale) return cur;
        prev = cur;
    }
    return prev;
}

Complex rho_hat_grid(const AmplitudeFunction& rho, Complex s, double M,
                     std::span<const double> times) {
    if (times.size() < 2) throw ValidationError("rho_hat: grid mode needs at least two time nodes");
    check_exponent_guard(s, M, times.back());
    const Complex z = s + M;
    const auto w = trapezoid_weights(times);
    Complex acc = 0.0;
    for (size_t i = 0; i < times.size(); ++i) acc += w[i] * rho(times[i]) * std::exp(-z * times[i]);
    return acc;
}

Complex rho_hat(const AmplitudeFunction& rho, Complex s, double M, double T, QuadMode mode,
                std::span<const double> times) {
    if (mode == QuadMode::GaussAdaptive) return rho_hat_adaptive(rho, s, M, T);
    return rho_hat_grid(rho, s, M, times);
}

ComplexField u_hat(const Trajectory& traj, Complex s, double M) {
    if (traj.snapshots.empty()) throw ValidationError("u_hat: empty trajectory");
    check_exponent_guard(s, M, traj.time.T());
    const Complex z = s + M;
    const auto w = trapezoid_weights(traj.times);
    ComplexField out(traj.grid);
    for (size_t n = 0; n < traj.times.size(); ++n) {
        const Complex cn = w[n] * std::exp(-z * traj.times[n]);
        const Field& u = traj.snapshots[n];
        for (int j = 0; j < u.size(); ++j) out[j] += cn * u[j];
    }
    return out;
}

double transform_residual(const Trajectory& traj, const SparseOperator& op, const Field& f,
                          const AmplitudeFunction& rho, Complex s, double M) {
    check_exponent_guard(s, M, traj.time.T());
    const Complex z = s + M;
    const ComplexField uh = u_hat(traj, s, M);
    const Complex rh = rho_hat_grid(rho, s, M, traj.times);
    const ComplexField Duh = apply_operator(op, uh);
    const Field& uT = traj.final_state();
    const Complex tail = std::exp(-z * traj.time.T());

    ComplexField resid(traj.grid);
    for (int j = 0; j < resid.size(); ++j)
        resid[j] = -Duh[j] + z * uh[j] + tail * uT[j] - rh * f[j];

    const double denom = std::abs(rh) * l2_norm(f);
    const double num = l2_norm(resid);
    return denom > 0.0 ? num / denom : num;
}

double SamplePlanConfig::resolved_r_max(double T) const {
    return r_max > 0.0 ? r_max : 100.0 * std::max(1.0, 1.0 / T);
}

namespace {

std::vector<double> log_radii(double r_min, double r_max, int n) {
    std::vector<double> out;
    if (n == 1) {
        out.push_back(r_min);
        return out;
    }
    const double step = std::log(r_max / r_min) / (n - 1);
    for (int i = 0; i < n; ++i) out.push_back(r_min * std::exp(i * step));
    return out;
}

// angles at half-offsets, strictly interior to (lo, hi)
std::vector<double> interior_angles(double lo, double hi, int n) {
    std::vector<double> out;
    for (int k = 0; k < n; ++k) out.push_back(lo + (k + 0.5) * (hi - lo) / n);
    return out;
}

}  // namespace

std::vector<Complex> sector_fan(Sector sector, double N, double T, const SamplePlanConfig& cfg) {
    if (!(N > 1.0)) throw ValidationError("sector_fan: N must be > 1");
    const double wedge = std::atan(1.0 / N);  // half-plane angle of the C boundary
    double lo = 0.0, hi = 0.0;
    bool conjugate = false;
    switch (sector) {
        case Sector::A:
            lo = -0.5 * M_PI;
            hi = 0.5 * M_PI;
            break;
        case Sector::B:
            lo = 0.5 * M_PI;
            hi = M_PI - wedge;
            break;
        case Sector::C:
            lo = M_PI - wedge;
            hi = M_PI;
            break;
        case Sector::Cbar:
            lo = M_PI - wedge;
            hi = M_PI;
            conjugate = true;
            break;
    }
    std::vector<Complex> out;
    for (double r : log_radii(cfg.r_min, cfg.resolved_r_max(T), cfg.n_radii))
        for (double th : interior_angles(lo, hi, cfg.n_angles)) {
            Complex s = std::polar(r, th);
            out.push_back(conjugate ? std::conj(s) : s);
        }
    return out;
}

std::vector<Complex> full_plane_plan(double N, double T, const SamplePlanConfig& cfg) {
    std::vector<Complex> out;
    for (Sector sec : {Sector::A, Sector::B, Sector::C, Sector::Cbar}) {
        auto fan = sector_fan(sec, N, T, cfg);
        out.insert(out.end(), fan.begin(), fan.end());
    }
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

}  // namespace advinv
