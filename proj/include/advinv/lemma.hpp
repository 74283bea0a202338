#pragma once

#include <complex>
#include <string>
#include <vector>

#include "advinv/amplitude.hpp"
#include "advinv/forward.hpp"
#include "advinv/transform.hpp"

namespace advinv {

struct LemmaSample {
    Complex s;
    Sector sector;
    double ratio;
};

// Empirical record of one bound certification sweep: the per-sample ratios
// and the extremal one (min for lower bounds, max for upper bounds).
struct LemmaReport {
    std::string lemma;
    std::string description;
    double N = 0.0;
    double M = 0.0;
    bool lower_bound = true;
    std::vector<LemmaSample> samples;
    double extremal = 0.0;
    bool pass = false;
    int skipped = 0;             // beyond the exponent guard
    int excluded_near_zero = 0;  // |rho_hat| below the near-zero threshold
    double h1_extremal = 0.0;    // upper-bound scans also record the discrete H1 ratio
    std::string quadrature;
};

// Lower bound |rho_hat(s)| >= C * int_0^T e^{-t Re s} dt on sector-C samples.
// The transform here carries no shift (M = 0); the denominator is evaluated
// in closed form, (e^{T|Re s|} - 1)/|Re s| with removable value T on the
// imaginary axis. pass = min ratio above `threshold` (a margin far above the
// 1e-12 quadrature tolerance).
LemmaReport verify_lemma_rho(const AmplitudeFunction& rho, double T, double N,
                             const SamplePlanConfig& plan = {}, double threshold = 1e-6,
                             int jobs = 1);

// One sweep of ratio(s) = ||u_hat(s)|| / (|rho_hat(s)| ||f||); both transforms
// use the grid-trapezoid rule on the trajectory's time nodes and the same M.
struct UhatScan {
    std::vector<LemmaSample> samples;
    double max_ratio = 0.0;
    double max_h1_ratio = 0.0;
    int excluded_near_zero = 0;
    int skipped = 0;
    bool data_vanishes = false;  // ||f|| = 0: vacuous pass convention
};

UhatScan lemma_uhat_scan(const Trajectory& traj, const Field& f, const AmplitudeFunction& rho,
                         double M, const std::vector<Complex>& samples, double N, int jobs = 1);

// Upper bound ||u_hat|| <= C |rho_hat| ||f|| from one sweep; pass = all
// retained ratios finite (vacuous when the source vanishes).
LemmaReport verify_lemma_uhat(const Trajectory& traj, const Field& f,
                              const AmplitudeFunction& rho, double M,
                              const std::vector<Complex>& samples, double N, int jobs = 1);

// Stability form: the empirical constant must move by at most `factor`
// between a coarse and a refined discretization of the same problem.
LemmaReport verify_lemma_uhat_refined(const UhatScan& coarse, const UhatScan& fine, double N,
                                      double M, double factor = 2.0);

// Deviations |(s+M) rho_hat(s) - rho(0)| and ||(s+M) u_hat(s)|| along an
// increasing list of real frequencies; both must decrease over the last three
// samples (an identically zero u_hat sequence passes).
struct AsymptoticEntry {
    double s;
    double rho_dev;
    double u_dev;
};

struct AsymptoticReport {
    std::vector<AsymptoticEntry> entries;
    double rho_limit = 0.0;  // rho(0)
    bool pass_rho = false;
    bool pass_u = false;
    bool pass = false;
};

AsymptoticReport asymptotic_check(const AmplitudeFunction& rho, const Trajectory& traj, double M,
                                  const std::vector<double>& s_list);

// Diagnostic scan of the Liouville ratio u_hat(s)/rho_hat(s). For null final
// data the ratio field is s-independent; its spread across samples (max
// pairwise L2 distance) is reported as a proxy for ||u(.,T)||.
struct RatioScanEntry {
    Complex s;
    ComplexField ratio;
    double norm;
};

struct RatioScan {
    std::vector<RatioScanEntry> entries;
    double variation = 0.0;
    int rejected_near_zero = 0;
};

RatioScan ratio_scan(const Trajectory& traj, const AmplitudeFunction& rho, double M,
                     const std::vector<Complex>& samples);

// Default shift: ||c||_inf + 1 keeps Re s + c + M >= 1 on sector A.
double default_shift(const CoefficientSet& coeffs);

}  // namespace advinv
