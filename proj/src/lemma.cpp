#include "advinv/lemma.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "advinv/errors.hpp"
#include "advinv/parallel.hpp"

namespace advinv {

namespace {

// int_0^T e^{-t Re s} dt for Re s <= 0, closed form with removable value T
double lemma_denominator(double re_s, double T) {
    const double r = std::abs(re_s);
    if (r == 0.0) return T;
    return std::expm1(T * r) / r;
}

double near_zero_threshold(const AmplitudeFunction& rho) {
    return 1e-14 * rho.sup_norm() * rho.T();
}

bool strictly_decreasing_tail(const std::vector<double>& v, size_t tail) {
    if (v.size() < 2) return true;
    bool all_zero = true;
    for (double x : v) all_zero = all_zero && x == 0.0;
    if (all_zero) return true;
    const size_t start = v.size() > tail ? v.size() - tail : 0;
    for (size_t i = start; i + 1 < v.size(); ++i)
        if (!(v[i + 1] < v[i])) return false;
    return true;
}

}  // namespace

double default_shift(const CoefficientSet& coeffs) { return coeffs.max_abs_c() + 1.0; }

LemmaReport verify_lemma_rho(const AmplitudeFunction& rho, double T, double N,
                             const SamplePlanConfig& plan, double threshold, int jobs) {
    if (!(rho.rho0() > 0.0))
        throw ValidationError("verify_lemma_rho: rho must be positive on [0,T] (inf = " +
                              std::to_string(rho.rho0()) + ")");

    const auto samples = sector_fan(Sector::C, N, T, plan);
    std::vector<double> ratios(samples.size(), std::numeric_limits<double>::quiet_NaN());
    std::vector<char> skipped(samples.size(), 0);

    parallel_for(static_cast<int>(samples.size()), jobs, [&](int i) {
        const Complex s = samples[static_cast<size_t>(i)];
        if (std::abs(s.real()) * T > kExponentGuard) {
            skipped[static_cast<size_t>(i)] = 1;
            return;
        }
        // Lemma statement carries no shift: M = 0
        const Complex num = rho_hat_adaptive(rho, s, 0.0, T);
        ratios[static_cast<size_t>(i)] = std::abs(num) / lemma_denominator(s.real(), T);
    });

    LemmaReport rep;
    rep.lemma = "lemma-rho-lower-bound";
    rep.description = "|rho_hat(s)| / int_0^T e^{-t Re s} dt over sector C";
    rep.N = N;
    rep.M = 0.0;
    rep.lower_bound = true;
    rep.quadrature = "gauss-adaptive rel_tol=1e-12";
    double min_ratio = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < samples.size(); ++i) {
        if (skipped[i]) {
            ++rep.skipped;
            continue;
        }
        rep.samples.push_back({samples[i], classify_sector(samples[i], N), ratios[i]});
        min_ratio = std::min(min_ratio, ratios[i]);
    }
    rep.extremal = rep.samples.empty() ? 0.0 : min_ratio;
    rep.pass = !rep.samples.empty() && rep.extremal > threshold;
    return rep;
}

UhatScan lemma_uhat_scan(const Trajectory& traj, const Field& f, const AmplitudeFunction& rho,
                         double M, const std::vector<Complex>& samples, double N, int jobs) {
    const double f_norm = l2_norm(f);
    const double threshold = near_zero_threshold(rho);

    struct Slot {
        double ratio = 0.0, h1 = 0.0;
        int state = 0;  // 0 keep, 1 skipped, 2 excluded
    };
    std::vector<Slot> slots(samples.size());

    parallel_for(static_cast<int>(samples.size()), jobs, [&](int i) {
        Slot& slot = slots[static_cast<size_t>(i)];
        const Complex s = samples[static_cast<size_t>(i)];
        if (std::abs(s.real() + M) * traj.time.T() > kExponentGuard) {
            slot.state = 1;
            return;
        }
        const ComplexField uh = u_hat(traj, s, M);
        const Complex rh = rho_hat_grid(rho, s, M, traj.times);
        if (f_norm == 0.0) {  // absolute convention
            slot.ratio = l2_norm(uh);
            slot.h1 = h1_norm(uh);
            return;
        }
        if (std::abs(rh) < threshold) {
            slot.state = 2;
            return;
        }
        const double denom = std::abs(rh) * f_norm;
        slot.ratio = l2_norm(uh) / denom;
        slot.h1 = h1_norm(uh) / denom;
    });

    UhatScan scan;
    scan.data_vanishes = f_norm == 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        switch (slots[i].state) {
            case 1:
                ++scan.skipped;
                break;
            case 2:
                ++scan.excluded_near_zero;
                break;
            default:
                scan.samples.push_back({samples[i], classify_sector(samples[i], N), slots[i].ratio});
                scan.max_ratio = std::max(scan.max_ratio, slots[i].ratio);
                scan.max_h1_ratio = std::max(scan.max_h1_ratio, slots[i].h1);
        }
    }
    return scan;
}

namespace {

LemmaReport report_from_scan(const UhatScan& scan, double N, double M) {
    LemmaReport rep;
    rep.lemma = "lemma-uhat-upper-bound";
    rep.description = "||u_hat(s)|| / (|rho_hat(s)| ||f||) over sectors A,B,C,Cbar";
    rep.N = N;
    rep.M = M;
    rep.lower_bound = false;
    rep.samples = scan.samples;
    rep.extremal = scan.max_ratio;
    rep.skipped = scan.skipped;
    rep.excluded_near_zero = scan.excluded_near_zero;
    rep.h1_extremal = scan.max_h1_ratio;
    rep.quadrature = "grid-trapezoid (paired with u_hat)";
    return rep;
}

bool all_finite(const UhatScan& scan) {
    for (const auto& s : scan.samples)
        if (!std::isfinite(s.ratio)) return false;
    return true;
}

}  // namespace

LemmaReport verify_lemma_uhat(const Trajectory& traj, const Field& f,
                              const AmplitudeFunction& rho, double M,
                              const std::vector<Complex>& samples, double N, int jobs) {
    const UhatScan scan = lemma_uhat_scan(traj, f, rho, M, samples, N, jobs);
    LemmaReport rep = report_from_scan(scan, N, M);
    rep.pass = scan.data_vanishes || (!scan.samples.empty() && all_finite(scan));
    return rep;
}

LemmaReport verify_lemma_uhat_refined(const UhatScan& coarse, const UhatScan& fine, double N,
                                      double M, double factor) {
    LemmaReport rep = report_from_scan(fine, N, M);
    rep.description += " (stability vs coarse grid)";
    if (coarse.data_vanishes && fine.data_vanishes) {
        rep.pass = true;
        return rep;
    }
    const bool finite = all_finite(coarse) && all_finite(fine);
    const double lo = std::min(coarse.max_ratio, fine.max_ratio);
    const double hi = std::max(coarse.max_ratio, fine.max_ratio);
    rep.pass = finite && lo > 0.0 && hi / lo <= factor;
    return rep;
}

AsymptoticReport asymptotic_check(const AmplitudeFunction& rho, const Trajectory& traj, double M,
                                  const std::vector<double>& s_list) {
    if (s_list.size() < 2)
        throw ValidationError("asymptotic_check: need at least two frequencies");
    for (size_t i = 0; i + 1 < s_list.size(); ++i)
        if (!(s_list[i] < s_list[i + 1]))
            throw ValidationError("asymptotic_check: s_list must be increasing");

    AsymptoticReport rep;
    rep.rho_limit = rho(0.0);
    std::vector<double> rho_devs, u_devs;
    for (double s : s_list) {
        check_exponent_guard(Complex(s, 0.0), M, traj.time.T());
        const Complex rh = rho_hat_adaptive(rho, Complex(s, 0.0), M, traj.time.T());
        const ComplexField uh = u_hat(traj, Complex(s, 0.0), M);
        const double rd = std::abs((s + M) * rh - rep.rho_limit);
        const double ud = (s + M) * l2_norm(uh);
        rep.entries.push_back({s, rd, ud});
        rho_devs.push_back(rd);
        u_devs.push_back(ud);
    }
    rep.pass_rho = strictly_decreasing_tail(rho_devs, 3);
    rep.pass_u = strictly_decreasing_tail(u_devs, 3);
    rep.pass = rep.pass_rho && rep.pass_u;
    return rep;
}

RatioScan ratio_scan(const Trajectory& traj, const AmplitudeFunction& rho, double M,
                     const std::vector<Complex>& samples) {
    const double threshold = near_zero_threshold(rho);
    std::vector<Complex> sorted = samples;
    std::sort(sorted.begin(), sorted.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });

    RatioScan scan;
    for (Complex s : sorted) {
        check_exponent_guard(s, M, traj.time.T());
        const Complex rh = rho_hat_grid(rho, s, M, traj.times);
        if (std::abs(rh) < threshold) {
            ++scan.rejected_near_zero;
            continue;
        }
        ComplexField r = u_hat(traj, s, M);
        for (auto& v : r.values) v /= rh;
        scan.entries.push_back({s, std::move(r), 0.0});
        scan.entries.back().norm = l2_norm(scan.entries.back().ratio);
    }
    for (size_t i = 0; i < scan.entries.size(); ++i)
        for (size_t j = i + 1; j < scan.entries.size(); ++j) {
            ComplexField d = scan.entries[i].ratio;
            for (size_t k = 0; k < d.values.size(); ++k) d.values[k] -= scan.entries[j].ratio.values[k];
            scan.variation = std::max(scan.variation, l2_norm(d));
        }
    return scan;
}

}  // namespace advinv
