#include "advinv/linear_solver.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "advinv/errors.hpp"

namespace advinv {

namespace {

double nrm2(const std::vector<double>& v) {
    double acc = 0.0;
    for (double x : v) acc += x * x;
    return std::sqrt(acc);
}

double ddot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0.0;
    for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
    return acc;
}

}  // namespace

Field solve_linear(const SparseOperator& A, const Field& rhs, const SolveOptions& opts,
                   SolveStats* stats, const Field* initial_guess) {
    if (A.size() != rhs.size())
        throw ValidationError("solve_linear: dimension mismatch (" + std::to_string(A.size()) +
                              " vs " + std::to_string(rhs.size()) + ")");
    if (!(opts.tol > 0.0)) throw ValidationError("solve_linear: tol must be positive");

    const size_t n = rhs.values.size();
    const int max_iter = opts.max_iter > 0 ? opts.max_iter : 10 * static_cast<int>(n);

    Field x = initial_guess ? *initial_guess : Field(rhs.grid);
    const double bnorm = nrm2(rhs.values);
    SolveStats local;

    if (bnorm == 0.0) {  // zero right-hand side short-circuit
        x = Field(rhs.grid);
        local.converged = true;
        if (stats) *stats = local;
        return x;
    }

    std::vector<double> r(n), r0(n), p(n), v(n), s(n), t(n), tmp(n);
    auto true_residual = [&](const std::vector<double>& xv) {
        A.apply<double>(xv, tmp);
        for (size_t i = 0; i < n; ++i) tmp[i] = rhs.values[i] - tmp[i];
        return tmp;
    };

    r = true_residual(x.values);
    r0 = r;
    p = r;
    double rho = ddot(r0, r);
    int iter = 0;

    while (iter < max_iter) {
        double rnorm = nrm2(r);
        if (rnorm <= opts.tol * bnorm) {
            // accept only if the recomputed residual agrees
            r = true_residual(x.values);
            rnorm = nrm2(r);
            if (rnorm <= opts.tol * bnorm) break;
            r0 = r;  // restart on drift
            p = r;
            rho = ddot(r0, r);
        }
        if (rho == 0.0) {  // breakdown: restart from current residual
            r0 = r;
            p = r;
            rho = ddot(r0, r);
            if (rho == 0.0) break;  // r == 0
        }
        A.apply<double>(p, v);
        const double alpha_den = ddot(r0, v);
        if (alpha_den == 0.0) {
            r0 = r;
            p = r;
            rho = ddot(r0, r);
            ++iter;
            continue;
        }
        const double alpha = rho / alpha_den;
        for (size_t i = 0; i < n; ++i) s[i] = r[i] - alpha * v[i];
        if (nrm2(s) <= 0.5 * opts.tol * bnorm) {
            for (size_t i = 0; i < n; ++i) x.values[i] += alpha * p[i];
            r = s;
            ++iter;
            continue;
        }
        A.apply<double>(s, t);
        const double tt = ddot(t, t);
        if (tt == 0.0) {
            for (size_t i = 0; i < n; ++i) x.values[i] += alpha * p[i];
            r = s;
            ++iter;
            continue;
        }
        const double omega = ddot(t, s) / tt;
        for (size_t i = 0; i < n; ++i) x.values[i] += alpha * p[i] + omega * s[i];
        for (size_t i = 0; i < n; ++i) r[i] = s[i] - omega * t[i];
        const double rho_new = ddot(r0, r);
        const double beta = (rho_new / rho) * (alpha / (omega == 0.0 ? 1.0 : omega));
        if (omega == 0.0) {  // stagnation: restart
            r0 = r;
            p = r;
            rho = ddot(r0, r);
        } else {
            for (size_t i = 0; i < n; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
            rho = rho_new;
        }
        ++iter;
    }

    r = true_residual(x.values);
    local.iterations = iter;
    local.residual = nrm2(r) / bnorm;
    local.converged = local.residual <= opts.tol;
    if (stats) *stats = local;
    if (!local.converged)
        throw NumericalError("solve_linear: no convergence after " + std::to_string(iter) +
                             " iterations, achieved relative residual " +
                             std::to_string(local.residual));
    return x;
}

}  // namespace advinv
