#pragma once

#include <functional>
#include <vector>

#include "advinv/amplitude.hpp"
#include "advinv/coefficients.hpp"
#include "advinv/grid.hpp"
#include "advinv/linear_solver.hpp"
#include "advinv/sparse_operator.hpp"
#include "advinv/time_grid.hpp"

namespace advinv {

// Everything needed to march d_t u - L u = rho(t) f from u(0) = 0.
struct Problem {
    Grid grid;
    CoefficientSet coeffs;
    SparseOperator op;  // assembled from coeffs
    TimeGrid time;
    AmplitudeFunction rho;
    Field f;
    double theta = 0.5;
    SolveOptions solver;
    int stride = 1;  // store every k-th snapshot; t = T always stored
};

// Assembles the operator and validates that all parts share one grid.
Problem make_problem(const Grid& grid, const CoefficientSet& coeffs, const TimeGrid& time,
                     const AmplitudeFunction& rho, const Field& f, double theta = 0.5,
                     SolveOptions solver = {}, int stride = 1);

// Time-indexed solution snapshots. With stride k only every k-th time node is
// stored; the final node is always kept. snapshot 0 is the zero field.
struct Trajectory {
    Grid grid;
    TimeGrid time;
    int stride = 1;
    std::vector<double> times;
    std::vector<Field> snapshots;

    const Field& final_state() const { return snapshots.back(); }
    int count() const { return static_cast<int>(snapshots.size()); }
};

// Theta scheme (I - theta dt D) u^{n+1} = (I + (1-theta) dt D) u^n
//                                        + dt [theta rho_{n+1} + (1-theta) rho_n] f.
// theta in [1/2, 1]; linear-solve failures are annotated with the step index.
Trajectory solve_forward(const Problem& problem, double theta);
Trajectory solve_forward(const Problem& problem);  // uses problem.theta

// General-source variant for regression against analytic solutions whose
// source is not separable: source(t) returns the full right-hand-side field.
Trajectory solve_forward_general(const Grid& grid, const SparseOperator& op, const TimeGrid& time,
                                 const std::function<Field(double)>& source, double theta,
                                 const SolveOptions& solver = {}, int stride = 1);

// Deep copy of the snapshot at t = T.
Field observe_final(const Trajectory& traj);

}  // namespace advinv
