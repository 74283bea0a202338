#include "advinv/forward.hpp"

#include <string>

#include "advinv/errors.hpp"

namespace advinv {

Problem make_problem(const Grid& grid, const CoefficientSet& coeffs, const TimeGrid& time,
                     const AmplitudeFunction& rho, const Field& f, double theta,
                     SolveOptions solver, int stride) {
    if (coeffs.grid() != grid) throw ValidationError("make_problem: coefficients on a different grid");
    if (f.grid != grid) throw ValidationError("make_problem: source field on a different grid");
    if (rho.T() != time.T()) throw ValidationError("make_problem: rho defined for a different final time");
    if (theta < 0.5 || theta > 1.0)
        throw ValidationError("make_problem: theta must lie in [1/2, 1], got " + std::to_string(theta));
    if (stride < 1) throw ValidationError("make_problem: stride must be >= 1");
    Problem p{grid, coeffs, assemble_operator(grid, coeffs), time, rho, f, theta, solver, stride};
    return p;
}

Trajectory solve_forward_general(const Grid& grid, const SparseOperator& op, const TimeGrid& time,
                                 const std::function<Field(double)>& source, double theta,
                                 const SolveOptions& solver, int stride) {
    if (theta < 0.5 || theta > 1.0)
        throw ValidationError("solve_forward: theta must lie in [1/2, 1], got " + std::to_string(theta));
    if (op.size() != grid.num_unknowns())
        throw ValidationError("solve_forward: operator dimension does not match grid");

    const double dt = time.dt();
    const SparseOperator lhs = op.shifted(1.0, -theta * dt);
    const SparseOperator rhs_op = op.shifted(1.0, (1.0 - theta) * dt);

    Trajectory traj;
    traj.grid = grid;
    traj.time = time;
    traj.stride = stride;

    Field u(grid);  // u(0) = 0
    traj.times.push_back(0.0);
    traj.snapshots.push_back(u);

    Field g_prev = source(time.node(0));
    for (int n = 0; n < time.n_steps(); ++n) {
        const double t_next = time.node(n + 1);
        Field g_next = source(t_next);
        Field rhs = apply_operator(rhs_op, u);
        for (int i = 0; i < rhs.size(); ++i)
            rhs[i] += dt * (theta * g_next[i] + (1.0 - theta) * g_prev[i]);
        try {
            u = solve_linear(lhs, rhs, solver, nullptr, &u);
        } catch (const NumericalError& e) {
            throw NumericalError("solve_forward: step " + std::to_string(n + 1) + " of " +
                                 std::to_string(time.n_steps()) + ": " + e.what());
        }
        g_prev = std::move(g_next);
        if ((n + 1) % stride == 0 || n + 1 == time.n_steps()) {
            traj.times.push_back(t_next);
            traj.snapshots.push_back(u);
        }
    }
    return traj;
}

Trajectory solve_forward(const Problem& problem, double theta) {
    const Field& f = problem.f;
    auto source = [&](double t) {
        Field g = f;
        const double r = problem.rho(t);
        for (double& v : g.values) v *= r;
        return g;
    };
    return solve_forward_general(problem.grid, problem.op, problem.time, source, theta,
                                 problem.solver, problem.stride);
}

Trajectory solve_forward(const Problem& problem) { return solve_forward(problem, problem.theta); }

Field observe_final(const Trajectory& traj) { return traj.snapshots.back(); }

}  // namespace advinv
