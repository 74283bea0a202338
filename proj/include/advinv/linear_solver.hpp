#pragma once

#include "advinv/grid.hpp"
#include "advinv/sparse_operator.hpp"

namespace advinv {

struct SolveOptions {
    double tol = 1e-10;       // relative residual target
    int max_iter = 0;         // 0 -> 10*n
};

struct SolveStats {
    int iterations = 0;
    double residual = 0.0;    // achieved relative residual (true, recomputed)
    bool converged = false;
};

// BiCGStab for the nonsymmetric shifted systems of the theta scheme.
// Convergence is accepted only after recomputing the true residual; a drifted
// recursive residual restarts the iteration. Deterministic given fixed inputs.
// Throws NumericalError on max-iteration exceedance (achieved residual in the
// message and in *stats when provided).
Field solve_linear(const SparseOperator& A, const Field& rhs, const SolveOptions& opts = {},
                   SolveStats* stats = nullptr, const Field* initial_guess = nullptr);

}  // namespace advinv
