#include "advinv/time_grid.hpp"

#include <string>

#include "advinv/errors.hpp"

namespace advinv {

TimeGrid::TimeGrid(double T, int n_steps) : T_(T), n_steps_(n_steps) {
    if (!(T > 0.0)) throw ValidationError("TimeGrid: final time must be positive");
    if (n_steps < 1)
        throw ValidationError("TimeGrid: n_steps must be >= 1, got " + std::to_string(n_steps));
    dt_ = T / n_steps;
}

std::vector<double> TimeGrid::nodes() const {
    std::vector<double> out(static_cast<size_t>(n_steps_) + 1);
    for (int n = 0; n <= n_steps_; ++n) out[static_cast<size_t>(n)] = node(n);
    return out;
}

}  // namespace advinv
