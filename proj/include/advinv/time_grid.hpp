#pragma once

#include <vector>

namespace advinv {

// Uniform partition of [0, T]; the final node is pinned to T exactly.
class TimeGrid {
public:
    TimeGrid() = default;
    TimeGrid(double T, int n_steps);

    double T() const { return T_; }
    int n_steps() const { return n_steps_; }
    double dt() const { return dt_; }
    double node(int n) const { return n == n_steps_ ? T_ : n * dt_; }

    std::vector<double> nodes() const;

private:
    double T_ = 0.0;
    int n_steps_ = 0;
    double dt_ = 0.0;
};

}  // namespace advinv
