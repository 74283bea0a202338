#include "advinv/amplitude.hpp"

#include <algorithm>
#include <cmath>

#include "advinv/errors.hpp"

namespace advinv {

AmplitudeFunction AmplitudeFunction::constant(double value, double T) {
    AmplitudeFunction a;
    a.kind_ = Kind::Constant;
    a.T_ = T;
    a.p0_ = value;
    a.rho0_ = value;
    a.sup_norm_ = std::abs(value);
    a.c1_norm_ = std::abs(value);
    return a;
}

AmplitudeFunction AmplitudeFunction::affine(double value, double slope, double T) {
    AmplitudeFunction a;
    a.kind_ = Kind::Affine;
    a.T_ = T;
    a.p0_ = value;
    a.p1_ = slope;
    a.rho0_ = std::min(value, value + slope * T);
    a.sup_norm_ = std::max(std::abs(value), std::abs(value + slope * T));
    a.c1_norm_ = a.sup_norm_ + std::abs(slope);
    return a;
}

AmplitudeFunction AmplitudeFunction::sinusoidal_offset(double offset, double amp, double omega,
                                                       double phase, double T) {
    AmplitudeFunction a;
    a.kind_ = Kind::SinusoidalOffset;
    a.T_ = T;
    a.p0_ = offset;
    a.p1_ = amp;
    a.p2_ = omega;
    a.p3_ = phase;
    a.finalize_bounds();
    a.c1_norm_ = std::abs(offset) + std::abs(amp) + std::abs(amp * omega);
    return a;
}

AmplitudeFunction AmplitudeFunction::tabulated(const TimeGrid& tg, std::vector<double> samples) {
    if (static_cast<int>(samples.size()) != tg.n_steps() + 1)
        throw ValidationError("AmplitudeFunction::tabulated: need n_steps+1 samples, got " +
                              std::to_string(samples.size()));
    AmplitudeFunction a;
    a.kind_ = Kind::Tabulated;
    a.T_ = tg.T();
    a.table_t_ = tg.nodes();
    a.table_v_ = std::move(samples);
    a.rho0_ = *std::min_element(a.table_v_.begin(), a.table_v_.end());
    double sup = 0.0, dsup = 0.0;
    for (size_t i = 0; i < a.table_v_.size(); ++i) {
        sup = std::max(sup, std::abs(a.table_v_[i]));
        if (i + 1 < a.table_v_.size())
            dsup = std::max(dsup, std::abs((a.table_v_[i + 1] - a.table_v_[i]) /
                                           (a.table_t_[i + 1] - a.table_t_[i])));
    }
    a.sup_norm_ = sup;
    a.c1_norm_ = sup + dsup;
    return a;
}

void AmplitudeFunction::finalize_bounds() {
    // dense sampling; endpoints included
    const int m = 2048;
    double lo = std::numeric_limits<double>::infinity();
    double sup = 0.0;
    for (int i = 0; i <= m; ++i) {
        const double t = T_ * i / m;
        const double v = (*this)(t);
        lo = std::min(lo, v);
        sup = std::max(sup, std::abs(v));
    }
    rho0_ = lo;
    sup_norm_ = sup;
}

double AmplitudeFunction::operator()(double t) const {
    switch (kind_) {
        case Kind::Constant:
            return p0_;
        case Kind::Affine:
            return p0_ + p1_ * t;
        case Kind::SinusoidalOffset:
            return p0_ + p1_ * std::sin(p2_ * t + p3_);
        case Kind::Tabulated: {
            if (t <= table_t_.front()) return table_v_.front();
            if (t >= table_t_.back()) return table_v_.back();
            auto it = std::upper_bound(table_t_.begin(), table_t_.end(), t);
            const size_t k = static_cast<size_t>(it - table_t_.begin());
            const double t0 = table_t_[k - 1], t1 = table_t_[k];
            const double w = (t - t0) / (t1 - t0);
            return (1.0 - w) * table_v_[k - 1] + w * table_v_[k];
        }
    }
    return 0.0;
}

std::string AmplitudeFunction::describe() const {
    switch (kind_) {
        case Kind::Constant:
            return "constant(" + std::to_string(p0_) + ")";
        case Kind::Affine:
            return "affine(" + std::to_string(p0_) + " + " + std::to_string(p1_) + "*t)";
        case Kind::SinusoidalOffset:
            return "sinusoidal(" + std::to_string(p0_) + " + " + std::to_string(p1_) + "*sin(" +
                   std::to_string(p2_) + "*t + " + std::to_string(p3_) + "))";
        case Kind::Tabulated:
            return "tabulated(" + std::to_string(table_v_.size()) + " samples)";
    }
    return "";
}

}  // namespace advinv
