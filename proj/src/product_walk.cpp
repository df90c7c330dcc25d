#include "benford/product_walk.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "benford/errors.hpp"

namespace benford {

MantissaTrajectory accumulate(Stream& stream, std::uint64_t n) {
    if (n == 0)
        throw DomainError("accumulate requires n >= 1");
    if (n > kMaxTrajectoryPoints)
        throw CapacityError("trajectory length " + std::to_string(n) +
                            " exceeds the 10^7-point cap");
    MantissaTrajectory traj{stream.base(), stream.seed(), {}};
    traj.points.reserve(n);
    WalkAccumulator acc;
    for (std::uint64_t i = 0; i < n; ++i)
        traj.points.push_back(acc.advance(stream.next().value()));
    return traj;
}

WeylSeries weyl_series(const MantissaTrajectory& traj, Harmonic h) {
    if (traj.points.empty())
        throw DomainError("weyl_series requires a non-empty trajectory");
    WeylSeries series{h, traj.base, {}};
    series.values.reserve(traj.length());
    std::complex<double> sum{0.0, 0.0};
    for (std::size_t i = 0; i < traj.points.size(); ++i) {
        sum += unit_phase(h, FracLog(traj.points[i]));
        series.values.push_back(sum / static_cast<double>(i + 1));
    }
    return series;
}

void dump_trajectory_csv(const MantissaTrajectory& traj, std::ostream& out) {
    out << "n,fraclog,mantissa\n";
    char buf[64];
    for (std::size_t i = 0; i < traj.points.size(); ++i) {
        const double f = traj.points[i];
        const double m = std::pow(traj.base.value(), f);
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i + 1, f, m);
        out << buf;
    }
}

}  // namespace benford
