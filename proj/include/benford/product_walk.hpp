#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "benford/generators.hpp"
#include "benford/mantissa.hpp"

namespace benford {

/// Hard cap on materialized trajectory length (~80 MB of doubles).
inline constexpr std::uint64_t kMaxTrajectoryPoints = 10'000'000;

/// The sequence s_n = {log_b Y_n} of a product trajectory Y_n = X_1 ... X_n,
/// immutable after construction and safe to share across threads.
struct MantissaTrajectory {
    Base base;
    Seed seed;
    std::vector<double> points;  // s_1 ... s_N, each in [0,1)

    std::size_t length() const { return points.size(); }
};

/// Incremental mod-1 Kahan accumulator for s_n = frac(s_{n-1} + f_n).
///
/// The compensation residual survives wraps: subtracting 1.0 from a sum in
/// [1,2) is exact, so the error bound stays O(N*eps) independent of the
/// summand magnitudes. When a step lands exactly on the fixed point (the wrap
/// subtracts the whole sum, or the near-1 snap fires) the compensation is
/// cleared, keeping exact-power products pinned at zero.
class WalkAccumulator {
  public:
    /// Adds one fractional log and returns the new state in [0,1).
    double advance(double f) {
        const double y = f - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
        if (sum_ >= 1.0) {
            sum_ -= 1.0;
            if (sum_ == 0.0)
                comp_ = 0.0;
        }
        if (sum_ > 1.0 - kUnitSnapTol || sum_ < 0.0) {
            sum_ = 0.0;
            comp_ = 0.0;
        }
        return sum_;
    }

    double state() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Materializes the first n points of the product walk driven by `stream`.
/// Propagates the stream's capacity error when it cannot yield n values.
MantissaTrajectory accumulate(Stream& stream, std::uint64_t n);

/// Prefix averages T_N = (1/N) sum_{k<=N} e_h(s_k) for one trajectory.
struct WeylSeries {
    Harmonic harmonic;
    Base base;
    std::vector<std::complex<double>> values;  // T_1 ... T_N
};

WeylSeries weyl_series(const MantissaTrajectory& traj, Harmonic h);

/// CSV dump `n,fraclog,mantissa`, 17 significant digits.
void dump_trajectory_csv(const MantissaTrajectory& traj, std::ostream& out);

}  // namespace benford
