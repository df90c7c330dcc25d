#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "benford/generators.hpp"
#include "benford/product_walk.hpp"

namespace benford {

// Fixed critical values; no p-value machinery is shipped.
inline double kolmogorov_critical_1pct(std::uint64_t n) {
    return 1.63 / std::sqrt(static_cast<double>(n));
}
inline constexpr double kChiSq8Critical1pct = 20.09;  // chi^2, 8 dof, 1%

struct DigitFrequency {
    int digit;
    double frequency;
};

struct ChiSquareFirstDigit {
    double chi2;
    int dof;  // b - 2
    std::vector<DigitFrequency> digit_freqs;
};

/// Distributional summary of one trajectory against the Benford measure.
struct ConformanceReport {
    std::size_t n;
    double ks;
    double dstar;
    std::optional<double> chi2;  // absent for non-integer bases
    std::optional<int> dof;
    std::vector<DigitFrequency> digit_freqs;
};

/// Exact KS statistic of the fraclog sample against the uniform CDF, which
/// equals the KS distance of the mantissa sample to the Benford measure:
/// max_i max(i/N - u_(i), u_(i) - (i-1)/N) over the sorted sample.
double ks_to_benford(const MantissaTrajectory& traj);

/// Star discrepancy D*_N over intervals anchored at 0, by the exact
/// sorted-sample formula. Numerically identical to ks_to_benford today; kept
/// as a separate operation for vocabulary and future two-sided variants.
double star_discrepancy(const MantissaTrajectory& traj);

/// Pearson statistic from externally supplied per-digit counts (counts may be
/// fractional, e.g. expected values in tests). `n` is the total mass.
double chi_square_from_counts(std::span<const double> counts, double n, const Base& b);

/// Bins trajectory points by leading digit floor(b^fraclog) and returns the
/// chi-square statistic against the Benford digit probabilities.
/// Requires an integer base and N >= 5*(b-1).
ChiSquareFirstDigit chi_square_first_digit(const MantissaTrajectory& traj);

ConformanceReport conformance_report(const MantissaTrajectory& traj);

/// Right-hand side of the exact identity
///   |T_N|^2 = 1/N + (2/N^2) sum_{1<=k<n<=N} Re(e_h(s_n - s_k)),
/// evaluated directly from the pairwise phase differences (independent of the
/// running-average route). Quadratic cost; guarded at N <= 10^4.
double robbins_rhs(const MantissaTrajectory& traj, Harmonic h, std::size_t n);

struct FourierEntry {
    std::uint64_t n;
    std::complex<double> estimate;
    double std_err;
};

/// Monte Carlo estimates of E[e_h(log_b Y_n)] with component-wise standard
/// errors across independent replica trajectories.
struct EnsembleFourier {
    Harmonic harmonic;
    std::vector<FourierEntry> entries;
    std::uint64_t replicas;
};

/// One ensemble per harmonic. Replica i runs on seed derive_seed(master, i);
/// replicas may be generated concurrently but are reduced in index order, so
/// results are bit-identical for every thread count.
std::vector<EnsembleFourier> ensemble_fourier(const GeneratorSpec& spec,
                                              std::span<const std::uint64_t> n_list,
                                              std::span<const Harmonic> h_list,
                                              std::uint64_t replicas, Seed master);

/// KS distance to uniform of the cross-sectional sample {s_n} over M
/// independent replicas — an empirical proxy for weak convergence at time n.
double ensemble_ks_at(const GeneratorSpec& spec, std::uint64_t n, std::uint64_t replicas,
                      Seed master);

}  // namespace benford
