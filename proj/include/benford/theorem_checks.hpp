#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "benford/statistics.hpp"

namespace benford {

// ---------------------------------------------------------------------------
// Verdicts. No finite computation proves a limit, so every condition check
// probes a doubling ladder and reports a trend: `holds`, `fails`, or
// `inconclusive` (the last always with evidence explaining the margin).
// ---------------------------------------------------------------------------

enum class VerdictStatus { Holds, Fails, Inconclusive };

const char* to_string(VerdictStatus s);

struct Evidence {
    std::string label;
    double value;
};

struct Verdict {
    std::string name;
    VerdictStatus status;
    std::vector<Evidence> evidence;
    double tolerance;
};

/// Validates the inconclusive-carries-evidence invariant.
Verdict make_verdict(std::string name, VerdictStatus status, std::vector<Evidence> evidence,
                     double tolerance);

std::string verdicts_to_json(std::span<const Verdict> verdicts);

// Ladder trend thresholds.
inline constexpr double kDecayRatio = 0.75;       // geometric-shrink criterion
inline constexpr double kGrowthTolDefault = 1e-3;  // V_{2n}/V_n >= 1 + tol
inline constexpr double kCesaroTolDefault = 0.05;

// ---------------------------------------------------------------------------
// Cesaro condition (stationary case): (1/L) sum_{l<=L} E e_h(log_b Y_l) -> 0.
// ---------------------------------------------------------------------------

/// Plain Cesaro mean of the first L ensemble estimates. The ensemble must
/// cover every index 1..L.
std::complex<double> cesaro_fourier(const EnsembleFourier& ensemble, std::uint64_t l);

/// Ladder verdict over L in {l0, 2*l0, 4*l0}: `holds` when the magnitudes
/// decay below tolerance + 3 * aggregate stderr, `fails` when they are stuck
/// above it, `inconclusive` when still falling but not yet below.
Verdict cesaro_verdict(const EnsembleFourier& ensemble, std::uint64_t l0, double tolerance);

// ---------------------------------------------------------------------------
// Series condition: sum_N E|T_N|^p / N < infinity.
// ---------------------------------------------------------------------------

struct DelvResult {
    std::vector<std::uint64_t> rungs;       // doubling ladder of cutoffs K
    std::vector<double> partial_sums;       // sum_{N<=K} Ehat|T_N|^p / N
    Verdict verdict;
};

/// Monte Carlo route: estimates E|T_N|^p over M replicas for N = 1..n_max.
DelvResult delv_partial_sums(const GeneratorSpec& spec, Harmonic h, double p,
                             std::uint64_t n_max, std::uint64_t replicas, Seed master);

/// Oracle-injection route: same ladder logic on externally supplied moments
/// (moments[N-1] = E|T_N|^p), bypassing simulation entirely.
DelvResult delv_from_moments(std::span<const double> moments, std::string name);

// ---------------------------------------------------------------------------
// Stationary Gaussian growth condition:
//   V_n = n*gamma(1) + 2*sum_{k=2..n} (n-k+1)*gamma(k) -> infinity.
// ---------------------------------------------------------------------------

/// V_n for the stationary Gaussian families (gaussian_ar1, gaussian_cov, and
/// iid_lognormal as the uncorrelated special case).
double gaussian_variance_growth(const GeneratorSpec& spec, std::uint64_t n);

/// Ladder verdict over n in {n0, 2*n0, 4*n0}: `holds` when every doubling
/// grows by at least 1 + tolerance, `fails` when none does.
Verdict variance_growth_verdict(const GeneratorSpec& spec, std::uint64_t n0, double tolerance);

/// exp(-2*pi^2*h^2*V_n/ln^2 b): the analytic |E e_h(log_b Y_n)| when
/// log Y_n is Gaussian with variance V_n (natural-log units squared).
double gaussian_fourier_magnitude(Harmonic h, double v_n, const Base& b);

/// Analytic |E e_h(log_b Y_n)| where a closed form exists for the family
/// (Gaussian log-sums, atomic laws, exponential/Weibull factors, the
/// deterministic families); nullopt otherwise.
std::optional<double> analytic_fourier_abs(const GeneratorSpec& spec, Harmonic h,
                                           std::uint64_t n);

// ---------------------------------------------------------------------------
// Lattice support of atomic laws: the obstruction {b^(a+z/h)}.
// ---------------------------------------------------------------------------

struct LatticeHit {
    int h;
    double offset;     // common value of frac(h * fraclog(atom))
    bool zero_offset;  // support inside {b^(z/h)}: breaks a.s.-Benford too
};

struct LatticeReport {
    std::vector<LatticeHit> hits;  // possibly empty
    int h_max;
    double tol;
};

/// For each h <= h_max, tests whether all frac(h * fraclog(atom)) coincide
/// within tol on the circle.
LatticeReport lattice_support_test(std::span<const double> atoms, const Base& b, int h_max,
                                   double tol);

/// Verdicts for the two lattice criteria: a.s. Benford needs no zero-offset
/// lattice; weak (in-law) Benford needs no lattice at all.
std::vector<Verdict> lattice_verdicts(const LatticeReport& report);

// ---------------------------------------------------------------------------
// Fourier coefficient bound for bounded densities on [0,1).
// ---------------------------------------------------------------------------

/// Piecewise-constant probability density on [0,1): breakpoints
/// 0 = t_0 < ... < t_m = 1 with one non-negative height per interval,
/// integrating to 1 within 1e-12.
class PiecewiseDensity {
  public:
    PiecewiseDensity(std::vector<double> breakpoints, std::vector<double> heights);

    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& heights() const { return heights_; }
    double sup_height() const { return sup_height_; }

    /// Exact E e_h(Z) = sum_j height_j (e(2*pi*i*h*t_{j+1}) - e(2*pi*i*h*t_j))
    /// / (2*pi*i*h) — closed form, no quadrature.
    std::complex<double> fourier_coefficient(Harmonic h) const;

  private:
    std::vector<double> breakpoints_;
    std::vector<double> heights_;
    double sup_height_;
};

/// Asserts |E e_h(Z)| <= sqrt(1 - 1/(4a^2)) + 1e-9 for all h <= h_max, with
/// a = sup height.
Verdict density_fourier_bound_check(const PiecewiseDensity& density, int h_max);

/// (1 + 2*d_n)/ln(b): cap on the mantissa density implied by a unimodal
/// log-density with supremum d_n.
double unimodal_mantissa_bound(double d_n, const Base& b);

// ---------------------------------------------------------------------------
// Invariance catalogue: scale / power / product / Hill b-base.
// ---------------------------------------------------------------------------

enum class InvarianceMode { Scale, Power, Product, HillBase };

struct InvarianceParams {
    InvarianceMode mode = InvarianceMode::Scale;
    double lambda = 1.0;                    // scale: lambda > 0
    int power_m = 1;                        // power: integer m >= 1
    int hill_n = 1;                         // hill_base: integer n >= 1
    std::optional<GeneratorSpec> second;    // product: law of the other factor
};

Verdict invariance_suite(const InvarianceParams& params, const Base& b, std::uint64_t replicas,
                         Seed master);

}  // namespace benford
