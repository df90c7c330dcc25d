#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "benford/mantissa.hpp"
#include "benford/rng.hpp"

namespace benford {

// ---------------------------------------------------------------------------
// Family parameter records. A GeneratorSpec selects one family of positive
// random factors X_n together with the working base; streams emit
// fraclog(X_n, base).
// ---------------------------------------------------------------------------

/// log X_n ~ Normal(mu, sigma^2), natural log.
struct IidLognormal {
    double mu = 0.0;
    double sigma = 1.0;
};

struct IidExponential {
    double rate = 1.0;
};

struct IidWeibull {
    double shape = 1.0;
    double scale = 1.0;
};

struct Atom {
    double value = 1.0;  // positive
    double prob = 1.0;   // strictly positive; probs sum to 1
};

/// Finitely supported law on positive atoms.
struct IidAtoms {
    std::vector<Atom> atoms;
};

/// fraclog(X_n) uniform on [0,1): X_n Benford in the working base.
struct IidBenford {};

/// X_n = c deterministically.
struct Constant {
    double c = 1.0;
};

/// log X_n stationary AR(1) with gamma(1) = sigma^2/(1-phi^2) and
/// gamma(k) = gamma(1) * phi^(k-1).
struct GaussianAr1 {
    double phi = 0.0;
    double sigma = 1.0;
    double mean = 0.0;
};

/// Stationary Gaussian log-sequence with explicit covariances gamma(1..),
/// realized by one-shot Cholesky of the n_max x n_max Toeplitz matrix.
/// gamma(k) is taken as 0 beyond the supplied list.
struct GaussianCov {
    std::vector<double> gamma;
    std::uint64_t n_max = 0;
};

/// log X_n = W(t_n) for a standard Brownian motion W.
struct BrownianLog {
    std::vector<double> times;
};

enum class KernelTag {
    ExpSum,      // g(u,z) = exp(u + z)
    ExpProduct,  // g(u,z) = exp(u * z)
};

struct NormalDist {
    double mu = 0.0;
    double sigma = 1.0;
};
struct UniformDist {
    double lo = 0.0;
    double hi = 1.0;
};
struct ExponentialDist {
    double rate = 1.0;
};
using ScalarDist = std::variant<NormalDist, UniformDist, ExponentialDist>;

/// X_n = g(U, Z_n): conditionally i.i.d. given the shared randomizer U.
struct Exchangeable {
    KernelTag kernel = KernelTag::ExpSum;
    ScalarDist dist_u;
    ScalarDist dist_z;
};

/// X_n = g(Z_n, Z_{n+1}) with i.i.d. Z: adjacent factors dependent,
/// distance-2 factors independent.
struct OneDependent {
    KernelTag kernel = KernelTag::ExpSum;
    ScalarDist dist_z;
};

/// X_{2m-1} = Z_m with uniform fraclog, X_{2m} = b/Z_m, so products over
/// whole pairs collapse to exact powers of the base.
struct CounterexamplePairs {};

using Family = std::variant<IidLognormal, IidExponential, IidWeibull, IidAtoms, IidBenford,
                            Constant, GaussianAr1, GaussianCov, BrownianLog, Exchangeable,
                            OneDependent, CounterexamplePairs>;

/// One X_n family with its parameters and the working base. Construction
/// validates the family invariants (positive parameters, atom probabilities
/// summing to 1, PSD covariance, non-decreasing Brownian times).
class GeneratorSpec {
  public:
    GeneratorSpec(Family family, Base base);

    const Family& family() const { return family_; }
    const Base& base() const { return base_; }

    /// Stable identifier used in scenario files and reports.
    std::string family_name() const;

    /// Packed lower-triangular Cholesky factor of the gaussian_cov Toeplitz
    /// matrix, computed once at construction and shared by all streams.
    /// Null for every other family.
    const std::shared_ptr<const std::vector<double>>& cov_cholesky() const { return cov_chol_; }

  private:
    Family family_;
    Base base_;
    std::shared_ptr<const std::vector<double>> cov_chol_;
};

// ---------------------------------------------------------------------------
// Streams
// ---------------------------------------------------------------------------

/// A seeded, reproducible stream of fraclog(X_1), fraclog(X_2), ...
/// Single-consumer mutable state: one stream must not be advanced from two
/// threads at once, but distinct streams are independent.
class Stream {
  public:
    virtual ~Stream() = default;

    virtual FracLog next() = 0;

    /// Largest index the stream can yield, when bounded (gaussian_cov).
    virtual std::optional<std::uint64_t> capacity() const { return std::nullopt; }

    const Base& base() const { return base_; }
    Seed seed() const { return seed_; }

  protected:
    Stream(Base base, Seed seed) : base_(base), seed_(seed) {}

  private:
    Base base_;
    Seed seed_;
};

/// Deterministic given (spec, seed): equal arguments yield identical values
/// bit for bit. Families with analytically known fraclogs (iid_benford,
/// constant, counterexample_pairs, iid_atoms) emit them without a round trip
/// through x-space.
std::unique_ptr<Stream> make_stream(const GeneratorSpec& spec, Seed seed);

/// gamma(k) = Cov(log X_1, log X_k), natural-log units squared; gamma(1) is
/// the variance. Defined for the stationary Gaussian families gaussian_ar1
/// and gaussian_cov only.
double gamma_of(const GeneratorSpec& spec, int k);

}  // namespace benford
