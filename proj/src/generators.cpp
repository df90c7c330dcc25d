#include "benford/generators.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "benford/errors.hpp"

namespace benford {

namespace {

constexpr std::uint64_t kMaxCovOrder = 4096;
constexpr double kAtomProbSumTol = 1e-9;
constexpr double kMaxCholJitter = 1e-10;

void validate_dist(const ScalarDist& d, const char* what) {
    std::visit(
        [&](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NormalDist>) {
                if (!(p.sigma > 0.0) || !std::isfinite(p.sigma) || !std::isfinite(p.mu))
                    throw DomainError(std::string(what) + ": normal requires finite mu and sigma > 0");
            } else if constexpr (std::is_same_v<T, UniformDist>) {
                if (!(p.lo <= p.hi) || !std::isfinite(p.lo) || !std::isfinite(p.hi))
                    throw DomainError(std::string(what) + ": uniform requires finite lo <= hi");
            } else {
                if (!(p.rate > 0.0) || !std::isfinite(p.rate))
                    throw DomainError(std::string(what) + ": exponential requires rate > 0");
            }
        },
        d);
}

double sample_scalar(const ScalarDist& d, Xoshiro256pp& rng) {
    return std::visit(
        [&](const auto& p) -> double {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NormalDist>) {
                return p.mu + p.sigma * rng.next_normal();
            } else if constexpr (std::is_same_v<T, UniformDist>) {
                return p.lo + (p.hi - p.lo) * rng.next_unit();
            } else {
                return -std::log(rng.next_unit_open()) / p.rate;
            }
        },
        d);
}

double kernel_log(KernelTag k, double u, double z) {
    return k == KernelTag::ExpSum ? u + z : u * z;
}

// Packed lower-triangular Cholesky of the Toeplitz matrix G[i][j] =
// gamma(|i-j|+1), with a diagonal jitter ladder up to kMaxCholJitter.
std::vector<double> cholesky_toeplitz(const std::vector<double>& gamma, std::uint64_t n) {
    auto g = [&](std::uint64_t i, std::uint64_t j) {
        const std::uint64_t lag = i > j ? i - j : j - i;
        return lag < gamma.size() ? gamma[lag] : 0.0;
    };
    const std::size_t packed = static_cast<std::size_t>(n) * (n + 1) / 2;
    std::vector<double> chol(packed);
    auto at = [&](std::uint64_t i, std::uint64_t j) -> double& {
        return chol[static_cast<std::size_t>(i) * (i + 1) / 2 + j];
    };
    for (double jitter : {0.0, 1e-13, 1e-12, 1e-11, kMaxCholJitter}) {
        bool ok = true;
        for (std::uint64_t i = 0; i < n && ok; ++i) {
            for (std::uint64_t j = 0; j <= i; ++j) {
                double s = g(i, j) + (i == j ? jitter : 0.0);
                for (std::uint64_t k = 0; k < j; ++k)
                    s -= at(i, k) * at(j, k);
                if (i == j) {
                    if (!(s > 0.0)) {
                        ok = false;
                        break;
                    }
                    at(i, j) = std::sqrt(s);
                } else {
                    at(i, j) = s / at(j, j);
                }
            }
        }
        if (ok)
            return chol;
    }
    throw DomainError("gaussian_cov: covariance matrix is not positive semi-definite "
                      "(Cholesky failed with jitter up to 1e-10)");
}

void validate_family(const Family& family) {
    std::visit(
        [](const auto& f) {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, IidLognormal>) {
                if (!(f.sigma > 0.0) || !std::isfinite(f.sigma) || !std::isfinite(f.mu))
                    throw DomainError("iid_lognormal requires finite mu and sigma > 0");
            } else if constexpr (std::is_same_v<T, IidExponential>) {
                if (!(f.rate > 0.0) || !std::isfinite(f.rate))
                    throw DomainError("iid_exponential requires rate > 0");
            } else if constexpr (std::is_same_v<T, IidWeibull>) {
                if (!(f.shape > 0.0) || !(f.scale > 0.0))
                    throw DomainError("iid_weibull requires shape > 0 and scale > 0");
            } else if constexpr (std::is_same_v<T, IidAtoms>) {
                if (f.atoms.empty())
                    throw DomainError("iid_atoms requires at least one atom");
                double sum = 0.0;
                for (const Atom& a : f.atoms) {
                    if (!(a.value > 0.0) || !std::isfinite(a.value))
                        throw DomainError("iid_atoms: atom values must be positive and finite");
                    if (!(a.prob > 0.0))
                        throw DomainError("iid_atoms: atom probabilities must be strictly positive");
                    sum += a.prob;
                }
                if (std::abs(sum - 1.0) > kAtomProbSumTol)
                    throw DomainError("iid_atoms: probabilities must sum to 1 within 1e-9");
            } else if constexpr (std::is_same_v<T, Constant>) {
                if (!(f.c > 0.0) || !std::isfinite(f.c))
                    throw DomainError("constant requires c > 0");
            } else if constexpr (std::is_same_v<T, GaussianAr1>) {
                if (!(std::abs(f.phi) < 1.0))
                    throw DomainError("gaussian_ar1 requires phi in (-1, 1)");
                if (!(f.sigma > 0.0) || !std::isfinite(f.mean))
                    throw DomainError("gaussian_ar1 requires sigma > 0 and finite mean");
            } else if constexpr (std::is_same_v<T, GaussianCov>) {
                if (f.gamma.empty())
                    throw DomainError("gaussian_cov requires a non-empty gamma list");
                if (f.n_max < 1 || f.n_max > kMaxCovOrder)
                    throw DomainError("gaussian_cov requires 1 <= n_max <= 4096");
            } else if constexpr (std::is_same_v<T, BrownianLog>) {
                if (f.times.empty())
                    throw DomainError("brownian_log requires a non-empty times list");
                double prev = 0.0;
                for (double t : f.times) {
                    if (!(t >= prev) || !std::isfinite(t))
                        throw DomainError("brownian_log times must be non-negative and non-decreasing");
                    prev = t;
                }
            } else if constexpr (std::is_same_v<T, Exchangeable>) {
                validate_dist(f.dist_u, "exchangeable dist_u");
                validate_dist(f.dist_z, "exchangeable dist_z");
            } else if constexpr (std::is_same_v<T, OneDependent>) {
                validate_dist(f.dist_z, "one_dependent dist_z");
            }
            // IidBenford, CounterexamplePairs: nothing to check
        },
        family);
}

}  // namespace

GeneratorSpec::GeneratorSpec(Family family, Base base)
    : family_(std::move(family)), base_(base) {
    validate_family(family_);
    if (const auto* cov = std::get_if<GaussianCov>(&family_))
        cov_chol_ = std::make_shared<const std::vector<double>>(
            cholesky_toeplitz(cov->gamma, cov->n_max));
}

std::string GeneratorSpec::family_name() const {
    struct Namer {
        std::string operator()(const IidLognormal&) const { return "iid_lognormal"; }
        std::string operator()(const IidExponential&) const { return "iid_exponential"; }
        std::string operator()(const IidWeibull&) const { return "iid_weibull"; }
        std::string operator()(const IidAtoms&) const { return "iid_atoms"; }
        std::string operator()(const IidBenford&) const { return "iid_benford"; }
        std::string operator()(const Constant&) const { return "constant"; }
        std::string operator()(const GaussianAr1&) const { return "gaussian_ar1"; }
        std::string operator()(const GaussianCov&) const { return "gaussian_cov"; }
        std::string operator()(const BrownianLog&) const { return "brownian_log"; }
        std::string operator()(const Exchangeable&) const { return "exchangeable"; }
        std::string operator()(const OneDependent&) const { return "one_dependent"; }
        std::string operator()(const CounterexamplePairs&) const { return "counterexample_pairs"; }
    };
    return std::visit(Namer{}, family_);
}

namespace {

// ---------------------------------------------------------------------------
// Per-family streams. Each stream owns its RNG, seeded from the stream seed,
// so two streams with equal (spec, seed) replay bit-identically.
// ---------------------------------------------------------------------------

class LogSampleStream : public Stream {
  public:
    LogSampleStream(Base base, Seed seed) : Stream(base, seed), rng_(seed) {}

  protected:
    FracLog reduce_log(double natural_log_x) {
        return FracLog(natural_log_x / base().log());
    }
    Xoshiro256pp rng_;
};

class IidLognormalStream final : public LogSampleStream {
  public:
    IidLognormalStream(const IidLognormal& p, Base base, Seed seed)
        : LogSampleStream(base, seed), p_(p) {}
    FracLog next() override { return reduce_log(p_.mu + p_.sigma * rng_.next_normal()); }

  private:
    IidLognormal p_;
};

class IidExponentialStream final : public LogSampleStream {
  public:
    IidExponentialStream(const IidExponential& p, Base base, Seed seed)
        : LogSampleStream(base, seed), p_(p) {}
    FracLog next() override {
        return reduce_log(std::log(-std::log(rng_.next_unit_open()) / p_.rate));
    }

  private:
    IidExponential p_;
};

class IidWeibullStream final : public LogSampleStream {
  public:
    IidWeibullStream(const IidWeibull& p, Base base, Seed seed)
        : LogSampleStream(base, seed), log_scale_(std::log(p.scale)), inv_shape_(1.0 / p.shape) {}
    FracLog next() override {
        const double e = -std::log(rng_.next_unit_open());
        return reduce_log(log_scale_ + inv_shape_ * std::log(e));
    }

  private:
    double log_scale_;
    double inv_shape_;
};

class IidAtomsStream final : public Stream {
  public:
    IidAtomsStream(const IidAtoms& p, Base base, Seed seed) : Stream(base, seed), rng_(seed) {
        double cum = 0.0;
        for (const Atom& a : p.atoms) {
            cum += a.prob;
            cum_.push_back(cum);
            frac_.push_back(fraclog(a.value, base).value());
        }
        cum_.back() = 1.0;  // absorb the <=1e-9 normalization slack
    }
    FracLog next() override {
        const double u = rng_.next_unit();
        const std::size_t i =
            std::upper_bound(cum_.begin(), cum_.end(), u) - cum_.begin();
        return FracLog(frac_[std::min(i, frac_.size() - 1)]);
    }

  private:
    Xoshiro256pp rng_;
    std::vector<double> cum_;
    std::vector<double> frac_;
};

class IidBenfordStream final : public Stream {
  public:
    IidBenfordStream(Base base, Seed seed) : Stream(base, seed), rng_(seed) {}
    FracLog next() override { return FracLog(rng_.next_unit()); }

  private:
    Xoshiro256pp rng_;
};

class ConstantStream final : public Stream {
  public:
    ConstantStream(const Constant& p, Base base, Seed seed)
        : Stream(base, seed), value_(fraclog(p.c, base)) {}
    FracLog next() override { return value_; }

  private:
    FracLog value_;
};

class GaussianAr1Stream final : public LogSampleStream {
  public:
    GaussianAr1Stream(const GaussianAr1& p, Base base, Seed seed)
        : LogSampleStream(base, seed), p_(p) {}
    FracLog next() override {
        if (!started_) {
            started_ = true;
            const double sd1 = p_.sigma / std::sqrt(1.0 - p_.phi * p_.phi);
            state_ = p_.mean + sd1 * rng_.next_normal();
        } else {
            state_ = p_.mean + p_.phi * (state_ - p_.mean) + p_.sigma * rng_.next_normal();
        }
        return reduce_log(state_);
    }

  private:
    GaussianAr1 p_;
    double state_ = 0.0;
    bool started_ = false;
};

class GaussianCovStream final : public LogSampleStream {
  public:
    GaussianCovStream(const GaussianCov& p, std::shared_ptr<const std::vector<double>> chol,
                      Base base, Seed seed)
        : LogSampleStream(base, seed), n_max_(p.n_max), chol_(std::move(chol)) {
        z_.reserve(p.n_max);
    }
    FracLog next() override {
        if (row_ >= n_max_)
            throw CapacityError("gaussian_cov stream exhausted: n_max = " +
                                std::to_string(n_max_));
        z_.push_back(rng_.next_normal());
        const std::size_t off = static_cast<std::size_t>(row_) * (row_ + 1) / 2;
        double log_x = 0.0;
        for (std::uint64_t j = 0; j <= row_; ++j)
            log_x += (*chol_)[off + j] * z_[j];
        ++row_;
        return reduce_log(log_x);
    }
    std::optional<std::uint64_t> capacity() const override { return n_max_; }

  private:
    std::uint64_t n_max_;
    std::shared_ptr<const std::vector<double>> chol_;
    std::vector<double> z_;
    std::uint64_t row_ = 0;
};

class BrownianLogStream final : public LogSampleStream {
  public:
    BrownianLogStream(const BrownianLog& p, Base base, Seed seed)
        : LogSampleStream(base, seed), times_(p.times) {}
    FracLog next() override {
        if (idx_ >= times_.size())
            throw CapacityError("brownian_log stream exhausted: only " +
                                std::to_string(times_.size()) + " times supplied");
        const double prev = idx_ == 0 ? 0.0 : times_[idx_ - 1];
        const double dt = times_[idx_] - prev;
        w_ += std::sqrt(dt) * rng_.next_normal();
        ++idx_;
        return reduce_log(w_);
    }
    std::optional<std::uint64_t> capacity() const override { return times_.size(); }

  private:
    std::vector<double> times_;
    std::size_t idx_ = 0;
    double w_ = 0.0;
};

class ExchangeableStream final : public LogSampleStream {
  public:
    ExchangeableStream(const Exchangeable& p, Base base, Seed seed)
        : LogSampleStream(base, seed), p_(p), u_(sample_scalar(p.dist_u, rng_)) {}
    FracLog next() override {
        return reduce_log(kernel_log(p_.kernel, u_, sample_scalar(p_.dist_z, rng_)));
    }

  private:
    Exchangeable p_;
    double u_;
};

class OneDependentStream final : public LogSampleStream {
  public:
    OneDependentStream(const OneDependent& p, Base base, Seed seed)
        : LogSampleStream(base, seed), p_(p), z_prev_(sample_scalar(p.dist_z, rng_)) {}
    FracLog next() override {
        const double z_next = sample_scalar(p_.dist_z, rng_);
        const double log_x = kernel_log(p_.kernel, z_prev_, z_next);
        z_prev_ = z_next;
        return reduce_log(log_x);
    }

  private:
    OneDependent p_;
    double z_prev_;
};

class CounterexamplePairsStream final : public Stream {
  public:
    CounterexamplePairsStream(Base base, Seed seed) : Stream(base, seed), rng_(seed) {}
    FracLog next() override {
        if (!second_half_) {
            v_ = rng_.next_unit();
            second_half_ = true;
            return FracLog(v_);
        }
        second_half_ = false;
        return FracLog(1.0 - v_);
    }

  private:
    Xoshiro256pp rng_;
    double v_ = 0.0;
    bool second_half_ = false;
};

}  // namespace

std::unique_ptr<Stream> make_stream(const GeneratorSpec& spec, Seed seed) {
    const Base& b = spec.base();
    return std::visit(
        [&](const auto& f) -> std::unique_ptr<Stream> {
            using T = std::decay_t<decltype(f)>;
            if constexpr (std::is_same_v<T, IidLognormal>)
                return std::make_unique<IidLognormalStream>(f, b, seed);
            else if constexpr (std::is_same_v<T, IidExponential>)
                return std::make_unique<IidExponentialStream>(f, b, seed);
            else if constexpr (std::is_same_v<T, IidWeibull>)
                return std::make_unique<IidWeibullStream>(f, b, seed);
            else if constexpr (std::is_same_v<T, IidAtoms>)
                return std::make_unique<IidAtomsStream>(f, b, seed);
            else if constexpr (std::is_same_v<T, IidBenford>)
                return std::make_unique<IidBenfordStream>(b, seed);
            else if constexpr (std::is_same_v<T, Constant>)
                return std::make_unique<ConstantStream>(f, b, seed);
            else if constexpr (std::is_same_v<T, GaussianAr1>)
                return std::make_unique<GaussianAr1Stream>(f, b, seed);
            else if constexpr (std::is_same_v<T, GaussianCov>)
                return std::make_unique<GaussianCovStream>(f, spec.cov_cholesky(), b, seed);
            else if constexpr (std::is_same_v<T, BrownianLog>)
                return std::make_unique<BrownianLogStream>(f, b, seed);
            else if constexpr (std::is_same_v<T, Exchangeable>)
                return std::make_unique<ExchangeableStream>(f, b, seed);
            else if constexpr (std::is_same_v<T, OneDependent>)
                return std::make_unique<OneDependentStream>(f, b, seed);
            else
                return std::make_unique<CounterexamplePairsStream>(b, seed);
        },
        spec.family());
}

double gamma_of(const GeneratorSpec& spec, int k) {
    if (k < 1)
        throw DomainError("gamma_of requires k >= 1");
    if (const auto* ar1 = std::get_if<GaussianAr1>(&spec.family())) {
        const double g1 = ar1->sigma * ar1->sigma / (1.0 - ar1->phi * ar1->phi);
        return g1 * std::pow(ar1->phi, k - 1);
    }
    if (const auto* cov = std::get_if<GaussianCov>(&spec.family()))
        return static_cast<std::size_t>(k) <= cov->gamma.size() ? cov->gamma[k - 1] : 0.0;
    throw UnsupportedFamilyError("gamma_of is defined for gaussian_ar1 and gaussian_cov only, got " +
                                 spec.family_name());
}

}  // namespace benford
