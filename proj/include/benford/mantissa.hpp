#pragma once

#include <complex>

#include "benford/errors.hpp"

namespace benford {

/// Values this close below 1.0 snap to 0.0 when reduced mod 1, so that exact
/// powers of the base land on the trajectory fixed point deterministically.
inline constexpr double kUnitSnapTol = 1e-12;

/// A logarithm base b > 1 (any real, not necessarily an integer).
class Base {
  public:
    explicit Base(double value);

    double value() const { return value_; }

    /// Natural log of the base, cached at construction.
    double log() const { return log_; }

    /// True when the base is an exact integer (required for digit counting).
    bool integral() const;

  private:
    double value_;
    double log_;
};

/// A number in [0,1) representing {log_b x} — the universal internal
/// coordinate of the library. Construction reduces mod 1 and applies the
/// near-1 snap.
class FracLog {
  public:
    FracLog() = default;
    explicit FracLog(double x);

    double value() const { return value_; }

  private:
    double value_ = 0.0;
};

/// Frequency index h >= 1 of the Fourier coefficient e_h(x) = exp(2*i*pi*h*x).
class Harmonic {
  public:
    explicit Harmonic(int value);

    int value() const { return value_; }

  private:
    int value_;
};

/// {log_b x} for x > 0, computed as log(x)/log(b) in double precision and
/// reduced mod 1. Raises PrecisionError when |log_b x| exceeds 2^52 (the
/// fractional part would be pure rounding noise at that magnitude).
FracLog fraclog(double x, const Base& b);

/// The unique representative of x in [1,b) under multiplication by integer
/// powers of b; equals b^fraclog(x,b).
double mantissa(double x, const Base& b);

/// CDF of the Benford measure on [1,b]: log_b a.
double benford_cdf(double a, const Base& b);

/// log_b(1 + 1/d) — probability that the leading digit is d. Requires an
/// integer base >= 2 and 1 <= d <= b-1.
double first_digit_prob(int digit, const Base& b);

/// exp(2*i*pi*h*f), a complex number of modulus 1.
std::complex<double> unit_phase(Harmonic h, FracLog f);

}  // namespace benford
