#include "benford/mantissa.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace benford {

namespace {

// Largest |log_b x| for which a double still carries fractional bits.
constexpr double kMaxIntegerPart = 4503599627370496.0;  // 2^52

}  // namespace

Base::Base(double value) : value_(value), log_(0.0) {
    if (!std::isfinite(value) || value <= 1.0)
        throw DomainError("base must be a finite real > 1, got " + std::to_string(value));
    log_ = std::log(value);
}

bool Base::integral() const {
    return value_ == std::floor(value_);
}

FracLog::FracLog(double x) {
    if (!std::isfinite(x))
        throw DomainError("fractional log must be finite");
    double r = x - std::floor(x);
    if (r >= 1.0)  // floor rounding can push the residue onto 1.0
        r = 0.0;
    if (r > 1.0 - kUnitSnapTol)
        r = 0.0;
    value_ = r;
}

Harmonic::Harmonic(int value) : value_(value) {
    if (value < 1)
        throw DomainError("harmonic must be >= 1, got " + std::to_string(value));
}

FracLog fraclog(double x, const Base& b) {
    if (!std::isfinite(x) || x <= 0.0)
        throw DomainError("fraclog requires a finite x > 0");
    const double lb = std::log(x) / b.log();
    if (std::abs(lb) > kMaxIntegerPart)
        throw PrecisionError("log_b x exceeds 2^52; fractional part would be noise");
    return FracLog(lb);
}

double mantissa(double x, const Base& b) {
    return std::pow(b.value(), fraclog(x, b).value());
}

double benford_cdf(double a, const Base& b) {
    if (!(a >= 1.0 && a <= b.value()))
        throw DomainError("benford_cdf requires a in [1, b]");
    return std::log(a) / b.log();
}

double first_digit_prob(int digit, const Base& b) {
    if (!b.integral() || b.value() < 2.0)
        throw DomainError("first_digit_prob requires an integer base >= 2");
    if (digit < 1 || digit > static_cast<int>(b.value()) - 1)
        throw DomainError("digit must lie in [1, b-1], got " + std::to_string(digit));
    return std::log1p(1.0 / digit) / b.log();
}

std::complex<double> unit_phase(Harmonic h, FracLog f) {
    const double angle = 2.0 * std::numbers::pi * h.value() * f.value();
    return {std::cos(angle), std::sin(angle)};
}

}  // namespace benford
