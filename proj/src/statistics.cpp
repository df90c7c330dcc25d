#include "benford/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "benford/errors.hpp"
#include "benford/parallel.hpp"

namespace benford {

namespace {

constexpr std::size_t kRobbinsCap = 10'000;

double sorted_sample_sup(const std::vector<double>& points) {
    std::vector<double> sorted(points);
    std::sort(sorted.begin(), sorted.end());
    const double n = static_cast<double>(sorted.size());
    double sup = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double u = sorted[i];
        const double hi = static_cast<double>(i + 1) / n - u;
        const double lo = u - static_cast<double>(i) / n;
        sup = std::max(sup, std::max(hi, lo));
    }
    return sup;
}

}  // namespace

double ks_to_benford(const MantissaTrajectory& traj) {
    if (traj.points.empty())
        throw DomainError("ks_to_benford requires a non-empty trajectory");
    return sorted_sample_sup(traj.points);
}

double star_discrepancy(const MantissaTrajectory& traj) {
    if (traj.points.empty())
        throw DomainError("star_discrepancy requires a non-empty trajectory");
    return sorted_sample_sup(traj.points);
}

double chi_square_from_counts(std::span<const double> counts, double n, const Base& b) {
    if (!b.integral() || b.value() < 2.0)
        throw DomainError("chi-square digit test requires an integer base >= 2");
    const int digits = static_cast<int>(b.value()) - 1;
    if (static_cast<int>(counts.size()) != digits)
        throw DomainError("chi-square digit test expects one count per digit 1..b-1");
    double chi2 = 0.0;
    for (int d = 1; d <= digits; ++d) {
        const double expected = n * first_digit_prob(d, b);
        const double diff = counts[d - 1] - expected;
        chi2 += diff * diff / expected;
    }
    return chi2;
}

ChiSquareFirstDigit chi_square_first_digit(const MantissaTrajectory& traj) {
    const Base& b = traj.base;
    if (!b.integral() || b.value() < 2.0)
        throw DomainError("chi_square_first_digit requires an integer base >= 2");
    const int digits = static_cast<int>(b.value()) - 1;
    const double n = static_cast<double>(traj.length());
    if (n < 5.0 * digits)
        throw DomainError("chi_square_first_digit requires N >= 5*(b-1)");

    std::vector<double> counts(digits, 0.0);
    for (double f : traj.points) {
        int d = static_cast<int>(std::pow(b.value(), f));
        d = std::clamp(d, 1, digits);  // guard pow landing a hair outside [1,b)
        counts[d - 1] += 1.0;
    }
    ChiSquareFirstDigit result{chi_square_from_counts(counts, n, b), digits - 1, {}};
    result.digit_freqs.reserve(digits);
    for (int d = 1; d <= digits; ++d)
        result.digit_freqs.push_back({d, counts[d - 1] / n});
    return result;
}

ConformanceReport conformance_report(const MantissaTrajectory& traj) {
    ConformanceReport report{traj.length(), ks_to_benford(traj), star_discrepancy(traj),
                             std::nullopt,  std::nullopt,        {}};
    const int digits = static_cast<int>(traj.base.value()) - 1;
    if (traj.base.integral() && traj.base.value() >= 2.0 &&
        static_cast<double>(traj.length()) >= 5.0 * digits) {
        ChiSquareFirstDigit chi = chi_square_first_digit(traj);
        report.chi2 = chi.chi2;
        report.dof = chi.dof;
        report.digit_freqs = std::move(chi.digit_freqs);
    }
    return report;
}

double robbins_rhs(const MantissaTrajectory& traj, Harmonic h, std::size_t n) {
    if (n < 1 || n > traj.length())
        throw DomainError("robbins_rhs requires 1 <= N <= trajectory length");
    if (n > kRobbinsCap)
        throw CapacityError("robbins_rhs is quadratic; N is capped at 10^4");
    double cross = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
        for (std::size_t k = 0; k < j; ++k)
            cross += unit_phase(h, FracLog(traj.points[j] - traj.points[k])).real();
    }
    const double nn = static_cast<double>(n);
    return 1.0 / nn + 2.0 / (nn * nn) * cross;
}

std::vector<EnsembleFourier> ensemble_fourier(const GeneratorSpec& spec,
                                              std::span<const std::uint64_t> n_list,
                                              std::span<const Harmonic> h_list,
                                              std::uint64_t replicas, Seed master) {
    if (replicas < 2)
        throw DomainError("ensemble_fourier requires at least 2 replicas");
    if (n_list.empty() || h_list.empty())
        throw DomainError("ensemble_fourier requires non-empty index and harmonic lists");
    std::vector<std::uint64_t> ns(n_list.begin(), n_list.end());
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    if (ns.front() < 1)
        throw DomainError("ensemble_fourier indices must be positive");
    const std::uint64_t n_max = ns.back();
    const std::size_t cells = ns.size() * h_list.size();

    // Per replica: the phases e_h(s_n) at every requested (h, n) cell.
    auto gen = [&](std::uint64_t i) {
        std::vector<std::complex<double>> row(cells);
        auto stream = make_stream(spec, derive_seed(master, i));
        WalkAccumulator acc;
        std::size_t next_idx = 0;
        for (std::uint64_t step = 1; step <= n_max && next_idx < ns.size(); ++step) {
            const double s = acc.advance(stream->next().value());
            while (next_idx < ns.size() && ns[next_idx] == step) {
                for (std::size_t hi = 0; hi < h_list.size(); ++hi)
                    row[hi * ns.size() + next_idx] = unit_phase(h_list[hi], FracLog(s));
                ++next_idx;
            }
        }
        return row;
    };

    std::vector<std::complex<double>> sum(cells);
    std::vector<double> sum_re2(cells, 0.0);
    std::vector<double> sum_im2(cells, 0.0);
    replica_map_reduce(replicas, gen, [&](std::uint64_t, std::vector<std::complex<double>>&& row) {
        for (std::size_t c = 0; c < cells; ++c) {
            sum[c] += row[c];
            sum_re2[c] += row[c].real() * row[c].real();
            sum_im2[c] += row[c].imag() * row[c].imag();
        }
    });

    const double m = static_cast<double>(replicas);
    std::vector<EnsembleFourier> out;
    out.reserve(h_list.size());
    for (std::size_t hi = 0; hi < h_list.size(); ++hi) {
        EnsembleFourier ef{h_list[hi], {}, replicas};
        ef.entries.reserve(ns.size());
        for (std::size_t c = 0; c < ns.size(); ++c) {
            const std::size_t cell = hi * ns.size() + c;
            const std::complex<double> mean = sum[cell] / m;
            const double var_re = std::max(0.0, sum_re2[cell] / m - mean.real() * mean.real());
            const double var_im = std::max(0.0, sum_im2[cell] / m - mean.imag() * mean.imag());
            const double sd = std::sqrt(std::max(var_re, var_im));
            ef.entries.push_back({ns[c], mean, sd / std::sqrt(m)});
        }
        out.push_back(std::move(ef));
    }
    return out;
}

double ensemble_ks_at(const GeneratorSpec& spec, std::uint64_t n, std::uint64_t replicas,
                      Seed master) {
    if (replicas < 10)
        throw DomainError("ensemble_ks_at requires at least 10 replicas");
    if (n < 1)
        throw DomainError("ensemble_ks_at requires a positive index");

    auto gen = [&](std::uint64_t i) {
        auto stream = make_stream(spec, derive_seed(master, i));
        WalkAccumulator acc;
        double s = 0.0;
        for (std::uint64_t step = 0; step < n; ++step)
            s = acc.advance(stream->next().value());
        return s;
    };

    MantissaTrajectory cross{spec.base(), master, {}};
    cross.points.resize(replicas);
    replica_map_reduce(replicas, gen,
                       [&](std::uint64_t i, double&& s) { cross.points[i] = s; });
    return ks_to_benford(cross);
}

}  // namespace benford
