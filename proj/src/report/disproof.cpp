#include <cmath>
#include <ostream>

#include <rademacher/errors.hpp>
#include <rademacher/exact/coefficients.hpp>
#include <rademacher/report/report.hpp>

namespace rademacher::report
{

namespace
{

double geometric_mean(const std::vector<double> &xs)
{
    if (xs.empty()) {
        return 0;
    }
    double s = 0;
    for (double x : xs) {
        s += std::log(x);
    }
    return std::exp(s / static_cast<double>(xs.size()));
}

} // namespace

DisproofReport analyze_peaks(unsigned long n_from, unsigned long l, std::span<const double> values, double b)
{
    DisproofReport r;
    r.n_from = n_from;
    r.n_to = n_from + values.size() - 1;
    r.l = l;
    // Interior strict maxima; on a tie with the right neighbour the smaller N wins.
    for (std::size_t i = 1; i + 1 < values.size(); ++i) {
        const double m = std::abs(values[i]);
        if (m > std::abs(values[i - 1]) && m >= std::abs(values[i + 1]) && m > 0) {
            r.peaks.push_back({n_from + i, values[i]});
        }
    }
    auto normalized = [&](const Peak &pk) {
        return std::abs(pk.value) * std::pow(static_cast<double>(pk.N), static_cast<double>(l + 1));
    };
    for (std::size_t i = 0; i < r.peaks.size(); ++i) {
        for (std::size_t j = i + 1; j < r.peaks.size(); ++j) {
            if ((r.peaks[i].value > 0) == (r.peaks[j].value > 0)) {
                r.spacings.push_back(static_cast<double>(r.peaks[j].N - r.peaks[i].N));
                r.ratios.push_back(std::abs(r.peaks[j].value / r.peaks[i].value));
                r.normalized_ratios.push_back(normalized(r.peaks[j]) / normalized(r.peaks[i]));
                break;
            }
        }
    }
    r.ratio_geometric_mean = geometric_mean(r.ratios);
    r.normalized_ratio_geometric_mean = geometric_mean(r.normalized_ratios);

    r.verdict = kVerdictNone;
    if (r.peaks.size() >= 2) {
        const Peak &first = r.peaks.front();
        const Peak &last = r.peaks.back();
        r.observed_growth = std::abs(last.value / first.value);
        r.predicted_growth = std::pow(b, static_cast<double>(last.N - first.N)) *
                             std::pow(static_cast<double>(first.N) / static_cast<double>(last.N),
                                      static_cast<double>(l + 1));
        if (r.predicted_growth > 1 && r.observed_growth >= std::sqrt(r.predicted_growth)) {
            r.verdict = kVerdictDiverges;
        }
    }
    return r;
}

DisproofReport disproof(const RunConfig &cfg, const saddle::SaddleData &sd)
{
    cfg.validate();
    const double p = sd.p.to_double();
    if (static_cast<double>(cfg.n_to - cfg.n_from) < 2 * p) {
        throw RangeError("disproof: range shorter than two oscillation periods (" + format_double(2 * p, 5) + ")");
    }
    if (cfg.l > cfg.n_from) {
        throw RangeError("disproof: l exceeds the first N of the range");
    }
    std::vector<double> values;
    values.reserve(cfg.n_to - cfg.n_from + 1);
    if (cfg.float_exact) {
        const auto table = exact::float_coefficient_table(cfg.n_to, cfg.precision_bits);
        for (unsigned long n = cfg.n_from; n <= cfg.n_to; ++n) {
            values.push_back(table[n - 1][cfg.l - 1].to_double());
        }
    } else {
        const auto table = exact::exact_coefficient_table(cfg.n_to);
        for (unsigned long n = cfg.n_from; n <= cfg.n_to; ++n) {
            values.push_back(table[n - 1].at(cfg.l).get_d());
        }
    }
    return analyze_peaks(cfg.n_from, cfg.l, values, sd.b.to_double());
}

void write_disproof(std::ostream &out, const DisproofReport &r)
{
    out << "range N = " << r.n_from << ".." << r.n_to << ", l = " << r.l << '\n';
    out << "peaks (local maxima of |C|):\n";
    for (const auto &pk : r.peaks) {
        out << "  N = " << pk.N << "  C = " << format_double(pk.value, 10) << '\n';
    }
    out << "same-sign peak pairs (spacing, |C| ratio, ratio with N^(l+1) removed):\n";
    for (std::size_t i = 0; i < r.spacings.size(); ++i) {
        out << "  " << format_double(r.spacings[i], 4) << "  " << format_double(r.ratios[i], 6) << "  "
            << format_double(r.normalized_ratios[i], 6) << '\n';
    }
    out << "ratio geometric mean: " << format_double(r.ratio_geometric_mean, 6) << '\n';
    out << "normalized ratio geometric mean: " << format_double(r.normalized_ratio_geometric_mean, 6) << '\n';
    out << "growth first -> last peak: observed " << format_double(r.observed_growth, 6) << ", predicted "
        << format_double(r.predicted_growth, 6) << '\n';
    out << "verdict: " << r.verdict << '\n';
}

} // namespace rademacher::report
