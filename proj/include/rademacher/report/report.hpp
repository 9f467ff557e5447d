#ifndef RADEMACHER_REPORT_REPORT_HPP
#define RADEMACHER_REPORT_REPORT_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <rademacher/exact/series.hpp>
#include <rademacher/hp/real.hpp>
#include <rademacher/saddle/saddle.hpp>

namespace rademacher::report
{

enum class OutputFormat { csv, json, svg };

struct Modes {
    bool exact = true;
    bool asymptotic = true;
    bool integral = false;

    bool any() const noexcept
    {
        return exact || asymptotic || integral;
    }
};

struct RunConfig {
    hp::Precision precision_bits = hp::kDefaultPrecision;
    unsigned long n_from = 100;
    unsigned long n_to = 150;
    unsigned long l = 1;
    OutputFormat output_format = OutputFormat::csv;
    Modes modes;
    /// Significant digits of decimal cells.
    int digits = 17;
    /// Evaluate the exact pipeline in floating point (precision_bits) instead of rationals.
    bool float_exact = false;
    /// Gauss-Legendre nodes per quarter arc for the integral column.
    std::size_t integral_nodes = 128;

    /// Throws std::invalid_argument on n_from > n_to, n_from = 0, l = 0 or precision < 64.
    void validate() const;
};

/// One N of a comparison between exact, asymptotic and integral values.
/// Optional fields are empty when that computation was skipped.
struct ComparisonRow {
    unsigned long N = 0;
    unsigned long l = 0;
    std::optional<exact::BigRational> exact;
    std::string exact_decimal;
    std::optional<double> asymptotic;
    std::optional<double> integral;
    std::optional<double> abs_err_asym;
    std::optional<double> rel_err_asym;
    /// Per-row failure, e.g. l > N. Not part of the CSV schema.
    std::string error;

    friend bool operator==(const ComparisonRow &, const ComparisonRow &) = default;
};

/// Exact values of C_{0,1,l}(N) for N in [n_from, n_to], one table pass.
/// With float_exact the values are high-precision floats and `exact` stays empty.
struct ExactColumn {
    std::vector<std::optional<exact::BigRational>> rational;
    std::vector<std::optional<hp::Real>> value;
};

/// One row per N in [cfg.n_from, cfg.n_to]. Exact values for all N come from a
/// single prefix-product pass; the saddle data and arc nodes are built once.
std::vector<ComparisonRow> compare(const RunConfig &cfg);
/// Same, reusing already computed saddle data.
std::vector<ComparisonRow> compare(const RunConfig &cfg, const saddle::SaddleData &sd);

// ---------------------------------------------------------------------------
// CSV / JSON / SVG
// ---------------------------------------------------------------------------

inline constexpr const char *kCsvHeader =
    "N,l,exact_rational,exact_decimal,asymptotic,integral,abs_err_asym,rel_err_asym";

/// %.{digits}g rendering used for every floating cell.
std::string format_double(double value, int digits);

void write_csv(std::ostream &out, std::span<const ComparisonRow> rows, int digits = 17);
/// Inverse of write_csv. Throws std::invalid_argument on a malformed file.
std::vector<ComparisonRow> read_csv(std::istream &in);

void write_json(std::ostream &out, std::span<const ComparisonRow> rows, int digits = 17);

struct Series {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// Static line chart: axes with tick labels, one polyline per series, legend.
void write_svg(std::ostream &out, const std::string &title, std::span<const Series> series);

// ---------------------------------------------------------------------------
// Non-convergence analysis
// ---------------------------------------------------------------------------

struct Peak {
    unsigned long N = 0;
    double value = 0; ///< signed C at the peak
};

struct DisproofReport {
    unsigned long n_from = 0;
    unsigned long n_to = 0;
    unsigned long l = 1;
    /// Strict local maxima of |C| (greater than both neighbours).
    std::vector<Peak> peaks;
    /// N-distance between consecutive peaks of the same sign (one period apart).
    std::vector<double> spacings;
    /// |C| ratio between consecutive same-sign peaks.
    std::vector<double> ratios;
    /// Same ratios after removing the polynomial factor: |C| N^{l+1}.
    std::vector<double> normalized_ratios;
    double ratio_geometric_mean = 0;
    double normalized_ratio_geometric_mean = 0;
    /// Growth of |C| from the first to the last peak, and the leading-order
    /// prediction b^{dN} (N_first / N_last)^{l+1}.
    double observed_growth = 0;
    double predicted_growth = 0;
    std::string verdict;
};

inline constexpr const char *kVerdictDiverges = "diverges";
inline constexpr const char *kVerdictNone = "no divergence detected";

/// Peak analysis of values[i] = C_{0,1,l}(n_from + i).
///
/// Verdict "diverges" iff there are at least two peaks, the prediction exceeds
/// 1 and the observed growth reaches at least half of the predicted growth on
/// a log scale (observed >= sqrt(predicted)).
DisproofReport analyze_peaks(unsigned long n_from, unsigned long l, std::span<const double> values, double b);

/// Exact values over [cfg.n_from, cfg.n_to] followed by analyze_peaks().
/// Throws RangeError unless n_to >= n_from + 2p.
DisproofReport disproof(const RunConfig &cfg, const saddle::SaddleData &sd);

void write_disproof(std::ostream &out, const DisproofReport &report);

// ---------------------------------------------------------------------------
// Figures
// ---------------------------------------------------------------------------

struct FigureFiles {
    std::vector<std::filesystem::path> written;
};

/// fig1.csv / fig2.csv: N = 100..150, l = 1 / 2, exact vs asymptotic.
/// fig3.csv: N = 1..70, l = 1, exact vs integral. With OutputFormat::svg a
/// chart is written next to each CSV, with OutputFormat::json a JSON twin.
FigureFiles figures(const RunConfig &cfg, const std::filesystem::path &out_dir);

} // namespace rademacher::report

#endif
