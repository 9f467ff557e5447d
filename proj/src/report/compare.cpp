#include <cmath>
#include <optional>
#include <stdexcept>

#include <rademacher/contour/contour.hpp>
#include <rademacher/errors.hpp>
#include <rademacher/exact/coefficients.hpp>
#include <rademacher/report/report.hpp>

namespace rademacher::report
{

void RunConfig::validate() const
{
    if (n_from == 0) {
        throw std::invalid_argument("N range must start at 1 or later");
    }
    if (n_from > n_to) {
        throw std::invalid_argument("N range is empty (from > to)");
    }
    if (l == 0) {
        throw std::invalid_argument("l must be positive");
    }
    if (precision_bits < hp::kMinPrecision) {
        throw std::invalid_argument("precision must be at least 64 bits");
    }
    if (digits < 1 || digits > 1000) {
        throw std::invalid_argument("digits must lie in 1..1000");
    }
}

namespace
{

struct ExactCell {
    std::optional<exact::BigRational> rational;
    std::string decimal;
    double value = 0;
};

// Exact value of C_{0,1,l}(N) per N of the range; empty where l > N.
std::vector<std::optional<ExactCell>> exact_cells(const RunConfig &cfg)
{
    std::vector<std::optional<ExactCell>> cells(cfg.n_to - cfg.n_from + 1);
    if (cfg.float_exact) {
        const auto table = exact::float_coefficient_table(cfg.n_to, cfg.precision_bits);
        for (unsigned long n = cfg.n_from; n <= cfg.n_to; ++n) {
            if (cfg.l > n) {
                continue;
            }
            const hp::Real &v = table[n - 1][cfg.l - 1];
            cells[n - cfg.n_from] = ExactCell{std::nullopt, v.to_string(cfg.digits), v.to_double()};
        }
        return cells;
    }
    const auto table = exact::exact_coefficient_table(cfg.n_to);
    for (unsigned long n = cfg.n_from; n <= cfg.n_to; ++n) {
        if (cfg.l > n) {
            continue;
        }
        const exact::BigRational &q = table[n - 1].at(cfg.l);
        cells[n - cfg.n_from] = ExactCell{q, exact::to_decimal_string(q, cfg.digits), q.get_d()};
    }
    return cells;
}

} // namespace

std::vector<ComparisonRow> compare(const RunConfig &cfg)
{
    cfg.validate();
    if (cfg.modes.asymptotic) {
        return compare(cfg, saddle::compute_saddle(cfg.precision_bits));
    }
    // The saddle data is not read when the asymptotic column is off.
    const saddle::SaddleData unused;
    return compare(cfg, unused);
}

std::vector<ComparisonRow> compare(const RunConfig &cfg, const saddle::SaddleData &sd)
{
    cfg.validate();
    if (!cfg.modes.any()) {
        throw std::invalid_argument("compare: no column selected");
    }
    std::vector<std::optional<ExactCell>> cells;
    if (cfg.modes.exact) {
        cells = exact_cells(cfg);
    }
    std::optional<contour::LeftArcIntegrator> arc;
    if (cfg.modes.integral) {
        arc.emplace(cfg.integral_nodes, cfg.precision_bits);
    }

    std::vector<ComparisonRow> rows;
    rows.reserve(cfg.n_to - cfg.n_from + 1);
    for (unsigned long n = cfg.n_from; n <= cfg.n_to; ++n) {
        ComparisonRow row;
        row.N = n;
        row.l = cfg.l;
        if (cfg.l > n) {
            row.error = "l > N: coefficient undefined";
            rows.push_back(std::move(row));
            continue;
        }
        const ExactCell *cell = nullptr;
        if (cfg.modes.exact) {
            cell = &*cells[n - cfg.n_from];
            row.exact = cell->rational;
            row.exact_decimal = cell->decimal;
        }
        if (cfg.modes.asymptotic) {
            row.asymptotic = saddle::asymptotic_C(cfg.l, n, sd).main_term.to_double();
        }
        if (arc) {
            row.integral = arc->approximate_C(cfg.l, n).to_double();
        }
        if (cell != nullptr && row.asymptotic) {
            row.abs_err_asym = std::abs(*row.asymptotic - cell->value);
            if (cell->value != 0.0) {
                row.rel_err_asym = *row.abs_err_asym / std::abs(cell->value);
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace rademacher::report
