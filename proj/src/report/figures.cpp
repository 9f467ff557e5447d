#include <fstream>
#include <stdexcept>

#include <rademacher/report/report.hpp>

namespace rademacher::report
{

namespace
{

std::ofstream open_out(const std::filesystem::path &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    return out;
}

void emit(const RunConfig &cfg, const std::filesystem::path &dir, const std::string &stem, const std::string &title,
          const std::vector<ComparisonRow> &rows, bool integral, FigureFiles &files)
{
    const auto csv = dir / (stem + ".csv");
    {
        auto out = open_out(csv);
        write_csv(out, rows, cfg.digits);
        if (!out.flush()) {
            throw std::runtime_error("write failed: " + csv.string());
        }
    }
    files.written.push_back(csv);

    if (cfg.output_format == OutputFormat::json) {
        const auto path = dir / (stem + ".json");
        auto out = open_out(path);
        write_json(out, rows, cfg.digits);
        files.written.push_back(path);
    } else if (cfg.output_format == OutputFormat::svg) {
        Series exact_series{"exact", {}};
        Series other{integral ? "integral" : "asymptotic", {}};
        for (const auto &r : rows) {
            const double x = static_cast<double>(r.N);
            if (!r.exact_decimal.empty()) {
                exact_series.points.emplace_back(x, std::stod(r.exact_decimal));
            }
            const auto &y = integral ? r.integral : r.asymptotic;
            if (y) {
                other.points.emplace_back(x, *y);
            }
        }
        const Series both[] = {exact_series, other};
        const auto path = dir / (stem + ".svg");
        auto out = open_out(path);
        write_svg(out, title, both);
        files.written.push_back(path);
    }
}

} // namespace

FigureFiles figures(const RunConfig &cfg, const std::filesystem::path &out_dir)
{
    std::filesystem::create_directories(out_dir);
    FigureFiles files;
    const auto sd = saddle::compute_saddle(cfg.precision_bits);

    RunConfig c = cfg;
    c.modes = {true, true, false};
    c.n_from = 100;
    c.n_to = 150;
    c.l = 1;
    emit(c, out_dir, "fig1", "C(0,1,1)(N): exact vs asymptotic", compare(c, sd), false, files);
    c.l = 2;
    emit(c, out_dir, "fig2", "C(0,1,2)(N): exact vs asymptotic", compare(c, sd), false, files);

    c.modes = {true, false, true};
    c.n_from = 1;
    c.n_to = 70;
    c.l = 1;
    emit(c, out_dir, "fig3", "C(0,1,1)(N): exact vs integral", compare(c, sd), true, files);
    return files;
}

} // namespace rademacher::report
