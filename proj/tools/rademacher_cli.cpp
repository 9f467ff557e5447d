#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include <rademacher/errors.hpp>
#include <rademacher/exact/coefficients.hpp>
#include <rademacher/report/checks.hpp>
#include <rademacher/report/report.hpp>
#include <rademacher/saddle/saddle.hpp>

namespace fs = std::filesystem;
namespace rr = rademacher::report;
using rademacher::hp::Real;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Globals {
    long prec_bits = 256;
    std::string format = "csv";
    bool format_given = false;
    std::string out_dir;
    int digits = 17;
};

const char *extension(rr::OutputFormat f)
{
    switch (f) {
    case rr::OutputFormat::json: return "json";
    case rr::OutputFormat::svg: return "svg";
    default: return "csv";
    }
}

rr::OutputFormat parse_format(const std::string &s)
{
    if (s == "csv") {
        return rr::OutputFormat::csv;
    }
    if (s == "json") {
        return rr::OutputFormat::json;
    }
    if (s == "svg") {
        return rr::OutputFormat::svg;
    }
    throw UsageError("unknown format " + s);
}

// stdout unless --out is set, then <out>/<stem>.<ext>.
template <typename Writer>
void emit(const Globals &g, const std::string &stem, rr::OutputFormat f, Writer write)
{
    if (g.out_dir.empty()) {
        write(std::cout);
        std::cout.flush();
        return;
    }
    fs::create_directories(g.out_dir);
    const fs::path path = fs::path(g.out_dir) / (stem + "." + extension(f));
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    write(out);
    if (!out.flush()) {
        throw std::runtime_error("write failed: " + path.string());
    }
    std::cerr << "wrote " << path.string() << '\n';
}

rr::RunConfig base_config(const Globals &g)
{
    if (g.prec_bits < 64) {
        throw UsageError("--prec-bits must be at least 64");
    }
    rr::RunConfig cfg;
    cfg.precision_bits = g.prec_bits;
    cfg.output_format = parse_format(g.format);
    cfg.digits = g.digits;
    return cfg;
}

void emit_rows(const Globals &g, const std::string &stem, const rr::RunConfig &cfg,
               const std::vector<rr::ComparisonRow> &rows)
{
    for (const auto &r : rows) {
        if (!r.error.empty()) {
            std::cerr << "N = " << r.N << ", l = " << r.l << ": " << r.error << '\n';
        }
    }
    emit(g, stem, cfg.output_format, [&](std::ostream &out) {
        switch (cfg.output_format) {
        case rr::OutputFormat::json:
            rr::write_json(out, rows, cfg.digits);
            break;
        case rr::OutputFormat::svg: {
            std::vector<rr::Series> series;
            auto add = [&](const char *label, auto get) {
                rr::Series s{label, {}};
                for (const auto &r : rows) {
                    if (auto y = get(r)) {
                        s.points.emplace_back(static_cast<double>(r.N), *y);
                    }
                }
                if (!s.points.empty()) {
                    series.push_back(std::move(s));
                }
            };
            add("exact", [](const rr::ComparisonRow &r) {
                return r.exact_decimal.empty() ? std::optional<double>() : std::optional<double>(std::stod(r.exact_decimal));
            });
            add("asymptotic", [](const rr::ComparisonRow &r) { return r.asymptotic; });
            add("integral", [](const rr::ComparisonRow &r) { return r.integral; });
            rr::write_svg(out, "C(0,1," + std::to_string(cfg.l) + ")(N)", series);
            break;
        }
        default:
            rr::write_csv(out, rows, cfg.digits);
        }
    });
}

int cmd_constants(const Globals &g)
{
    const auto cfg = base_config(g);
    const auto sd = rademacher::saddle::compute_saddle(cfg.precision_bits);
    const int d = cfg.digits;
    const std::vector<std::pair<std::string, std::string>> fields = {
        {"z0", sd.z0.to_string(d)},        {"a", sd.a.to_string(d)},
        {"rho", sd.rho.to_string(d)},      {"b", sd.b.to_string(d)},
        {"theta", sd.theta.to_string(d)},  {"p", sd.p.to_string(d)},
        {"alpha", sd.alpha.to_string(d)},  {"b^p", sd.peak_factor().to_string(d)},
    };
    if (cfg.output_format == rr::OutputFormat::svg) {
        throw UsageError("constants: svg output is not available");
    }
    emit(g, "constants", cfg.output_format, [&](std::ostream &out) {
        if (!g.format_given) {
            for (const auto &[k, v] : fields) {
                out << k << " ≈ " << v << '\n';
            }
        } else if (cfg.output_format == rr::OutputFormat::json) {
            nlohmann::ordered_json j;
            for (const auto &[k, v] : fields) {
                j[k] = v;
            }
            out << j.dump(2) << '\n';
        } else {
            out << "name,value\n";
            for (const auto &[k, v] : fields) {
                out << k << ',' << v << '\n';
            }
        }
    });
    return kExitOk;
}

int cmd_exact(const Globals &g, unsigned long n, unsigned long l, bool float_exact)
{
    const auto cfg = base_config(g);
    if (n == 0) {
        throw UsageError("--N must be positive");
    }
    if (l > n) {
        throw UsageError("--l must not exceed --N");
    }
    if (cfg.output_format == rr::OutputFormat::svg) {
        throw UsageError("exact: svg output is not available");
    }
    std::vector<std::pair<std::string, std::string>> rows; // rational, decimal
    const unsigned long first = l == 0 ? 1 : l;
    const unsigned long last = l == 0 ? n : l;
    if (float_exact) {
        const auto values = rademacher::exact::float_coefficients(n, cfg.precision_bits);
        for (unsigned long k = first; k <= last; ++k) {
            rows.emplace_back("", values[k - 1].to_string(cfg.digits));
        }
    } else {
        const auto c = rademacher::exact::exact_coefficients(n);
        for (unsigned long k = first; k <= last; ++k) {
            rows.emplace_back(rademacher::exact::to_rational_string(c.at(k)),
                              rademacher::exact::to_decimal_string(c.at(k), cfg.digits));
        }
    }
    emit(g, "exact", cfg.output_format, [&](std::ostream &out) {
        if (cfg.output_format == rr::OutputFormat::json) {
            nlohmann::ordered_json arr = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < rows.size(); ++i) {
                nlohmann::ordered_json o;
                o["N"] = n;
                o["l"] = first + i;
                o["exact_rational"] = rows[i].first.empty() ? nlohmann::ordered_json(nullptr)
                                                            : nlohmann::ordered_json(rows[i].first);
                o["exact_decimal"] = rows[i].second;
                arr.push_back(std::move(o));
            }
            out << arr.dump(2) << '\n';
        } else {
            out << "N,l,exact_rational,exact_decimal\n";
            for (std::size_t i = 0; i < rows.size(); ++i) {
                out << n << ',' << first + i << ',' << rows[i].first << ',' << rows[i].second << '\n';
            }
        }
    });
    return kExitOk;
}

struct RangeOpts {
    unsigned long from = 100;
    unsigned long to = 150;
    unsigned long l = 1;
    bool float_exact = false;
    std::size_t nodes = 128;
    std::string modes = "exact,asymptotic";
};

rr::Modes parse_modes(const std::string &text)
{
    rr::Modes m{false, false, false};
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "exact") {
            m.exact = true;
        } else if (item == "asymptotic") {
            m.asymptotic = true;
        } else if (item == "integral") {
            m.integral = true;
        } else {
            throw UsageError("unknown mode '" + item + "'");
        }
    }
    if (!m.any()) {
        throw UsageError("--modes must name at least one of exact, asymptotic, integral");
    }
    return m;
}

int cmd_rows(const Globals &g, const std::string &stem, const RangeOpts &o, rr::Modes modes)
{
    auto cfg = base_config(g);
    cfg.n_from = o.from;
    cfg.n_to = o.to;
    cfg.l = o.l;
    cfg.modes = modes;
    cfg.float_exact = o.float_exact;
    cfg.integral_nodes = o.nodes;
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    emit_rows(g, stem, cfg, rr::compare(cfg));
    return kExitOk;
}

int cmd_figures(const Globals &g)
{
    const auto cfg = base_config(g);
    const auto files = rr::figures(cfg, g.out_dir.empty() ? fs::path("figures") : fs::path(g.out_dir));
    for (const auto &p : files.written) {
        std::cout << p.string() << '\n';
    }
    return kExitOk;
}

int cmd_disproof(const Globals &g, const RangeOpts &o)
{
    auto cfg = base_config(g);
    cfg.n_from = o.from;
    cfg.n_to = o.to;
    cfg.l = o.l;
    cfg.float_exact = o.float_exact;
    try {
        cfg.validate();
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    const auto sd = rademacher::saddle::compute_saddle(cfg.precision_bits);
    const auto rep = rr::disproof(cfg, sd);
    emit(g, "disproof", cfg.output_format == rr::OutputFormat::json ? rr::OutputFormat::json : rr::OutputFormat::csv,
         [&](std::ostream &out) {
             if (cfg.output_format != rr::OutputFormat::json) {
                 rr::write_disproof(out, rep);
                 return;
             }
             nlohmann::ordered_json j;
             j["n_from"] = rep.n_from;
             j["n_to"] = rep.n_to;
             j["l"] = rep.l;
             j["peaks"] = nlohmann::ordered_json::array();
             for (const auto &pk : rep.peaks) {
                 j["peaks"].push_back({{"N", pk.N}, {"C", pk.value}});
             }
             j["spacings"] = rep.spacings;
             j["ratios"] = rep.ratios;
             j["normalized_ratios"] = rep.normalized_ratios;
             j["ratio_geometric_mean"] = rep.ratio_geometric_mean;
             j["normalized_ratio_geometric_mean"] = rep.normalized_ratio_geometric_mean;
             j["observed_growth"] = rep.observed_growth;
             j["predicted_growth"] = rep.predicted_growth;
             j["verdict"] = rep.verdict;
             out << j.dump(2) << '\n';
         });
    return kExitOk;
}

int cmd_check(const Globals &g)
{
    const auto cfg = base_config(g);
    const auto results = rr::run_checks(cfg.precision_bits);
    bool ok = true;
    for (const auto &r : results) {
        ok = ok && r.passed;
    }
    emit(g, "check", rr::OutputFormat::csv, [&](std::ostream &out) { rr::write_check_table(out, results); });
    return ok ? kExitOk : kExitCheckFailed;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Principal-part coefficients of prod (1 - x^j)^-1 at x = 1: exact, asymptotic and integral"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--prec-bits", g.prec_bits, "working precision in bits")->capture_default_str();
    auto *fmt = app.add_option("--format", g.format, "output format")
                    ->check(CLI::IsMember({"csv", "json", "svg"}))
                    ->capture_default_str();
    app.add_option("--out", g.out_dir, "output directory (default: stdout; figures: ./figures)");
    app.add_option("--digits", g.digits, "significant digits of decimal output")
        ->check(CLI::Range(1, 1000))
        ->capture_default_str();

    auto *constants = app.add_subcommand("constants", "saddle point and the constants of the main term");

    unsigned long exact_n = 0, exact_l = 0;
    bool exact_float = false;
    auto *exact = app.add_subcommand("exact", "exact coefficients for one N (all l unless --l)");
    exact->add_option("--N", exact_n, "N")->required();
    exact->add_option("--l", exact_l, "single l in 1..N");
    exact->add_flag("--float-exact", exact_float, "high-precision float pipeline instead of rationals");

    RangeOpts ro;
    auto add_range = [&](CLI::App *sub, unsigned long from, unsigned long to) {
        ro.from = from;
        ro.to = to;
        sub->add_option("--from", ro.from, "first N")->capture_default_str();
        sub->add_option("--to", ro.to, "last N")->capture_default_str();
        sub->add_option("--l", ro.l, "order of the pole term")->capture_default_str();
    };
    auto *asym = app.add_subcommand("asymptotic", "main term b^N N^{-l-1} H_l(N) over a range of N");
    add_range(asym, 100, 150);
    auto *integral = app.add_subcommand("integral", "left half-circle integral approximation over a range of N");
    add_range(integral, 1, 70);
    integral->add_option("--nodes", ro.nodes, "Gauss-Legendre nodes per quarter arc")->capture_default_str();
    auto *compare = app.add_subcommand("compare", "exact vs asymptotic (and integral) rows");
    add_range(compare, 100, 150);
    compare->add_option("--modes", ro.modes, "comma list of exact, asymptotic, integral")->capture_default_str();
    compare->add_option("--nodes", ro.nodes, "Gauss-Legendre nodes per quarter arc")->capture_default_str();
    compare->add_flag("--float-exact", ro.float_exact, "high-precision float pipeline instead of rationals");
    auto *figures = app.add_subcommand("figures", "fig1.csv, fig2.csv, fig3.csv (+ svg/json twins)");
    auto *disproof = app.add_subcommand("disproof", "peak analysis of the exact coefficients");
    add_range(disproof, 80, 150);
    disproof->add_flag("--float-exact", ro.float_exact, "high-precision float pipeline instead of rationals");
    auto *check = app.add_subcommand("check", "numeric witness suite; exit 1 on any violation");

    // add_range sets per-command defaults; restore the ones of the command actually used.
    const std::map<CLI::App *, std::pair<unsigned long, unsigned long>> defaults = {
        {asym, {100, 150}}, {integral, {1, 70}}, {compare, {100, 150}}, {disproof, {80, 150}}};
    ro.from = 0;
    ro.to = 0;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    g.format_given = fmt->count() > 0;

    try {
        for (const auto &[sub, range] : defaults) {
            if (sub->parsed()) {
                if (sub->get_option("--from")->count() == 0) {
                    ro.from = range.first;
                }
                if (sub->get_option("--to")->count() == 0) {
                    ro.to = range.second;
                }
            }
        }
        if (constants->parsed()) {
            return cmd_constants(g);
        }
        if (exact->parsed()) {
            return cmd_exact(g, exact_n, exact_l, exact_float);
        }
        if (asym->parsed()) {
            return cmd_rows(g, "asymptotic", ro, {false, true, false});
        }
        if (integral->parsed()) {
            return cmd_rows(g, "integral", ro, {false, false, true});
        }
        if (compare->parsed()) {
            return cmd_rows(g, "compare", ro, parse_modes(ro.modes));
        }
        if (figures->parsed()) {
            return cmd_figures(g);
        }
        if (disproof->parsed()) {
            return cmd_disproof(g, ro);
        }
        if (check->parsed()) {
            return cmd_check(g);
        }
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const rademacher::RangeError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}
