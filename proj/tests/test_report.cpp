#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <rademacher/errors.hpp>
#include <rademacher/report/report.hpp>

using namespace rademacher;
namespace rr = rademacher::report;

namespace
{

std::string csv_text(const std::vector<rr::ComparisonRow> &rows)
{
    std::ostringstream out;
    rr::write_csv(out, rows);
    return out.str();
}

std::vector<std::string> lines_of(const std::filesystem::path &p)
{
    std::ifstream in(p);
    std::vector<std::string> lines;
    for (std::string s; std::getline(in, s);) {
        lines.push_back(s);
    }
    return lines;
}

double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    return v[v.size() / 2];
}

} // namespace

TEST_CASE("single row N = 1")
{
    rr::RunConfig cfg;
    cfg.n_from = cfg.n_to = 1;
    const auto rows = rr::compare(cfg);
    REQUIRE(rows.size() == 1);
    CHECK(*rows[0].exact == -1);
    CHECK(rows[0].exact_decimal == "-1");
    CHECK(rows[0].rel_err_asym.has_value());
}

TEST_CASE("rows with l > N carry an error and no values")
{
    rr::RunConfig cfg;
    cfg.n_from = 1;
    cfg.n_to = 4;
    cfg.l = 3;
    const auto rows = rr::compare(cfg);
    CHECK(rows.size() == 4);
    CHECK_FALSE(rows[0].error.empty());
    CHECK_FALSE(rows[0].exact);
    CHECK(rows[2].error.empty());
    CHECK(rows[2].exact);
}

TEST_CASE("config validation")
{
    rr::RunConfig cfg;
    cfg.n_from = 10;
    cfg.n_to = 5;
    CHECK_THROWS_AS(rr::compare(cfg), std::invalid_argument);
    cfg.n_to = 20;
    cfg.precision_bits = 32;
    CHECK_THROWS_AS(rr::compare(cfg), std::invalid_argument);
    cfg.precision_bits = 128;
    cfg.modes = {false, false, false};
    CHECK_THROWS_AS(rr::compare(cfg), std::invalid_argument);
}

TEST_CASE("CSV round trip is byte-identical and output is deterministic")
{
    rr::RunConfig cfg;
    cfg.n_from = 1;
    cfg.n_to = 40;
    cfg.l = 2;
    cfg.modes = {true, true, true};
    cfg.integral_nodes = 64;
    const auto rows = rr::compare(cfg);
    const std::string text = csv_text(rows);
    std::istringstream in(text);
    const auto parsed = rr::read_csv(in);
    CHECK(csv_text(parsed) == text);
    CHECK(csv_text(rr::compare(cfg)) == text);
    CHECK(parsed[5].exact == rows[5].exact);

    std::istringstream bad("N,l\n1,2\n");
    CHECK_THROWS_AS(rr::read_csv(bad), std::invalid_argument);
}

TEST_CASE("rel_err_asym = abs_err_asym / |exact|")
{
    rr::RunConfig cfg;
    cfg.n_from = 30;
    cfg.n_to = 35;
    for (const auto &r : rr::compare(cfg)) {
        CHECK(*r.rel_err_asym == doctest::Approx(*r.abs_err_asym / std::abs(r.exact->get_d())));
    }
}

TEST_CASE("float exact pipeline matches rationals")
{
    rr::RunConfig cfg;
    cfg.n_from = 95;
    cfg.n_to = 100;
    cfg.modes = {true, false, false};
    const auto exact_rows = rr::compare(cfg);
    cfg.float_exact = true;
    cfg.precision_bits = 512;
    const auto float_rows = rr::compare(cfg);
    for (std::size_t i = 0; i < exact_rows.size(); ++i) {
        CHECK(std::stod(float_rows[i].exact_decimal) == doctest::Approx(exact_rows[i].exact->get_d()).epsilon(1e-15));
        CHECK_FALSE(float_rows[i].exact);
    }
}

TEST_CASE("JSON and SVG writers")
{
    rr::RunConfig cfg;
    cfg.n_from = 3;
    cfg.n_to = 5;
    const auto rows = rr::compare(cfg);
    std::ostringstream js;
    rr::write_json(js, rows);
    CHECK(js.str().find("\"exact_rational\": \"-20831/86400\"") != std::string::npos);

    const rr::Series s[] = {{"exact", {{1, 1}, {2, -1}}}, {"asymptotic <x>", {{1, 0.5}, {2, -0.5}}}};
    std::ostringstream svg;
    rr::write_svg(svg, "t", s);
    const std::string text = svg.str();
    CHECK(text.rfind("<svg", 0) == 0);
    std::size_t count = 0;
    for (std::size_t pos = 0; (pos = text.find("<polyline", pos)) != std::string::npos; ++pos) {
        ++count;
    }
    CHECK(count == 2);
    CHECK(text.find("asymptotic &lt;x&gt;") != std::string::npos);
}

TEST_CASE("peak detector")
{
    const std::vector<double> flat(80, 0.3);
    CHECK(rr::analyze_peaks(80, 1, flat, 1.07).verdict == rr::kVerdictNone);

    // b^N-growing oscillation with period 32.
    std::vector<double> grow;
    for (int n = 80; n <= 150; ++n) {
        grow.push_back(std::pow(1.07, n) / (n * n) * std::cos(2 * M_PI * n / 32.0));
    }
    const auto rep = rr::analyze_peaks(80, 1, grow, 1.07);
    CHECK(rep.verdict == rr::kVerdictDiverges);
    for (double s : rep.spacings) {
        CHECK(s == doctest::Approx(32));
    }

    // Damped oscillation: peaks exist but shrink.
    std::vector<double> damp;
    for (int n = 80; n <= 150; ++n) {
        damp.push_back(std::exp(-0.01 * n) * std::cos(2 * M_PI * n / 32.0));
    }
    CHECK(rr::analyze_peaks(80, 1, damp, 1.07).verdict == rr::kVerdictNone);

    // Ties go to the smaller N.
    const std::vector<double> tie = {0, 1, 1, 0};
    const auto t = rr::analyze_peaks(10, 1, tie, 1.07);
    REQUIRE(t.peaks.size() == 1);
    CHECK(t.peaks[0].N == 11);
}

TEST_CASE("disproof on exact data; stable under precision change")
{
    rr::RunConfig cfg;
    cfg.n_from = 1;
    cfg.n_to = 70;
    cfg.precision_bits = 128;
    const auto lo = rr::disproof(cfg, saddle::compute_saddle(128));
    cfg.precision_bits = 256;
    const auto hi = rr::disproof(cfg, saddle::compute_saddle(256));
    CHECK(lo.verdict == hi.verdict);
    CHECK(lo.peaks.size() == hi.peaks.size());

    cfg.n_from = 100;
    cfg.n_to = 150;
    CHECK_THROWS_AS(rr::disproof(cfg, saddle::compute_saddle(128)), RangeError);
}

TEST_CASE("figures")
{
    const auto dir = std::filesystem::temp_directory_path() / "rademacher_fig_test";
    std::filesystem::remove_all(dir);
    rr::RunConfig cfg;
    cfg.output_format = rr::OutputFormat::svg;
    const auto files = rr::figures(cfg, dir);
    CHECK(files.written.size() == 6);

    const auto f1 = lines_of(dir / "fig1.csv");
    CHECK(f1.size() == 52);
    CHECK(f1[0] == rr::kCsvHeader);
    const auto f3 = lines_of(dir / "fig3.csv");
    CHECK(f3.size() == 71);
    CHECK(f3[1].rfind("1,1,-1/1,-1,,", 0) == 0);

    std::ifstream in1(dir / "fig1.csv"), in2(dir / "fig2.csv");
    std::vector<double> r1, r2;
    for (const auto &r : rr::read_csv(in1)) {
        r1.push_back(*r.rel_err_asym);
    }
    for (const auto &r : rr::read_csv(in2)) {
        r2.push_back(*r.rel_err_asym);
    }
    CHECK(median(r2) > median(r1));
    CHECK(std::filesystem::exists(dir / "fig3.svg"));
    std::filesystem::remove_all(dir);
}
