#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include <rademacher/exact/coefficients.hpp>
#include <rademacher/report/report.hpp>

namespace rademacher::report
{

std::string format_double(double value, int digits)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, value);
    return buf;
}

namespace
{

std::string cell(const std::optional<double> &v, int digits)
{
    return v ? format_double(*v, digits) : std::string();
}

std::vector<std::string> split(const std::string &line)
{
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) {
        fields.push_back(field);
    }
    if (!line.empty() && line.back() == ',') {
        fields.emplace_back();
    }
    return fields;
}

unsigned long parse_index(const std::string &text, const char *what)
{
    std::size_t used = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument(std::string("csv: bad ") + what + " '" + text + "'");
    }
    return v;
}

std::optional<double> parse_number(const std::string &text)
{
    if (text.empty()) {
        return std::nullopt;
    }
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size()) {
        throw std::invalid_argument("csv: bad number '" + text + "'");
    }
    return v;
}

} // namespace

void write_csv(std::ostream &out, std::span<const ComparisonRow> rows, int digits)
{
    out << kCsvHeader << '\n';
    for (const auto &r : rows) {
        out << r.N << ',' << r.l << ',' << (r.exact ? exact::to_rational_string(*r.exact) : "") << ','
            << r.exact_decimal << ',' << cell(r.asymptotic, digits) << ',' << cell(r.integral, digits) << ','
            << cell(r.abs_err_asym, digits) << ',' << cell(r.rel_err_asym, digits) << '\n';
    }
}

std::vector<ComparisonRow> read_csv(std::istream &in)
{
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::invalid_argument("csv: missing or unexpected header");
    }
    std::vector<ComparisonRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto f = split(line);
        if (f.size() != 8) {
            throw std::invalid_argument("csv: expected 8 fields, got " + std::to_string(f.size()));
        }
        ComparisonRow r;
        r.N = parse_index(f[0], "N");
        r.l = parse_index(f[1], "l");
        if (!f[2].empty()) {
            r.exact = exact::parse_rational(f[2]);
        }
        r.exact_decimal = f[3];
        r.asymptotic = parse_number(f[4]);
        r.integral = parse_number(f[5]);
        r.abs_err_asym = parse_number(f[6]);
        r.rel_err_asym = parse_number(f[7]);
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_json(std::ostream &out, std::span<const ComparisonRow> rows, int digits)
{
    // Numbers go out as strings so the digit count is preserved exactly.
    auto put = [&](nlohmann::ordered_json &o, const char *key, const std::optional<double> &v) {
        o[key] = v ? nlohmann::ordered_json(format_double(*v, digits)) : nlohmann::ordered_json(nullptr);
    };
    nlohmann::ordered_json doc = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json o;
        o["N"] = r.N;
        o["l"] = r.l;
        o["exact_rational"] = r.exact ? nlohmann::ordered_json(exact::to_rational_string(*r.exact))
                                      : nlohmann::ordered_json(nullptr);
        o["exact_decimal"] = r.exact_decimal.empty() ? nlohmann::ordered_json(nullptr)
                                                     : nlohmann::ordered_json(r.exact_decimal);
        put(o, "asymptotic", r.asymptotic);
        put(o, "integral", r.integral);
        put(o, "abs_err_asym", r.abs_err_asym);
        put(o, "rel_err_asym", r.rel_err_asym);
        if (!r.error.empty()) {
            o["error"] = r.error;
        }
        doc.push_back(std::move(o));
    }
    out << doc.dump(2) << '\n';
}

} // namespace rademacher::report
