#ifndef RADEMACHER_REPORT_CHECKS_HPP
#define RADEMACHER_REPORT_CHECKS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include <rademacher/hp/real.hpp>

namespace rademacher::report
{

struct CheckResult {
    std::string name;
    std::string measured;
    std::string threshold;
    bool passed = false;
};

/// Numeric witnesses: saddle residual and uniqueness, monotone rate along the
/// ray to z0, the lower-bound inequality on its grid, the constant c by two
/// routes, the polylog and dilog identities, oracle vs exact coefficients and
/// the top-coefficient identity.
std::vector<CheckResult> run_checks(hp::Precision prec);

void write_check_table(std::ostream &out, const std::vector<CheckResult> &results);

} // namespace rademacher::report

#endif
