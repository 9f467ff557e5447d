#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <random>

#include <rademacher/contour/contour.hpp>
#include <rademacher/exact/coefficients.hpp>
#include <rademacher/report/checks.hpp>
#include <rademacher/report/report.hpp>
#include <rademacher/saddle/saddle.hpp>
#include <rademacher/specfun/specfun.hpp>

namespace rademacher::report
{

using hp::Complex;
using hp::Precision;
using hp::Real;

namespace
{

std::string sci(double v)
{
    return format_double(v, 3);
}

void saddle_checks(const saddle::SaddleData &sd, Precision prec, std::vector<CheckResult> &out)
{
    const double residual = abs(specfun::phi(sd.z0)).to_double();
    const double bound = std::ldexp(1.0, -static_cast<int>(prec - 16));
    out.push_back({"saddle |phi(z0)|", sci(residual), "< " + sci(bound), residual < bound});

    const Complex count = saddle::argument_principle_count(sd.z0, Real(0.5, prec), 256);
    const double dev = abs(count - 1L).to_double();
    out.push_back({"zeros of phi within 1/2 of z0", count.to_string(6), "1 +- 1e-6", dev < 1e-6});
}

} // namespace

std::vector<CheckResult> run_checks(Precision prec)
{
    std::vector<CheckResult> out;
    const auto sd = saddle::compute_saddle(prec);
    saddle_checks(sd, prec, out);

    {
        const auto path = contour::segment(Complex(Real(prec), Real(5L, prec)), sd.z0, 200);
        const auto rep = contour::check_monotone_exponent(path);
        out.push_back({"Re rate non-decreasing on [5i, z0]",
                       std::to_string(rep.violations.size()) + " violations", "0 violations", rep.monotone});
    }
    {
        std::vector<contour::InequalityPoint> grid;
        for (int j = 1; j <= 20; ++j) {
            for (int k = 0; k <= 10; ++k) {
                grid.push_back({0.005 * j, -0.05 * k});
            }
        }
        const bool ok = contour::check_lower_bound_inequality(grid);
        out.push_back({"lower-bound inequality, j/N in (0, 0.1], Re z in [-0.5, 0]",
                       ok ? "holds on 220 points" : "violated", "holds", ok});
    }
    {
        const Real c = contour::constant_c(prec).value;
        const Real q = contour::constant_c_by_quadrature(10000, prec);
        const double rel = abs((q - c) / c).to_double();
        out.push_back({"constant c, closed form vs quadrature (N = 10^4)",
                       c.to_string(8) + " / rel " + sci(rel), "rel < 1e-3", rel < 1e-3});
    }
    {
        const double orders[] = {1.5, 2, 2.5, 3, 4};
        const std::complex<double> zs[] = {{-0.5, 0}, {-1, 0}, {-2, 0}, {-1, 2}, {-0.5, -3}};
        double worst = 0;
        for (double s : orders) {
            for (auto zd : zs) {
                const Complex z(zd, prec);
                const Complex sv(s, 0.0, prec);
                const Complex lhs = specfun::polylog_jonquiere(sv, z).value;
                const Complex rhs = specfun::polylog_series(Real(1.0 - s, prec), exp(z)).value;
                worst = std::max(worst, abs(lhs - rhs).to_double() / std::max(1.0, abs(rhs).to_double()));
            }
        }
        out.push_back({"Jonquiere vs direct series, 5x5 grid", sci(worst), "< 1e-25", worst < 1e-25});
    }
    {
        std::mt19937_64 rng(20240517);
        std::uniform_real_distribution<double> ux(0.0, 1.0), uy(-0.9, 0.9);
        const Real pi2_6 = hp::pi(prec) * hp::pi(prec) / 6L;
        double worst = 0;
        int done = 0;
        while (done < 100) {
            const Complex w(ux(rng), uy(rng), prec);
            if (abs(w) > 1L || abs(1L - w) > 1L || abs(w).to_double() < 1e-3 || abs(1L - w).to_double() < 1e-3) {
                continue;
            }
            const Complex one_minus = 1L - w;
            const Complex lhs = specfun::dilog(w).value + specfun::dilog(one_minus).value;
            const Complex rhs = Complex(pi2_6) - log(w) * log(one_minus);
            worst = std::max(worst, abs(lhs - rhs).to_double());
            ++done;
        }
        const double bound = std::ldexp(1.0, -static_cast<int>(prec - 16));
        out.push_back({"dilog reflection, 100 random points", sci(worst), "< " + sci(bound), worst < bound});
    }
    {
        const auto table = exact::exact_coefficient_table(20);
        double worst = 0;
        for (unsigned long n = 1; n <= 20; ++n) {
            const auto oracle = contour::cauchy_oracle_all(n, contour::default_oracle_spec(n));
            for (unsigned long l = 1; l <= n; ++l) {
                const Real ex(table[n - 1].at(l), oracle[l - 1].value.precision());
                worst = std::max(worst, abs(oracle[l - 1].value - Complex(ex)).to_double());
            }
        }
        out.push_back({"Cauchy oracle vs exact, N <= 20, all l", sci(worst), "< 1e-20", worst < 1e-20});
    }
    {
        const auto table = exact::exact_coefficient_table(30);
        bool ok = true;
        mpz_class fact = 1;
        for (unsigned long n = 1; n <= 30; ++n) {
            fact *= n;
            const exact::BigRational expected(n % 2 == 0 ? mpz_class(1) : mpz_class(-1), fact);
            ok = ok && table[n - 1].at(n) == expected;
        }
        out.push_back({"C(0,1,N)(N) = (-1)^N / N!, N <= 30", ok ? "all equal" : "mismatch", "exact", ok});
    }
    return out;
}

void write_check_table(std::ostream &out, const std::vector<CheckResult> &results)
{
    std::size_t w = 4;
    for (const auto &r : results) {
        w = std::max(w, r.name.size());
    }
    out << std::left << std::setw(static_cast<int>(w)) << "check" << "  status  measured  (threshold)\n";
    for (const auto &r : results) {
        out << std::left << std::setw(static_cast<int>(w)) << r.name << "  " << (r.passed ? "ok    " : "FAIL  ")
            << "  " << r.measured << "  (" << r.threshold << ")\n";
    }
}

} // namespace rademacher::report
