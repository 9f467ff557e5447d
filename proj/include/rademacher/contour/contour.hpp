#ifndef RADEMACHER_CONTOUR_CONTOUR_HPP
#define RADEMACHER_CONTOUR_CONTOUR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include <rademacher/contour/quadrature.hpp>
#include <rademacher/hp/complex.hpp>

namespace rademacher::contour
{

// ---------------------------------------------------------------------------
// Approximate integral representation of C_{0,1,l}(N)
// ---------------------------------------------------------------------------

struct IntegralApprox {
    hp::Real value;                  ///< at 2 * spec.nodes
    double node_doubling_delta = 0;  ///< |value(nodes) - value(2 nodes)|
    bool converged = false;          ///< delta <= tolerance * |value|
};

/// Node data of the left half circle |z| = r, Re z <= 0, that does not depend
/// on (l, N): log(-z), log(1 - e^z)/2 and (Li_2(e^z) - pi^2/6)/z. Building it
/// costs one dilogarithm per node; evaluating for any (l, N) afterwards is
/// cheap, which is what the N = 1..70 sweeps need.
class LeftArcIntegrator
{
public:
    /// `nodes` Gauss-Legendre points on each quarter arc [pi/2, pi] and [pi, 3pi/2].
    LeftArcIntegrator(std::size_t nodes, hp::Precision prec, double radius = 5.0);

    std::size_t nodes() const noexcept
    {
        return upper_.size();
    }
    hp::Precision precision() const noexcept
    {
        return prec_;
    }

    /// Integral of (-z)^{l-1/2} (1-e^z)^{-1/2} exp(z/N + N rate(z)) dz over the
    /// upper quarter arc (theta from pi/2 to pi).
    hp::Complex upper_arc(unsigned long l, unsigned long n) const;
    /// Same over the lower quarter arc (theta from pi to 3pi/2).
    hp::Complex lower_arc(unsigned long l, unsigned long n) const;

    /// Real approximation of C_{0,1,l}(N) from the upper arc, using
    /// conjugate symmetry: lower = -conj(upper).
    hp::Real approximate_C(unsigned long l, unsigned long n) const;
    /// The same prefactor applied to upper + lower arcs, without using the
    /// symmetry. Its imaginary part measures how far from real the result is.
    hp::Complex approximate_C_full(unsigned long l, unsigned long n) const;

private:
    struct Node {
        hp::Complex jacobian;      // weight * dz/dtheta
        hp::Complex z;
        hp::Complex log_minus_z;   // log(-z)
        hp::Complex half_log_one_minus; // log(1 - e^z) / 2
        hp::Complex rate;
    };

    hp::Complex integrate(const std::vector<Node> &arc, unsigned long l, unsigned long n) const;
    hp::Complex prefactor(unsigned long l, unsigned long n) const;

    hp::Precision prec_;
    std::vector<Node> upper_;
    std::vector<Node> lower_;
};

/// Approximation of C_{0,1,l}(N) by the half-circle integral on |z| = 5,
/// Re z <= 0, traversed counterclockwise (from 5i through -5 to -5i).
/// spec.rule must be gauss_legendre_composite; spec.radius is ignored (5).
IntegralApprox integral_approx_C(unsigned long l, unsigned long n, const QuadratureSpec &spec);

// ---------------------------------------------------------------------------
// Cauchy-formula oracle for the exact coefficients
// ---------------------------------------------------------------------------

struct OracleValue {
    hp::Complex value;               ///< at 2 * spec.nodes
    double node_doubling_delta = 0;  ///< |value(nodes) - value(2 nodes)|
};

/// Radius min(1, 3/N) (1/2 for N = 1), 4N + 64 nodes, max(256, 64 + ceil(1.5 N)) bits.
QuadratureSpec default_oracle_spec(unsigned long n);

/// C_{0,1,l}(N) = (1/2 pi i) closed integral of x^{l-1} prod_j (1 - (1+x)^j)^{-1} dx
/// on |x| = spec.radius by the trapezoid rule.
///
/// Preconditions (DomainError otherwise): spec.radius < 2 sin(pi/N) for N >= 2
/// (inside the nearest nonzero pole), spec.precision >= 64 + ceil(1.5 N),
/// spec.nodes > N (no aliasing of the pole at x = 0), 1 <= l <= N.
OracleValue cauchy_oracle(unsigned long l, unsigned long n, const QuadratureSpec &spec);

/// All l = 1..N from one set of node evaluations; entry l-1 holds l.
std::vector<OracleValue> cauchy_oracle_all(unsigned long n, const QuadratureSpec &spec);

// ---------------------------------------------------------------------------
// Numeric witnesses
// ---------------------------------------------------------------------------

struct MonotoneReport {
    bool monotone = true;
    /// Indices i where value(i + 1) < value(i).
    std::vector<std::size_t> violations;
    std::vector<hp::Real> values;
};

/// Samples Re((Li_2(e^z) - pi^2/6) / z) along `path` (Re z <= 0, z != 0) and
/// reports whether the sequence is non-decreasing.
MonotoneReport check_monotone_exponent(std::span<const hp::Complex> path);

/// `samples` equally spaced points from `from` to `to`, both included.
std::vector<hp::Complex> segment(const hp::Complex &from, const hp::Complex &to, std::size_t samples);

struct InequalityPoint {
    double j_over_n = 0; ///< in (0, 1/10]
    double re_z = 0;     ///< in [-1, 0]
};

/// Checks 1 + e^{2 j x / N} - 2 cos(5 j / N) e^{j x / N} >= rhs_scale * (11 j^2 / (12 N^2)) (x^2 + 25),
/// x = Re z, at every grid point. `rhs_scale` = 1 is the actual inequality;
/// other values exist to test the detector. Throws DomainError for points
/// outside the stated ranges.
bool check_lower_bound_inequality(std::span<const InequalityPoint> grid, double rhs_scale = 1.0);

struct ConstantC {
    hp::Real value;
    hp::Real imag_residue; ///< |Im| of the bracketed closed form / 40
};

/// c = (99i + 8 log(1 - e^{i/2}) - 80 log(1 - e^{5i}) - 4 log(1 - cos(1/2))
///      + 40 log(1 - cos 5) - 16i Li_2(e^{i/2}) + 16i Li_2(e^{5i})) / 40.
/// Throws DomainError if the imaginary residue exceeds 2^-(prec/2).
ConstantC constant_c(hp::Precision prec);

/// -(1/N) * integral of -log(1 - cos(5x/N)) over [floor(N/10), N+1], by
/// composite Gauss-Legendre. Tends to c as N grows (difference O(1/N)).
hp::Real constant_c_by_quadrature(unsigned long n, hp::Precision prec, std::size_t nodes = 512);

} // namespace rademacher::contour

#endif
