#ifndef RADEMACHER_ERRORS_HPP
#define RADEMACHER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rademacher
{

// Input outside the region where an operation is defined (poles, branch cuts,
// unsupported arguments).
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Index or parameter outside its admissible range (l > N, N = 0, ...).
class RangeError : public std::out_of_range
{
public:
    using std::out_of_range::out_of_range;
};

// Iterative method failed to reach its tolerance.
class ConvergenceError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

} // namespace rademacher

#endif
