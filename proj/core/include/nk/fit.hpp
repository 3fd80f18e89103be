#ifndef NK_FIT_HPP
#define NK_FIT_HPP

#include <span>

namespace nk {

/// Least-squares slope of ln y against ln x. Needs at least two points with
/// distinct positive x and positive y (DomainError otherwise).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace nk

#endif  // NK_FIT_HPP
