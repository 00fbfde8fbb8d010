#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "galcurve/interval.hpp"

namespace galcurve {

/// n >= 2 points from lo to hi inclusive; the last point is exactly hi.
std::vector<double> uniform_grid(const Interval& domain, std::size_t n);

/// "s0:s1:n" with s0 < s1 and n >= 2.
struct GridRange {
  Interval domain;
  std::size_t n = 0;
};

/// Throws ParameterError on malformed text and EmptyDomainError when
/// s0 == s1.
GridRange parse_range(std::string_view text);

}  // namespace galcurve
