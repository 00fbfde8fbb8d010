#include "galcurve/grid.hpp"

#include <charconv>
#include <cmath>

#include "galcurve/errors.hpp"

namespace galcurve {

std::vector<double> uniform_grid(const Interval& domain, std::size_t n) {
  if (n < 2) {
    throw ParameterError("a grid needs at least 2 points");
  }
  std::vector<double> s(n);
  const double width = domain.hi - domain.lo;
  const double last = static_cast<double>(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    s[i] = domain.lo + width * (static_cast<double>(i) / last);
  }
  s[n - 1] = domain.hi;
  return s;
}

namespace {

double parse_real(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ParameterError("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

GridRange parse_range(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos || text.find(':', c2 + 1) != std::string_view::npos) {
    throw ParameterError("range must look like s0:s1:n, got '" + std::string(text) + "'");
  }
  GridRange r;
  r.domain.lo = parse_real(text.substr(0, c1), "range start");
  r.domain.hi = parse_real(text.substr(c1 + 1, c2 - c1 - 1), "range end");
  const std::string_view count = text.substr(c2 + 1);
  std::size_t n = 0;
  auto [ptr, ec] = std::from_chars(count.data(), count.data() + count.size(), n);
  if (count.empty() || ec != std::errc() || ptr != count.data() + count.size()) {
    throw ParameterError("invalid sample count '" + std::string(count) + "'");
  }
  if (n < 2) {
    throw ParameterError("a range needs at least 2 samples");
  }
  if (r.domain.lo == r.domain.hi) {
    throw EmptyDomainError();
  }
  if (!(r.domain.lo < r.domain.hi)) {
    throw ParameterError("range start must be below range end");
  }
  r.n = n;
  return r;
}

}  // namespace galcurve
