#include "noether/approx.hpp"

#include <charconv>

namespace noether {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_complex(const ApproxComplex& a) {
  if (a.imag() == 0.0) return format_double(a.real());
  std::string s = format_double(a.real());
  if (a.imag() >= 0 || std::isnan(a.imag())) s += '+';
  return s + format_double(a.imag()) + "i";
}

}  // namespace noether
