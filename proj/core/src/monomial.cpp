#include "noether/monomial.hpp"

namespace noether {
namespace {

// Emits the exponent vectors of degree `remaining` on positions [pos, n) in
// descending lex order, which for fixed degree is descending grlex.
void fill_degree(Monomial& cur, std::size_t pos, unsigned remaining, std::vector<Monomial>& out) {
  const std::size_t n = cur.size();
  if (pos + 1 == n) {
    cur.set(pos, remaining);
    out.push_back(cur);
    cur.set(pos, 0);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur.set(pos, e);
    fill_degree(cur, pos + 1, remaining - e, out);
  }
  cur.set(pos, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(nvars);
  fill_degree(cur, 0, degree, out);
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto layer = monomials_of_degree(nvars, d);
    out.insert(out.end(), layer.begin(), layer.end());
    if (nvars == 0) break;
  }
  return out;
}

}  // namespace noether
