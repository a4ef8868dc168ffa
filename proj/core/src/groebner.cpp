#include "noether/groebner.hpp"

namespace noether {

MonomialOrder MonomialOrder::from_name(std::string_view name) {
  if (name == "grevlex") return grevlex();
  if (name == "grlex") return grlex();
  if (name == "lex") return lex();
  fail(ErrorKind::InvalidInput, "unknown monomial order '" + std::string(name) + "'");
}

DimensionInfo dimension_and_independent_set(const std::vector<Monomial>& leading, std::size_t nvars) {
  for (const auto& m : leading)
    if (m.is_one()) fail(ErrorKind::EmptyVariety, "the ideal is the unit ideal");
  // Subsets of size k in lexicographic order of their index lists.
  for (std::size_t k = nvars + 1; k-- > 0;) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<bool> allowed(nvars, false);
      for (auto v : idx) allowed[v] = true;
      bool ok = true;
      for (const auto& m : leading)
        if (m.involves_only(allowed)) { ok = false; break; }
      if (ok) return {k, idx};
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == nvars - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {0, {}};
}

}  // namespace noether
