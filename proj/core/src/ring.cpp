#include "noether/ring.hpp"

#include <set>

namespace noether {

VariableRing::VariableRing(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVariables) fail(ErrorKind::InvalidInput, "too many variables (limit 16)");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) fail(ErrorKind::InvalidInput, "empty variable name");
    if (!seen.insert(n).second) fail(ErrorKind::InvalidInput, "duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VariableRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t VariableRing::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  fail(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

Split::Split(std::size_t nvars, std::vector<std::size_t> independent)
    : nvars_(nvars), position_(nvars), is_indep_(nvars, false) {
  for (auto v : independent) {
    if (v >= nvars) fail(ErrorKind::InvalidInput, "independent variable index out of range");
    if (is_indep_[v]) fail(ErrorKind::InvalidInput, "independent variable listed twice");
    is_indep_[v] = true;
  }
  for (std::size_t v = 0; v < nvars; ++v) {
    auto& block = is_indep_[v] ? indep_ : dep_;
    position_[v] = block.size();
    block.push_back(v);
  }
}

Polynomial<RationalFunction> Split::to_fraction(const QPoly& p) const {
  if (p.nvars() != nvars_) fail(ErrorKind::ContextMismatch, "polynomial ring does not match split");
  const std::size_t nt = indep_.size(), nx = dep_.size();
  std::vector<std::pair<Monomial, std::vector<QPoly::Term>>> groups;
  for (const auto& t : p.terms()) {
    Monomial mx(nx), mt(nt);
    for (std::size_t v = 0; v < nvars_; ++v) (is_indep_[v] ? mt : mx).set(position_[v], t.mono[v]);
    auto it = std::find_if(groups.begin(), groups.end(), [&](const auto& g) { return g.first == mx; });
    if (it == groups.end()) {
      groups.push_back({mx, {}});
      it = groups.end() - 1;
    }
    it->second.push_back({mt, t.coeff});
  }
  std::vector<Polynomial<RationalFunction>::Term> out;
  out.reserve(groups.size());
  for (auto& [mx, ts] : groups) out.push_back({mx, RationalFunction(QPoly::from_terms(nt, std::move(ts)))});
  return Polynomial<RationalFunction>::from_terms(nx, std::move(out));
}

RationalFunction Split::t_to_full(const RationalFunction& c) const { return c.embed(nvars_, indep_); }

QPoly Split::x_to_full(const QPoly& p) const { return embed(p, nvars_, dep_); }

Monomial Split::x_to_full(const Monomial& m) const {
  Monomial r(nvars_);
  for (std::size_t j = 0; j < dep_.size(); ++j) r.set(dep_[j], m[j]);
  return r;
}

GroebnerBasis<RationalFunction> extend_to_fraction_field(const std::vector<QPoly>& generators,
                                                        const Split& split) {
  std::vector<Polynomial<RationalFunction>> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(split.to_fraction(g));
  auto gb = buchberger(std::move(gens), MonomialOrder::grevlex(), split.dependent().size());
  if (gb.is_unit())
    fail(ErrorKind::IndependentSetInvalid, "the ideal becomes the unit ideal over the fraction field");
  if (!gb.is_zero_dimensional())
    fail(ErrorKind::IndependentSetInvalid, "the ideal is not zero-dimensional over the fraction field");
  return gb;
}

}  // namespace noether
