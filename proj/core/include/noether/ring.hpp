#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noether/groebner.hpp"
#include "noether/rational_function.hpp"

namespace noether {

// Ordered variable names of R = K[x_0, ..., x_{n-1}].
class VariableRing {
 public:
  VariableRing() = default;
  explicit VariableRing(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::optional<std::size_t> index_of(std::string_view name) const;
  // index_of or UnknownVariable.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const VariableRing&, const VariableRing&) = default;

 private:
  std::vector<std::string> names_;
};

// Partition of the ring variables into independent (t) and dependent (x)
// blocks, both ascending. position_[v] is v's index inside its own block.
class Split {
 public:
  Split() = default;
  Split(std::size_t nvars, std::vector<std::size_t> independent);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<std::size_t>& independent() const noexcept { return indep_; }
  const std::vector<std::size_t>& dependent() const noexcept { return dep_; }
  bool is_independent(std::size_t v) const { return is_indep_.at(v); }
  std::size_t position(std::size_t v) const { return position_.at(v); }

  // p in K[t, x] as an element of K(t)[x]: coefficients over |t| variables.
  Polynomial<RationalFunction> to_fraction(const QPoly& p) const;
  // Coefficient over t (|t| variables) re-read over all n variables.
  RationalFunction t_to_full(const RationalFunction& c) const;
  // Polynomial in the dependent block re-read over all n variables.
  QPoly x_to_full(const QPoly& p) const;
  Monomial x_to_full(const Monomial& m) const;
  // Values of the t-block / x-block extracted from a full point.
  template <class V>
  std::vector<V> t_part(const std::vector<V>& point) const {
    std::vector<V> r;
    for (auto v : indep_) r.push_back(point.at(v));
    return r;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<std::size_t> indep_, dep_, position_;
  std::vector<bool> is_indep_;
};

// Re-reads `generators` in K(t)[x] and returns the reduced grevlex basis.
// A positive-dimensional result raises IndependentSetInvalid.
GroebnerBasis<RationalFunction> extend_to_fraction_field(const std::vector<QPoly>& generators,
                                                        const Split& split);

}  // namespace noether
