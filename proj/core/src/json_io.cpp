#include <json.hpp>

#include "noether/frontend.hpp"

namespace noether {

namespace {

using nlohmann::json;

constexpr int kSchema = 1;

json complex_json(const ApproxComplex& c) { return json::array({c.real(), c.imag()}); }

ApproxComplex read_complex(const json& v) {
  if (v.is_number()) return {v.get<double>(), 0.0};
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail(ErrorKind::ParseError, "expected a number or a [re, im] pair, got " + v.dump());
}

json names_json(const std::vector<std::size_t>& vars, const VariableRing& ring) {
  json a = json::array();
  for (auto v : vars) a.push_back(ring.name(v));
  return a;
}

json polys_json(const std::vector<QPoly>& ps, const VariableRing& ring) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(render_polynomial(p, ring));
  return a;
}

json header(const VariableRing& ring) {
  json j;
  j["schema"] = kSchema;
  j["variables"] = ring.names();
  return j;
}

std::string d_name(const Monomial& d, const std::vector<std::size_t>& block, const VariableRing& ring) {
  SpecializedOperator s{block, {{d, {1.0, 0.0}}}};
  return render_operator(s, ring);
}

json numeric_body(const NumericOperatorSet& n, const VariableRing& ring) {
  json j = header(ring);
  j["numeric"] = true;
  j["ideal"] = polys_json(n.ideal, ring);
  j["independent_vars"] = names_json(n.split.independent(), ring);
  j["multiplicity"] = n.multiplicity();
  j["multiplicities"] = n.multiplicities;
  j["ansatz_degree"] = n.ansatz_degree;
  j["operators"] = json::array();
  j["coefficients"] = json::array();
  for (const auto& op : n.operators) {
    j["operators"].push_back(render_numeric_operator(op, ring));
    json cs = json::array();
    for (const auto& t : op.terms) {
      json c;
      c["d"] = d_name(t.d, op.block, ring);
      if (t.coeff.exact) {
        const RationalFunction f = t.coeff.as_rational_function();
        c["numerator"] = render_polynomial(f.numerator(), ring);
        c["denominator"] = render_polynomial(f.denominator(), ring);
      } else {
        // Float coefficients: list them as numbers.
        auto terms = [&](const QPoly& p) {
          json a = json::array();
          for (const auto& term : p.terms()) {
            QPoly m = QPoly::term(term.mono, Rational(1));
            a.push_back(json::array({term.coeff.to_double(), render_polynomial(m, ring)}));
          }
          return a;
        };
        c["numerator"] = terms(t.coeff.numerator);
        c["denominator"] = terms(t.coeff.denominator);
      }
      c["exact"] = t.coeff.exact;
      c["residual"] = t.coeff.residual;
      c["flagged"] = t.coeff.flagged;
      cs.push_back(std::move(c));
    }
    j["coefficients"].push_back(std::move(cs));
  }
  return j;
}

}  // namespace

WitnessFile parse_witness_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    fail(ErrorKind::ParseError, "witness file needs a \"points\" array");
  WitnessFile w;
  if (j.contains("variables")) {
    if (!j["variables"].is_array()) fail(ErrorKind::ParseError, "\"variables\" must be an array");
    for (const auto& v : j["variables"]) {
      if (!v.is_string()) fail(ErrorKind::ParseError, "variable names must be strings");
      w.variables.push_back(v.get<std::string>());
    }
  }
  for (const auto& p : j["points"]) {
    if (!p.is_object() || !p.contains("coords") || !p["coords"].is_array())
      fail(ErrorKind::ParseError, "every point needs a \"coords\" array");
    WitnessPoint wp;
    for (const auto& c : p["coords"]) wp.coords.push_back(check_finite(read_complex(c), "coordinate"));
    if (p.contains("component")) {
      const auto& c = p["component"];
      wp.component = c.is_string() ? c.get<std::string>() : c.dump();
    }
    if (p.contains("value")) wp.value = read_complex(p["value"]);
    w.points.push_back(std::move(wp));
  }
  return w;
}

std::string witness_json(const WitnessFile& w) {
  json j;
  j["schema"] = kSchema;
  j["variables"] = w.variables;
  j["points"] = json::array();
  for (const auto& p : w.points) {
    json e;
    e["coords"] = json::array();
    for (const auto& c : p.coords) e["coords"].push_back(complex_json(c));
    e["component"] = p.component;
    if (p.value) e["value"] = complex_json(*p.value);
    j["points"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string symbolic_json(const NoetherianOperatorSet& n, const VariableRing& ring) {
  json j = header(ring);
  j["numeric"] = false;
  j["ideal"] = polys_json(n.ideal, ring);
  j["prime"] = polys_json(n.prime, ring);
  j["independent_vars"] = names_json(n.split.independent(), ring);
  j["multiplicity"] = n.multiplicity();
  j["degree"] = n.degree;
  j["kernel_dimensions"] = n.kernel_dimensions;
  j["operators"] = json::array();
  for (const auto& op : n.operators) j["operators"].push_back(render_operator(op, ring));
  j["lifted"] = json::array();
  for (const auto& op : n.lifted) j["lifted"].push_back(render_operator(op, ring));
  return j.dump(2);
}

std::string numeric_json(const NumericOperatorSet& n, const VariableRing& ring) {
  return numeric_body(n, ring).dump(2);
}

std::string at_point_json(const std::vector<WitnessPoint>& points, const std::vector<PointOperators>& ops,
                          const Split& split, const VariableRing& ring) {
  json j = header(ring);
  j["numeric"] = true;
  j["independent_vars"] = names_json(split.independent(), ring);
  j["points"] = json::array();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    json e;
    e["coords"] = json::array();
    for (const auto& c : points[i].coords) e["coords"].push_back(complex_json(c));
    e["component"] = points[i].component;
    e["multiplicity"] = ops[i].multiplicity();
    e["degree"] = ops[i].degree;
    e["kernel_dimensions"] = ops[i].kernel_dimensions;
    e["operators"] = json::array();
    e["terms"] = json::array();
    for (const auto& op : ops[i].operators()) {
      e["operators"].push_back(render_operator(op, ring));
      json ts = json::array();
      for (const auto& t : op.terms) ts.push_back({{"d", d_name(t.d, op.block, ring)}, {"coeff", complex_json(t.coeff)}});
      e["terms"].push_back(std::move(ts));
    }
    j["points"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string decomposition_json(const std::vector<ComponentDescription>& comps, const VariableRing& ring) {
  json j = header(ring);
  j["components"] = json::array();
  for (const auto& c : comps) {
    json e;
    e["id"] = c.id;
    e["points"] = c.points.size();
    if (!c.error.empty()) e["error"] = c.error;
    if (c.numeric) e["operators"] = numeric_body(*c.numeric, ring);
    j["components"].push_back(std::move(e));
  }
  return j.dump(2);
}

std::string membership_json(const QPoly& f, const MembershipResult& r,
                            const std::vector<ComponentDescription>& comps, const VariableRing& ring) {
  json j = header(ring);
  j["polynomial"] = render_polynomial(f, ring);
  j["member"] = r.member;
  j["assumption"] = "the ideal has no embedded components";
  j["components"] = json::array();
  for (std::size_t i = 0; i < comps.size(); ++i)
    j["components"].push_back({{"id", comps[i].id}, {"member", static_cast<bool>(r.per_component[i])},
                               {"worst_residual", r.worst[i]}});
  return j.dump(2);
}

std::string polynomial_list_json(const std::string& key, const std::vector<QPoly>& polys, const VariableRing& ring) {
  json j = header(ring);
  j[key] = polys_json(polys, ring);
  return j.dump(2);
}

std::string operator_list_json(const std::vector<QPoly>& ideal, const std::vector<WeylOperator<QPoly>>& ops,
                               const VariableRing& ring) {
  json j = header(ring);
  j["ideal"] = polys_json(ideal, ring);
  j["operators"] = json::array();
  for (const auto& op : ops) j["operators"].push_back(render_operator(op, ring));
  return j.dump(2);
}

std::string error_json(const Error& e) {
  json j;
  j["schema"] = kSchema;
  j["error"] = {{"kind", std::string(kind_name(e.kind()))}, {"message", e.what()}};
  return j.dump(2);
}

}  // namespace noether
