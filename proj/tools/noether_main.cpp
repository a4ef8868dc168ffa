#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "noether/driver.hpp"
#include "noether/dualspace.hpp"
#include "noether/frontend.hpp"
#include "noether/numericops.hpp"

namespace {

using namespace noether;

// Bad command lines and unreadable files; reported with exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string ideal, prime, points, out, order, indep, operators, matrix, poly, dump_matrix, component;
  std::optional<double> tol, point_tol, member_tol;
  std::optional<unsigned> dmax, interp_dmax;
  unsigned trials = 3;
  bool json = false;
};

std::string read_file(const std::string& path, const char* what) {
  if (path.empty()) throw UsageError(std::string("missing --") + what);
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + std::string(what) + " file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Problem {
  ProblemFile file;
  std::vector<QPoly> prime;
};

Problem load_problem(const Flags& f, bool need_prime) {
  Problem p;
  p.file = parse_problem(read_file(f.ideal, "ideal"));
  if (p.file.ideal.empty()) fail(ErrorKind::InvalidInput, "the ideal file lists no generators");
  if (!f.prime.empty()) {
    const ProblemFile pf = parse_problem(read_file(f.prime, "prime"), &p.file.ring);
    if (pf.has_ring && !(pf.ring == p.file.ring))
      fail(ErrorKind::ContextMismatch, "the prime file declares a different ring");
    p.prime = pf.prime.empty() ? pf.ideal : pf.prime;
  } else {
    p.prime = p.file.prime;
  }
  if (need_prime && p.prime.empty()) throw UsageError("no prime given (use --prime or a 'prime:' section)");
  return p;
}

template <class T>
T option_value(const std::optional<T>& flag, const ProblemFile& pf, const std::string& key, T fallback) {
  if (flag) return *flag;
  if (auto v = pf.option(key)) {
    try {
      if constexpr (std::is_same_v<T, double>) return std::stod(*v);
      else return static_cast<T>(std::stoul(*v));
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "option '" + key + "' has an invalid value '" + *v + "'");
    }
  }
  return fallback;
}

std::optional<std::vector<std::size_t>> independent_vars(const Flags& f, const ProblemFile& pf) {
  if (f.indep.empty()) return pf.independent;
  if (f.indep == "auto") return std::nullopt;
  if (f.indep == "none") return std::vector<std::size_t>{};
  return parse_variable_list(f.indep, pf.ring);
}

SymbolicOptions symbolic_options(const Flags& f, const ProblemFile& pf) {
  SymbolicOptions o;
  o.dmax = option_value(f.dmax, pf, "dmax", o.dmax);
  o.independent = independent_vars(f, pf);
  const std::string order = f.order.empty() ? pf.option("order").value_or("grevlex") : f.order;
  o.ring_order = MonomialOrder::from_name(order);
  return o;
}

NumericOptions numeric_options(const Flags& f, const ProblemFile& pf) {
  NumericOptions o;
  o.tol = option_value(f.tol, pf, "tol", o.tol);
  o.point_tol = option_value(f.point_tol, pf, "point_tol", o.point_tol);
  o.dmax = option_value(f.dmax, pf, "dmax", o.dmax);
  o.interpolation_dmax = option_value(f.interp_dmax, pf, "interpolation_dmax", o.interpolation_dmax);
  return o;
}

Split numeric_split(const Flags& f, const ProblemFile& pf) {
  return choose_split(pf.ideal, pf.ring.size(), symbolic_options(f, pf));
}

std::vector<WitnessPoint> load_points(const Flags& f, const VariableRing& ring) {
  const WitnessFile w = parse_witness_json(read_file(f.points, "points"));
  if (!w.variables.empty() && w.variables != ring.names())
    fail(ErrorKind::ContextMismatch, "the points file lists different variables than the ring");
  std::vector<WitnessPoint> pts;
  for (const auto& p : w.points) {
    if (p.coords.size() != ring.size())
      fail(ErrorKind::ContextMismatch, "a point has " + std::to_string(p.coords.size()) + " coordinates, the ring has " +
                                           std::to_string(ring.size()) + " variables");
    if (f.component.empty() || p.component == f.component) pts.push_back(p);
  }
  if (pts.empty()) fail(ErrorKind::NeedMorePoints, "no witness points selected");
  return pts;
}

std::string names_text(const std::vector<std::size_t>& vars, const VariableRing& ring) {
  if (vars.empty()) return "none";
  std::string s;
  for (auto v : vars) s += (s.empty() ? "" : ", ") + ring.name(v);
  return s;
}

std::string point_text(const std::vector<ApproxComplex>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + format_complex(p[i]);
  return s + ")";
}

class Output {
 public:
  explicit Output(const Flags& f) : flags_(f) {}
  void line(const std::string& s) { text_ += s + "\n"; }
  void finish(const std::string& json) {
    if (!flags_.out.empty()) {
      std::ofstream out(flags_.out);
      if (!out) throw UsageError("cannot write '" + flags_.out + "'");
      out << json << "\n";
    }
    std::cout << (flags_.json ? json + "\n" : text_);
  }

 private:
  const Flags& flags_;
  std::string text_;
};

// CSV cell for an element of the residue field: sum of Q(t) coefficients
// times standard monomials in the dependent variables.
std::string kappa_text(const Kappa& k, const VariableRing& ring, const Split& split) {
  std::vector<std::string> tnames;
  for (auto v : split.independent()) tnames.push_back(ring.name(v));
  const VariableRing tring(tnames.empty() ? std::vector<std::string>{} : tnames);
  const auto& basis = k.context()->basis();
  std::string s;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& c = k.coordinates()[i];
    if (c.is_zero()) continue;
    std::string coeff = tnames.empty() ? render_rational(c.constant_value()) : render_rational_function(c, tring);
    const QPoly mono = split.x_to_full(QPoly::term(basis[i], Rational(1)));
    const std::string m = render_polynomial(mono, ring);
    if (!s.empty()) s += " + ";
    s += m == "1" ? coeff : "(" + coeff + ")*" + m;
  }
  return s.empty() ? "0" : s;
}

void dump_matrix(const std::string& prefix, unsigned d, const LabeledMatrix<Kappa>& m, const VariableRing& ring,
                 const Split& split) {
  const std::string path = prefix + "_d" + std::to_string(d) + ".csv";
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  write_csv<Kappa>(
      out, m, [&](const Kappa& k) { return kappa_text(k, ring, split); },
      [&](const Monomial& dm) { return render_operator(SpecializedOperator{m.block, {{dm, {1.0, 0.0}}}}, ring); },
      [&](std::size_t i) {
        const auto& r = m.row_labels[i];
        return render_polynomial(QPoly::term(r.multiplier, Rational(1)), ring) + "*f" + std::to_string(r.generator + 1);
      });
}

int run_symbolic(const Flags& f) {
  const Problem p = load_problem(f, true);
  SymbolicOptions o = symbolic_options(f, p.file);
  if (!f.dump_matrix.empty()) {
    const Split split = choose_split(p.prime, p.file.ring.size(), o);
    o.on_matrix = [&, split](unsigned d, const LabeledMatrix<Kappa>& m) {
      dump_matrix(f.dump_matrix, d, m, p.file.ring, split);
    };
  }
  const auto n = noetherian_operators(p.file.ideal, p.prime, o);
  Output out(f);
  out.line("# independent variables: " + names_text(n.split.independent(), p.file.ring));
  out.line("# multiplicity " + std::to_string(n.multiplicity()) + ", stabilized at degree " + std::to_string(n.degree));
  for (const auto& op : n.operators) out.line(render_operator(op, p.file.ring));
  out.finish(symbolic_json(n, p.file.ring));
  return 0;
}

int run_at_point(const Flags& f) {
  const Problem p = load_problem(f, false);
  const NumericOptions o = numeric_options(f, p.file);
  const Split split = numeric_split(f, p.file);
  const auto pts = load_points(f, p.file.ring);
  std::vector<PointOperators> ops;
  Output out(f);
  out.line("# independent variables: " + names_text(split.independent(), p.file.ring));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    ops.push_back(noetherian_operators_at_point(p.file.ideal, pts[i].coords, split, o));
    out.line("# point " + std::to_string(i + 1) + " " + point_text(pts[i].coords) + ": multiplicity " +
             std::to_string(ops.back().multiplicity()));
    for (const auto& op : ops.back().operators()) out.line(render_operator(op, p.file.ring));
  }
  out.finish(at_point_json(pts, ops, split, p.file.ring));
  return 0;
}

void numeric_lines(Output& out, const NumericOperatorSet& n, const VariableRing& ring) {
  out.line("# multiplicity " + std::to_string(n.multiplicity()) + ", ansatz degree " + std::to_string(n.ansatz_degree));
  for (const auto& op : n.operators) {
    out.line(render_numeric_operator(op, ring));
    for (const auto& t : op.terms) {
      const std::string d = render_operator(SpecializedOperator{op.block, {{t.d, {1.0, 0.0}}}}, ring);
      if (!t.coeff.exact) out.line("#   coefficient of " + d + " kept in floating point");
      if (t.coeff.flagged) out.line("#   coefficient of " + d + " was absent at some points (taken as 0)");
    }
  }
}

int run_numeric(const Flags& f) {
  const Problem p = load_problem(f, false);
  const NumericOptions o = numeric_options(f, p.file);
  const Split split = numeric_split(f, p.file);
  const auto pts = load_points(f, p.file.ring);
  for (const auto& q : pts)
    if (q.component != pts.front().component)
      fail(ErrorKind::InvalidInput, "points belong to several components; use --component or decompose");
  const auto n = numerical_noetherian_operators(p.file.ideal, pts, split, o);
  Output out(f);
  out.line("# independent variables: " + names_text(split.independent(), p.file.ring));
  numeric_lines(out, n, p.file.ring);
  out.finish(numeric_json(n, p.file.ring));
  return 0;
}

int run_interpolate(const Flags& f) {
  const Problem p = load_problem(f, false);
  const NumericOptions o = numeric_options(f, p.file);
  const Split split = numeric_split(f, p.file);
  const auto pts = load_points(f, p.file.ring);
  std::vector<std::vector<ApproxComplex>> coords;
  std::vector<ApproxComplex> values;
  for (const auto& q : pts) {
    if (!q.value) fail(ErrorKind::InvalidInput, "every point needs a \"value\" to interpolate");
    coords.push_back(q.coords);
    values.push_back(*q.value);
  }
  unsigned deg = 0;
  const auto c = interpolate_values(coords, values, split, o, &deg);
  NumericOperator op{{}, {{Monomial(0), c}}, split.nvars()};
  Output out(f);
  out.line("# ansatz degree " + std::to_string(deg) + (c.exact ? ", exact" : ", floating point") + ", residual " +
           format_double(c.residual));
  out.line(render_numeric_operator(op, p.file.ring));
  NumericOperatorSet set;
  set.nvars = split.nvars();
  set.split = split;
  set.ideal = p.file.ideal;
  set.operators.push_back(op);
  set.ansatz_degree = deg;
  out.finish(numeric_json(set, p.file.ring));
  return 0;
}

std::vector<WitnessGroup> group_points(const std::vector<WitnessPoint>& pts) {
  std::vector<WitnessGroup> groups;
  for (const auto& q : pts) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const WitnessGroup& g) { return g.id == q.component; });
    if (it == groups.end()) {
      groups.push_back({q.component, {}});
      it = groups.end() - 1;
    }
    it->points.push_back(q);
  }
  return groups;
}

int run_decompose(const Flags& f) {
  const Problem p = load_problem(f, false);
  const NumericOptions o = numeric_options(f, p.file);
  const Split split = numeric_split(f, p.file);
  const auto comps = numerical_primary_decomposition(p.file.ideal, group_points(load_points(f, p.file.ring)), split, o);
  Output out(f);
  out.line("# independent variables: " + names_text(split.independent(), p.file.ring));
  for (const auto& c : comps) {
    out.line("# component '" + c.id + "' (" + std::to_string(c.points.size()) + " points)");
    if (!c.error.empty()) out.line("#   failed: " + c.error);
    else numeric_lines(out, *c.numeric, p.file.ring);
  }
  out.finish(decomposition_json(comps, p.file.ring));
  return 0;
}

int run_member(const Flags& f) {
  const Problem p = load_problem(f, false);
  if (f.poly.empty()) throw UsageError("missing --poly");
  const QPoly g = parse_polynomial(f.poly, p.file.ring);
  const auto pts = load_points(f, p.file.ring);
  std::vector<ComponentDescription> comps;
  if (!p.prime.empty()) {
    ComponentDescription c;
    c.id = pts.front().component;
    c.points = pts;
    c.prime = p.prime;
    c.symbolic = noetherian_operators(p.file.ideal, p.prime, symbolic_options(f, p.file));
    comps.push_back(std::move(c));
  } else {
    comps = numerical_primary_decomposition(p.file.ideal, group_points(pts), numeric_split(f, p.file),
                                            numeric_options(f, p.file));
    for (const auto& c : comps)
      if (!c.error.empty()) fail(ErrorKind::InvalidInput, "component '" + c.id + "' failed: " + c.error);
  }
  const double tol = option_value(f.member_tol, p.file, "member_tol", 1e-6);
  const unsigned trials = f.trials;
  const auto r = membership_test(g, comps, trials, tol);
  Output out(f);
  out.line("# assuming the ideal has no embedded components");
  for (std::size_t i = 0; i < comps.size(); ++i)
    out.line("# component '" + comps[i].id + "': " + (r.per_component[i] ? "vanishes" : "does not vanish") +
             " (worst residual " + format_double(r.worst[i]) + ")");
  out.line(r.member ? "member" : "not a member");
  out.finish(membership_json(g, r, comps, p.file.ring));
  return 0;
}

std::vector<WeylOperator<QPoly>> load_operators(const Flags& f, const Problem& p) {
  if (!f.operators.empty()) {
    std::vector<WeylOperator<QPoly>> ops;
    std::istringstream in(read_file(f.operators, "operators"));
    std::string line;
    std::size_t no = 0;
    while (std::getline(in, line)) {
      ++no;
      if (auto k = line.find('#'); k != std::string::npos) line.resize(k);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      ops.push_back(parse_polynomial_operator(line, p.file.ring, std::nullopt, {no, 1}));
    }
    return ops;
  }
  if (p.prime.empty()) throw UsageError("give --operators or a prime to compute them");
  return noetherian_operators(p.file.ideal, p.prime, symbolic_options(f, p.file)).lifted;
}

int run_transform(const Flags& f) {
  const Problem p = load_problem(f, false);
  if (f.matrix.empty()) throw UsageError("missing --matrix");
  const std::string mtext = std::filesystem::exists(f.matrix) ? read_file(f.matrix, "matrix") : f.matrix;
  const RationalMatrix a = parse_rational_matrix(mtext);
  if (a.size() != p.file.ring.size())
    fail(ErrorKind::ContextMismatch, "the matrix must be " + std::to_string(p.file.ring.size()) + " x " +
                                         std::to_string(p.file.ring.size()));
  const auto ops = transform_operators(load_operators(f, p), a);
  std::vector<QPoly> ideal;
  for (const auto& g : p.file.ideal) ideal.push_back(substitute(g, a));
  Output out(f);
  out.line("# ideal");
  for (const auto& g : ideal) out.line(render_polynomial(g, p.file.ring));
  out.line("# operators");
  for (const auto& op : ops) out.line(render_operator(op, p.file.ring));
  out.finish(operator_list_json(ideal, ops, p.file.ring));
  return 0;
}

int run_apply(const Flags& f) {
  const Problem p = load_problem(f, false);
  const auto polys = apply_to_generators(load_operators(f, p), p.file.ideal);
  Output out(f);
  for (const auto& g : polys) out.line(render_polynomial(g, p.file.ring));
  out.finish(polynomial_list_json("polynomials", polys, p.file.ring));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noetherian operators of primary ideals"};
  app.require_subcommand(1);
  Flags f;

  struct Command {
    const char* name;
    const char* help;
    int (*run)(const Flags&);
  };
  const Command commands[] = {
      {"symbolic", "exact operators from the ideal and its prime", run_symbolic},
      {"at-point", "operators specialized at each witness point", run_at_point},
      {"interpolate", "rational function through sampled values", run_interpolate},
      {"numeric", "operators interpolated from witness points", run_numeric},
      {"decompose", "numeric operators for every component of a points file", run_decompose},
      {"member", "probabilistic ideal membership test", run_member},
      {"transform", "operators after a linear change of coordinates", run_transform},
      {"apply", "apply operators to the ideal generators", run_apply},
  };
  std::vector<std::pair<CLI::App*, int (*)(const Flags&)>> subs;
  for (const auto& s : commands) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    sub->add_option("--ideal", f.ideal, "problem file with the ring and the ideal")->required();
    sub->add_option("--prime", f.prime, "file with the prime generators");
    sub->add_option("--points", f.points, "witness points (JSON)");
    sub->add_option("--out", f.out, "write the JSON document here");
    sub->add_option("--tol", f.tol, "numerical rank tolerance");
    sub->add_option("--point-tol", f.point_tol, "witness point residual tolerance");
    sub->add_option("--dmax", f.dmax, "Macaulay degree cap");
    sub->add_option("--interp-dmax", f.interp_dmax, "interpolation ansatz degree cap");
    sub->add_option("--order", f.order, "ring order for choosing independent variables (grevlex, grlex, lex)");
    sub->add_option("--indep", f.indep, "independent variables: auto, none or a comma-separated list");
    sub->add_option("--component", f.component, "only use points of this component");
    sub->add_flag("--json", f.json, "print the JSON document instead of text");
    if (std::string(s.name) == "symbolic")
      sub->add_option("--dump-matrix", f.dump_matrix, "write every Macaulay matrix to PREFIX_d<degree>.csv");
    if (std::string(s.name) == "member") {
      sub->add_option("--poly", f.poly, "polynomial to test")->required();
      sub->add_option("--trials", f.trials, "points per component")->check(CLI::PositiveNumber);
      sub->add_option("--member-tol", f.member_tol, "relative vanishing tolerance");
    }
    if (std::string(s.name) == "transform") sub->add_option("--matrix", f.matrix, "matrix A as '1,2;0,1' or a file")->required();
    if (std::string(s.name) == "transform" || std::string(s.name) == "apply")
      sub->add_option("--operators", f.operators, "file with one operator per line");
    subs.emplace_back(sub, s.run);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& [sub, run] : subs)
      if (sub->parsed()) return run(f);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    const std::string doc = error_json(e);
    std::cerr << "error (" << kind_name(e.kind()) << "): " << e.what() << "\n";
    std::cout << doc << "\n";
    if (!f.out.empty()) std::ofstream(f.out) << doc << "\n";
    return 1;
  }
  return 2;
}
