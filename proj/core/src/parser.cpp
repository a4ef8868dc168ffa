#include <cctype>
#include <map>

#include "noether/frontend.hpp"

namespace noether {

namespace {

constexpr unsigned kMaxExponent = 1000;

struct DLess {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_compare(a, b) < 0; }
};

// Sum of coefficient * d-monomial, both over all ring variables; every
// symbol commutes while parsing.
class OpValue {
 public:
  explicit OpValue(std::size_t n) : n_(n) {}
  static OpValue scalar(const RationalFunction& c) {
    OpValue v(c.nvars());
    v.add(Monomial(c.nvars()), c);
    return v;
  }
  static OpValue d_symbol(std::size_t n, std::size_t var) {
    OpValue v(n);
    v.add(Monomial::variable(n, var), RationalFunction(n, Rational(1)));
    return v;
  }

  const std::map<Monomial, RationalFunction, DLess>& terms() const { return terms_; }
  bool has_d() const {
    for (const auto& [d, c] : terms_)
      if (!d.is_one()) return true;
    return false;
  }
  RationalFunction scalar_part() const {
    auto it = terms_.find(Monomial(n_));
    return it == terms_.end() ? RationalFunction(n_) : it->second;
  }

  void add(const Monomial& d, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(d, c);
    if (!inserted) {
      it->second = it->second + c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend OpValue operator+(const OpValue& a, const OpValue& b) {
    OpValue r = a;
    for (const auto& [d, c] : b.terms_) r.add(d, c);
    return r;
  }
  friend OpValue operator-(const OpValue& a) {
    OpValue r(a.n_);
    for (const auto& [d, c] : a.terms_) r.add(d, -c);
    return r;
  }
  friend OpValue operator*(const OpValue& a, const OpValue& b) {
    OpValue r(a.n_);
    for (const auto& [d1, c1] : a.terms_)
      for (const auto& [d2, c2] : b.terms_) r.add(d1 * d2, c1 * c2);
    return r;
  }

 private:
  std::size_t n_;
  std::map<Monomial, RationalFunction, DLess> terms_;
};

class Parser {
 public:
  Parser(std::string_view text, const VariableRing& ring, bool allow_d, SourcePos origin)
      : text_(text), ring_(ring), allow_d_(allow_d), line_(origin.line), col_(origin.column) {}

  OpValue parse() {
    skip_space();
    if (at_end()) error("empty expression");
    OpValue v = expr();
    skip_space();
    if (!at_end()) {
      if (starts_atom()) error("missing '*' between factors");
      error(std::string("unexpected '") + peek() + "'");
    }
    return v;
  }

 private:
  std::size_t n() const { return ring_.size(); }

  [[noreturn]] void error(const std::string& msg, ErrorKind kind = ErrorKind::ParseError) const {
    fail(kind, "line " + std::to_string(line_) + ", column " + std::to_string(col_) + ": " + msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }
  bool starts_atom() const {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '(' ||
           std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  OpValue expr() {
    skip_space();
    OpValue v(n());
    if (accept('-')) {
      v = -term();
    } else {
      accept('+');
      v = term();
    }
    for (;;) {
      if (accept('+')) v = v + term();
      else if (accept('-')) v = v + (-term());
      else return v;
    }
  }

  OpValue term() {
    OpValue v = unary();
    for (;;) {
      skip_space();
      if (accept('*')) {
        v = v * unary();
      } else if (peek() == '/') {
        const SourcePos at{line_, col_};
        advance();
        v = divide(v, unary(), at);
      } else {
        if (!at_end() && starts_atom()) error("missing '*' between factors");
        return v;
      }
    }
  }

  OpValue divide(const OpValue& a, const OpValue& b, SourcePos at) {
    if (b.has_d()) fail(ErrorKind::ParseError, where(at) + "division by a differential operator");
    const RationalFunction c = b.scalar_part();
    if (c.is_zero()) fail(ErrorKind::DivisionByZero, where(at) + "division by zero");
    return a * OpValue::scalar(c.inverse());
  }
  static std::string where(SourcePos p) {
    return "line " + std::to_string(p.line) + ", column " + std::to_string(p.column) + ": ";
  }

  OpValue unary() {
    if (accept('-')) return -unary();
    return power();
  }

  OpValue power() {
    OpValue base = atom();
    if (!accept('^')) return base;
    skip_space();
    const bool negative = accept('-');
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) error("exponent must be an integer");
    unsigned long e = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      e = e * 10 + static_cast<unsigned long>(peek() - '0');
      if (e > kMaxExponent) error("exponent too large");
      advance();
    }
    OpValue r = OpValue::scalar(RationalFunction(n(), Rational(1)));
    for (unsigned long k = 0; k < e; ++k) r = r * base;
    if (!negative) return r;
    if (r.has_d()) error("negative power of a differential operator");
    const RationalFunction c = r.scalar_part();
    if (c.is_zero()) fail(ErrorKind::DivisionByZero, where({line_, col_}) + "negative power of zero");
    return OpValue::scalar(c.inverse());
  }

  OpValue atom() {
    skip_space();
    if (at_end()) error("unexpected end of input");
    const char c = peek();
    if (c == '(') {
      advance();
      OpValue v = expr();
      if (!accept(')')) error("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    error(std::string("unexpected '") + c + "'");
  }

  OpValue number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
    };
    digits();
    if (peek() == '.') {
      advance();
      digits();
    }
    if ((peek() == 'e' || peek() == 'E') && pos_ + 1 < text_.size()) {
      std::size_t k = pos_ + 1;
      if (text_[k] == '+' || text_[k] == '-') ++k;
      if (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k]))) {
        while (pos_ < k) advance();
        digits();
      }
    }
    const std::string_view lit = text_.substr(start, pos_ - start);
    if (lit == ".") error("malformed number");
    return OpValue::scalar(RationalFunction(n(), Rational::parse(lit)));
  }

  OpValue identifier() {
    const SourcePos at{line_, col_};
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') advance();
    const std::string_view name = text_.substr(start, pos_ - start);
    if (auto v = ring_.index_of(name))
      return OpValue::scalar(RationalFunction(QPoly::variable(n(), *v, Rational(1))));
    if (name.size() > 1 && name[0] == 'd') {
      if (auto v = ring_.index_of(name.substr(1))) {
        if (!allow_d_) fail(ErrorKind::ParseError, where(at) + "derivative symbol '" + std::string(name) +
                                                       "' in a polynomial");
        return OpValue::d_symbol(n(), *v);
      }
    }
    fail(ErrorKind::UnknownVariable, where(at) + "unknown variable '" + std::string(name) + "'");
  }

  std::string_view text_;
  const VariableRing& ring_;
  bool allow_d_;
  std::size_t pos_ = 0;
  std::size_t line_, col_;
};

RationalFunction scalar_only(const OpValue& v) {
  return v.scalar_part();
}

}  // namespace

RationalFunction parse_rational_function(std::string_view text, const VariableRing& ring, SourcePos origin) {
  return scalar_only(Parser(text, ring, false, origin).parse());
}

QPoly parse_polynomial(std::string_view text, const VariableRing& ring, SourcePos origin) {
  const RationalFunction f = parse_rational_function(text, ring, origin);
  if (!f.is_polynomial())
    fail(ErrorKind::ParseError, "line " + std::to_string(origin.line) + ", column " + std::to_string(origin.column) +
                                    ": division by a non-constant polynomial");
  const Rational den = f.denominator().terms().front().coeff;
  return f.numerator().scaled(den.inverse());
}

WeylOperator<RationalFunction> parse_operator(std::string_view text, const VariableRing& ring,
                                              std::optional<std::vector<std::size_t>> block, SourcePos origin) {
  const std::size_t n = ring.size();
  std::vector<std::size_t> blk;
  if (block) {
    blk = *block;
  } else {
    for (std::size_t i = 0; i < n; ++i) blk.push_back(i);
  }
  const OpValue v = Parser(text, ring, true, origin).parse();
  WeylOperator<RationalFunction> op(n, blk);
  for (const auto& [d, c] : v.terms()) {
    Monomial m(blk.size());
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] == 0) continue;
      auto it = std::find(blk.begin(), blk.end(), i);
      if (it == blk.end())
        fail(ErrorKind::InvalidInput, "operator differentiates '" + ring.name(i) + "', which is not in its block");
      m.set(static_cast<std::size_t>(it - blk.begin()), d[i]);
    }
    op.add_term(m, c);
  }
  return op;
}

WeylOperator<QPoly> parse_polynomial_operator(std::string_view text, const VariableRing& ring,
                                              std::optional<std::vector<std::size_t>> block, SourcePos origin) {
  const auto op = parse_operator(text, ring, std::move(block), origin);
  return op.map_coefficients<QPoly>([](const RationalFunction& c) {
    if (!c.is_polynomial()) fail(ErrorKind::NotLiftable, "operator has a non-polynomial coefficient");
    return c.numerator().scaled(c.denominator().terms().front().coeff.inverse());
  });
}

std::vector<std::size_t> parse_variable_list(std::string_view text, const VariableRing& ring) {
  std::vector<std::size_t> out;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    const std::size_t v = ring.require(cur);
    if (std::find(out.begin(), out.end(), v) != out.end())
      fail(ErrorKind::InvalidInput, "variable '" + cur + "' listed twice");
    out.push_back(v);
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else cur += c;
  }
  flush();
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Rational>> parse_rational_matrix(std::string_view text) {
  std::vector<std::vector<Rational>> rows(1);
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      rows.back().push_back(Rational::parse(cur));
    } catch (const Error&) {
      fail(ErrorKind::ParseError, "matrix entry '" + cur + "' is not a rational number");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ';' || c == '\n') {
      flush();
      if (!rows.back().empty()) rows.emplace_back();
    } else if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  if (rows.back().empty()) rows.pop_back();
  if (rows.empty()) fail(ErrorKind::ParseError, "empty matrix");
  for (const auto& r : rows)
    if (r.size() != rows.size()) fail(ErrorKind::InvalidInput, "matrix must be square");
  return rows;
}

}  // namespace noether
