#include "quadforms/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <set>

namespace quadforms {

// ---------------------------------------------------------------------------
// VarSet

VarSet::VarSet(std::vector<std::string> names) {
  std::set<std::string_view> seen;
  for (const auto& n : names) {
    if (n.empty()) throw Error("variable names must be non-empty");
    if (!seen.insert(n).second) throw Error("duplicate variable name '" + n + "'");
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarSet VarSet::indexed(std::string_view prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 1; i <= count; ++i) names.push_back(std::string(prefix) + std::to_string(i));
  return VarSet(std::move(names));
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  const auto& v = *names_;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t VarSet::require(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw Error("unknown variable '" + std::string(name) + "'");
  return *i;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Exponent> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0U)) {}

void Monomial::set(std::size_t i, Exponent e) {
  degree_ = degree_ - exponents_[i] + e;
  exponents_[i] = e;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] += b.exponents_[i];
  r.degree_ += b.degree_;
  return r;
}

bool Monomial::divisible_by(const Monomial& divisor) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] < divisor.exponents_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial r = *this;
  for (std::size_t i = 0; i < r.exponents_.size(); ++i) r.exponents_[i] -= divisor.exponents_[i];
  r.degree_ -= divisor.degree_;
  return r;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  return a.exponents_ <=> b.exponents_;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(VarSet vars) : vars_(std::move(vars)) {}

Polynomial Polynomial::constant(VarSet vars, const Rational& c) {
  const std::size_t n = vars.size();
  return term(std::move(vars), Monomial(n), c);
}

Polynomial Polynomial::variable(VarSet vars, std::string_view name) {
  Monomial m(vars.size());
  m.set(vars.require(name), 1);
  return term(std::move(vars), std::move(m), Rational(1));
}

Polynomial Polynomial::term(VarSet vars, Monomial m, const Rational& c) {
  if (m.size() != vars.size()) throw Error("monomial length does not match its variable set");
  Polynomial p(std::move(vars));
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

Polynomial Polynomial::linear(VarSet vars, std::span<const Rational> coeffs) {
  if (coeffs.size() > vars.size()) throw Error("more coefficients than variables");
  Polynomial p(vars);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    Monomial m(vars.size());
    m.set(j, 1);
    p.add_term(m, coeffs[j]);
  }
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<unsigned> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

const std::pair<const Monomial, Rational>& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("zero polynomial has no leading term");
  return *terms_.rbegin();
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (!(vars_ == rhs.vars_)) throw VarSetMismatch();
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (!(vars_ == rhs.vars_)) throw VarSetMismatch();
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.vars_ == b.vars_)) throw VarSetMismatch();
  Polynomial r(a.vars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(vars_, Rational(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = negative ? -c : c;
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += vars_.name(i);
      if (m[i] > 1) factors += '^' + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += mag.str();
    } else if (mag.is_one()) {
      out += factors;
    } else {
      out += mag.str() + '*' + factors;
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Free operations

Polynomial coeff_extract(const Polynomial& p, const PowerProduct& pattern) {
  const VarSet& vars = p.vars();
  std::vector<std::optional<Exponent>> want(vars.size());
  for (const auto& [name, e] : pattern) {
    auto& slot = want[vars.require(name)];
    slot = slot.value_or(0) + e;
  }
  Polynomial r(vars);
  for (const auto& [m, c] : p.terms()) {
    bool match = true;
    for (std::size_t i = 0; i < want.size() && match; ++i) {
      if (want[i] && m[i] != *want[i]) match = false;
    }
    if (!match) continue;
    Monomial rest = m;
    for (std::size_t i = 0; i < want.size(); ++i) {
      if (want[i]) rest.set(i, 0);
    }
    r.add_term(rest, c);
  }
  return r;
}

Polynomial coeff_extract(const Polynomial& p, const Monomial& full) {
  if (full.size() != p.vars().size()) throw Error("monomial length does not match its variable set");
  return Polynomial::constant(p.vars(), p.coefficient(full));
}

Polynomial substitute(const Polynomial& p, const PolyBindings& bindings) {
  const VarSet& vars = p.vars();
  std::vector<const Polynomial*> bound(vars.size(), nullptr);
  for (const auto& [name, value] : bindings) {
    if (!(value.vars() == vars)) throw VarSetMismatch();
    bound[vars.require(name)] = &value;
  }
  // powers[i][e] = bound_i^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(vars.size());
  auto power = [&](std::size_t i, Exponent e) -> const Polynomial& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(Polynomial::constant(vars, Rational(1)));
    while (table.size() <= e) table.push_back(table.back() * *bound[i]);
    return table[e];
  };

  Polynomial result(vars);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    std::vector<std::pair<std::size_t, Exponent>> hits;
    for (std::size_t i = 0; i < vars.size(); ++i) {
      if (bound[i] != nullptr && m[i] > 0) {
        hits.emplace_back(i, m[i]);
        rest.set(i, 0);
      }
    }
    Polynomial piece = Polynomial::term(vars, rest, c);
    for (const auto& [i, e] : hits) piece *= power(i, e);
    result += piece;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const ValueBindings& bindings) {
  const VarSet& vars = p.vars();
  std::vector<std::optional<Rational>> bound(vars.size());
  for (const auto& [name, value] : bindings) bound[vars.require(name)] = value;

  Polynomial result(vars);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    Rational coeff = c;
    for (std::size_t i = 0; i < vars.size() && !coeff.is_zero(); ++i) {
      if (!bound[i] || m[i] == 0) continue;
      for (Exponent k = 0; k < m[i]; ++k) coeff *= *bound[i];
      rest.set(i, 0);
    }
    result.add_term(rest, coeff);
  }
  return result;
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  if (point.size() != p.vars().size()) throw Error("evaluation point has the wrong dimension");
  Rational sum(0);
  for (const auto& [m, c] : p.terms()) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (Exponent k = 0; k < m[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

Polynomial exact_divide(const Polynomial& n, const Polynomial& d) {
  if (!(n.vars() == d.vars())) throw VarSetMismatch();
  if (d.is_zero()) throw DivisionByZero();
  const auto& [dm, dc] = d.leading_term();
  Polynomial quotient(n.vars());
  Polynomial rest = n;
  while (!rest.is_zero()) {
    const auto& [rm, rc] = rest.leading_term();
    if (!rm.divisible_by(dm)) {
      throw InexactDivision("polynomial division leaves a remainder: (" + n.str() + ") / (" +
                            d.str() + ")");
    }
    Polynomial t = Polynomial::term(n.vars(), rm.quotient(dm), rc / dc);
    quotient += t;
    rest -= t * d;
  }
  return quotient;
}

std::optional<std::pair<unsigned, unsigned>> degree_range_in(const Polynomial& p,
                                                             std::span<const std::string> names) {
  if (p.is_zero()) return std::nullopt;
  std::vector<std::size_t> idx;
  for (const auto& n : names) idx.push_back(p.vars().require(n));
  unsigned lo = ~0U;
  unsigned hi = 0;
  for (const auto& [m, c] : p.terms()) {
    unsigned d = 0;
    for (auto i : idx) d += m[i];
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return std::make_pair(lo, hi);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSet& vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc = product();
    for (;;) {
      skip();
      if (peek('+')) {
        ++pos_;
        acc += product();
      } else if (peek('-')) {
        ++pos_;
        acc -= product();
      } else {
        return acc;
      }
    }
  }

  Polynomial product() {
    Polynomial acc = unary();
    for (;;) {
      skip();
      if (!peek('*')) return acc;
      ++pos_;
      acc *= unary();
    }
  }

  Polynomial unary() {
    skip();
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    if (peek('+')) {
      ++pos_;
      return unary();
    }
    Polynomial base = atom();
    skip();
    if (peek('^')) {
      ++pos_;
      skip();
      const std::string digits = take_while([](char c) { return std::isdigit(c) != 0; });
      if (digits.empty()) fail("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial atom() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      skip();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = take_while([](char ch) { return std::isdigit(ch) != 0; });
      if (peek('/')) {
        ++pos_;
        const std::string den = take_while([](char ch) { return std::isdigit(ch) != 0; });
        if (den.empty()) fail("expected denominator");
        lit += '/' + den;
      }
      auto q = Rational::try_parse(lit);
      if (!q) fail("bad rational literal");
      return Polynomial::constant(vars_, *q);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::string name =
          take_while([](char ch) { return std::isalnum(ch) != 0 || ch == '_'; });
      if (!vars_.index_of(name)) fail("unknown variable '" + name + "'");
      return Polynomial::variable(vars_, name);
    }
    fail("unexpected character");
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[nodiscard]] bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  template <class Pred>
  std::string take_while(Pred pred) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && pred(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "'");
  }

  std::string_view text_;
  const VarSet& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const VarSet& vars) {
  return Parser(text, vars).parse();
}

PowerProduct parse_power_product(std::string_view text) {
  PowerProduct out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  for (;;) {
    skip();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      ++pos;
    }
    if (start == pos || std::isdigit(static_cast<unsigned char>(text[start]))) {
      throw ParseError("expected variable name in power product '" + std::string(text) + "'");
    }
    std::string name(text.substr(start, pos - start));
    Exponent e = 1;
    skip();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip();
      const std::size_t ds = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (ds == pos) throw ParseError("expected exponent in '" + std::string(text) + "'");
      e = static_cast<Exponent>(std::stoul(std::string(text.substr(ds, pos - ds))));
    }
    out.emplace_back(std::move(name), e);
    skip();
    if (pos == text.size()) return out;
    if (text[pos] != '*') throw ParseError("expected '*' in '" + std::string(text) + "'");
    ++pos;
  }
}

}  // namespace quadforms
