#include "acbm/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace acbm {

namespace {

unsigned degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0u);
}

}  // namespace

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(const Rational& c, std::vector<std::string> params) {
  Polynomial p;
  p.params_ = std::move(params);
  p.set_term(Exponents(p.params_.size(), 0), c);
  return p;
}

Polynomial Polynomial::variable(const std::string& name, std::vector<std::string> params) {
  Polynomial p;
  p.params_ = std::move(params);
  auto it = std::find(p.params_.begin(), p.params_.end(), name);
  if (it == p.params_.end())
    throw std::invalid_argument("Polynomial: unknown parameter '" + name + "'");
  Exponents e(p.params_.size(), 0);
  e[static_cast<size_t>(it - p.params_.begin())] = 1;
  p.set_term(std::move(e), Rational(1));
  return p;
}

void Polynomial::set_term(Exponents e, const Rational& c) {
  if (c.is_zero()) return;
  e.resize(params_.size(), 0);
  auto [it, inserted] = terms_.emplace(std::move(e), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Polynomial::is_constant() const {
  for (const auto& [e, c] : terms_)
    if (degree_of(e) > 0) return false;
  return true;
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::domain_error("Polynomial: not a constant: " + str());
  return terms_.begin()->second;
}

unsigned Polynomial::total_degree() const {
  if (terms_.empty()) return 0;
  return degree_of(terms_.rbegin()->first);
}

const Exponents& Polynomial::leading_exponents() const {
  if (terms_.empty()) throw std::domain_error("Polynomial: zero has no leading term");
  return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw std::domain_error("Polynomial: zero has no leading term");
  return terms_.rbegin()->second;
}

Polynomial Polynomial::promoted(const std::vector<std::string>& params) const {
  Polynomial p;
  p.params_ = params;
  if (!terms_.empty()) p.set_term(Exponents(params.size(), 0), constant_value());
  return p;
}

void Polynomial::align(Polynomial& a, Polynomial& b) {
  if (a.params_ == b.params_) return;
  if (a.is_constant())
    a = a.promoted(b.params_);
  else if (b.is_constant())
    b = b.promoted(a.params_);
  else
    throw std::invalid_argument("Polynomial: parameter lists differ");
}

Polynomial Polynomial::operator-() const {
  Polynomial p;
  p.params_ = params_;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  Polynomial rhs = o;
  align(*this, rhs);
  for (const auto& [e, c] : rhs.terms_) set_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial lhs = a, rhs = b;
  Polynomial::align(lhs, rhs);
  Polynomial p;
  p.params_ = lhs.params_;
  for (const auto& [ea, ca] : lhs.terms_)
    for (const auto& [eb, cb] : rhs.terms_) {
      Exponents e = ea;
      for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      p.set_term(std::move(e), ca * cb);
    }
  return p;
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  Polynomial p;
  p.params_ = a.params_;
  if (c.is_zero()) return p;
  for (const auto& [e, k] : a.terms_) p.terms_.emplace(e, k * c);
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial acc = Polynomial::constant(Rational(1), params_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  Polynomial lhs = a, rhs = b;
  try {
    Polynomial::align(lhs, rhs);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return lhs.terms_ == rhs.terms_;
}

Rational Polynomial::eval(const std::map<std::string, Rational>& point) const {
  std::vector<Rational> values;
  values.reserve(params_.size());
  for (const auto& name : params_) {
    auto it = point.find(name);
    if (it == point.end())
      throw std::invalid_argument("Polynomial: no value assigned to parameter '" + name + "'");
    values.push_back(it->second);
  }
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) t *= values[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::string& name, const Rational& value) const {
  auto it = std::find(params_.begin(), params_.end(), name);
  if (it == params_.end())
    throw std::invalid_argument("Polynomial: unknown parameter '" + name + "'");
  size_t slot = static_cast<size_t>(it - params_.begin());
  Polynomial p;
  p.params_ = params_;
  for (const auto& [e, c] : terms_) {
    Exponents ne = e;
    Rational nc = c * value.pow(ne[slot]);
    ne[slot] = 0;
    p.set_term(std::move(ne), nc);
  }
  return p;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool first = out.empty();
    bool neg = c.sign() < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    Rational mag = c.abs();
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += params_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty())
      out += mag.str();
    else if (mag.is_one())
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

namespace {

// Recursive-descent parser for the polynomial text grammar.
class Parser {
public:
  Parser(std::string_view text, std::vector<std::string> params)
      : text_(text), params_(std::move(params)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("Polynomial: parse error at offset " +
                                std::to_string(pos_) + ": " + why + " in '" +
                                std::string(text_) + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
            text_[pos_] == '\r'))
      ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc = Polynomial::constant(Rational(0), params_);
    bool neg = false;
    char c = peek();
    if (c == '+' || c == '-') {
      neg = c == '-';
      ++pos_;
    }
    acc += neg ? -term() : term();
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      acc += c == '-' ? -term() : term();
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek() == '*') {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      base = base.pow(parse_uint());
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (c >= '0' && c <= '9') return number();
    if ((c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z')) return name();
    fail("expected number, name, or '('");
  }

  unsigned parse_uint() {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
      fail("expected a nonnegative integer exponent");
    unsigned long v = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      v = v * 10 + static_cast<unsigned long>(text_[pos_] - '0');
      if (v > 1000000) fail("exponent too large");
      ++pos_;
    }
    return static_cast<unsigned>(v);
  }

  Polynomial number() {
    BigInt num(digits());
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] < '0' || text_[pos_] > '9')
        fail("expected a denominator");
      BigInt den(digits());
      return Polynomial::constant(Rational(num, den), params_);
    }
    return Polynomial::constant(Rational(num), params_);
  }

  std::string digits() {
    size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial name() {
    size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                (c >= '0' && c <= '9') || c == '_';
      if (!ok) break;
      ++pos_;
    }
    std::string id(text_.substr(start, pos_ - start));
    if (std::find(params_.begin(), params_.end(), id) == params_.end())
      fail("unknown parameter '" + id + "'");
    return Polynomial::variable(id, params_);
  }

  std::string_view text_;
  std::vector<std::string> params_;
  size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text, std::vector<std::string> params) {
  return Parser(text, std::move(params)).run();
}

bool divides(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero()) return q.is_zero();
  if (p.is_constant()) return true;
  if (q.is_zero()) return true;
  if (q.is_constant()) return false;
  if (p.parameters() != q.parameters())
    throw std::invalid_argument("Polynomial: parameter lists differ in divides()");
  Polynomial r = q;
  // Single-divisor division: once the leading term of the running remainder
  // is not divisible by p's leading term, the division cannot be exact.
  while (!r.is_zero()) {
    const Exponents& le = r.leading_exponents();
    const Exponents& pe = p.leading_exponents();
    Exponents qe(le.size());
    for (size_t i = 0; i < le.size(); ++i) {
      if (le[i] < pe[i]) return false;
      qe[i] = le[i] - pe[i];
    }
    Polynomial mono = Polynomial::constant(
        r.leading_coefficient() / p.leading_coefficient(), p.parameters());
    for (size_t i = 0; i < qe.size(); ++i)
      for (unsigned k = 0; k < qe[i]; ++k)
        mono = mono * Polynomial::variable(p.parameters()[i], p.parameters());
    r -= mono * p;
  }
  return true;
}

int compare(const Polynomial& a, const Polynomial& b) {
  // Term-by-term from the graded-lex top; shorter prefix-equal sequence first.
  auto ia = a.terms().rbegin(), ea = a.terms().rend();
  auto ib = b.terms().rbegin(), eb = b.terms().rend();
  GrlexLess less;
  for (; ia != ea && ib != eb; ++ia, ++ib) {
    const auto& [expa, ca] = *ia;
    const auto& [expb, cb] = *ib;
    if (expa != expb) {
      // Compare as bare exponent profiles when rings differ in size.
      if (expa.size() != expb.size()) {
        unsigned da = 0, db = 0;
        for (unsigned x : expa) da += x;
        for (unsigned x : expb) db += x;
        if (da != db) return da < db ? -1 : 1;
        return expa.size() < expb.size() ? -1 : 1;
      }
      return less(expa, expb) ? -1 : 1;
    }
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  if (ia != ea) return 1;
  if (ib != eb) return -1;
  return 0;
}

}  // namespace acbm
