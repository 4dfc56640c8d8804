#include "radgen/polyring.hpp"

#include <cctype>
#include <unordered_set>

namespace radgen {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw InvalidInput("empty variable name");
    if (!(std::isalpha(static_cast<unsigned char>(n[0])) || n[0] == '_')) {
      throw InvalidInput("variable name must start with a letter: '" + n + "'");
    }
    for (char c : n) {
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) {
        throw InvalidInput("invalid character in variable name '" + n + "'");
      }
    }
    if (!seen.insert(n).second) throw InvalidInput("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarSet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Ring::Ring(VarSet vars, MonomialOrder order)
    : vars_(std::make_shared<const VarSet>(std::move(vars))), order_(order) {}

Ring Ring::with_order(MonomialOrder order) const {
  Ring out = *this;
  out.order_ = order;
  return out;
}

Ring Ring::extended(const std::string& name) const {
  std::vector<std::string> names = vars_->names();
  names.push_back(name);
  return Ring(VarSet(std::move(names)), order_);
}

std::string Ring::fresh_name(const std::string& stem) const {
  if (!vars_->index_of(stem)) return stem;
  for (std::size_t i = 0;; ++i) {
    std::string candidate = stem + "_" + std::to_string(i);
    if (!vars_->index_of(candidate)) return candidate;
  }
}

void require_same_ring(const Ring& a, const Ring& b, std::string_view context) {
  if (!(a == b)) throw RingMismatch("ring mismatch in " + std::string(context));
}

Polynomial make_constant(const Ring& ring, long c) { return Polynomial::constant(ring, Rational(c)); }

Polynomial make_variable(const Ring& ring, std::size_t index) {
  if (index >= ring.num_vars()) throw InvalidInput("variable index out of range");
  return Polynomial::term(ring, Rational(1), ring.var(index));
}

Polynomial make_monomial(const Ring& ring, const Monomial& m) { return Polynomial::term(ring, Rational(1), m); }

PolynomialModP to_mod_p(const Polynomial& f, std::uint32_t p) {
  std::vector<Term<ModP>> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) terms.push_back({reduce_mod(t.coeff, p), t.mono});
  return PolynomialModP::from_terms(f.ring(), std::move(terms));
}

std::string print_monomial(const Monomial& m, const VarSet& vars) {
  if (m.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Ring& ring) : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = poly();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial poly() {
    Polynomial acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    Polynomial first = term();
    acc = negate ? -first : first;
    for (;;) {
      if (accept('+')) {
        acc = acc + term();
      } else if (accept('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  Monomial::Exponent exponent() {
    skip_ws();
    const std::size_t start = pos_;
    std::string_view d = digits();
    if (d.empty()) fail("expected exponent");
    if (d.size() > 9) {
      pos_ = start;
      fail("exponent too large");
    }
    return static_cast<Monomial::Exponent>(std::stoul(std::string(d)));
  }

  Polynomial factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = poly();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num(digits());
      skip_ws();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_ws();
        std::string_view den = digits();
        if (den.empty()) fail("expected denominator");
        if (den.find_first_not_of('0') == std::string_view::npos) fail("zero denominator");
        num += "/";
        num += den;
      }
      return Polynomial::constant(ring_, Rational::parse(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string_view name = text_.substr(start, pos_ - start);
      const auto index = ring_.vars().index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + std::string(name) + "'");
      }
      Monomial::Exponent e = 1;
      if (accept('^')) e = exponent();
      return Polynomial::term(ring_, Rational(1), Monomial::variable(ring_.num_vars(), *index, e));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const Ring& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, const Ring& ring) { return Parser(text, ring).parse(); }

}  // namespace radgen
