// Canonical text form of Laurent polynomials and a small recursive-descent
// parser for the same syntax.

#include <cctype>
#include <sstream>

#include "clusterlab/laurent.hpp"

namespace clusterlab {

std::string monomial_to_string(const Exponents& exps, const VariableTable& table) {
  std::string out;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += table.name(i);
    if (exps[i] != 1) out += '^' + std::to_string(exps[i]);
  }
  return out;
}

namespace {

std::string term_body(const Term& t, const VariableTable& table) {
  const std::string mono = monomial_to_string(t.exps, table);
  Integer mag = abs(t.coef);
  if (mono.empty()) return mag.get_str();
  if (mag == 1) return mono;
  return mag.get_str() + "*" + mono;
}

std::string sum_to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coef < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_body(t, *p.table());
    first = false;
  }
  return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p) {
  const Fraction f = as_fraction(p);
  const auto& table = *p.table();
  std::size_t den_factors = 0;
  for (auto e : f.denominator) den_factors += e != 0 ? 1 : 0;
  if (den_factors == 0) return sum_to_string(f.numerator);

  std::string num = sum_to_string(f.numerator);
  if (f.numerator.size() > 1) num = "(" + num + ")";
  std::string den = monomial_to_string(f.denominator, table);
  if (den_factors > 1) den = "(" + den + ")";
  return num + " / " + den;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  Parser(std::string_view text, const TablePtr& table) : text_(text), table_(table) {}

  LaurentPoly parse() {
    LaurentPoly value = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly expr() {
    LaurentPoly value = term();
    while (true) {
      if (accept('+')) {
        value += term();
      } else if (accept('-')) {
        value -= term();
      } else {
        return value;
      }
    }
  }

  LaurentPoly term() {
    LaurentPoly value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        LaurentPoly den = unary();
        if (den.is_zero()) {
          pos_ = at;
          fail("division by zero");
        }
        try {
          value = exact_div(value, den);
        } catch (const NonExactDivision&) {
          pos_ = at;
          fail("quotient is not a Laurent polynomial");
        }
      } else {
        return value;
      }
    }
  }

  LaurentPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!accept('^')) return base;
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
    if (e > 100000) fail("exponent too large");
    if (!negative) return base.pow(static_cast<unsigned>(e));
    if (!base.is_monomial()) fail("negative power of a non-monomial");
    return exact_div(LaurentPoly::constant(table_, 1), base.pow(static_cast<unsigned>(e)));
  }

  LaurentPoly atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return LaurentPoly::constant(table_, Integer(std::string(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name(text_.substr(start, pos_ - start));
      auto index = table_->index_of(name);
      if (!index) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return LaurentPoly::variable(table_, *index);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const TablePtr& table_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, const TablePtr& table) {
  return Parser(text, table).parse();
}

}  // namespace clusterlab
