#include "eulerode/text.hpp"

#include <cctype>
#include <cstdio>
#include <optional>

#include "eulerode/error.hpp"

namespace eulerode {

namespace {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : s_(text) {}

  std::vector<Term> parse_sum() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    for (;;) {
      if (auto t = parse_term(negative)) terms.push_back(std::move(*t));
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    return terms;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() { return skip_ws(), pos_ >= s_.size(); }
  char peek() { return at_end() ? '\0' : s_[pos_]; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool digit_next() { return std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.'; }

  std::string digits() {
    std::string out;
    while (pos_ < s_.size() &&
           (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.'))
      out += s_[pos_++];
    return out;
  }

  /// Unsigned literal: int, decimal or p/q.
  Rational number() {
    const std::size_t start = pos_;
    std::string lit = digits();
    if (lit.empty()) fail("expected a number");
    const std::size_t save = pos_;
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      skip_ws();
      const std::string den = digits();
      if (den.empty()) fail("expected a denominator");
      lit += "/" + den;
    } else {
      pos_ = save;
    }
    try {
      return Rational::parse(lit);
    } catch (const Error& e) {
      throw ParseError(start, e.what());
    }
  }

  /// '(' [sign] number ')'
  Rational paren_number() {
    expect('(');
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    Rational r = number();
    expect(')');
    return neg ? -r : r;
  }

  /// Identifier at the cursor without consuming it: "x", "exp", "sin", "cos" or "".
  std::string_view ident() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_]))) return {};
    if (s_[pos_] == 'x') return s_.substr(pos_, 1);
    std::size_t end = pos_;
    while (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) ++end;
    return s_.substr(pos_, end - pos_);
  }

  /// Linear argument "a x": [sign] [rational] ['*'] 'x'.
  Rational linear_arg() {
    Rational a = 1;
    if (peek() == '-' || peek() == '+') {
      if (peek() == '-') a = -a;
      ++pos_;
    }
    if (digit_next())
      a *= number();
    else if (peek() == '(')
      a *= paren_number();
    accept('*');
    if (ident() != "x") fail("expected 'x' in function argument");
    ++pos_;
    return a;
  }

  std::optional<Term> parse_term(bool negative) {
    Rational coef = negative ? Rational(-1) : Rational(1);
    bool any = false;
    skip_ws();
    if (digit_next()) {
      coef *= number();
      any = true;
    } else if (peek() == '(') {
      coef *= paren_number();
      any = true;
    }

    unsigned power = 0;
    Rational alpha;
    Rational beta;
    TrigKind kind = TrigKind::Exp;
    bool have_trig = false;
    for (;;) {
      const std::size_t before = pos_;
      const bool star = accept('*');
      const std::string_view id = ident();
      if (id.empty()) {
        if (star) fail("expected a factor after '*'");
        pos_ = before;
        break;
      }
      const std::size_t id_pos = pos_;
      if (id == "x") {
        ++pos_;
        if (accept('^')) {
          skip_ws();
          const std::size_t p = pos_;
          const std::string d = digits();
          if (d.empty() || d.find('.') != std::string::npos) {
            pos_ = p;
            fail("expected a non-negative integer exponent");
          }
          power += static_cast<unsigned>(std::stoul(d));
        } else {
          power += 1;
        }
      } else if (id == "exp" || id == "sin" || id == "cos") {
        pos_ += id.size();
        expect('(');
        const Rational a = linear_arg();
        expect(')');
        if (id == "exp") {
          alpha += a;
        } else {
          if (have_trig) {
            pos_ = id_pos;
            fail("at most one sin/cos factor per term");
          }
          have_trig = true;
          kind = id == "sin" ? TrigKind::Sin : TrigKind::Cos;
          beta = a;
        }
      } else {
        fail("unknown symbol '" + std::string(id) + "' (only x, exp, sin, cos and rational literals)");
      }
      any = true;
    }
    if (!any) fail("expected a term");
    return canonical_term(coef, power, alpha, beta, kind);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string linear_arg_text(const Rational& a) {
  if (a == 1) return "x";
  if (a == -1) return "-x";
  if (a.is_integer()) return a.to_string() + "x";
  return a.to_string() + " x";
}

std::string factors_text(const BasisTerm& t) {
  std::string out;
  const auto add = [&](const std::string& f) { out += (out.empty() ? "" : "*") + f; };
  if (t.power == 1) add("x");
  if (t.power > 1) add("x^" + std::to_string(t.power));
  if (!t.alpha.is_zero()) add("exp(" + linear_arg_text(t.alpha) + ")");
  if (t.kind != TrigKind::Exp) add(std::string(trig_kind_name(t.kind)) + "(" + linear_arg_text(t.beta) + ")");
  return out;
}

template <class CoefText>
std::string render_with(const std::vector<Term>& terms, CoefText coef_text) {
  std::string out;
  for (const auto& t : terms) {
    if (t.coef.is_zero()) continue;
    if (out.empty())
      out += t.coef.sign() < 0 ? "-" : "";
    else
      out += t.coef.sign() < 0 ? " - " : " + ";
    const std::string f = factors_text(t.term);
    out += coef_text(t.coef.abs(), f.empty());
    if (!f.empty()) out += f;
  }
  return out.empty() ? "0" : out;
}

std::vector<Term> solution_terms(const ParticularSolution& y) {
  if (y.coords.size() != y.basis.size())
    throw Error(ErrorCode::InvalidArgument, "solution coordinates do not match its basis");
  std::vector<Term> terms;
  for (std::size_t i = 0; i < y.coords.size(); ++i) terms.push_back({y.coords[i], y.basis.terms()[i]});
  return terms;
}

}  // namespace

std::vector<Term> parse_rhs_expression(std::string_view text) {
  return ExpressionParser(text).parse_sum();
}

std::string render_terms(const std::vector<Term>& terms) {
  return render_with(terms, [](const Rational& a, bool bare) -> std::string {
    const std::string lit = a.is_integer() ? a.to_string() : "(" + a.to_string() + ")";
    if (bare) return lit;
    return a == 1 ? "" : lit + "*";
  });
}

std::string render_solution(const ParticularSolution& y) { return render_terms(solution_terms(y)); }

std::string render_solution_decimal(const ParticularSolution& y) {
  return render_with(solution_terms(y), [](const Rational& a, bool bare) -> std::string {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", a.to_double());
    return bare ? std::string(buf) : std::string(buf) + "*";
  });
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  const auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError(s.size(), "unterminated list");
    s = trim(s.substr(1, s.size() - 2));
  }
  std::vector<Rational> out;
  if (s.empty()) return out;
  std::size_t offset = 0;
  for (;;) {
    const std::size_t comma = s.find(',', offset);
    std::string_view item = trim(s.substr(offset, comma == std::string_view::npos ? s.npos : comma - offset));
    if (item.size() >= 2 && item.front() == '"' && item.back() == '"') item = item.substr(1, item.size() - 2);
    try {
      out.push_back(Rational::parse(item));
    } catch (const Error& e) {
      throw ParseError(offset, e.what());
    }
    if (comma == std::string_view::npos) break;
    offset = comma + 1;
  }
  return out;
}

}  // namespace eulerode
