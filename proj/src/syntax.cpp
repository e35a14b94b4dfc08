#include "skewtorus/syntax.hpp"

#include "skewtorus/errors.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace skewtorus {

namespace {

struct Term {
  mpq_class coeff{1};
  std::optional<std::size_t> symbol;
  unsigned long degree = 0;
};

class Parser {
public:
  Parser(std::string_view text, std::size_t base, const BasisPtr &basis, bool allow_binom)
      : text_(text), base_(base), basis_(basis), allow_binom_(allow_binom) {}

  // Returns the terms of a signed sum; each term carries its sign in coeff.
  std::vector<Term> sum() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end())
      fail("empty expression");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      Term t = term();
      if (sign < 0)
        t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      skip_ws();
      if (at_end())
        break;
      if (peek() != '+' && peek() != '-')
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    return terms;
  }

private:
  Term term() {
    Term t;
    bool saw_binom = false;
    for (;;) {
      skip_ws();
      if (at_end())
        fail("expected a number, symbol or binomial");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= number();
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        const std::size_t start = pos_;
        std::string name = identifier();
        skip_ws();
        if (name == "C" && !at_end() && peek() == '(') {
          if (!allow_binom_)
            fail_at(start, "binomial factor not allowed in an angle");
          if (saw_binom)
            fail_at(start, "more than one binomial factor in a term");
          saw_binom = true;
          t.degree = binomial();
        } else {
          if (t.symbol)
            fail_at(start, "product of two basis symbols is not an angle");
          std::optional<std::size_t> idx;
          if (basis_)
            idx = basis_->index_of(name);
          if (!idx)
            fail_at(start, "unknown basis symbol '" + name + "'");
          t.symbol = idx;
        }
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    return t;
  }

  mpq_class number() {
    mpz_class num = integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      mpz_class den = integer();
      if (den == 0)
        fail_at(at, "zero denominator");
      mpq_class q(num, den);
      q.canonicalize();
      return q;
    }
    return mpq_class(num);
  }

  mpz_class integer() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
      ++pos_;
    if (start == pos_)
      fail("expected digits");
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  std::string identifier() {
    const std::size_t start = pos_;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  // C ( n , k )
  unsigned long binomial() {
    expect('(');
    skip_ws();
    const std::size_t var = pos_;
    if (at_end() || identifier() != "n")
      fail_at(var, "binomial must read C(n,k)");
    skip_ws();
    expect(',');
    skip_ws();
    const std::size_t at = pos_;
    mpz_class k = integer();
    if (!k.fits_ulong_p() || k > 64)
      fail_at(at, "binomial degree too large");
    skip_ws();
    expect(')');
    return k.get_ui();
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string &msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string &msg) const {
    throw ParseError(msg, base_ + at);
  }

  std::string_view text_;
  std::size_t base_;
  const BasisPtr &basis_;
  bool allow_binom_;
  std::size_t pos_ = 0;
};

Angle term_angle(const BasisPtr &basis, const Term &t) {
  if (t.symbol)
    return Angle::term(basis, *t.symbol, t.coeff);
  return Angle(t.coeff);
}

} // namespace

Angle parse_angle(std::string_view text, const BasisPtr &basis) {
  Angle r(basis, 0, {});
  for (const Term &t : Parser(text, 0, basis, false).sum())
    r += term_angle(basis, t);
  return r;
}

TorusPoint parse_point(std::string_view text, const BasisPtr &basis) {
  TorusPoint p;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    Angle r(basis, 0, {});
    for (const Term &t : Parser(text.substr(start, end - start), start, basis, false).sum())
      r += term_angle(basis, t);
    p.coords.push_back(std::move(r));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return p;
}

PolyAngle parse_poly(std::string_view text, const BasisPtr &basis) {
  std::vector<Angle> coeffs;
  for (const Term &t : Parser(text, 0, basis, true).sum()) {
    if (coeffs.size() <= t.degree)
      coeffs.resize(t.degree + 1, Angle(basis, 0, {}));
    coeffs[t.degree] += term_angle(basis, t);
  }
  return PolyAngle(std::move(coeffs));
}

std::string format_rational(const mpq_class &q) { return q.get_str(); }

namespace {

// Signed terms of an angle, suffix appended to every term.
void append_terms(std::string &out, const Angle &a, const std::string &suffix) {
  auto emit = [&](const mpq_class &c, const std::string &body) {
    if (out.empty()) {
      out += format_rational(c);
    } else if (c < 0) {
      out += " - ";
      out += format_rational(-c);
    } else {
      out += " + ";
      out += format_rational(c);
    }
    out += body;
  };
  if (a.rat() != 0)
    emit(a.rat(), suffix);
  for (const auto &[index, c] : a.coeffs())
    emit(c, "*" + a.basis()->name(index) + suffix);
}

} // namespace

std::string format_angle(const Angle &a) {
  std::string out;
  append_terms(out, a, "");
  return out.empty() ? "0" : out;
}

std::string format_point(const TorusPoint &p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += ", ";
    out += format_angle(p[i]);
  }
  return out;
}

std::string format_poly(const PolyAngle &p) {
  std::string out;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    append_terms(out, p.coeff(k), k == 0 ? "" : "*C(n," + std::to_string(k) + ")");
  return out.empty() ? "0" : out;
}

} // namespace skewtorus
