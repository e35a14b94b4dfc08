#include "skewtorus/circle.hpp"

#include "skewtorus/errors.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

namespace skewtorus {

BasisDecl::BasisDecl(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string> seen;
  numeric_.reserve(symbols_.size());
  for (const auto &s : symbols_) {
    if (s.name.empty())
      throw ConfigError("basis symbol with empty name");
    if (!seen.insert(s.name).second)
      throw ConfigError("duplicate basis symbol '" + s.name + "'");
    detail::BigFloat v;
    if (mpfr_set_str(v.get(), s.value.c_str(), 10, MPFR_RNDN) != 0)
      throw ConfigError("basis symbol '" + s.name + "': value '" + s.value +
                        "' is not a decimal literal");
    if (mpfr_sgn(v.get()) <= 0 || mpfr_cmp_ui(v.get(), 1) >= 0)
      throw ConfigError("basis symbol '" + s.name + "': value must lie in (0, 1)");
    numeric_.push_back(std::move(v));
  }
}

std::optional<std::size_t> BasisDecl::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name)
      return i;
  return std::nullopt;
}

bool operator==(const BasisDecl &a, const BasisDecl &b) {
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.symbols_[i].name != b.symbols_[i].name ||
        mpfr_cmp(a.numeric(i), b.numeric(i)) != 0)
      return false;
  return true;
}

BasisPtr make_basis(std::vector<BasisDecl::Symbol> symbols) {
  return std::make_shared<const BasisDecl>(std::move(symbols));
}

mpq_class frac(const mpq_class &x) {
  mpq_class q = x;
  q.canonicalize();
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - fl;
}

BasisPtr common_basis(const BasisPtr &a, const BasisPtr &b) {
  if (!a)
    return b;
  if (!b || a == b || *a == *b)
    return a;
  throw ConfigError("angles are declared over different bases");
}

Angle::Angle(BasisPtr basis, const mpq_class &rat, Coeffs coeffs)
    : basis_(std::move(basis)), rat_(frac(rat)) {
  for (auto &[index, c] : coeffs) {
    c.canonicalize();
    if (c == 0)
      continue;
    if (!basis_ || index >= basis_->size())
      throw ConfigError("angle coefficient refers to an undeclared basis symbol");
    coeffs_.emplace(index, std::move(c));
  }
}

Angle Angle::term(BasisPtr basis, std::size_t index, const mpq_class &coeff) {
  return Angle(std::move(basis), 0, Coeffs{{index, coeff}});
}

mpq_class Angle::coeff(std::size_t index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? mpq_class(0) : it->second;
}

mpz_class Angle::denominator_lcm() const {
  mpz_class l = rat_.get_den();
  for (const auto &[_, c] : coeffs_)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

Angle &Angle::operator+=(const Angle &o) {
  basis_ = common_basis(basis_, o.basis_);
  rat_ = frac(rat_ + o.rat_);
  for (const auto &[index, c] : o.coeffs_) {
    auto [it, inserted] = coeffs_.try_emplace(index, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0)
        coeffs_.erase(it);
    }
  }
  return *this;
}

Angle &Angle::operator-=(const Angle &o) { return *this += -o; }

Angle operator-(const Angle &a) {
  Angle r = a;
  r.rat_ = frac(-a.rat_);
  for (auto &[_, c] : r.coeffs_)
    c = -c;
  return r;
}

Angle operator*(const mpz_class &n, const Angle &a) {
  if (n == 0)
    return Angle();
  Angle r = a;
  r.rat_ = frac(mpq_class(n) * a.rat_);
  for (auto &[_, c] : r.coeffs_)
    c *= n;
  return r;
}

bool operator==(const Angle &a, const Angle &b) {
  (void)common_basis(a.basis_, b.basis_);
  return a.rat_ == b.rat_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const Angle &a, const Angle &b) {
  if (a.rat_ != b.rat_)
    return a.rat_ < b.rat_;
  auto ia = a.coeffs_.begin();
  auto ib = b.coeffs_.begin();
  for (; ia != a.coeffs_.end() && ib != b.coeffs_.end(); ++ia, ++ib) {
    if (ia->first != ib->first)
      return ia->first < ib->first;
    if (ia->second != ib->second)
      return ia->second < ib->second;
  }
  return ia == a.coeffs_.end() && ib != b.coeffs_.end();
}

std::optional<mpz_class> torsion_order(const Angle &a) {
  if (!a.is_torsion())
    return std::nullopt;
  return mpz_class(a.rat().get_den());
}

double phase(const Angle &a) {
  detail::BigFloat acc;
  mpfr_set_q(acc.get(), a.rat().get_mpq_t(), MPFR_RNDN);
  if (!a.is_torsion()) {
    detail::BigFloat t;
    for (const auto &[index, c] : a.coeffs()) {
      mpfr_mul_q(t.get(), a.basis()->numeric(index), c.get_mpq_t(), MPFR_RNDN);
      mpfr_add(acc.get(), acc.get(), t.get(), MPFR_RNDN);
    }
  }
  return detail::frac_to_double(acc.get());
}

std::complex<double> to_unit(const Angle &a) {
  // Exact quarter turns avoid sin(pi) != 0 style residue.
  if (a.is_torsion()) {
    const auto &r = a.rat();
    if (r == 0)
      return {1.0, 0.0};
    if (r == mpq_class(1, 4))
      return {0.0, 1.0};
    if (r == mpq_class(1, 2))
      return {-1.0, 0.0};
    if (r == mpq_class(3, 4))
      return {0.0, -1.0};
  }
  const double t = 2.0 * std::numbers::pi * phase(a);
  return {std::cos(t), std::sin(t)};
}

} // namespace skewtorus
