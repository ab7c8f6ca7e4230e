#include "clustertilt/laurent.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "clustertilt/error.hpp"

namespace clustertilt {

bool GradedLex::operator()(const Exponents& a, const Exponents& b) const {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  return a < b;
}

LaurentPolynomial LaurentPolynomial::constant(int nvars, const Integer& c) {
  return monomial(nvars, Exponents(static_cast<std::size_t>(nvars), 0), c);
}

LaurentPolynomial LaurentPolynomial::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw InvalidArgument("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(nvars, e);
}

LaurentPolynomial LaurentPolynomial::monomial(int nvars, const Exponents& e, const Integer& c) {
  if (static_cast<int>(e.size()) != nvars) throw InvalidArgument("exponent vector has wrong length");
  LaurentPolynomial p(nvars);
  p.add_term(e, c);
  return p;
}

void LaurentPolynomial::add_term(const Exponents& e, const Integer& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

void LaurentPolynomial::check_compatible(const LaurentPolynomial& o) const {
  if (n_ != o.n_) throw InvalidArgument("Laurent polynomials in different numbers of variables");
}

Exponents LaurentPolynomial::min_exponents() const {
  Exponents m(static_cast<std::size_t>(n_), 0);
  if (terms_.empty()) return m;
  std::fill(m.begin(), m.end(), INT_MAX);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = std::min(m[i], e[i]);
  return m;
}

Exponents LaurentPolynomial::max_exponents() const {
  Exponents m(static_cast<std::size_t>(n_), 0);
  if (terms_.empty()) return m;
  std::fill(m.begin(), m.end(), INT_MIN);
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < e.size(); ++i) m[i] = std::max(m[i], e[i]);
  return m;
}

LaurentPolynomial LaurentPolynomial::shifted(const Exponents& s) const {
  LaurentPolynomial out(n_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    for (std::size_t i = 0; i < f.size(); ++i) f[i] += s[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_compatible(b);
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_compatible(b);
  LaurentPolynomial out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, -c);
  return out;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  a.check_compatible(b);
  LaurentPolynomial out(a.n_);
  Exponents e(static_cast<std::size_t>(a.n_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.n_ != b.n_) return a.n_ < b.n_;
  return std::lexicographical_compare(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
                                      [](const auto& x, const auto& y) {
                                        if (x.first != y.first) return GradedLex{}(x.first, y.first);
                                        return x.second < y.second;
                                      });
}

LaurentPolynomial pow(const LaurentPolynomial& p, int e) {
  if (e < 0) throw InvalidArgument("negative power of a Laurent polynomial");
  LaurentPolynomial out = LaurentPolynomial::constant(p.nvars(), 1);
  for (int i = 0; i < e; ++i) out = out * p;
  return out;
}

std::optional<LaurentPolynomial> LaurentPolynomial::divide_exact(const LaurentPolynomial& divisor) const {
  check_compatible(divisor);
  if (divisor.is_zero()) throw InvalidArgument("division by zero Laurent polynomial");
  if (is_zero()) return LaurentPolynomial(n_);
  if (divisor.is_monomial()) {
    const auto& [de, dc] = *divisor.terms_.begin();
    LaurentPolynomial out(n_);
    for (const auto& [e, c] : terms_) {
      if (!mpz_divisible_p(c.get_mpz_t(), dc.get_mpz_t())) return std::nullopt;
      Exponents f = e;
      for (std::size_t i = 0; i < f.size(); ++i) f[i] -= de[i];
      out.terms_.emplace(std::move(f), c / dc);
    }
    return out;
  }
  // Clear denominators, then run polynomial division by leading terms. With a
  // single divisor the remainder vanishes exactly when the division is exact.
  const Exponents nmin = min_exponents();
  const Exponents dmin = divisor.min_exponents();
  Exponents neg_n(nmin.size()), neg_d(dmin.size()), offset(nmin.size());
  for (std::size_t i = 0; i < nmin.size(); ++i) {
    neg_n[i] = -nmin[i];
    neg_d[i] = -dmin[i];
    offset[i] = nmin[i] - dmin[i];
  }
  LaurentPolynomial rem = shifted(neg_n);
  const LaurentPolynomial den = divisor.shifted(neg_d);
  const auto& [lead_e, lead_c] = *den.terms_.rbegin();
  const Exponents rem_max = rem.max_exponents();
  const Exponents den_max = den.max_exponents();
  LaurentPolynomial quot(n_);
  while (!rem.is_zero()) {
    const auto& [re, rc] = *rem.terms_.rbegin();
    Exponents qe = re;
    for (std::size_t i = 0; i < qe.size(); ++i) {
      qe[i] -= lead_e[i];
      if (qe[i] < 0 || qe[i] > rem_max[i] - den_max[i]) return std::nullopt;
    }
    if (!mpz_divisible_p(rc.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    const Integer qc = rc / lead_c;
    Exponents e(qe.size());
    for (const auto& [de, dc] : den.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = de[i] + qe[i];
      rem.add_term(e, -qc * dc);
    }
    quot.add_term(qe, qc);
  }
  return quot.shifted(offset);
}

std::vector<int> LaurentPolynomial::denominator_vector() const {
  Exponents m = min_exponents();
  for (auto& x : m) x = -x;
  return m;
}

LaurentPolynomial LaurentPolynomial::numerator() const {
  std::vector<int> d = denominator_vector();
  for (auto& x : d) x = std::max(x, 0);
  return shifted(d);
}

bool LaurentPolynomial::numerator_prime_to_variables() const {
  if (is_zero()) return false;
  const LaurentPolynomial num = numerator();
  for (int i = 0; i < n_; ++i) {
    bool survives = false;
    for (const auto& [e, c] : num.terms_)
      if (e[static_cast<std::size_t>(i)] == 0) survives = true;
    if (!survives) return false;
  }
  return true;
}

namespace {

std::string var_name(const std::vector<std::string>& names, std::size_t i) {
  return i < names.size() ? names[i] : "x" + std::to_string(i + 1);
}

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names, bool negate) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    const int p = negate ? -e[i] : e[i];
    if (p <= 0) continue;
    if (!s.empty()) s += '*';
    s += var_name(names, i);
    if (p > 1) s += '^' + std::to_string(p);
  }
  return s;
}

}  // namespace

std::string LaurentPolynomial::polynomial_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    std::string mono = monomial_string(e, names, false);
    std::string neg = monomial_string(e, names, true);
    if (!neg.empty()) mono += (mono.empty() ? "1/" : "/") + (std::count(neg.begin(), neg.end(), '*') ? "(" + neg + ")" : neg);
    Integer mag = abs(c);
    if (first) os << (sgn(c) < 0 ? "-" : "");
    else os << (sgn(c) < 0 ? " - " : " + ");
    first = false;
    if (mono.empty()) os << mag.get_str();
    else if (mono.rfind("1/", 0) == 0 && mag != 1) os << mag.get_str() << mono.substr(1);
    else if (mono.rfind("1/", 0) == 0) os << mono;
    else os << (mag != 1 ? mag.get_str() + "*" : "") << mono;
  }
  return os.str();
}

std::string LaurentPolynomial::to_string(const std::vector<std::string>& names) const {
  std::vector<int> d = denominator_vector();
  for (auto& x : d) x = std::max(x, 0);
  if (std::all_of(d.begin(), d.end(), [](int x) { return x == 0; }) || is_monomial()) return polynomial_string(names);
  const LaurentPolynomial num = numerator();
  const std::string den = monomial_string(d, names, false);
  std::string top = num.polynomial_string(names);
  if (num.terms_.size() > 1) top = "(" + top + ")";
  const bool compound = std::count(den.begin(), den.end(), '*') > 0;
  return top + "/" + (compound ? "(" + den + ")" : den);
}

}  // namespace clustertilt
