#pragma once

// Sparse Laurent polynomials in x_1..x_n with big-integer coefficients.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clustertilt/exact.hpp"

namespace clustertilt {

using Exponents = std::vector<int>;

// Graded lexicographic: total degree first, then lexicographic.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

class LaurentPolynomial {
 public:
  using Terms = std::map<Exponents, Integer, GradedLex>;

  LaurentPolynomial() = default;
  explicit LaurentPolynomial(int nvars) : n_(nvars) {}

  static LaurentPolynomial constant(int nvars, const Integer& c);
  static LaurentPolynomial variable(int nvars, int i);
  static LaurentPolynomial monomial(int nvars, const Exponents& e, const Integer& c = 1);

  int nvars() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Adds c * x^e, dropping the term if it cancels.
  void add_term(const Exponents& e, const Integer& c);

  // Per-variable minimum / maximum exponent over all terms.
  Exponents min_exponents() const;
  Exponents max_exponents() const;
  LaurentPolynomial shifted(const Exponents& e) const;  // times x^e

  // Quotient when `divisor` divides this exactly in the Laurent ring over Z.
  std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& divisor) const;

  // d_i = -(minimal exponent of x_i).
  std::vector<int> denominator_vector() const;
  // x^max(d, 0) * this; a polynomial whenever the denominator vector is >= 0.
  LaurentPolynomial numerator() const;
  // The numerator does not vanish identically at x_i = 0, for every i.
  bool numerator_prime_to_variables() const;

  // Renders as "(x2 + 1)/x1"; names default to x1..xn.
  std::string to_string(const std::vector<std::string>& names = {}) const;
  std::string polynomial_string(const std::vector<std::string>& names = {}) const;

  friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }
  friend bool operator<(const LaurentPolynomial& a, const LaurentPolynomial& b);

 private:
  void check_compatible(const LaurentPolynomial& o) const;

  int n_ = 0;
  Terms terms_;
};

LaurentPolynomial pow(const LaurentPolynomial& p, int e);

}  // namespace clustertilt
