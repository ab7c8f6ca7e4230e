#pragma once

// Exact scalars and dense rational matrices. Every zero test in the library
// goes through these types; there is no floating point anywhere.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace clustertilt {

using Integer = mpz_class;
using Rational = mpq_class;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  RationalMatrix transpose() const;
  std::vector<Rational> column(std::size_t c) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  // Columns [first, first + count).
  RationalMatrix column_block(std::size_t first, std::size_t count) const;

  std::string to_string() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form with the pivot column of each nonzero row.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(RationalMatrix m);
std::size_t rank(const RationalMatrix& m);

// Basis of {x : m x = 0}, one basis vector per column of the result.
RationalMatrix nullspace(const RationalMatrix& m);

// Some x with m x = rhs, or nullopt when the system is inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& rhs);

bool is_zero(const std::vector<Rational>& v);

// True when a and b are both nonzero and a = c * b for some scalar c != 0.
bool proportional_nonzero(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Rank of the span of a list of vectors of equal length.
std::size_t span_rank(const std::vector<std::vector<Rational>>& vectors, std::size_t length);

}  // namespace clustertilt
