#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "qbg/permutation.hpp"

namespace qbg {

/// Dense matrix of exact rationals, indexed from 1.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);
  /// 1 at (w(i), i), 0 elsewhere.
  static RationalMatrix permutation_matrix(const Permutation& w);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  mpq_class& operator()(int r, int c) { return data_[(r - 1) * cols_ + (c - 1)]; }
  const mpq_class& operator()(int r, int c) const { return data_[(r - 1) * cols_ + (c - 1)]; }

  /// Rows in `rows` (increasing), columns 1..cols.
  RationalMatrix submatrix(ValueSet rows, int cols) const;

  /// Matrix file format: "n" on the first line, then n rows of space-separated rationals.
  std::string to_text() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

/// Parses the matrix file format. Entries are "p/q" or integers. Throws ParseError.
RationalMatrix parse_matrix(std::string_view text);

/// Throws PreconditionError for a non-square matrix.
mpq_class determinant(const RationalMatrix& m);
int rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}, one vector of length cols() per free column of the reduced form.
std::vector<std::vector<mpq_class>> nullspace(const RationalMatrix& m);

/// Rows (v_1, ..., v_n) become (v_n, v_1, ..., v_{n-1}).
RationalMatrix chi_rotate(const RationalMatrix& m);

} // namespace qbg
