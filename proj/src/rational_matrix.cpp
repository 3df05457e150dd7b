#include "qbg/rational_matrix.hpp"

#include <sstream>

#include "qbg/error.hpp"

namespace qbg {

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix dimension");
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::permutation_matrix(const Permutation& w) {
  const int n = w.size();
  RationalMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m(w(i), i) = 1;
  return m;
}

RationalMatrix RationalMatrix::submatrix(ValueSet rows, int cols) const {
  const auto rs = rows.elements();
  RationalMatrix out(static_cast<int>(rs.size()), cols);
  for (std::size_t r = 0; r < rs.size(); ++r)
    for (int c = 1; c <= cols; ++c) out(int(r) + 1, c) = (*this)(rs[r], c);
  return out;
}

std::string RationalMatrix::to_text() const {
  if (rows_ != cols_) throw PreconditionError("matrix file format needs a square matrix");
  std::ostringstream out;
  out << rows_ << '\n';
  for (int r = 1; r <= rows_; ++r) {
    for (int c = 1; c <= cols_; ++c) out << (c > 1 ? " " : "") << (*this)(r, c).get_str();
    out << '\n';
  }
  return out.str();
}

namespace {

mpq_class parse_rational(const std::string& token) {
  const auto slash = token.find('/');
  auto integer = [&](const std::string& s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (start == s.size()) throw ParseError("bad matrix entry '" + token + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw ParseError("bad matrix entry '" + token + "'");
    return mpz_class(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return mpq_class(integer(token));
  const mpz_class num = integer(token.substr(0, slash));
  const mpz_class den = integer(token.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + token + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

// Row-reduces in place; returns pivot columns (0-based).
std::vector<int> row_reduce(std::vector<std::vector<mpq_class>>& a, int cols) {
  std::vector<int> pivots;
  std::size_t row = 0;
  for (int c = 0; c < cols && row < a.size(); ++c) {
    std::size_t p = row;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[row]);
    const mpq_class inv = 1 / a[row][c];
    for (int k = c; k < cols; ++k) a[row][k] *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c] == 0) continue;
      const mpq_class f = a[r][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::vector<std::vector<mpq_class>> to_rows(const RationalMatrix& m) {
  std::vector<std::vector<mpq_class>> a(m.rows(), std::vector<mpq_class>(m.cols()));
  for (int r = 1; r <= m.rows(); ++r)
    for (int c = 1; c <= m.cols(); ++c) a[r - 1][c - 1] = m(r, c);
  return a;
}

} // namespace

RationalMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) throw ParseError("empty matrix file");
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(token, &used);
    if (used != token.size()) throw ParseError("bad matrix size '" + token + "'");
  } catch (const std::logic_error&) {
    throw ParseError("bad matrix size '" + token + "'");
  }
  if (n < 1 || n > 32) throw ParseError("matrix size " + token + " out of range 1..32");
  RationalMatrix m(n, n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      if (!(in >> token))
        throw ParseError("matrix ends early at row " + std::to_string(r) + ", column " +
                         std::to_string(c));
      m(r, c) = parse_rational(token);
    }
  if (in >> token) throw ParseError("unexpected trailing token '" + token + "'");
  return m;
}

mpq_class determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("determinant of a non-square matrix");
  auto a = to_rows(m);
  const int n = m.rows();
  mpq_class det = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const mpq_class f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

int rank(const RationalMatrix& m) {
  auto a = to_rows(m);
  return static_cast<int>(row_reduce(a, m.cols()).size());
}

std::vector<std::vector<mpq_class>> nullspace(const RationalMatrix& m) {
  auto a = to_rows(m);
  const int cols = m.cols();
  const auto pivots = row_reduce(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> x(cols);
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -a[r][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

RationalMatrix chi_rotate(const RationalMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (int r = 1; r <= m.rows(); ++r)
    for (int c = 1; c <= m.cols(); ++c) out(r % m.rows() + 1, c) = m(r, c);
  return out;
}

} // namespace qbg
