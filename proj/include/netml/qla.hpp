#pragma once

// Exact rational scalars and dense matrices over Q.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netml/error.hpp"

namespace netml {

/// Arbitrary-precision rational. GMP keeps every value canonical: the
/// denominator is positive and coprime to the numerator.
using Rat = mpq_class;

/// "p/q", or "p" when q == 1.
inline std::string to_string(const Rat& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q" (whitespace tolerated around the tokens).
inline Rat parse_rat(std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  }
  if (s.empty()) throw FormatError("empty rational literal");
  auto valid_int = [](std::string_view v) {
    std::size_t i = (!v.empty() && (v[0] == '-' || v[0] == '+')) ? 1 : 0;
    if (i == v.size()) return false;
    for (; i < v.size(); ++i) {
      if (v[i] < '0' || v[i] > '9') return false;
    }
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') {
    throw FormatError("malformed rational literal '" + std::string(text) + "'");
  }
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw FormatError("zero denominator in '" + std::string(text) + "'");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

/// Dense row-major matrix over Q.
class QMat {
 public:
  QMat() = default;
  QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  QMat(std::size_t rows, std::size_t cols, std::vector<Rat> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows_ * cols_) throw DimensionError("entry count does not match shape");
  }
  QMat(std::initializer_list<std::initializer_list<Rat>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionError("ragged matrix literal");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static QMat identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return a_.empty(); }

  Rat& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  std::span<const Rat> row(std::size_t r) const { return {a_.data() + r * cols_, cols_}; }
  std::vector<Rat> column(std::size_t c) const {
    std::vector<Rat> v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
  }
  const std::vector<Rat>& entries() const { return a_; }

  bool is_zero() const {
    for (const auto& x : a_) {
      if (x != 0) return false;
    }
    return true;
  }

  friend bool operator==(const QMat& a, const QMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

inline std::ostream& operator<<(std::ostream& os, const QMat& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c).get_str();
    os << ']';
  }
  return os << ']';
}

struct RrefResult {
  QMat reduced;
  std::vector<std::size_t> pivots;
};

inline RrefResult rref(const QMat& a) {
  QMat m = a;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t p = lead;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != lead) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(lead, k));
    }
    Rat inv = 1 / m(lead, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m(r, c) == 0) continue;
      Rat f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(lead, k);
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const QMat& a) { return rref(a).pivots.size(); }

/// Columns form a basis of {x : A x = 0}, one column per free column of
/// rref(A), in increasing order of the free column.
inline QMat right_kernel(const QMat& a) {
  auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  QMat k(a.cols(), free.size());
  for (std::size_t j = 0; j < free.size(); ++j) {
    k(free[j], j) = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) k(pivots[i], j) = -r(i, free[j]);
  }
  return k;
}

inline QMat transpose(const QMat& a) {
  QMat t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = a(r, c);
  }
  return t;
}

/// Rows form a basis of {y : y A = 0}.
inline QMat left_kernel(const QMat& a) { return transpose(right_kernel(transpose(a))); }

inline QMat operator*(const QMat& a, const QMat& b) {
  if (a.cols() != b.rows()) throw DimensionError("matmul: inner dimensions differ");
  QMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

inline QMat operator+(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("add: shapes differ");
  QMat c(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) = a(r, k) + b(r, k);
  }
  return c;
}

inline QMat operator-(const QMat& a, const QMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("sub: shapes differ");
  QMat c(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) = a(r, k) - b(r, k);
  }
  return c;
}

inline QMat scale(const Rat& s, const QMat& a) {
  QMat c = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) c(r, k) *= s;
  }
  return c;
}

inline Rat det(const QMat& a) {
  if (a.rows() != a.cols()) throw DimensionError("det: matrix is not square");
  QMat m = a;
  const std::size_t n = m.rows();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rat f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

inline QMat inverse(const QMat& a) {
  if (a.rows() != a.cols()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = a.rows();
  QMat aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
    aug(r, n + r) = 1;
  }
  auto [red, pivots] = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw InvalidTransformError("matrix is singular");
  QMat inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = red(r, n + c);
  }
  return inv;
}

/// Stacks the rows of a over the rows of b.
inline QMat vstack(const QMat& a, const QMat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw DimensionError("vstack: column counts differ");
  std::vector<Rat> e = a.entries();
  e.insert(e.end(), b.entries().begin(), b.entries().end());
  return QMat(a.rows() + b.rows(), a.cols(), std::move(e));
}

/// True when the row spaces of a and b coincide.
inline bool same_row_space(const QMat& a, const QMat& b) {
  if (a.cols() != b.cols()) return false;
  std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(vstack(a, b));
}

/// True when every row of a lies in the row space of b.
inline bool row_space_contains(const QMat& b, const QMat& a) {
  if (a.rows() == 0) return true;
  if (a.cols() != b.cols()) return false;
  return rank(b) == rank(vstack(b, a));
}

}  // namespace netml
