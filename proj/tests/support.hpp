#pragma once

// Random inputs and independent oracles shared by the test suites.

#include <random>
#include <string>

#include "netml/netml.hpp"

namespace netml::testing {

inline Rat small_rat(std::mt19937_64& rng, long bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, 3);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline QMat random_qmat(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound = 5) {
  QMat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = small_rat(rng, bound);
  }
  return m;
}

inline Sym3 random_sym(std::mt19937_64& rng, long bound = 5) {
  return Sym3(small_rat(rng, bound), small_rat(rng, bound), small_rat(rng, bound), small_rat(rng, bound),
              small_rat(rng, bound), small_rat(rng, bound));
}

/// Invertible integer 3x3 matrix with entries in [-2, 2].
inline QMat random_congruence(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> e(-2, 2);
  for (;;) {
    QMat g(3, 3);
    for (std::size_t i = 0; i < 9; ++i) g(i / 3, i % 3) = e(rng);
    if (det(g) != 0) return g;
  }
}

/// Random basis change inside the net, then a random congruence.
inline Net scrambled(const Net& l, std::mt19937_64& rng) {
  QMat g = random_congruence(rng);
  QMat b = random_congruence(rng);
  std::array<Sym3, 3> s;
  for (std::size_t i = 0; i < 3; ++i) {
    Sym3 acc = b(i, 0) * l[0] + b(i, 1) * l[1] + b(i, 2) * l[2];
    s[i] = congruence(g, acc);
  }
  return Net(s);
}

/// Quadratic form in x, y, z to a 6-vector with the off-diagonal convention
/// 2xz -> u13 = 1.
inline Sym3 form_vector(const std::string& text) {
  Poly q = parse_poly(text, plane_vars());
  auto coef = [&](std::size_t i, std::size_t j) {
    Rat c = q.coefficient(Monomial::var(i) * Monomial::var(j));
    return i == j ? c : c / 2;
  };
  return Sym3(coef(0, 0), coef(1, 1), coef(2, 2), coef(0, 1), coef(0, 2), coef(1, 2));
}

/// Rows are the given vectors.
inline QMat rows_of(const std::vector<Sym3>& v) {
  QMat m(v.size(), 6);
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t k = 0; k < 6; ++k) m(i, k) = v[i][k];
  }
  return m;
}

/// Cofactor expansion of a 3x3 matrix, independent of the library's
/// symmetric-coordinate adjugate.
inline QMat cofactor_adjugate(const QMat& m) {
  QMat a(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      a(i, j) = m(r0, c0) * m(r1, c1) - m(r0, c1) * m(r1, c0);
    }
  }
  return a;
}

}  // namespace netml::testing
