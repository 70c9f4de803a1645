#pragma once

// Symmetric 3x3 matrices, nets of conics and their elementary invariants.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "netml/error.hpp"
#include "netml/groebner.hpp"
#include "netml/mpoly.hpp"
#include "netml/qla.hpp"

namespace netml {

/// Coordinates of a symmetric 3x3 matrix, always in the order
/// (u11, u22, u33, u12, u13, u23). The same order indexes the quadratic
/// monomials (a^2, b^2, c^2, ab, ac, bc) of a net's parameters.
inline constexpr std::array<std::array<std::size_t, 2>, 6> kSymIndex{
    {{0, 0}, {1, 1}, {2, 2}, {0, 1}, {0, 2}, {1, 2}}};

inline constexpr std::size_t sym_slot(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  if (i == j) return i;
  return i == 0 ? (j == 1 ? 3 : 4) : 5;
}

// The helpers below are written once for any commutative ring element type
// (Rat for concrete matrices, Poly for symbolic ones).

template <class T>
using SymCoords = std::array<T, 6>;

template <class T>
T sym_det(const SymCoords<T>& u) {
  const auto& [a, b, c, d, e, f] = u;  // u11 u22 u33 u12 u13 u23
  return a * (b * c - f * f) - d * (d * c - f * e) + e * (d * f - b * e);
}

template <class T>
SymCoords<T> sym_adjugate(const SymCoords<T>& u) {
  const auto& [a, b, c, d, e, f] = u;
  return {b * c - f * f, a * c - e * e, a * b - d * d, e * f - d * c, d * f - e * b, d * e - a * f};
}

/// trace(MN) = sum_i M_ii N_ii + 2 sum_{i<j} M_ij N_ij.
template <class T>
T sym_trace_pair(const SymCoords<T>& m, const SymCoords<T>& n) {
  T diag = m[0] * n[0] + m[1] * n[1] + m[2] * n[2];
  T off = m[3] * n[3] + m[4] * n[4] + m[5] * n[5];
  return diag + off + off;
}

/// Symmetric product A B A for symmetric A, B.
template <class T>
SymCoords<T> sym_sandwich(const SymCoords<T>& a, const SymCoords<T>& b) {
  auto at = [&](const SymCoords<T>& s, std::size_t i, std::size_t j) -> const T& { return s[sym_slot(i, j)]; };
  std::array<std::array<std::optional<T>, 3>, 3> ab;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      T s = at(a, i, 0) * at(b, 0, j);
      s = s + at(a, i, 1) * at(b, 1, j);
      s = s + at(a, i, 2) * at(b, 2, j);
      ab[i][j] = std::move(s);
    }
  }
  std::array<std::optional<T>, 6> out;
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kSymIndex[k];
    T s = *ab[i][0] * at(a, 0, j);
    s = s + *ab[i][1] * at(a, 1, j);
    s = s + *ab[i][2] * at(a, 2, j);
    out[k] = std::move(s);
  }
  return {*out[0], *out[1], *out[2], *out[3], *out[4], *out[5]};
}

class Sym3 {
 public:
  Sym3() = default;
  explicit Sym3(SymCoords<Rat> c) : c_(std::move(c)) {}
  Sym3(Rat u11, Rat u22, Rat u33, Rat u12, Rat u13, Rat u23)
      : c_{std::move(u11), std::move(u22), std::move(u33), std::move(u12), std::move(u13), std::move(u23)} {}

  /// From a 3x3 matrix; asymmetric input is a format error.
  static Sym3 from_matrix(const QMat& m) {
    if (m.rows() != 3 || m.cols() != 3) throw DimensionError("Sym3 needs a 3x3 matrix");
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        if (m(i, j) != m(j, i)) throw FormatError("matrix is not symmetric");
      }
    }
    return Sym3(m(0, 0), m(1, 1), m(2, 2), m(0, 1), m(0, 2), m(1, 2));
  }

  /// v v^T.
  static Sym3 outer(const std::array<Rat, 3>& v) {
    return Sym3(v[0] * v[0], v[1] * v[1], v[2] * v[2], v[0] * v[1], v[0] * v[2], v[1] * v[2]);
  }

  const SymCoords<Rat>& coords() const { return c_; }
  const Rat& operator[](std::size_t k) const { return c_[k]; }
  const Rat& at(std::size_t i, std::size_t j) const { return c_[sym_slot(i, j)]; }

  QMat matrix() const {
    QMat m(3, 3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = at(i, j);
    }
    return m;
  }
  QMat row_vector() const { return QMat(1, 6, std::vector<Rat>(c_.begin(), c_.end())); }

  Rat det() const { return sym_det(c_); }
  Sym3 adjugate() const { return Sym3(sym_adjugate(c_)); }
  std::size_t rank() const { return netml::rank(matrix()); }
  bool is_zero() const {
    for (const auto& x : c_) {
      if (x != 0) return false;
    }
    return true;
  }

  friend Sym3 operator+(const Sym3& a, const Sym3& b) {
    SymCoords<Rat> c;
    for (std::size_t k = 0; k < 6; ++k) c[k] = a.c_[k] + b.c_[k];
    return Sym3(c);
  }
  friend Sym3 operator-(const Sym3& a, const Sym3& b) {
    SymCoords<Rat> c;
    for (std::size_t k = 0; k < 6; ++k) c[k] = a.c_[k] - b.c_[k];
    return Sym3(c);
  }
  friend Sym3 operator*(const Rat& s, const Sym3& a) {
    SymCoords<Rat> c;
    for (std::size_t k = 0; k < 6; ++k) c[k] = s * a.c_[k];
    return Sym3(c);
  }
  friend bool operator==(const Sym3&, const Sym3&) = default;

 private:
  SymCoords<Rat> c_{};
};

inline Rat trace_pair(const Sym3& m, const Sym3& n) { return sym_trace_pair(m.coords(), n.coords()); }
inline Sym3 adjugate(const Sym3& m) { return m.adjugate(); }

/// Quadratic form a x^2 + b y^2 + c z^2 + 2d xy + 2e xz + 2f yz as the
/// matrix with coordinates (a, b, c, d, e, f): a cross term 2xz has u13 = 1.
inline Sym3 quadric(Rat xx, Rat yy, Rat zz, Rat xy2, Rat xz2, Rat yz2) {
  return Sym3(std::move(xx), std::move(yy), std::move(zz), xy2 / 2, xz2 / 2, yz2 / 2);
}

/// g^T M g.
inline Sym3 congruence(const QMat& g, const Sym3& m) {
  if (g.rows() != 3 || g.cols() != 3) throw DimensionError("congruence needs a 3x3 transform");
  if (det(g) == 0) throw InvalidTransformError("congruence transform is singular");
  return Sym3::from_matrix(transpose(g) * m.matrix() * g);
}

/// A 3-dimensional subspace of symmetric 3x3 matrices with an ordered basis.
class Net {
 public:
  explicit Net(std::array<Sym3, 3> basis) : b_(std::move(basis)) {
    if (netml::rank(coordinate_matrix()) != 3) throw FormatError("net basis is not linearly independent");
  }
  Net(Sym3 s1, Sym3 s2, Sym3 s3) : Net(std::array<Sym3, 3>{std::move(s1), std::move(s2), std::move(s3)}) {}

  const std::array<Sym3, 3>& basis() const { return b_; }
  const Sym3& operator[](std::size_t i) const { return b_[i]; }

  /// 3x6 matrix whose rows are the basis coordinates.
  QMat coordinate_matrix() const {
    QMat m(3, 6);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t k = 0; k < 6; ++k) m(i, k) = b_[i][k];
    }
    return m;
  }

  /// alpha S1 + beta S2 + gamma S3.
  Sym3 member(const Rat& alpha, const Rat& beta, const Rat& gamma) const {
    return alpha * b_[0] + beta * b_[1] + gamma * b_[2];
  }

  /// Subspace equality, independent of the chosen bases.
  bool same_span(const Net& o) const { return same_row_space(coordinate_matrix(), o.coordinate_matrix()); }

 private:
  std::array<Sym3, 3> b_;
};

inline Net net_congruence(const QMat& g, const Net& l) {
  return Net(congruence(g, l[0]), congruence(g, l[1]), congruence(g, l[2]));
}

// ---------------------------------------------------------------------------
// Wall types

enum class WallTag { A, B, Bs, C, D, Ds, E, Es, F, Fs, G, Gs, H, I, Is };

inline constexpr std::array<WallTag, 15> kAllTags{WallTag::A,  WallTag::B, WallTag::Bs, WallTag::C, WallTag::D,
                                                  WallTag::Ds, WallTag::E, WallTag::Es, WallTag::F, WallTag::Fs,
                                                  WallTag::G,  WallTag::Gs, WallTag::H, WallTag::I, WallTag::Is};

/// The 13 types of regular nets in table order.
inline constexpr std::array<WallTag, 13> kRegularTags{WallTag::A,  WallTag::B, WallTag::Bs, WallTag::C, WallTag::D,
                                                      WallTag::Ds, WallTag::E, WallTag::Es, WallTag::F, WallTag::Fs,
                                                      WallTag::G,  WallTag::Gs, WallTag::H};

inline std::string tag_name(WallTag t) {
  static constexpr std::array<const char*, 15> names{"A", "B", "B*", "C", "D", "D*", "E", "E*",
                                                     "F", "F*", "G", "G*", "H", "I", "I*"};
  return names[static_cast<std::size_t>(t)];
}

/// Accepts "B*" as well as "Bs" / "Bstar".
inline WallTag parse_tag(std::string_view s) {
  std::string n(s);
  if (n.size() > 1 && (n.substr(1) == "s" || n.substr(1) == "star")) n = n.substr(0, 1) + "*";
  for (auto t : kAllTags) {
    if (tag_name(t) == n) return t;
  }
  throw ParameterError("unknown net type '" + std::string(s) + "'");
}

struct WallType {
  WallTag tag = WallTag::A;
  Rat g = 1;  // only meaningful for type A
  Rat c = 1;

  static WallType of(WallTag t) {
    if (t == WallTag::A) return a(1, 1);
    return WallType{t, 0, 0};
  }
  /// Type A with parameters subject to 0 != c != -9 g^2.
  static WallType a(Rat g, Rat c) {
    if (c == 0 || c == -9 * g * g) throw ParameterError("type A needs 0 != c != -9g^2");
    return WallType{WallTag::A, std::move(g), std::move(c)};
  }

  std::string name() const {
    if (tag != WallTag::A) return tag_name(tag);
    return "A(g=" + g.get_str() + ", c=" + c.get_str() + ")";
  }
};

namespace detail {

// Table 3 generators with parameters (g, c); B, B* and C reuse the type A
// pattern at fixed parameters.
inline Net abc_family(const Rat& g, const Rat& c) {
  return Net(quadric(0, 1, 0, 0, 2, 0), quadric(0, 0, 0, 0, 0, 2), quadric(-1, -2 * g, c, 0, 2 * g, 0));
}

}  // namespace detail

inline Net canonical_net(const WallType& t) {
  using detail::abc_family;
  switch (t.tag) {
    case WallTag::A:
      if (t.c == 0 || t.c == -9 * t.g * t.g) throw ParameterError("type A needs 0 != c != -9g^2");
      return abc_family(t.g, t.c);
    case WallTag::B:
      return abc_family(1, -9);
    case WallTag::Bs:
      return abc_family(1, 0);
    case WallTag::C:
      return abc_family(0, 0);
    case WallTag::D:
      return Net(quadric(1, 0, 0, 0, 0, 0), quadric(0, 1, 0, 0, 0, 0), quadric(0, 0, 1, 2, 0, 0));
    case WallTag::Ds:
      return Net(quadric(0, 0, 0, 0, 2, 0), quadric(0, 0, 0, 0, 0, 2), quadric(0, 0, 1, 2, 0, 0));
    case WallTag::E:
      return Net(quadric(1, 0, 0, 0, 0, 0), quadric(0, 1, 0, 0, 0, 0), quadric(0, 0, 1, 0, 0, 0));
    case WallTag::Es:
      return Net(quadric(0, 0, 0, 0, 2, 0), quadric(0, 0, 0, 0, 0, 2), quadric(0, 0, 0, 2, 0, 0));
    case WallTag::F:
      return Net(quadric(1, 0, 0, 0, 0, 0), quadric(0, 1, 0, 0, 0, 0), quadric(0, 0, 0, 0, 2, 2));
    case WallTag::Fs:
      return Net(quadric(1, 0, 0, 0, 0, 0), quadric(0, 0, 0, 2, 0, 0), quadric(0, 1, 1, 0, 0, 0));
    case WallTag::G:
      return Net(quadric(1, 0, 0, 0, 0, 0), quadric(0, 1, 0, 0, 0, 0), quadric(0, 0, 0, 0, 0, 2));
    case WallTag::Gs:
      return Net(quadric(1, 0, 0, 0, 0, 0), quadric(0, 0, 0, 2, 0, 0), quadric(0, 0, 0, 0, 0, 2));
    case WallTag::H:
      return Net(quadric(1, 0, 0, 0, 0, 0), quadric(0, 0, 0, 2, 0, 0), quadric(0, 1, 0, 0, 2, 0));
    case WallTag::I:
      return Net(quadric(1, 0, 0, 0, 0, 0), quadric(0, 0, 0, 2, 0, 0), quadric(0, 1, 0, 0, 0, 0));
    case WallTag::Is:
      return Net(quadric(0, 0, 0, 0, 2, 0), quadric(0, 0, 0, 0, 0, 2), quadric(0, 0, 1, 0, 0, 0));
  }
  throw ParameterError("unknown net type");
}

inline Net canonical_net(WallTag t) { return canonical_net(WallType::of(t)); }

// ---------------------------------------------------------------------------
// Rings used throughout: net parameters, ambient matrix coordinates and
// plane coordinates.

inline const VarList& param_vars() {
  static const VarList v = make_vars({"alpha", "beta", "gamma"});
  return v;
}
inline const VarList& sym_vars() {
  static const VarList v = make_vars({"u11", "u22", "u33", "u12", "u13", "u23"});
  return v;
}
inline const VarList& plane_vars() {
  static const VarList v = make_vars({"x", "y", "z"});
  return v;
}

/// Coordinates of alpha S1 + beta S2 + gamma S3 as linear forms in `vars`,
/// whose first three variables play the roles of alpha, beta, gamma.
inline SymCoords<Poly> symbolic_member(const Net& l, const VarList& vars, std::size_t first = 0) {
  std::array<std::optional<Poly>, 6> out;
  for (std::size_t k = 0; k < 6; ++k) {
    Poly p(vars);
    for (std::size_t i = 0; i < 3; ++i) p.add_term(Monomial::var(first + i), l[i][k]);
    out[k] = std::move(p);
  }
  return {*out[0], *out[1], *out[2], *out[3], *out[4], *out[5]};
}

inline SymCoords<Poly> constant_sym(const Sym3& s, const VarList& vars) {
  const auto& c = s.coords();
  return {Poly::constant(vars, c[0]), Poly::constant(vars, c[1]), Poly::constant(vars, c[2]),
          Poly::constant(vars, c[3]), Poly::constant(vars, c[4]), Poly::constant(vars, c[5])};
}

/// det(alpha S1 + beta S2 + gamma S3), a ternary cubic or zero.
inline Poly net_determinant(const Net& l) { return sym_det(symbolic_member(l, param_vars())); }

/// A net is regular when it contains an invertible matrix.
inline bool is_regular(const Net& l) { return !net_determinant(l).is_zero(); }

/// Polar net: the annihilator of L under the trace pairing.
inline Net polar_net(const Net& l) {
  QMat a(3, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t k = 0; k < 6; ++k) a(i, k) = (k < 3 ? 1 : 2) * l[i][k];
  }
  QMat k = right_kernel(a);
  std::array<Sym3, 3> b;
  for (std::size_t j = 0; j < 3; ++j) {
    b[j] = Sym3(k(0, j), k(1, j), k(2, j), k(3, j), k(4, j), k(5, j));
  }
  return Net(b);
}

/// The 6x6 matrix T with adj(alpha S1 + beta S2 + gamma S3) = T m, where m
/// lists the monomials (a^2, b^2, c^2, ab, ac, bc) and both sides use the
/// Sym3 coordinate order.
inline QMat transformation_matrix(const Net& l) {
  auto adj = [](const Sym3& s) { return s.adjugate(); };
  // The adjugate is a quadratic map; mixed monomials come from polarization.
  std::array<Sym3, 6> cols{
      adj(l[0]),
      adj(l[1]),
      adj(l[2]),
      adj(l[0] + l[1]) - adj(l[0]) - adj(l[1]),
      adj(l[0] + l[2]) - adj(l[0]) - adj(l[2]),
      adj(l[1] + l[2]) - adj(l[1]) - adj(l[2]),
  };
  QMat t(6, 6);
  for (std::size_t j = 0; j < 6; ++j) {
    for (std::size_t k = 0; k < 6; ++k) t(k, j) = cols[j][k];
  }
  return t;
}

/// Ideal in (alpha, beta, gamma) of all 2x2 minors of the generic member;
/// its projective zeros are the rank-one matrices of PL.
inline Ideal rank_one_points(const Net& l) {
  auto u = symbolic_member(l, param_vars());
  auto at = [&](std::size_t i, std::size_t j) -> const Poly& { return u[sym_slot(i, j)]; };
  std::vector<Poly> minors;
  for (std::size_t r0 = 0; r0 < 3; ++r0) {
    for (std::size_t r1 = r0 + 1; r1 < 3; ++r1) {
      for (std::size_t c0 = 0; c0 < 3; ++c0) {
        for (std::size_t c1 = c0 + 1; c1 < 3; ++c1) {
          minors.push_back(at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0));
        }
      }
    }
  }
  return Ideal(param_vars(), std::move(minors));
}

/// The quadratic form x^T S x in (x, y, z).
inline Poly conic_form(const Sym3& s) {
  const auto& v = plane_vars();
  Poly q(v);
  for (std::size_t k = 0; k < 6; ++k) {
    auto [i, j] = kSymIndex[k];
    q.add_term(Monomial::var(i) * Monomial::var(j), (i == j ? 1 : 2) * s[k]);
  }
  return q;
}

/// Ideal <q1, q2, q3> of the base locus of the conics in P^2.
inline Ideal common_zeros(const Net& l) {
  return Ideal(plane_vars(), {conic_form(l[0]), conic_form(l[1]), conic_form(l[2])});
}

/// Basis (one 6-vector per row) of X(M) = {N symmetric : M N = 0}.
inline QMat x_space(const Sym3& m) {
  QMat eq(9, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      // (MN)_ij = sum_k M_ik N_kj
      for (std::size_t k = 0; k < 3; ++k) eq(3 * i + j, sym_slot(k, j)) += m.at(i, k);
    }
  }
  return transpose(right_kernel(eq));
}

}  // namespace netml
