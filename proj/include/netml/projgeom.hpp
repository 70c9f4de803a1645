#pragma once

// Hilbert data of homogeneous ideals, reciprocal surfaces of nets, polar
// planes and ML-base loci.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netml/conics.hpp"
#include "netml/groebner.hpp"
#include "netml/mpoly.hpp"
#include "netml/qla.hpp"

namespace netml {

struct HilbertData {
  /// Projective dimension; -1 for the empty scheme.
  int dimension = -1;
  /// Scheme-theoretic degree; 0 for the empty scheme.
  long degree = 0;
  /// Hilbert polynomial coefficients, constant term first.
  std::vector<Rat> hilbert_polynomial;
  /// Numerator N(t) of the Hilbert series N(t) / (1 - t)^n.
  std::vector<long> numerator;
};

namespace detail {

using Numerator = std::vector<long>;

inline void add_into(Numerator& a, const Numerator& b, std::size_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

inline void minimize_monomials(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.e < b.e;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& o : out) {
      if (o.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  gens = std::move(out);
}

/// Numerator of the Hilbert series of Q[x]/<gens> by pivot splitting:
/// N(I) = N(I + <x>) + t N(I : x).
inline Numerator hilbert_numerator(std::vector<Monomial> gens, std::size_t nvars) {
  minimize_monomials(gens);
  if (gens.empty()) return {1};
  // Base case: pairwise coprime generators.
  bool coprime = true;
  for (std::size_t i = 0; i < gens.size() && coprime; ++i) {
    for (std::size_t j = i + 1; j < gens.size() && coprime; ++j) {
      if (!gens[i].coprime(gens[j])) coprime = false;
    }
  }
  if (coprime) {
    Numerator n{1};
    for (const auto& g : gens) {
      Numerator next(n.size() + g.degree(), 0);
      for (std::size_t i = 0; i < n.size(); ++i) {
        next[i] += n[i];
        next[i + g.degree()] -= n[i];
      }
      n = std::move(next);
    }
    return n;
  }
  // Pivot on the variable occurring in the most non-linear generators.
  std::size_t best = 0, best_count = 0;
  for (std::size_t v = 0; v < nvars; ++v) {
    std::size_t count = 0;
    for (const auto& g : gens) {
      if (g.e[v] && g.degree() > 1) ++count;
    }
    if (count > best_count) {
      best = v;
      best_count = count;
    }
  }
  Monomial x = Monomial::var(best);
  std::vector<Monomial> plus = gens;
  plus.push_back(x);
  std::vector<Monomial> colon;
  for (const auto& g : gens) colon.push_back(g / gcd(g, x));
  Numerator n = hilbert_numerator(std::move(plus), nvars);
  add_into(n, hilbert_numerator(std::move(colon), nvars), 1);
  while (n.size() > 1 && n.back() == 0) n.pop_back();
  return n;
}

/// Binomial(s + a, k) as a polynomial in s, constant term first.
inline std::vector<Rat> binomial_poly(long a, std::size_t k) {
  std::vector<Rat> p{Rat(1)};
  for (std::size_t i = 1; i <= k; ++i) {
    // multiply by (s + a - i + 1) / i
    Rat shift(a - static_cast<long>(i) + 1);
    std::vector<Rat> q(p.size() + 1);
    for (std::size_t j = 0; j < p.size(); ++j) {
      q[j + 1] += p[j] / static_cast<long>(i);
      q[j] += p[j] * shift / static_cast<long>(i);
    }
    p = std::move(q);
  }
  return p;
}

}  // namespace detail

/// Hilbert data of the projective scheme cut out by the leading monomials
/// `lead` in `nvars` variables.
inline HilbertData hilbert_from_monomials(const std::vector<Monomial>& lead, std::size_t nvars) {
  HilbertData h;
  detail::Numerator n = detail::hilbert_numerator(lead, nvars);
  h.numerator = n;
  // Divide out (1 - t) while it divides N(t).
  std::size_t k = 0;
  while (k < nvars) {
    long s = 0;
    for (long c : n) s += c;
    if (s != 0) break;
    detail::Numerator q(n.size() - 1, 0);
    long acc = 0;
    for (std::size_t i = 0; i + 1 < n.size(); ++i) {
      acc += n[i];
      q[i] = acc;
    }
    n = std::move(q);
    ++k;
  }
  const long affine_dim = static_cast<long>(nvars) - static_cast<long>(k);
  if (affine_dim == 0) return h;
  h.dimension = static_cast<int>(affine_dim - 1);
  long deg = 0;
  for (long c : n) deg += c;
  h.degree = deg;
  // HP(s) = sum_j q_j binom(s - j + D - 1, D - 1), D = affine dimension.
  const std::size_t d1 = static_cast<std::size_t>(affine_dim - 1);
  std::vector<Rat> hp(d1 + 1);
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (n[j] == 0) continue;
    auto b = detail::binomial_poly(static_cast<long>(d1) - static_cast<long>(j), d1);
    for (std::size_t i = 0; i < b.size(); ++i) hp[i] += b[i] * n[j];
  }
  h.hilbert_polynomial = std::move(hp);
  return h;
}

inline void require_homogeneous(const Ideal& ideal) {
  for (const auto& g : ideal.generators()) {
    if (!is_homogeneous(g)) throw ContractError("ideal has a non-homogeneous generator: " + to_string(g));
  }
}

/// Dimension, degree and Hilbert polynomial of Proj(Q[x]/I).
inline HilbertData hilbert(const Ideal& ideal) {
  require_homogeneous(ideal);
  auto ord = MonomialOrder::grevlex();
  return hilbert_from_monomials(leading_monomials(groebner_basis(ideal, ord), ord), ideal.nvars());
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  if (!same_context(a.vars(), b.vars())) throw ContextError("ideal sum across different rings");
  std::vector<Poly> g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.vars(), std::move(g));
}

/// Degrees of a minimal homogeneous generating set, ascending.
inline std::vector<unsigned> minimal_generator_degrees(const Ideal& ideal) {
  require_homogeneous(ideal);
  auto gb = groebner_basis(ideal, MonomialOrder::grevlex());
  std::stable_sort(gb.begin(), gb.end(), [](const Poly& a, const Poly& b) { return a.total_degree() < b.total_degree(); });
  std::vector<Poly> kept;
  std::vector<unsigned> degs;
  for (const auto& g : gb) {
    if (!kept.empty() && contains(Ideal(ideal.vars(), kept), g)) continue;
    kept.push_back(g);
    degs.push_back(static_cast<unsigned>(g.total_degree()));
  }
  return degs;
}

// ---------------------------------------------------------------------------
// Zero-dimensional solving

namespace detail {

/// Dense univariate polynomial, constant term first, no trailing zeros.
using UPoly = std::vector<Rat>;

inline void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Rat ueval(const UPoly& p, const Rat& x) {
  Rat s = 0;
  for (std::size_t i = p.size(); i-- > 0;) s = s * x + p[i];
  return s;
}

inline UPoly uderiv(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

inline std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  UPoly q;
  trim(a);
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rat(0));
  for (std::size_t i = a.size(); i-- >= b.size();) {
    Rat f = a[i] / b.back();
    q[i - (b.size() - 1)] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[i - (b.size() - 1) + j] -= f * b[j];
    if (i == b.size() - 1) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

inline UPoly ugcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

inline UPoly squarefree_part(const UPoly& p) {
  if (p.size() <= 2) return p;
  UPoly g = ugcd(p, uderiv(p));
  return udivmod(p, g).first;
}

inline int sign_changes(const std::vector<UPoly>& chain, const Rat& x) {
  int changes = 0, last = 0;
  for (const auto& p : chain) {
    int s = sgn(ueval(p, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Rational roots of p, ascending. Real roots are isolated with a Sturm
/// sequence; a rational root has denominator dividing the leading
/// coefficient of the integer-scaled polynomial, which bounds the search.
inline std::vector<Rat> rational_roots(const UPoly& input) {
  UPoly p = squarefree_part(input);
  trim(p);
  std::vector<Rat> roots;
  if (p.size() <= 1) return roots;
  if (p[0] == 0) {
    roots.push_back(0);
    p.erase(p.begin());
  }
  if (p.size() <= 1) return roots;
  mpz_class den = 1;
  for (const auto& c : p) den = lcm(den, mpz_class(c.get_den()));
  mpz_class lead = abs(mpz_class(p.back() * den));
  std::vector<UPoly> chain{p, uderiv(p)};
  while (chain.back().size() > 1) {
    auto r = udivmod(chain[chain.size() - 2], chain.back()).second;
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  Rat bound = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) bound = std::max(bound, Rat(abs(p[i] / p.back())));
  bound += 1;
  const Rat target_width(1, lead * 2);
  std::vector<std::pair<Rat, Rat>> stack{{-bound, bound}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int count = sign_changes(chain, lo) - sign_changes(chain, hi);
    if (count == 0) continue;
    if (count == 1 && hi - lo < target_width) {
      // (lo, hi] holds one real root and at most one fraction k / lead.
      mpz_class k;
      Rat scaled = lo * Rat(lead);
      mpz_fdiv_q(k.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
      for (int step = 0; step < 3; ++step, ++k) {
        Rat cand(k, lead);
        cand.canonicalize();
        if (cand > lo && cand <= hi && ueval(p, cand) == 0) {
          roots.push_back(cand);
          break;
        }
      }
      continue;
    }
    Rat mid = (lo + hi) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

/// Scales a projective point so its first nonzero coordinate is 1.
inline std::vector<Rat> normalize_projective(std::vector<Rat> p) {
  for (const auto& c : p) {
    if (c != 0) {
      Rat f = c;
      for (auto& x : p) x /= f;
      break;
    }
  }
  return p;
}

/// Minimal polynomial of the residue class of variable `var` in Q[x]/J,
/// for zero-dimensional J with reduced basis `gb`.
inline UPoly minimal_polynomial(const std::vector<Poly>& gb, const std::vector<Monomial>& basis,
                                const MonomialOrder& ord, const VarList& vars, std::size_t var) {
  auto index_of = [&](const Monomial& m) {
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (basis[i] == m) return i;
    }
    throw Error("normal form left the standard monomial basis");
  };
  std::vector<std::vector<Rat>> powers;
  Poly cur = reduce_by(Poly::constant(vars, 1), gb, ord);
  Poly x = Poly::variable(vars, var);
  for (std::size_t k = 0; k <= basis.size(); ++k) {
    std::vector<Rat> v(basis.size());
    for (const auto& [m, c] : cur.terms()) v[index_of(m)] = c;
    powers.push_back(std::move(v));
    QMat a(basis.size(), powers.size());
    for (std::size_t j = 0; j < powers.size(); ++j) {
      for (std::size_t i = 0; i < basis.size(); ++i) a(i, j) = powers[j][i];
    }
    QMat ker = right_kernel(a);
    if (ker.cols() > 0) {
      UPoly mp = ker.column(0);
      trim(mp);
      Rat lc = mp.back();
      for (auto& c : mp) c /= lc;
      return mp;
    }
    cur = reduce_by(cur * x, gb, ord);
  }
  throw Error("minimal polynomial search did not terminate");
}

}  // namespace detail

/// Points of a zero-dimensional projective scheme.
struct PointSet {
  /// Scheme degree (length), with multiplicity.
  std::size_t length = 0;
  /// Number of distinct points over the complex numbers.
  std::size_t distinct = 0;
  /// Points with rational coordinates, first nonzero coordinate 1, sorted.
  std::vector<std::vector<Rat>> rational;
};

/// Solves a homogeneous ideal whose projective zero set is finite. The
/// scheme is read in a generic affine chart l = 1; the chart is accepted
/// once its length matches the Hilbert degree (no point lies on l = 0).
inline PointSet projective_points(const Ideal& ideal) {
  HilbertData h = hilbert(ideal);
  PointSet out;
  if (h.dimension < 0) return out;
  if (h.dimension > 0) throw ContractError("projective_points needs a zero-dimensional scheme");
  const std::size_t n = ideal.nvars();
  const auto ord = MonomialOrder::grevlex();
  static constexpr long kPrimes[] = {1, 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
  for (int attempt = 0; attempt < 16; ++attempt) {
    Poly chart = Poly::constant(ideal.vars(), -1);
    for (std::size_t i = 0; i < n; ++i) {
      long c = kPrimes[(i + static_cast<std::size_t>(attempt) * 5) % 12] * (((i + attempt) % 2) ? -1 : 1);
      chart.add_term(Monomial::var(i), c);
    }
    std::vector<Poly> gens = ideal.generators();
    gens.push_back(chart);
    Ideal affine(ideal.vars(), gens);
    auto gb = groebner_basis(affine, ord);
    auto basis = standard_monomials(leading_monomials(gb, ord), n);
    if (!basis || basis->size() != static_cast<std::size_t>(h.degree)) continue;
    out.length = basis->size();
    std::vector<detail::UPoly> sqf(n);
    std::vector<Poly> radical_gens = gens;
    for (std::size_t v = 0; v < n; ++v) {
      sqf[v] = detail::squarefree_part(detail::minimal_polynomial(gb, *basis, ord, ideal.vars(), v));
      Poly p(ideal.vars());
      for (std::size_t k = 0; k < sqf[v].size(); ++k) p.add_term(Monomial::var(v, static_cast<std::uint16_t>(k)), sqf[v][k]);
      radical_gens.push_back(std::move(p));
    }
    Ideal radical(ideal.vars(), radical_gens);
    out.distinct = quotient_dimension(radical, ord).value();
    std::vector<std::vector<Rat>> roots(n);
    for (std::size_t v = 0; v < n; ++v) roots[v] = detail::rational_roots(sqf[v]);
    std::vector<Rat> point(n);
    auto search = [&](auto&& self, std::size_t v) -> void {
      if (v == n) {
        for (const auto& g : radical.generators()) {
          if (evaluate(g, point) != 0) return;
        }
        out.rational.push_back(detail::normalize_projective(point));
        return;
      }
      for (const auto& r : roots[v]) {
        point[v] = r;
        self(self, v + 1);
      }
    };
    search(search, 0);
    std::sort(out.rational.begin(), out.rational.end());
    return out;
  }
  throw Error("no affine chart avoided the points of the scheme");
}

/// Rank of the Jacobian of the generators at a point.
inline std::size_t jacobian_rank(const Ideal& ideal, const std::vector<Rat>& point) {
  const auto& gens = ideal.generators();
  QMat j(gens.size(), ideal.nvars());
  for (std::size_t r = 0; r < gens.size(); ++r) {
    for (std::size_t c = 0; c < ideal.nvars(); ++c) j(r, c) = evaluate(derivative(gens[r], c), point);
  }
  return rank(j);
}

/// Jacobian criterion for a point of a projective variety of dimension
/// `dim` in P^{n-1} whose (radical) ideal is given.
inline bool is_smooth_point(const Ideal& ideal, const std::vector<Rat>& point, int dim) {
  return jacobian_rank(ideal, point) == ideal.nvars() - 1 - static_cast<std::size_t>(dim);
}

// ---------------------------------------------------------------------------
// Reciprocal surfaces and ML-base loci

/// Homogeneous ideal in (u11, ..., u23) of the closure of the inverses of
/// the invertible members of L, obtained by eliminating (t, alpha, beta,
/// gamma) from <u_k - t * adj_k(alpha S1 + beta S2 + gamma S3)>.
inline Ideal reciprocal_ideal(const Net& l) {
  if (!is_regular(l)) throw RegularityError("reciprocal surface needs a regular net");
  VarList ring = make_vars({"t", "alpha", "beta", "gamma", "u11", "u22", "u33", "u12", "u13", "u23"});
  auto adj = sym_adjugate(symbolic_member(l, ring, 1));
  Poly t = Poly::variable(ring, 0);
  std::vector<Poly> graph;
  for (std::size_t k = 0; k < 6; ++k) graph.push_back(Poly::variable(ring, 4 + k) - t * adj[k]);
  // u has weight 3 so that every generator is weighted homogeneous.
  GroebnerOptions opts{{1, 1, 1, 1, 3, 3, 3, 3, 3, 3}};
  Ideal elim = eliminate(Ideal(ring, std::move(graph)), {"t", "alpha", "beta", "gamma"}, opts);
  std::vector<Poly> gens;
  for (const auto& g : elim.generators()) gens.push_back(g.embed(sym_vars()));
  return Ideal(sym_vars(), std::move(gens));
}

/// Linear forms u -> trace(U S_i) cutting out the polar plane PL^perp.
inline Ideal polar_plane_ideal(const Net& l) {
  std::vector<Poly> forms;
  for (std::size_t i = 0; i < 3; ++i) {
    Poly f(sym_vars());
    for (std::size_t k = 0; k < 6; ++k) f.add_term(Monomial::var(k), (k < 3 ? 1 : 2) * l[i][k]);
    forms.push_back(std::move(f));
  }
  return Ideal(sym_vars(), std::move(forms));
}

/// Linear forms (degree-1 elements) of a reduced basis, as rows of
/// coefficients over the ring variables.
inline QMat linear_part(const std::vector<Poly>& gb, std::size_t nvars) {
  std::vector<Rat> e;
  std::size_t rows = 0;
  for (const auto& g : gb) {
    if (g.total_degree() != 1 || !is_homogeneous(g)) continue;
    for (std::size_t v = 0; v < nvars; ++v) e.push_back(g.coefficient(Monomial::var(v)));
    ++rows;
  }
  return QMat(rows, nvars, std::move(e));
}

inline Sym3 sym_from_point(const std::vector<Rat>& p) { return Sym3(p[0], p[1], p[2], p[3], p[4], p[5]); }

struct SupportPoint {
  Sym3 point;
  std::size_t rank = 0;
};

struct BaseLocusReport {
  Ideal ideal;
  int dimension = -1;
  long degree = 0;
  /// Rational support points (zero-dimensional loci only).
  std::vector<SupportPoint> support;
  /// Distinct points over C (zero-dimensional loci only).
  std::size_t distinct_points = 0;
  bool reduced = true;
  /// Basis (rows) of the locus when it is a linear space.
  std::optional<QMat> linear_span;
};

/// PL^{-1} ∩ PL^perp with Hilbert data and support.
inline BaseLocusReport base_locus(const Net& l, const Ideal& reciprocal) {
  Ideal sum = ideal_sum(reciprocal, polar_plane_ideal(l));
  BaseLocusReport r{sum, -1, 0, {}, 0, true, std::nullopt};
  HilbertData h = hilbert(sum);
  r.dimension = h.dimension;
  r.degree = h.degree;
  if (h.dimension == 0) {
    PointSet pts = projective_points(sum);
    r.distinct_points = pts.distinct;
    for (const auto& p : pts.rational) {
      Sym3 s = sym_from_point(p);
      r.support.push_back({s, s.rank()});
    }
    r.reduced = pts.distinct == static_cast<std::size_t>(h.degree);
    r.linear_span = QMat(0, 6);
    if (pts.rational.size() == 1 && pts.distinct == 1) r.linear_span = sym_from_point(pts.rational[0]).row_vector();
  } else if (h.dimension > 0) {
    QMat lin = linear_part(groebner_basis(sum, MonomialOrder::grevlex()), 6);
    r.reduced = false;
    if (5 - static_cast<int>(rank(lin)) == h.dimension) {
      std::vector<Poly> forms;
      for (std::size_t i = 0; i < lin.rows(); ++i) {
        Poly f(sym_vars());
        for (std::size_t v = 0; v < 6; ++v) f.add_term(Monomial::var(v), lin(i, v));
        forms.push_back(std::move(f));
      }
      HilbertData hl = hilbert(Ideal(sym_vars(), forms));
      if (hl.hilbert_polynomial == h.hilbert_polynomial) {
        r.reduced = true;
        r.linear_span = transpose(right_kernel(lin));
      }
    }
  }
  return r;
}

inline BaseLocusReport base_locus(const Net& l) { return base_locus(l, reciprocal_ideal(l)); }

enum class CenterKind { empty, point_on_veronese, point_off_veronese, secant_line, tangent_line, other_line, plane, other };

inline std::string center_name(CenterKind k) {
  switch (k) {
    case CenterKind::empty:
      return "empty";
    case CenterKind::point_on_veronese:
      return "point-on-Veronese";
    case CenterKind::point_off_veronese:
      return "point-off-Veronese";
    case CenterKind::secant_line:
      return "secant-line";
    case CenterKind::tangent_line:
      return "tangent-line";
    case CenterKind::other_line:
      return "line";
    case CenterKind::plane:
      return "plane";
    case CenterKind::other:
      return "other";
  }
  return "?";
}

struct SurfaceProfile {
  long degree = 0;
  /// 6 - rank of the transformation matrix.
  std::size_t span_codim = 0;
  bool singular = false;
  CenterKind center = CenterKind::empty;
  /// Basis of the projection center (right kernel), one Sym3 per element.
  std::vector<Sym3> center_basis;
  /// Rational points where the center meets the Veronese surface.
  std::vector<Sym3> center_veronese_points;
};

/// Rank-one points of the projective span of `basis`: ideal of the 2x2
/// minors of the generic member, in one parameter per basis element.
inline Ideal rank_one_ideal(const std::vector<Sym3>& basis, const VarList& params) {
  std::vector<Poly> u;
  for (std::size_t k = 0; k < 6; ++k) {
    Poly p(params);
    for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(Monomial::var(i), basis[i][k]);
    u.push_back(std::move(p));
  }
  auto at = [&](std::size_t i, std::size_t j) -> const Poly& { return u[sym_slot(i, j)]; };
  std::vector<Poly> minors;
  for (std::size_t r0 = 0; r0 < 3; ++r0) {
    for (std::size_t r1 = r0 + 1; r1 < 3; ++r1) {
      for (std::size_t c0 = 0; c0 < 3; ++c0) {
        for (std::size_t c1 = c0 + 1; c1 < 3; ++c1) minors.push_back(at(r0, c0) * at(r1, c1) - at(r0, c1) * at(r1, c0));
      }
    }
  }
  return Ideal(params, std::move(minors));
}

inline SurfaceProfile recip_surface_profile(const Net& l, const Ideal& reciprocal) {
  if (!is_regular(l)) throw RegularityError("reciprocal surface needs a regular net");
  SurfaceProfile p;
  p.degree = hilbert(reciprocal).degree;
  QMat t = transformation_matrix(l);
  QMat k = right_kernel(t);
  p.span_codim = k.cols();
  for (std::size_t j = 0; j < k.cols(); ++j) {
    p.center_basis.push_back(Sym3(k(0, j), k(1, j), k(2, j), k(3, j), k(4, j), k(5, j)));
  }
  switch (k.cols()) {
    case 0:
      p.center = CenterKind::empty;
      break;
    case 1:
      if (p.center_basis[0].rank() == 1) {
        p.center = CenterKind::point_on_veronese;
        p.center_veronese_points.push_back(p.center_basis[0]);
      } else {
        p.center = CenterKind::point_off_veronese;
      }
      break;
    case 2: {
      VarList st = make_vars({"s", "t"});
      Ideal meet = rank_one_ideal(p.center_basis, st);
      HilbertData h = hilbert(meet);
      p.center = CenterKind::other_line;
      if (h.dimension == 0) {
        PointSet pts = projective_points(meet);
        if (pts.distinct == 2) p.center = CenterKind::secant_line;
        if (pts.distinct == 1 && h.degree == 2) p.center = CenterKind::tangent_line;
        for (const auto& q : pts.rational) p.center_veronese_points.push_back(q[0] * p.center_basis[0] + q[1] * p.center_basis[1]);
      }
      break;
    }
    case 3:
      p.center = CenterKind::plane;
      break;
    default:
      p.center = CenterKind::other;
  }
  p.singular = p.center == CenterKind::tangent_line;
  return p;
}

inline SurfaceProfile recip_surface_profile(const Net& l) { return recip_surface_profile(l, reciprocal_ideal(l)); }

}  // namespace netml
