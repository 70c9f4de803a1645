#pragma once

// Critical-point systems of the Gaussian log-likelihood on L and on L^{-1},
// counted exactly by localized quotient dimension.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "netml/conics.hpp"
#include "netml/groebner.hpp"
#include "netml/projgeom.hpp"

namespace netml {

struct SampleMatrix {
  Sym3 s;
  std::uint64_t seed = 0;
  long bound = 100;
};

/// Entries num/den with num in [-bound, bound] and den in [1, bound].
inline Sym3 draw_sym(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  SymCoords<Rat> c;
  for (auto& x : c) {
    long p = num(rng);
    x = Rat(p, den(rng));
    x.canonicalize();
  }
  return Sym3(c);
}

struct MLResult {
  long value = 0;
  std::size_t samples_used = 0;
  std::vector<long> per_sample_counts;
  bool stable = false;
};

inline constexpr std::uint64_t kDefaultSeed = 2024;
inline constexpr std::size_t kDefaultSamples = 3;
inline constexpr long kSampleBound = 100;
inline constexpr int kRetryCap = 10;

inline void require_regular(const Net& l) {
  if (!is_regular(l)) throw RegularityError("the net contains no invertible matrix");
}

/// F_i = <adj K, S_i> - det K <S, S_i> for K = alpha S1 + beta S2 + gamma S3.
inline std::array<Poly, 3> mld_system(const Net& l, const Sym3& s) {
  require_regular(l);
  const auto& v = param_vars();
  auto k = symbolic_member(l, v);
  auto adj = sym_adjugate(k);
  Poly d = sym_det(k);
  std::array<Poly, 3> f{Poly(v), Poly(v), Poly(v)};
  for (std::size_t i = 0; i < 3; ++i) {
    f[i] = sym_trace_pair(adj, constant_sym(l[i], v)) - d * Poly::constant(v, trace_pair(s, l[i]));
  }
  return f;
}

/// G_i = <det M adj M - adj M S adj M, S_i>.
inline std::array<Poly, 3> rmld_system(const Net& l, const Sym3& s) {
  require_regular(l);
  const auto& v = param_vars();
  auto m = symbolic_member(l, v);
  auto adj = sym_adjugate(m);
  Poly d = sym_det(m);
  auto sandwich = sym_sandwich(adj, constant_sym(s, v));
  SymCoords<Poly> h{Poly(v), Poly(v), Poly(v), Poly(v), Poly(v), Poly(v)};
  for (std::size_t k = 0; k < 6; ++k) h[k] = d * adj[k] - sandwich[k];
  std::array<Poly, 3> g{Poly(v), Poly(v), Poly(v)};
  for (std::size_t i = 0; i < 3; ++i) g[i] = sym_trace_pair(h, constant_sym(l[i], v));
  return g;
}

/// Solutions of the system off {exclude = 0}, with multiplicity.
inline long count_critical(const std::vector<Poly>& system, const Poly& exclude) {
  auto n = localized_dimension(Ideal(exclude.vars(), system), exclude);
  if (!n) throw NonGenericSampleError("localized critical system is not zero-dimensional");
  return static_cast<long>(*n);
}

inline long count_critical(const std::array<Poly, 3>& system, const Poly& exclude) {
  return count_critical(std::vector<Poly>(system.begin(), system.end()), exclude);
}

/// Critical equations on the projective plane PL, read in the chart
/// chart . (alpha, beta, gamma) = 1. Both likelihoods are invariant under
/// scaling up to the Euler relation, so each critical point of the cone
/// gives exactly one point of PL.
struct ChartSystem {
  std::vector<Poly> equations;
  Poly exclude;
};

namespace detail {

inline Poly chart_equation(const VarList& v, const std::array<Rat, 3>& chart) {
  Poly p = Poly::constant(v, -1);
  for (std::size_t i = 0; i < 3; ++i) p.add_term(Monomial::var(i), chart[i]);
  return p;
}

}  // namespace detail

/// K^{-1} - S kills L up to scale: <adj K, S_i> proportional to <S, S_i>.
inline ChartSystem mld_chart_system(const Net& l, const Sym3& s, const std::array<Rat, 3>& chart) {
  require_regular(l);
  const auto& v = param_vars();
  auto k = symbolic_member(l, v);
  auto adj = sym_adjugate(k);
  std::array<Poly, 3> a{Poly(v), Poly(v), Poly(v)};
  std::array<Rat, 3> p;
  for (std::size_t i = 0; i < 3; ++i) {
    a[i] = sym_trace_pair(adj, constant_sym(l[i], v));
    p[i] = trace_pair(s, l[i]);
  }
  ChartSystem out{{}, sym_det(k)};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) out.equations.push_back(p[j] * a[i] - p[i] * a[j]);
  }
  out.equations.push_back(detail::chart_equation(v, chart));
  return out;
}

/// 3 <adj M S adj M, S_i> = <S, adj M> <adj M, S_i>, off det M = 0 and
/// <S, adj M> = 0.
inline ChartSystem rmld_chart_system(const Net& l, const Sym3& s, const std::array<Rat, 3>& chart) {
  require_regular(l);
  const auto& v = param_vars();
  auto m = symbolic_member(l, v);
  auto adj = sym_adjugate(m);
  auto sv = constant_sym(s, v);
  Poly t = sym_trace_pair(sv, adj);
  auto sandwich = sym_sandwich(adj, sv);
  ChartSystem out{{}, sym_det(m) * t};
  for (std::size_t i = 0; i < 3; ++i) {
    auto si = constant_sym(l[i], v);
    out.equations.push_back(3 * sym_trace_pair(sandwich, si) - t * sym_trace_pair(adj, si));
  }
  out.equations.push_back(detail::chart_equation(v, chart));
  return out;
}

namespace detail {

template <class System>
MLResult sampled_count(const Net& l, std::size_t samples, std::uint64_t seed, System system) {
  require_regular(l);
  if (samples == 0) throw ParameterError("at least one sample is required");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-kSampleBound, kSampleBound);
  MLResult r;
  int retries = 0;
  auto settled = [&] {
    if (r.per_sample_counts.size() < samples) return false;
    if (samples == 1) return true;
    long top = *std::max_element(r.per_sample_counts.begin(), r.per_sample_counts.end());
    return std::count(r.per_sample_counts.begin(), r.per_sample_counts.end(), top) >= 2;
  };
  while (!settled()) {
    if (r.per_sample_counts.size() >= samples && ++retries > kRetryCap) break;
    Sym3 s = draw_sym(rng, kSampleBound);
    std::array<Rat, 3> chart{Rat(coef(rng)), Rat(coef(rng)), Rat(coef(rng))};
    try {
      ChartSystem cs = system(l, s, chart);
      r.per_sample_counts.push_back(count_critical(cs.equations, cs.exclude));
    } catch (const NonGenericSampleError&) {
      if (++retries > kRetryCap) break;
    }
  }
  r.samples_used = r.per_sample_counts.size();
  if (!settled()) throw GenericityError("no stable critical-point count within the retry cap");
  r.value = *std::max_element(r.per_sample_counts.begin(), r.per_sample_counts.end());
  r.stable = true;
  return r;
}

}  // namespace detail

inline MLResult mld(const Net& l, std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed) {
  return detail::sampled_count(l, samples, seed, mld_chart_system);
}

inline MLResult rmld(const Net& l, std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed) {
  return detail::sampled_count(l, samples, seed, rmld_chart_system);
}

struct GeometricMLD {
  /// deg(PL^{-1}) - deg(base locus), when the formula applies.
  std::optional<long> value;
  /// deg(PL^{-1}) - 1, reported when the base locus is nonempty and the
  /// formula does not apply.
  std::optional<long> bound;
};

inline GeometricMLD mld_via_geometry(const Net& l, const Ideal& reciprocal, const BaseLocusReport& base) {
  require_regular(l);
  const long deg = hilbert(reciprocal).degree;
  GeometricMLD g;
  if (base.dimension < 0) {
    g.value = deg;
    return g;
  }
  bool smooth = base.dimension == 0 && base.support.size() == base.distinct_points;
  for (const auto& p : base.support) {
    if (!smooth) break;
    std::vector<Rat> pt(p.point.coords().begin(), p.point.coords().end());
    smooth = is_smooth_point(reciprocal, pt, 2);
  }
  if (smooth) {
    g.value = deg - base.degree;
  } else {
    g.bound = deg - 1;
  }
  return g;
}

inline GeometricMLD mld_via_geometry(const Net& l) {
  Ideal r = reciprocal_ideal(l);
  return mld_via_geometry(l, r, base_locus(l, r));
}

enum class Relation { equal, greater, less };

inline std::string relation_symbol(Relation r) {
  switch (r) {
    case Relation::equal:
      return "=";
    case Relation::greater:
      return ">";
    case Relation::less:
      return "<";
  }
  return "?";
}

inline std::string relation_name(Relation r) {
  switch (r) {
    case Relation::equal:
      return "EQUAL";
    case Relation::greater:
      return "GREATER";
    case Relation::less:
      return "LESS";
  }
  return "?";
}

/// Compares rmld with deg + mld - 1.
inline Relation relation_of(long rmld_value, long deg, long mld_value) {
  long rhs = deg + mld_value - 1;
  if (rmld_value == rhs) return Relation::equal;
  return rmld_value > rhs ? Relation::greater : Relation::less;
}

inline Relation relation_check(const Net& l, std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed) {
  require_regular(l);
  return relation_of(rmld(l, samples, seed).value, hilbert(reciprocal_ideal(l)).degree, mld(l, samples, seed).value);
}

}  // namespace netml
