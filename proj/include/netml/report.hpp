#pragma once

// Invariant fingerprints, the Wall-type decision table, per-net reports and
// the reproduction of the catalog tables.

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "netml/conics.hpp"
#include "netml/groebner.hpp"
#include "netml/mldeg.hpp"
#include "netml/projgeom.hpp"

namespace netml {

/// Scheme degree and number of distinct points of a projective scheme of
/// dimension <= 0; dimension is kept so that curves can be told apart.
struct ZeroProfile {
  int dimension = -1;
  long degree = 0;
  std::size_t distinct = 0;
};

inline ZeroProfile zero_profile(const Ideal& ideal) {
  HilbertData h = hilbert(ideal);
  ZeroProfile z{h.dimension, h.degree, 0};
  if (h.dimension == 0) z.distinct = projective_points(ideal).distinct;
  return z;
}

inline bool operator==(const ZeroProfile& a, const ZeroProfile& b) {
  return a.dimension == b.dimension && a.degree == b.degree && a.distinct == b.distinct;
}

struct Fingerprint {
  bool regular = false;
  std::size_t rank_t = 0;
  long deg_recip = 0;
  int base_dim = -1;
  long base_deg = 0;
  std::optional<long> mld_value;
  ZeroProfile rank_one;
  ZeroProfile common_zeros;
  bool disc_smooth = false;
};

/// The discriminant cubic is smooth when its partial derivatives have no
/// common projective zero.
inline bool discriminant_smooth(const Net& l) {
  Poly d = net_determinant(l);
  if (d.is_zero()) return false;
  std::vector<Poly> partials;
  for (std::size_t i = 0; i < 3; ++i) partials.push_back(derivative(d, i));
  return hilbert(Ideal(param_vars(), partials)).dimension < 0;
}

inline Fingerprint fingerprint(const Net& l, bool with_mld = true, std::uint64_t seed = kDefaultSeed) {
  Fingerprint f;
  f.regular = is_regular(l);
  f.rank_t = rank(transformation_matrix(l));
  f.rank_one = zero_profile(rank_one_points(l));
  f.common_zeros = zero_profile(common_zeros(l));
  f.disc_smooth = discriminant_smooth(l);
  if (!f.regular) return f;
  Ideal r = reciprocal_ideal(l);
  f.deg_recip = hilbert(r).degree;
  BaseLocusReport b = base_locus(l, r);
  f.base_dim = b.dimension;
  f.base_deg = b.degree;
  if (with_mld) {
    try {
      f.mld_value = mld(l, kDefaultSamples, seed).value;
    } catch (const GenericityError&) {
    }
  }
  return f;
}

/// Catalog values of a regular type: rank of the transformation matrix,
/// degree of the reciprocal surface, base-locus dimension and degree, mld,
/// rmld and the orbit codimension in Gr(3, S^3).
struct CatalogRow {
  WallTag tag;
  std::size_t rank_t;
  long deg_recip;
  int base_dim;
  long base_deg;
  long mld;
  long rmld;
  int codim;
};

inline constexpr std::array<CatalogRow, 13> kCatalog{{
    {WallTag::A, 6, 4, -1, 0, 4, 7, 0},
    {WallTag::B, 5, 3, -1, 0, 3, 5, 1},
    {WallTag::Bs, 6, 4, 0, 1, 3, 6, 1},
    {WallTag::C, 5, 3, 0, 1, 2, 4, 2},
    {WallTag::D, 4, 2, -1, 0, 2, 3, 2},
    {WallTag::Ds, 6, 4, 0, 2, 2, 5, 2},
    {WallTag::E, 3, 1, -1, 0, 1, 1, 3},
    {WallTag::Es, 6, 4, 0, 3, 1, 4, 3},
    {WallTag::F, 4, 2, 0, 2, 0, 2, 3},
    {WallTag::Fs, 4, 2, 0, 1, 1, 1, 3},
    {WallTag::G, 3, 1, 0, 1, 0, 0, 4},
    {WallTag::Gs, 4, 2, 0, 2, 0, 1, 4},
    {WallTag::H, 3, 1, 1, 1, 0, 0, 5},
}};

inline const CatalogRow& catalog_row(WallTag t) {
  for (const auto& r : kCatalog) {
    if (r.tag == t) return r;
  }
  throw ParameterError("no catalog row for type " + tag_name(t));
}

/// Decision table over the fingerprint; nullopt when the fingerprint does
/// not match any catalog row.
inline std::optional<WallTag> classify(const Fingerprint& f) {
  if (!f.regular) {
    if (f.rank_one.dimension == 1) return WallTag::I;
    if (f.rank_one.dimension == 0) return WallTag::Is;
    return std::nullopt;
  }
  std::optional<WallTag> t;
  switch (f.rank_t) {
    case 6:
      if (f.base_dim < 0) t = WallTag::A;
      else if (f.base_dim == 0 && f.base_deg == 1) t = WallTag::Bs;
      else if (f.base_dim == 0 && f.base_deg == 2) t = WallTag::Ds;
      else if (f.base_dim == 0 && f.base_deg == 3) t = WallTag::Es;
      break;
    case 5:
      if (f.base_dim < 0) t = WallTag::B;
      else if (f.base_dim == 0 && f.base_deg == 1) t = WallTag::C;
      break;
    case 4:
      if (f.base_dim < 0) t = WallTag::D;
      else if (f.base_dim == 0 && f.base_deg == 1) t = WallTag::Fs;
      else if (f.base_dim == 0 && f.base_deg == 2 && f.common_zeros.dimension == 0) {
        if (f.common_zeros.distinct == 1) t = WallTag::F;
        if (f.common_zeros.distinct == 2) t = WallTag::Gs;
      }
      break;
    case 3:
      if (f.base_dim < 0) t = WallTag::E;
      else if (f.base_dim == 0) t = WallTag::G;
      else if (f.base_dim == 1) t = WallTag::H;
      break;
    default:
      break;
  }
  if (!t) return std::nullopt;
  const CatalogRow& row = catalog_row(*t);
  if (row.deg_recip != f.deg_recip || row.base_dim != f.base_dim || row.base_deg != f.base_deg) return std::nullopt;
  if (f.mld_value && *f.mld_value != row.mld) return std::nullopt;
  if ((*t == WallTag::A) != f.disc_smooth) return std::nullopt;
  return t;
}

inline std::optional<WallTag> classify(const Net& l) { return classify(fingerprint(l)); }

// ---------------------------------------------------------------------------
// Reports

struct NetReport {
  std::optional<WallTag> type;
  bool regular = false;
  Fingerprint fingerprint;
  // Populated for regular nets only.
  std::optional<Ideal> reciprocal;
  long deg_recip = 0;
  std::size_t span_codim = 0;
  std::optional<BaseLocusReport> base_locus;
  std::optional<MLResult> mld;
  std::optional<MLResult> rmld;
  std::optional<GeometricMLD> mld_geometry;
  std::optional<Relation> relation;
  std::vector<Sym3> annihilator_basis;
  std::optional<SurfaceProfile> center;
};

/// Rows of A in reduced echelon form, as Sym3.
inline std::vector<Sym3> echelon_rows(const QMat& a) {
  auto [r, pivots] = rref(a);
  std::vector<Sym3> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(Sym3(r(i, 0), r(i, 1), r(i, 2), r(i, 3), r(i, 4), r(i, 5)));
  return out;
}

inline NetReport report(const Net& l, std::size_t samples = kDefaultSamples, std::uint64_t seed = kDefaultSeed) {
  NetReport r;
  r.regular = is_regular(l);
  r.fingerprint = fingerprint(l, false);
  if (!r.regular) {
    r.type = classify(r.fingerprint);
    return r;
  }
  Ideal recip = reciprocal_ideal(l);
  r.reciprocal = recip;
  r.deg_recip = hilbert(recip).degree;
  QMat t = transformation_matrix(l);
  r.span_codim = 6 - rank(t);
  r.base_locus = base_locus(l, recip);
  r.mld = mld(l, samples, seed);
  r.rmld = rmld(l, samples, seed);
  r.mld_geometry = mld_via_geometry(l, recip, *r.base_locus);
  r.relation = relation_of(r.rmld->value, r.deg_recip, r.mld->value);
  r.annihilator_basis = echelon_rows(left_kernel(t));
  r.center = recip_surface_profile(l, recip);
  r.fingerprint.mld_value = r.mld->value;
  r.type = classify(r.fingerprint);
  return r;
}

// ---------------------------------------------------------------------------
// Rendering helpers shared by the tables and the CLI

/// Quadratic form of a Sym3 scaled so its leading grevlex coefficient is 1.
inline std::string form_string(const Sym3& s) {
  Poly q = conic_form(s);
  if (q.is_zero()) return "0";
  q *= 1 / leading_term(q, MonomialOrder::grevlex()).second;
  std::string out = to_string(q);
  std::string spaced;
  for (char ch : out) {
    if (ch != '*') spaced.push_back(ch);
  }
  return spaced;
}

inline std::string point_string(const std::vector<Rat>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ":" : "") + p[i].get_str();
  return s + ")";
}

inline std::string base_locus_string(const BaseLocusReport& b) {
  if (b.dimension < 0) return "empty";
  std::string s;
  if (b.dimension == 0) {
    for (std::size_t i = 0; i < b.support.size(); ++i) s += (i ? ", " : "") + form_string(b.support[i].point);
    if (b.support.size() < b.distinct_points) s += (s.empty() ? "" : ", ") + std::to_string(b.distinct_points - b.support.size()) + " irrational";
    if (!b.reduced) s += " (mult. " + std::to_string(b.degree / static_cast<long>(b.distinct_points)) + ")";
    return s;
  }
  if (b.linear_span) {
    s = "span{";
    auto rows = echelon_rows(*b.linear_span);
    for (std::size_t i = rows.size(); i-- > 0;) s += form_string(rows[i]) + (i ? ", " : "");
    return s + "}";
  }
  return "dimension " + std::to_string(b.dimension) + ", degree " + std::to_string(b.degree);
}

inline std::string common_zeros_string(const Net& l) {
  Ideal z = common_zeros(l);
  HilbertData h = hilbert(z);
  if (h.dimension < 0) return "empty";
  if (h.dimension > 0) return "curve of degree " + std::to_string(h.degree);
  PointSet pts = projective_points(z);
  std::string s = "{";
  for (std::size_t i = 0; i < pts.rational.size(); ++i) s += (i ? ", " : "") + point_string(pts.rational[i]);
  s += "}";
  if (pts.rational.size() < pts.distinct) s += " + " + std::to_string(pts.distinct - pts.rational.size()) + " non-rational";
  if (static_cast<long>(pts.distinct) < h.degree) s += " (degree " + std::to_string(h.degree) + ")";
  return s;
}

// ---------------------------------------------------------------------------
// Tables

struct TableRow {
  WallTag tag;
  NetReport report;
  std::string common_zeros;
};

inline std::vector<TableRow> table_rows(std::uint64_t seed = kDefaultSeed, std::size_t samples = kDefaultSamples) {
  std::vector<TableRow> rows;
  for (WallTag t : kRegularTags) {
    Net l = canonical_net(t);
    rows.push_back({t, report(l, samples, seed), common_zeros_string(l)});
  }
  return rows;
}

inline std::string tables_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  auto line = [&](const std::string& head, auto cell) {
    os << "| " << head << " |";
    for (const auto& r : rows) os << ' ' << cell(r) << " |";
    os << '\n';
  };
  os << "## Table 1\n\n";
  line("Type", [](const TableRow& r) { return tag_name(r.tag); });
  os << "|---|";
  for (std::size_t i = 0; i < rows.size(); ++i) os << "---|";
  os << '\n';
  line("Codim", [](const TableRow& r) { return std::to_string(catalog_row(r.tag).codim); });
  line("deg PL^-1", [](const TableRow& r) { return std::to_string(r.report.deg_recip); });
  line("mld L", [](const TableRow& r) { return std::to_string(r.report.mld->value); });
  line("rmld L", [](const TableRow& r) { return std::to_string(r.report.rmld->value); });
  line("Relation", [](const TableRow& r) { return relation_symbol(*r.report.relation); });
  os << "\n## Table 2\n\n| Type | ML-base locus | dim | deg | ranks | Common zeroes of the conics |\n|---|---|---|---|---|---|\n";
  for (const auto& r : rows) {
    const auto& b = *r.report.base_locus;
    std::string ranks;
    for (std::size_t i = 0; i < b.support.size(); ++i) ranks += (i ? "," : "") + std::to_string(b.support[i].rank);
    os << "| " << tag_name(r.tag) << " | " << base_locus_string(b) << " | " << b.dimension << " | " << b.degree << " | "
       << (ranks.empty() ? "-" : ranks) << " | " << r.common_zeros << " |\n";
  }
  os << "\n## Table 4\n\n| Type | Basis for annihilator of span L^-1 |\n|---|---|\n";
  for (const auto& r : rows) {
    const auto& ann = r.report.annihilator_basis;
    if (ann.empty()) continue;
    os << "| " << tag_name(r.tag) << " | ";
    for (std::size_t i = 0; i < ann.size(); ++i) os << (i ? ", " : "") << form_string(ann[i]);
    os << " |\n";
  }
  return os.str();
}

}  // namespace netml
