#pragma once

// JSON encoding of rationals, matrices, nets and reports.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "netml/conics.hpp"
#include "netml/mldeg.hpp"
#include "netml/projgeom.hpp"
#include "netml/report.hpp"

namespace netml {

using json = nlohmann::ordered_json;

inline json to_json_value(const Rat& r) { return r.get_str(); }

/// Rationals are strings "p/q"; plain JSON integers are accepted on input.
inline Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw FormatError("expected a rational string, got " + j.dump());
}

inline json to_json_value(const QMat& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline QMat qmat_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("matrix must be an array of rows");
  std::size_t cols = j.empty() ? 0 : j.front().size();
  std::vector<Rat> e;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != cols) throw FormatError("matrix rows must be arrays of equal length");
    for (const auto& x : row) e.push_back(rat_from_json(x));
  }
  return QMat(j.size(), cols, std::move(e));
}

inline json to_json_value(const Sym3& s) { return to_json_value(s.matrix()); }

inline json coords_json(const Sym3& s) {
  json a = json::array();
  for (const auto& c : s.coords()) a.push_back(c.get_str());
  return a;
}

inline json to_json_value(const Net& l) {
  json b = json::array();
  for (std::size_t i = 0; i < 3; ++i) b.push_back(to_json_value(l[i]));
  return json{{"basis", b}};
}

/// {"basis": [S1, S2, S3]} with 3x3 symmetric arrays of rationals.
inline Net net_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis")) throw FormatError("net JSON needs a \"basis\" field");
  const json& b = j.at("basis");
  if (!b.is_array() || b.size() != 3) throw FormatError("\"basis\" must hold exactly three matrices");
  std::array<Sym3, 3> s;
  for (std::size_t i = 0; i < 3; ++i) {
    QMat m = qmat_from_json(b[i]);
    if (m.rows() != 3 || m.cols() != 3) throw FormatError("basis matrices must be 3x3");
    s[i] = Sym3::from_matrix(m);
  }
  return Net(s);
}

inline Net parse_net(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return net_from_json(j);
}

inline json to_json_value(const BaseLocusReport& b) {
  json support = json::array();
  for (const auto& p : b.support) support.push_back(json{{"point", coords_json(p.point)}, {"rank", p.rank}});
  json j{{"dimension", b.dimension},
         {"degree", b.degree},
         {"support", support},
         {"distinct_points", b.distinct_points},
         {"reduced", b.reduced}};
  if (b.linear_span && b.dimension > 0) j["linear_span"] = to_json_value(*b.linear_span);
  return j;
}

inline json to_json_value(const MLResult& r) {
  return json{{"value", r.value},
              {"samples_used", r.samples_used},
              {"per_sample_counts", r.per_sample_counts},
              {"stable", r.stable}};
}

inline json ideal_json(const Ideal& ideal) {
  json a = json::array();
  for (const auto& g : groebner_basis(ideal, MonomialOrder::grevlex())) a.push_back(to_string(g));
  return a;
}

inline json to_json_value(const SurfaceProfile& p) {
  json basis = json::array();
  for (const auto& s : p.center_basis) basis.push_back(coords_json(s));
  json on = json::array();
  for (const auto& s : p.center_veronese_points) on.push_back(coords_json(s));
  return json{{"degree", p.degree},
              {"span_codim", p.span_codim},
              {"singular", p.singular},
              {"center_kind", center_name(p.center)},
              {"center_basis", basis},
              {"center_veronese_points", on}};
}

inline json to_json_value(const Fingerprint& f) {
  json j{{"regular", f.regular},
         {"rank_T", f.rank_t},
         {"rank_one_points", {{"dimension", f.rank_one.dimension}, {"degree", f.rank_one.degree}, {"distinct", f.rank_one.distinct}}},
         {"common_zeros",
          {{"dimension", f.common_zeros.dimension}, {"degree", f.common_zeros.degree}, {"distinct", f.common_zeros.distinct}}},
         {"disc_smooth", f.disc_smooth}};
  if (f.regular) {
    j["deg_recip"] = f.deg_recip;
    j["base_dim"] = f.base_dim;
    j["base_deg"] = f.base_deg;
  }
  if (f.mld_value) j["mld"] = *f.mld_value;
  return j;
}

inline json type_json(const std::optional<WallTag>& t) { return t ? json(tag_name(*t)) : json("UNKNOWN"); }

inline json to_json_value(const NetReport& r) {
  json j{{"type", type_json(r.type)}, {"regular", r.regular}, {"fingerprint", to_json_value(r.fingerprint)}};
  if (!r.regular) return j;
  j["deg_recip"] = r.deg_recip;
  j["span_codim"] = r.span_codim;
  j["reciprocal_ideal"] = ideal_json(*r.reciprocal);
  j["base_locus"] = to_json_value(*r.base_locus);
  j["mld"] = to_json_value(*r.mld);
  j["rmld"] = to_json_value(*r.rmld);
  if (r.mld_geometry->value) {
    j["mld_via_geometry"] = *r.mld_geometry->value;
  } else {
    j["mld_via_geometry"] = json{{"value", "NOT_APPLICABLE"}, {"bound", *r.mld_geometry->bound}};
  }
  j["relation"] = relation_name(*r.relation);
  json ann = json::array();
  for (const auto& s : r.annihilator_basis) ann.push_back(coords_json(s));
  j["annihilator_basis"] = ann;
  j["projection_center"] = to_json_value(*r.center);
  return j;
}

inline json tables_json(const std::vector<TableRow>& rows) {
  json t1 = json::array(), t2 = json::array(), t4 = json::array();
  for (const auto& r : rows) {
    const NetReport& n = r.report;
    t1.push_back(json{{"type", tag_name(r.tag)},
                      {"codim", catalog_row(r.tag).codim},
                      {"deg_recip", n.deg_recip},
                      {"mld", n.mld->value},
                      {"rmld", n.rmld->value},
                      {"relation", relation_symbol(*n.relation)}});
    t2.push_back(json{{"type", tag_name(r.tag)},
                      {"base_locus", to_json_value(*n.base_locus)},
                      {"description", base_locus_string(*n.base_locus)},
                      {"common_zeros", r.common_zeros}});
    if (!n.annihilator_basis.empty()) {
      json forms = json::array(), vecs = json::array();
      for (const auto& s : n.annihilator_basis) {
        forms.push_back(form_string(s));
        vecs.push_back(coords_json(s));
      }
      t4.push_back(json{{"type", tag_name(r.tag)}, {"forms", forms}, {"vectors", vecs}});
    }
  }
  return json{{"table1", t1}, {"table2", t2}, {"table4", t4}};
}

}  // namespace netml
