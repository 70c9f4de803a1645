#include <gtest/gtest.h>

#include "support.hpp"

using namespace netml;
using namespace netml::testing;

namespace {

const VarList& xyz() {
  static const VarList v = make_vars({"x", "y", "z"});
  return v;
}

Poly P(const std::string& s, const VarList& v = xyz()) { return parse_poly(s, v); }
Poly U(const std::string& s) { return parse_poly(s, sym_vars()); }

bool same_ideal(const Ideal& a, const Ideal& b) {
  for (const auto& g : a.generators())
    if (!contains(b, g)) return false;
  for (const auto& g : b.generators())
    if (!contains(a, g)) return false;
  return true;
}

// Number of monomials of degree d outside the leading-term ideal.
long hilbert_function(const Ideal& ideal, unsigned d) {
  auto ord = MonomialOrder::grevlex();
  auto lead = leading_monomials(groebner_basis(ideal, ord), ord);
  const std::size_t n = ideal.nvars();
  long count = 0;
  Monomial m;
  auto rec = [&](auto&& self, std::size_t v, unsigned left) -> void {
    if (v + 1 == n) {
      m.e[v] = static_cast<std::uint16_t>(left);
      for (const auto& l : lead)
        if (l.divides(m)) return;
      ++count;
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      m.e[v] = static_cast<std::uint16_t>(k);
      self(self, v + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return count;
}

Rat eval_hp(const std::vector<Rat>& hp, long s) {
  Rat v = 0, pw = 1;
  for (const auto& c : hp) {
    v += c * pw;
    pw *= s;
  }
  return v;
}

// Degree of PL^{-1} as the number of invertible members whose adjugate
// meets two fixed hyperplanes, read in an affine chart of PL.
long degree_by_slicing(const Net& l) {
  const auto& v = param_vars();
  auto adj = sym_adjugate(symbolic_member(l, v));
  std::vector<Poly> eqs;
  const std::array<std::array<long, 6>, 2> h{{{3, -1, 4, 1, -5, 9}, {2, 6, -5, 3, 5, -8}}};
  for (const auto& w : h) {
    Poly f(v);
    for (std::size_t k = 0; k < 6; ++k) f += adj[k] * Rat(w[k]);
    eqs.push_back(f);
  }
  eqs.push_back(parse_poly("7*alpha - 11*beta + 13*gamma - 1", v));
  return static_cast<long>(localized_dimension(Ideal(v, eqs), sym_det(symbolic_member(l, v))).value());
}

}  // namespace

TEST(Hilbert, MonomialExamples) {
  auto h = hilbert(Ideal(xyz(), {P("x^2"), P("y^2")}));
  EXPECT_EQ(h.dimension, 0);
  EXPECT_EQ(h.degree, 4);
  auto line = hilbert(Ideal(xyz(), {P("x")}));
  EXPECT_EQ(line.dimension, 1);
  EXPECT_EQ(line.degree, 1);
  auto empty = hilbert(Ideal(xyz(), {P("x"), P("y"), P("z")}));
  EXPECT_EQ(empty.dimension, -1);
  EXPECT_EQ(empty.degree, 0);
}

TEST(Hilbert, RejectsInhomogeneous) {
  EXPECT_THROW(hilbert(Ideal(xyz(), {P("x^2 - y")})), ContractError);
}

TEST(Hilbert, PolynomialMatchesHilbertFunction) {
  std::vector<Ideal> ideals{
      Ideal(xyz(), {P("x^2 - y*z"), P("x*y - z^2")}),
      Ideal(xyz(), {P("x^3 + y^3 + z^3")}),
      Ideal(xyz(), {P("x*y"), P("x*z"), P("y*z")}),
      reciprocal_ideal(canonical_net(WallTag::A)),
      reciprocal_ideal(canonical_net(WallTag::C)),
  };
  for (const auto& i : ideals) {
    auto h = hilbert(i);
    for (unsigned d = 6; d <= 8; ++d) EXPECT_EQ(eval_hp(h.hilbert_polynomial, d), hilbert_function(i, d));
  }
}

TEST(Hilbert, VeroneseSurface) {
  auto h = hilbert(reciprocal_ideal(canonical_net(WallTag::A)));
  EXPECT_EQ(h.dimension, 2);
  EXPECT_EQ(h.degree, 4);
  // binom(2s + 2, 2)
  std::vector<Rat> expect{1, 3, 2};
  EXPECT_EQ(h.hilbert_polynomial, expect);
}

TEST(Points, RationalAndIrrational) {
  PointSet conj = projective_points(Ideal(xyz(), {P("x"), P("y^2 + z^2")}));
  EXPECT_EQ(conj.distinct, 2u);
  EXPECT_TRUE(conj.rational.empty());
  PointSet dbl = projective_points(Ideal(xyz(), {P("x^2"), P("y")}));
  EXPECT_EQ(dbl.length, 2u);
  EXPECT_EQ(dbl.distinct, 1u);
  ASSERT_EQ(dbl.rational.size(), 1u);
  EXPECT_EQ(dbl.rational[0], (std::vector<Rat>{0, 0, 1}));
  PointSet four = projective_points(Ideal(xyz(), {P("x^2 - 4*z^2"), P("y^2 - 9/4*z^2")}));
  EXPECT_EQ(four.distinct, 4u);
  EXPECT_EQ(four.rational.size(), 4u);
}

TEST(Points, RationalRootsOfUnivariates) {
  // (2x - 3)(x + 5)(x^2 + 1)
  detail::UPoly p{-15, 7, -13, 7, 2};
  auto r = detail::rational_roots(p);
  EXPECT_EQ(r, (std::vector<Rat>{-5, Rat(3, 2)}));
  // (x - 1)^3 (x + 2)
  detail::UPoly q{-2, 5, -3, -1, 1};
  EXPECT_EQ(detail::squarefree_part(q).size(), 3u);
}

TEST(Reciprocal, VanishesOnAdjugates) {
  std::mt19937_64 rng(51);
  for (auto t : kRegularTags) {
    Net l = canonical_net(t);
    Ideal r = reciprocal_ideal(l);
    for (int trial = 0; trial < 5; ++trial) {
      Sym3 a = l.member(small_rat(rng), small_rat(rng), small_rat(rng)).adjugate();
      std::vector<Rat> pt(a.coords().begin(), a.coords().end());
      for (const auto& g : r.generators()) EXPECT_EQ(evaluate(g, pt), 0) << tag_name(t);
    }
    EXPECT_EQ(hilbert(r).dimension, 2) << tag_name(t);
  }
}

TEST(Reciprocal, DegreeAgreesWithSlicing) {
  for (auto t : kRegularTags) {
    Net l = canonical_net(t);
    EXPECT_EQ(hilbert(reciprocal_ideal(l)).degree, degree_by_slicing(l)) << tag_name(t);
  }
}

TEST(Reciprocal, TypeFStarIdeal) {
  Net l = canonical_net(WallTag::Fs);
  EXPECT_TRUE(same_ideal(reciprocal_ideal(l), Ideal(sym_vars(), {U("u13"), U("u23"), U("u11*u33 - u11*u22 + u12^2")})));
  EXPECT_TRUE(same_ideal(polar_plane_ideal(l), Ideal(sym_vars(), {U("u11"), U("u12"), U("u22 + u33")})));
}

TEST(Reciprocal, SingularNetIsRejected) {
  EXPECT_THROW(reciprocal_ideal(canonical_net(WallTag::I)), RegularityError);
  EXPECT_THROW(base_locus(canonical_net(WallTag::Is)), RegularityError);
}

TEST(Reciprocal, GeneratorDegreesOfVeroneseTypes) {
  for (auto t : {WallTag::A, WallTag::Bs, WallTag::Ds, WallTag::Es}) {
    EXPECT_EQ(minimal_generator_degrees(reciprocal_ideal(canonical_net(t))), std::vector<unsigned>(6, 2)) << tag_name(t);
  }
}

TEST(BaseLocus, TypeFIsADoublePoint) {
  BaseLocusReport b = base_locus(canonical_net(WallTag::F));
  EXPECT_EQ(b.dimension, 0);
  EXPECT_EQ(b.degree, 2);
  EXPECT_EQ(b.distinct_points, 1u);
  EXPECT_FALSE(b.reduced);
  ASSERT_EQ(b.support.size(), 1u);
  EXPECT_EQ(b.support[0].point, form_vector("z^2"));
  EXPECT_EQ(b.support[0].rank, 1u);
}

TEST(BaseLocus, TypeHIsALine) {
  BaseLocusReport b = base_locus(canonical_net(WallTag::H));
  EXPECT_EQ(b.dimension, 1);
  EXPECT_EQ(b.degree, 1);
  ASSERT_TRUE(b.linear_span.has_value());
  EXPECT_TRUE(same_row_space(*b.linear_span, rows_of({form_vector("y*z"), form_vector("z^2")})));
}

TEST(BaseLocus, SupportLiesOnBothSurfaces) {
  for (auto t : kRegularTags) {
    Net l = canonical_net(t);
    BaseLocusReport b = base_locus(l);
    for (const auto& s : b.support) {
      for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(trace_pair(s.point, l[i]), 0) << tag_name(t);
      EXPECT_LT(s.rank, 3u);  // no full-rank matrix lies in the base locus
    }
  }
}

TEST(Smoothness, VeronesePointsAreSmooth) {
  Ideal r = reciprocal_ideal(canonical_net(WallTag::A));
  Sym3 p = canonical_net(WallTag::A).member(1, 2, 3).adjugate();
  std::vector<Rat> pt(p.coords().begin(), p.coords().end());
  EXPECT_TRUE(is_smooth_point(r, pt, 2));
}

TEST(Smoothness, ConeVertexIsSingular) {
  // x^2 + y^2 - z^2 in P^2 is smooth; the cone x^2 + y^2 - z^2 in P^3 is
  // singular at (0:0:0:1)
  VarList v = make_vars({"x", "y", "z", "w"});
  Ideal cone(v, {parse_poly("x^2 + y^2 - z^2", v)});
  EXPECT_FALSE(is_smooth_point(cone, {0, 0, 0, 1}, 2));
  EXPECT_TRUE(is_smooth_point(cone, {3, 4, 5, 1}, 2));
}

TEST(Center, KindsPerType) {
  std::map<WallTag, CenterKind> expect{
      {WallTag::A, CenterKind::empty},        {WallTag::Bs, CenterKind::empty},
      {WallTag::Ds, CenterKind::empty},       {WallTag::Es, CenterKind::empty},
      {WallTag::B, CenterKind::point_on_veronese}, {WallTag::C, CenterKind::point_on_veronese},
      {WallTag::D, CenterKind::secant_line},  {WallTag::F, CenterKind::secant_line},
      {WallTag::Fs, CenterKind::tangent_line}, {WallTag::Gs, CenterKind::tangent_line},
      {WallTag::E, CenterKind::plane},        {WallTag::G, CenterKind::plane},
      {WallTag::H, CenterKind::plane}};
  for (auto [t, k] : expect) EXPECT_EQ(recip_surface_profile(canonical_net(t)).center, k) << tag_name(t);
}

TEST(Center, PointForTypesBAndC) {
  // v(2g : 0 : 1) in monomial coordinates: (4g^2, 0, 1, 0, 2g, 0)
  for (auto [t, g] : {std::pair{WallTag::B, Rat(1)}, std::pair{WallTag::C, Rat(0)}}) {
    auto p = recip_surface_profile(canonical_net(t));
    ASSERT_EQ(p.center_basis.size(), 1u);
    EXPECT_TRUE(same_row_space(rows_of(p.center_basis), rows_of({Sym3(4 * g * g, 0, 1, 0, 2 * g, 0)}))) << tag_name(t);
  }
}
