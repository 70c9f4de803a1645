#include <gtest/gtest.h>

#include "support.hpp"

using namespace netml;
using namespace netml::testing;

namespace {

std::array<Rat, 3> chart_of(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> c(-100, 100);
  return {Rat(c(rng)), Rat(c(rng)), Rat(c(rng))};
}

}  // namespace

TEST(Sampling, DrawIsBoundedAndDeterministic) {
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 20; ++i) {
    Sym3 s = draw_sym(a, 100);
    EXPECT_EQ(s, draw_sym(b, 100));
    for (const auto& x : s.coords()) {
      EXPECT_LE(abs(x.get_num()), 100);
      EXPECT_LE(x.get_den(), 100);
    }
  }
}

TEST(MLDegree, CheapTypes) {
  std::map<WallTag, std::pair<long, long>> expect{
      {WallTag::E, {1, 1}}, {WallTag::G, {0, 0}}, {WallTag::H, {0, 0}}, {WallTag::D, {2, 3}}, {WallTag::F, {0, 2}}};
  for (auto [t, v] : expect) {
    Net l = canonical_net(t);
    EXPECT_EQ(mld(l).value, v.first) << tag_name(t);
    EXPECT_EQ(rmld(l).value, v.second) << tag_name(t);
  }
}

TEST(MLDegree, DiagonalNetHasUniqueCriticalPoint) {
  // diagonal concentration model: K = diag(1/s11, 1/s22, 1/s33)
  Net l = canonical_net(WallTag::E);
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 5; ++trial) {
    Sym3 s = draw_sym(rng, 100);
    ChartSystem cs = mld_chart_system(l, s, chart_of(rng));
    EXPECT_EQ(count_critical(cs.equations, cs.exclude), 1);
  }
}

TEST(MLDegree, AffineSystemsAgreeWithChartSystems) {
  std::mt19937_64 rng(62);
  const auto& v = param_vars();
  for (auto t : kRegularTags) {
    Net l = canonical_net(t);
    Sym3 s = draw_sym(rng, 100);
    ChartSystem m = mld_chart_system(l, s, chart_of(rng));
    Poly det = sym_det(symbolic_member(l, v));
    EXPECT_EQ(count_critical(mld_system(l, s), det), count_critical(m.equations, m.exclude)) << tag_name(t);
  }
  // the affine reciprocal system is only cheap where the cone has few
  // spurious components
  for (auto t : {WallTag::D, WallTag::E, WallTag::F, WallTag::Fs, WallTag::G, WallTag::Gs, WallTag::H}) {
    Net l = canonical_net(t);
    Sym3 s = draw_sym(rng, 100);
    ChartSystem r = rmld_chart_system(l, s, chart_of(rng));
    Poly excl = sym_det(symbolic_member(l, v)) * sym_trace_pair(constant_sym(s, v), sym_adjugate(symbolic_member(l, v)));
    EXPECT_EQ(count_critical(rmld_system(l, s), excl), count_critical(r.equations, r.exclude)) << tag_name(t);
  }
}

TEST(MLDegree, IndependentOfSeed) {
  for (auto t : {WallTag::C, WallTag::Fs, WallTag::Gs}) {
    Net l = canonical_net(t);
    long m = mld(l, 3, 1).value, r = rmld(l, 3, 1).value;
    for (std::uint64_t seed : {2u, 99u, 2024u}) {
      EXPECT_EQ(mld(l, 3, seed).value, m) << tag_name(t);
      EXPECT_EQ(rmld(l, 3, seed).value, r) << tag_name(t);
    }
  }
}

TEST(MLDegree, ReportsSampleBookkeeping) {
  MLResult r = mld(canonical_net(WallTag::D), 4, 5);
  EXPECT_TRUE(r.stable);
  EXPECT_GE(r.samples_used, 4u);
  EXPECT_EQ(r.per_sample_counts.size(), r.samples_used);
  EXPECT_EQ(std::count(r.per_sample_counts.begin(), r.per_sample_counts.end(), r.value) >= 2, true);
}

TEST(MLDegree, Preconditions) {
  EXPECT_THROW(mld(canonical_net(WallTag::I)), RegularityError);
  EXPECT_THROW(rmld(canonical_net(WallTag::Is)), RegularityError);
  EXPECT_THROW(mld(canonical_net(WallTag::E), 0), ParameterError);
}

TEST(MLDegree, GeometryFormula) {
  for (auto t : kRegularTags) {
    Net l = canonical_net(t);
    GeometricMLD g = mld_via_geometry(l);
    if (t == WallTag::H) {
      EXPECT_FALSE(g.value.has_value());
      EXPECT_EQ(g.bound, 0);
      continue;
    }
    ASSERT_TRUE(g.value.has_value()) << tag_name(t);
    EXPECT_EQ(*g.value, catalog_row(t).mld) << tag_name(t);
  }
}

TEST(Relation, Comparison) {
  EXPECT_EQ(relation_of(7, 4, 4), Relation::equal);
  EXPECT_EQ(relation_of(2, 2, 0), Relation::greater);
  EXPECT_EQ(relation_of(1, 2, 1), Relation::less);
  EXPECT_EQ(relation_symbol(Relation::greater), ">");
  EXPECT_EQ(relation_name(Relation::less), "LESS");
}

TEST(RankLemmas, SingularInversesHaveRankOne) {
  // nets without rank-one members: every singular point of PL^{-1} has rank
  // one, i.e. each 2x2 minor lies in the radical of I(PL^{-1}) + <det U>
  const VarList& u = sym_vars();
  SymCoords<Poly> m{Poly::variable(u, 0), Poly::variable(u, 1), Poly::variable(u, 2),
                    Poly::variable(u, 3), Poly::variable(u, 4), Poly::variable(u, 5)};
  auto at = [&](std::size_t i, std::size_t j) { return m[sym_slot(i, j)]; };
  Poly minor = at(0, 0) * at(1, 1) - at(0, 1) * at(0, 1);
  Poly minor2 = at(0, 1) * at(1, 2) - at(1, 1) * at(0, 2);
  for (auto t : {WallTag::A, WallTag::Bs, WallTag::Ds, WallTag::Es}) {
    Ideal r = reciprocal_ideal(canonical_net(t));
    Ideal sing = ideal_sum(r, Ideal(u, {sym_det(m)}));
    for (const auto& f : {minor, minor2}) EXPECT_EQ(quotient_dimension(saturate_count(sing, f)), 0u) << tag_name(t);
  }
}

TEST(RankLemmas, RankTwoBasePointIsAnnihilatedByTheNet) {
  // F*: the base locus point y^2 - z^2 has rank 2, so some M in L has M N = 0
  Net l = canonical_net(WallTag::Fs);
  BaseLocusReport b = base_locus(l);
  ASSERT_EQ(b.support.size(), 1u);
  const Sym3& n = b.support[0].point;
  ASSERT_EQ(n.rank(), 2u);
  QMat x = x_space(n);
  QMat both = vstack(x, l.coordinate_matrix());
  EXPECT_LT(rank(both), x.rows() + 3);
  // and that M has rank one
  QMat k = left_kernel(both);
  ASSERT_GE(k.rows(), 1u);
  Sym3 m;
  for (std::size_t i = 0; i < 3; ++i) m = m + (-k(0, x.rows() + i)) * l[i];
  EXPECT_EQ(m.rank(), 1u);
  EXPECT_TRUE((m.matrix() * n.matrix()).is_zero());
}
