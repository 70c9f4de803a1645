#include <gtest/gtest.h>

#include "support.hpp"

using namespace netml;
using namespace netml::testing;

namespace {

// The 6x6 matrix displayed for type A, written out in g and c.
QMat displayed_type_a_matrix(const Rat& g, const Rat& c) {
  return QMat{{0, -1, -2 * c * g, 0, c, 0},        {-1, 0, -(c + g * g), 0, -2 * g, 0},
              {0, 0, 2 * g, 0, -1, 0},             {0, 0, 0, 1, 0, g},
              {-1, 0, 2 * g * g, 0, g, 0},         {0, 0, 0, 0, 0, 1}};
}

const std::vector<std::pair<Rat, Rat>> kParams{{1, 1}, {0, 1}, {2, -5}, {1, 3}, {Rat(1, 2), Rat(-7, 3)}};

}  // namespace

TEST(Net, RequiresIndependentGenerators) {
  EXPECT_THROW(Net(quadric(1, 0, 0, 0, 0, 0), quadric(2, 0, 0, 0, 0, 0), quadric(0, 1, 0, 0, 0, 0)), Error);
}

TEST(Net, TypeAParameterChecks) {
  EXPECT_THROW(WallType::a(1, 0), ParameterError);
  EXPECT_THROW(WallType::a(1, -9), ParameterError);
  EXPECT_THROW(WallType::a(Rat(1, 3), -1), ParameterError);
  EXPECT_NO_THROW(WallType::a(2, -5));
}

TEST(Net, TagNamesRoundTrip) {
  for (auto t : kAllTags) EXPECT_EQ(parse_tag(tag_name(t)), t);
  EXPECT_EQ(parse_tag("Fs"), WallTag::Fs);
  EXPECT_EQ(parse_tag("Gstar"), WallTag::Gs);
  EXPECT_THROW(parse_tag("J"), ParameterError);
}

TEST(Net, RegularityOfCatalog) {
  for (auto t : kRegularTags) EXPECT_TRUE(is_regular(canonical_net(t))) << tag_name(t);
  EXPECT_FALSE(is_regular(canonical_net(WallTag::I)));
  EXPECT_FALSE(is_regular(canonical_net(WallTag::Is)));
}

TEST(PolarNet, IsTheAnnihilator) {
  for (auto t : kAllTags) {
    Net l = canonical_net(t);
    Net p = polar_net(l);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(trace_pair(l[i], p[j]), 0) << tag_name(t);
    }
    EXPECT_TRUE(polar_net(p).same_span(l)) << tag_name(t);
  }
}

TEST(PolarNet, DualTypePairs) {
  // B <-> B*, D <-> D*, E <-> E*, F <-> F*, G <-> G*; A stays A
  std::vector<std::pair<WallTag, WallTag>> pairs{
      {WallTag::B, WallTag::Bs}, {WallTag::D, WallTag::Ds}, {WallTag::E, WallTag::Es},
      {WallTag::F, WallTag::Fs}, {WallTag::G, WallTag::Gs}};
  for (auto [a, b] : pairs) {
    auto ta = rank(transformation_matrix(polar_net(canonical_net(a))));
    EXPECT_EQ(ta, catalog_row(b).rank_t) << tag_name(a);
    EXPECT_EQ(rank(transformation_matrix(polar_net(canonical_net(b)))), catalog_row(a).rank_t) << tag_name(b);
  }
}

TEST(PolarNet, CongruenceEquivariance) {
  // (g^T L g)^perp = g^{-1} L^perp g^{-T}
  std::mt19937_64 rng(41);
  for (auto t : kRegularTags) {
    Net l = canonical_net(t);
    QMat g = random_congruence(rng);
    Net lhs = polar_net(net_congruence(g, l));
    Net rhs = net_congruence(transpose(inverse(g)), polar_net(l));
    EXPECT_TRUE(lhs.same_span(rhs)) << tag_name(t);
  }
}

TEST(TransformationMatrix, ReproducesAdjugateOfMembers) {
  std::mt19937_64 rng(42);
  for (auto t : kAllTags) {
    Net l = canonical_net(t);
    QMat tm = transformation_matrix(l);
    for (int trial = 0; trial < 5; ++trial) {
      Rat a = small_rat(rng), b = small_rat(rng), c = small_rat(rng);
      QMat mons(6, 1, {a * a, b * b, c * c, a * b, a * c, b * c});
      QMat lhs = tm * mons;
      QMat adj = cofactor_adjugate(l.member(a, b, c).matrix());
      Sym3 expect = Sym3::from_matrix(adj);
      for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(lhs(k, 0), expect[k]) << tag_name(t);
    }
  }
}

TEST(TransformationMatrix, TypeAMatchesDisplayedMatrix) {
  for (const auto& [g, c] : kParams) {
    QMat t = transformation_matrix(canonical_net(WallType::a(g, c)));
    EXPECT_EQ(t.entries(), displayed_type_a_matrix(g, c).entries()) << g << "," << c;
  }
}

TEST(TransformationMatrix, TypeADeterminant) {
  // independent sympy expansion of the 6x6 determinant gives -(9g^2 + c)
  for (const auto& [g, c] : kParams) {
    EXPECT_EQ(det(transformation_matrix(canonical_net(WallType::a(g, c)))), -(9 * g * g + c));
  }
  EXPECT_EQ(det(transformation_matrix(canonical_net(WallTag::A))), -10);
}

TEST(TransformationMatrix, RanksFollowCatalog) {
  for (auto t : kRegularTags) EXPECT_EQ(rank(transformation_matrix(canonical_net(t))), catalog_row(t).rank_t) << tag_name(t);
}

TEST(TransformationMatrix, LeftKernelsMatchAnnihilatorTable) {
  std::vector<std::pair<WallTag, std::vector<std::string>>> table{
      {WallTag::B, {"2*x*z - y^2 + 3*z^2"}},
      {WallTag::C, {"y^2 - 2*x*z"}},
      {WallTag::D, {"x*z", "y*z"}},
      {WallTag::E, {"x*y", "x*z", "y*z"}},
      {WallTag::F, {"x^2 + 2*x*y", "y^2 + 2*x*y"}},
      {WallTag::Fs, {"x*z", "y*z"}},
      {WallTag::G, {"x*y", "x*z", "y^2"}},
      {WallTag::Gs, {"x*y", "y^2"}},
      {WallTag::H, {"x^2", "x*y", "y^2 - 2*x*z"}},
  };
  for (const auto& [t, forms] : table) {
    std::vector<Sym3> v;
    for (const auto& f : forms) v.push_back(form_vector(f));
    EXPECT_TRUE(same_row_space(left_kernel(transformation_matrix(canonical_net(t))), rows_of(v))) << tag_name(t);
  }
  for (auto t : {WallTag::A, WallTag::Bs, WallTag::Ds, WallTag::Es}) {
    EXPECT_EQ(left_kernel(transformation_matrix(canonical_net(t))).rows(), 0u) << tag_name(t);
  }
}

TEST(TransformationMatrix, TypeBKernelForGeneralG) {
  // B with parameter g: c = -9 g^2, annihilator 2xz - y^2 + 3 g z^2
  for (Rat g : {Rat(1), Rat(2), Rat(-1, 3)}) {
    Net l = detail::abc_family(g, -9 * g * g);
    QMat lk = left_kernel(transformation_matrix(l));
    Sym3 v(0, -1, 3 * g, 0, 1, 0);
    EXPECT_TRUE(same_row_space(lk, rows_of({v}))) << g;
  }
}

TEST(TransformationMatrix, TypeERightKernel) {
  QMat k = transpose(right_kernel(transformation_matrix(canonical_net(WallTag::E))));
  EXPECT_TRUE(same_row_space(k, rows_of({form_vector("x^2"), form_vector("y^2"), form_vector("z^2")})));
}

TEST(RankOne, EmptyForVeroneseTypes) {
  for (auto t : {WallTag::A, WallTag::Bs, WallTag::Ds, WallTag::Es}) {
    EXPECT_EQ(hilbert(rank_one_points(canonical_net(t))).dimension, -1) << tag_name(t);
  }
  EXPECT_EQ(hilbert(rank_one_points(canonical_net(WallTag::I))).dimension, 1);
  EXPECT_EQ(hilbert(rank_one_points(canonical_net(WallTag::Is))).dimension, 0);
}

TEST(CommonZeros, TypeFStar) {
  PointSet p = projective_points(common_zeros(canonical_net(WallTag::Fs)));
  EXPECT_EQ(p.distinct, 2u);
  EXPECT_TRUE(p.rational.empty());
}

TEST(XSpace, KernelOfMultiplication) {
  Sym3 m = quadric(1, 0, 0, 0, 0, 0);
  QMat x = x_space(m);
  EXPECT_EQ(x.rows(), 3u);
  for (std::size_t r = 0; r < x.rows(); ++r) {
    Sym3 n(x(r, 0), x(r, 1), x(r, 2), x(r, 3), x(r, 4), x(r, 5));
    EXPECT_TRUE((m.matrix() * n.matrix()).is_zero());
  }
}
