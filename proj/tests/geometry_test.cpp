#include <gtest/gtest.h>

#include "support.hpp"

using namespace w0;
using namespace w0::testing;

namespace {

using Groups = std::vector<CohomologyGroup>;

Groups kh(const SncConfiguration& c, Ring ring = Ring::Z) { return trim(cohomology(dual_complex(c), ring)); }

ResolutionData two_nodes() {
  ResolutionData r;
  r.exceptional = SncConfiguration{{"p1", "q1", "p2", "q2"}, {}, true};
  r.singular_points = {"s1", "s2"};
  r.image = {{"p1", 0}, {"q1", 0}, {"p2", 1}, {"q2", 1}};
  r.ambient_components = {"C~"};
  r.ambient_of = {0, 0, 0, 0};
  return r;
}

// Two exceptional curves meeting in one point, all over one singular point.
ResolutionData chain_of_two() {
  ResolutionData r;
  r.exceptional = SncConfiguration{{"E1", "E2"}, {}, true};
  r.exceptional.strata[{0, 1}] = {{"e12", {0, 0}}};
  r.singular_points = {"s"};
  r.image = {{"E1", 0}, {"E2", 0}, {"e12", 0}};
  r.ambient_components = {"S~"};
  r.ambient_of = {0, 0};
  return r;
}

}  // namespace

TEST(DualComplex, Point) {
  const auto s = dual_complex(point_config());
  EXPECT_EQ(s.counts(), (std::vector<std::size_t>{1}));
  EXPECT_EQ(kh(point_config()), (Groups{Zr(1)}));
}

TEST(DualComplex, Banana) {
  const auto s = dual_complex(banana());
  EXPECT_EQ(s.counts(), (std::vector<std::size_t>{2, 2}));
  EXPECT_EQ(s.label(1, 0), "p");
  EXPECT_EQ(s.label(0, 1), "B");
  EXPECT_EQ(kh(banana()), (Groups{Zr(1), Zr(1)}));
}

TEST(DualComplex, CyclesOfCurves) {
  for (std::size_t n = 3; n <= 8; ++n) EXPECT_EQ(kh(cycle_config(n)), (Groups{Zr(1), Zr(1)})) << n;
}

TEST(DualComplex, Tetrahedron) {
  const auto s = dual_complex(tetrahedron());
  EXPECT_EQ(s.counts(), (std::vector<std::size_t>{4, 6, 4}));
  EXPECT_EQ(cohomology(s, Ring::Z), cohomology(boundary_of_tetrahedron(), Ring::Z));
  EXPECT_EQ(kh(tetrahedron()), (Groups{Zr(1), Zr(0), Zr(1)}));
}

TEST(DualComplex, RejectsUndefinedComponent) {
  SncConfiguration c{{"A", "B"}, {}, true};
  c.strata[{0, 2}] = {{"x", {0, 0}}};
  try {
    (void)dual_complex(c);
    FAIL() << "accepted a stratum over an undefined component";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("0,2"), std::string::npos) << e.what();
  }
}

TEST(DualComplex, RejectsMissingFacetAndBadContainment) {
  SncConfiguration c = tetrahedron();
  c.strata.erase({0, 1});
  EXPECT_THROW(dual_complex(c), InvalidInput);

  // A triple point whose pairwise curves disagree about which piece they pass through.
  SncConfiguration d{{"A", "B", "C"}, {}, true};
  d.strata[{0, 1}] = {{"ab", {0, 0}}};
  d.strata[{0, 2}] = {{"ac", {0, 0}}};
  d.strata[{1, 2}] = {{"bc1", {0, 0}}, {"bc2", {0, 0}}};
  d.strata[{0, 1, 2}] = {{"t", {1, 0, 0}}};
  EXPECT_NO_THROW(dual_complex(d));
  d.strata[{0, 1, 2}][0].faces = {2, 0, 0};
  EXPECT_THROW(dual_complex(d), InvalidInput);
}

TEST(DualComplex, RejectsDuplicateLabels) {
  SncConfiguration c = banana();
  c.strata[{0, 1}][1].label = "A";
  EXPECT_THROW(dual_complex(c), InvalidInput);
}

TEST(Product, BananaSquared) {
  const auto p = product_config(banana(), banana());
  EXPECT_EQ(p.components.size(), 4u);
  EXPECT_EQ(trim(cohomology(dual_complex(p), Ring::Q)), (Groups{Zr(1), Zr(2), Zr(1)}));
  EXPECT_TRUE(kunneth_verify(banana(), banana()).pass());
}

TEST(Product, PointIsAUnit) {
  for (const auto& c : {banana(), cycle_config(4), tetrahedron()})
    EXPECT_EQ(kh(product_config(point_config(), c)), kh(c));
}

TEST(Product, CycleTimesCycleIsATorus) {
  const auto p = product_config(cycle_config(3), cycle_config(4));
  EXPECT_EQ(kh(p), (Groups{Zr(1), Zr(2), Zr(1)}));
}

TEST(Kunneth, AllPairsOfDeskExamples) {
  const std::vector<SncConfiguration> cs{point_config(), banana(), cycle_config(3), cycle_config(4), tetrahedron()};
  for (const auto& a : cs)
    for (const auto& b : cs) {
      const auto rep = kunneth_verify(a, b);
      EXPECT_TRUE(rep.pass());
    }
  const auto tt = kunneth_verify(tetrahedron(), tetrahedron());
  EXPECT_EQ(tt.ranks_product, (std::vector<std::size_t>{1, 0, 2, 0, 1}));
}

TEST(Resolution, NodalCubic) {
  const auto nerve = resolution_nerve(nodal_cubic());
  EXPECT_TRUE(validate(nerve).ok());
  EXPECT_EQ(trim(kh_complete(nerve, Ring::Z)), (Groups{Zr(1), Zr(1)}));
  const auto rep = betti_bound_report(nodal_cubic());
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.exceptional_betti.front(), 2u);
  ASSERT_FALSE(rep.degrees.empty());
  EXPECT_EQ(rep.degrees[0].degree, 1u);
  EXPECT_EQ(rep.degrees[0].actual, 1);
}

TEST(Resolution, TwoNodes) {
  EXPECT_EQ(trim(kh_complete(resolution_nerve(two_nodes()), Ring::Z)), (Groups{Zr(1), Zr(2)}));
  EXPECT_TRUE(betti_bound_report(two_nodes()).pass());
}

TEST(Resolution, ConnectedFibreContributesNothing) {
  const auto nerve = resolution_nerve(chain_of_two());
  EXPECT_TRUE(validate(nerve).ok());
  EXPECT_EQ(trim(kh_complete(nerve, Ring::Z)), (Groups{Zr(1)}));
  EXPECT_TRUE(betti_bound_report(chain_of_two()).pass());
}

TEST(Resolution, TowerHeightsAreEven) {
  EXPECT_EQ(tower_heights(nodal_cubic()), (std::vector<std::size_t>{0}));
  EXPECT_EQ(tower_heights(chain_of_two()), (std::vector<std::size_t>{2}));
}

TEST(Resolution, EmptySingularSetGivesComponents) {
  for (std::size_t n = 1; n <= 4; ++n) {
    ResolutionData r;
    for (std::size_t i = 0; i < n; ++i) r.ambient_components.push_back("X" + std::to_string(i));
    EXPECT_EQ(trim(kh_complete(resolution_nerve(r), Ring::Z)), (Groups{Zr(n)}));
  }
}

TEST(Resolution, RejectsInconsistentData) {
  auto r = nodal_cubic();
  r.image.erase("q");
  EXPECT_THROW(resolution_nerve(r), InvalidInput);

  r = nodal_cubic();
  r.singular_points.push_back("lonely");
  EXPECT_THROW(resolution_nerve(r), InvalidInput);

  r = chain_of_two();
  r.singular_points.push_back("t");
  r.image["e12"] = 1;
  EXPECT_THROW(resolution_nerve(r), InvalidInput);

  r = nodal_cubic();
  r.ambient_of = {0, 3};
  EXPECT_THROW(resolution_nerve(r), InvalidInput);
}

TEST(Pair, LineWithPoints) {
  EXPECT_EQ(trim(khc_pair(pair_of_points(2), Ring::Z)), (Groups{Zr(0), Zr(1)}));
  EXPECT_EQ(trim(khc_pair(pair_of_points(1), Ring::Z)), Groups{});
  EXPECT_EQ(trim(khc_pair(pair_of_points(3), Ring::Z)), (Groups{Zr(0), Zr(2)}));
  EXPECT_TRUE(les_verify(pair_of_points(2)).exact());
}

TEST(Pair, EmptyClosedSubsetGivesAmbient) {
  PairData p;
  p.ambient = cycle_config(5);
  EXPECT_EQ(trim(khc_pair(p, Ring::Z)), kh(cycle_config(5)));
  EXPECT_TRUE(les_verify(p).exact());
}

TEST(Pair, CycleRelOneComponent) {
  PairData p;
  p.ambient = cycle_config(4);
  p.closed = point_config("C0");
  p.component_map = {0};
  // The n-gon modulo a vertex: H^1 = Z.
  EXPECT_EQ(trim(khc_pair(p, Ring::Z)), (Groups{Zr(0), Zr(1)}));
  EXPECT_TRUE(les_verify(p).exact());
}

TEST(Pair, RejectsUnknownTargets) {
  auto p = pair_of_points(2);
  p.component_map = {0, 5};
  EXPECT_THROW(khc_pair(p, Ring::Z), InvalidInput);
}

TEST(BoundCheck, PassAndFail) {
  EXPECT_TRUE(bound_check({1, 1}, {1, 1}).pass());
  const auto bad = bound_check({1, 2}, {1, 1});
  EXPECT_FALSE(bad.pass());
  EXPECT_FALSE(bad.degrees[1].pass);
  EXPECT_TRUE(bad.degrees[0].pass);
  EXPECT_THROW(bound_check({1}, {1, 1}), InvalidInput);
  EXPECT_THROW(bound_check({-1}, {1}), InvalidInput);
}
