#include <doctest.h>

#include "../support/convert.hpp"

#include "rooftop/fan_isomorphism.hpp"
#include "rooftop/toric_git.hpp"

#include <set>

using namespace rooftop;

namespace {

RationalVector point(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Unimodular 3x3 maps sending one ray set onto the other, by trying every
// ordering and inverting with the adjugate.
bool unimodularly_equivalent_3d(const oracle::Mat& a, const oracle::Mat& b) {
  if (a.size() != b.size()) return false;
  std::vector<std::size_t> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& basis : oracle::subsets(a.size(), 3)) {
    oracle::Mat cols{a[basis[0]], a[basis[1]], a[basis[2]]};
    oracle::i64 d = oracle::det(cols);
    if (d == 0) continue;
    do {
      // Map M with M a_basis[k] = b_perm[basis[k]]: M = B A^{-1}, columns as rows here.
      oracle::Mat at{{cols[0][0], cols[1][0], cols[2][0]}, {cols[0][1], cols[1][1], cols[2][1]},
                     {cols[0][2], cols[1][2], cols[2][2]}};
      oracle::Mat adj(3, oracle::Vec(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          oracle::Mat minor;
          for (int r = 0; r < 3; ++r) {
            if (r == j) continue;
            oracle::Vec row;
            for (int c = 0; c < 3; ++c)
              if (c != i) row.push_back(at[r][c]);
            minor.push_back(row);
          }
          adj[i][j] = ((i + j) % 2 ? -1 : 1) * oracle::det(minor);
        }
      oracle::Mat m(3, oracle::Vec(3, 0));
      bool integral = true;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          oracle::i64 s = 0;
          for (int k = 0; k < 3; ++k) s += b[perm[basis[k]]][i] * adj[k][j];
          integral = integral && s % d == 0;
          m[i][j] = s / d;
        }
      if (!integral || std::llabs(oracle::det(m)) != 1) continue;
      std::set<oracle::Vec> image, target(b.begin(), b.end());
      for (const oracle::Vec& r : a) {
        oracle::Vec v(3, 0);
        for (int i = 0; i < 3; ++i) v[i] = oracle::dot(m[i], r);
        image.insert(v);
      }
      if (image == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(perm.begin(), perm.end());
  }
  return false;
}

bool cones_unimodular(const Fan& fan) {
  for (const RaySet& s : fan.maximal_cones()) {
    oracle::Mat m = support::machine(fan.rays_of(s));
    if (m.size() != fan.rank() || std::llabs(oracle::det(m)) != 1) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cobordism action and limits") {
  WeightedAction a = WeightedAction::cobordism(1, 2);
  CHECK(a.point_weights == std::vector<long>{1, 1, -1, -1, -1});
  CHECK(a.is_cobordism());
  CHECK_FALSE(WeightedAction{1, 1, {1, 1}}.is_cobordism());

  CHECK(limit_exists(a, point({1, 0, 0, 0, 0}), LimitDirection::toward_zero));
  CHECK_FALSE(limit_exists(a, point({1, 0, 0, 0, 0}), LimitDirection::toward_infinity));
  CHECK(limit_exists(a, point({0, 0, 0, 0, 0}), LimitDirection::toward_infinity));

  auto both = cobordism_membership(a, point({1, 0, 0, 2, 0}));
  CHECK(both.in_b_minus);
  CHECK(both.in_b_plus);
  auto minus = cobordism_membership(a, point({0, 3, 0, 0, 0}));
  CHECK(minus.in_b_minus);
  CHECK_FALSE(minus.in_b_plus);
  auto plus = cobordism_membership(a, point({0, 0, 0, 0, 1}));
  CHECK_FALSE(plus.in_b_minus);
  CHECK(plus.in_b_plus);
  CHECK_THROWS_AS(cobordism_membership(a, point({1, 0})), DimensionError);
}

TEST_CASE("invariant monomials are the products x_i y_j") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t l = 1; l <= 3; ++l) {
      WeightedAction a = WeightedAction::cobordism(m, l);
      InvariantCone inv = git_quotient_cone(a);
      CHECK(inv.hilbert_basis.size() == (m + 1) * (l + 1));
      std::set<LatticeVector> expected;
      for (std::size_t i = 0; i <= m; ++i)
        for (std::size_t j = 0; j <= l; ++j)
          expected.insert(unit_vector(m + l + 2, i) + unit_vector(m + l + 2, m + 1 + j));
      CHECK(std::set<LatticeVector>(inv.monomials.begin(), inv.monomials.end()) == expected);
      for (const LatticeVector& mu : inv.monomials) {
        Integer w = 0;
        for (std::size_t i = 0; i < mu.size(); ++i) w += mu[i] * a.point_weights[i];
        CHECK(w == 0);
      }
    }
  CHECK_THROWS_AS(git_quotient_cone(WeightedAction{2, 0, {1, 1}}), InputError);
}

TEST_CASE("conifold quotient") {
  QuotientData q = quotient_data(WeightedAction::cobordism(1, 1));
  CHECK(q.quotient_lattice_rank == 3);
  CHECK(q.git_cone.rays().size() == 4);
  oracle::Mat square{{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
  CHECK(unimodularly_equivalent_3d(support::machine(q.git_cone.rays()), square));
  CHECK_FALSE(unimodularly_equivalent_3d(support::machine(q.git_cone.rays()),
                                         oracle::Mat{{0, 0, 1}, {2, 0, 1}, {0, 1, 1}, {2, 1, 1}}));
  // The invariant cone and the support cone are dual to each other.
  CHECK(q.invariants.cone.rays().size() == 4);

  auto rays = quotient_rays(q.action);
  CHECK(q.blowup_ray == primitive(rays[0] + rays[1]));
  CHECK(q.blowup_ray == primitive(rays[2] + rays[3]));
  CHECK(q.blowup_fan.size() == 4);
  CHECK(q.fan_minus.size() == 2);
  CHECK(q.fan_plus.size() == 2);
  CHECK_FALSE(q.fan_minus == q.fan_plus);
}

TEST_CASE("quotient fans are smooth and subdivide the support") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t l = 1; l <= 3; ++l) {
      QuotientData q = quotient_data(WeightedAction::cobordism(m, l));
      CHECK(q.fan_minus.size() == m + 1);
      CHECK(q.fan_plus.size() == l + 1);
      CHECK(q.blowup_fan.size() == (m + 1) * (l + 1));
      for (const Fan* f : {&q.fan_minus, &q.fan_plus, &q.blowup_fan}) {
        CHECK(cones_unimodular(*f));
        CHECK(f->is_valid());
        CHECK(f->covers(q.git_cone));
      }
      CHECK(q.blowup_fan.refines(q.fan_minus));
      CHECK(q.blowup_fan.refines(q.fan_plus));
    }
}

TEST_CASE("morphisms, exceptional loci and fibrations") {
  QuotientData q = quotient_data(WeightedAction::cobordism(1, 2));
  Morphisms mor = build_morphisms(q);
  ExceptionalLocus sm = exceptional_locus(mor.s_minus);
  REQUIRE(sm.codimension);
  CHECK(*sm.codimension == 3);
  CHECK(sm.minimal_cones.size() == 1);
  ExceptionalLocus sp = exceptional_locus(mor.s_plus);
  CHECK(*sp.codimension == 2);
  ExceptionalLocus bm = exceptional_locus(mor.b_minus);
  CHECK(*bm.codimension == 1);
  REQUIRE(bm.minimal_cones.size() == 1);
  CHECK(q.blowup_fan.rays()[bm.minimal_cones[0][0]] == q.blowup_ray);
  CHECK_FALSE(exceptional_locus(make_morphism(IntMatrix::identity(4), q.fan_minus, q.fan_minus)).codimension);

  CHECK_THROWS_AS(make_morphism(IntMatrix::identity(4), Fan::single_cone(q.git_cone), q.fan_minus), InputError);
  CHECK_THROWS_AS(make_morphism(IntMatrix::identity(3), q.fan_minus, q.fan_minus), DimensionError);
  CHECK(check_factorization(mor.b_minus, mor.s_minus, mor.beta).holds);
  CHECK_FALSE(check_factorization(mor.b_minus, mor.s_plus, mor.beta).holds);
}

TEST_CASE("projective fibration check") {
  Fan p1 = projective_space_fan(1);
  Fan prod = product_fan(p1, projective_space_fan(2));
  FibrationCheck ok = check_projective_fibration(prod, p1, IntMatrix{{1, 0, 0}});
  CHECK(ok.holds);
  CHECK(ok.fiber_dim == 2);

  // Hirzebruch F1 is a P^1-bundle over P^1 in one direction only.
  Fan f1(2, {make_vector({1, 0}), make_vector({0, 1}), make_vector({-1, 1}), make_vector({0, -1})},
         {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(check_projective_fibration(f1, p1, IntMatrix{{1, 0}}).holds);
  FibrationCheck other = check_projective_fibration(f1, p1, IntMatrix{{0, 1}});
  CHECK_FALSE(other.holds);
  CHECK_FALSE(other.reason.empty());
  CHECK_FALSE(check_projective_fibration(prod, p1, IntMatrix{{2, 0, 0}}).holds);
}
