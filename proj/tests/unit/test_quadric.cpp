#include <doctest.h>

#include "rooftop/quadric.hpp"

using namespace rooftop;

namespace {

RationalVector vec(std::initializer_list<long> xs) {
  RationalVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("projective points are normalized") {
  ProjPoint p(vec({0, 2, 4}));
  CHECK(p.coords() == RationalVector{Rational(0), Rational(1), Rational(2)});
  CHECK(p == ProjPoint(vec({0, -1, -2})));
  CHECK(p.to_string() == "[0:1:2]");
  CHECK_THROWS_AS(ProjPoint(vec({0, 0})), InputError);
}

TEST_CASE("the quadric in P^3") {
  QuadricModel q(1);
  CHECK(q.coordinate_count() == 4);
  CHECK(q.projective_weights() == std::vector<long>{1, 1, 0, 0});
  ProjPoint on = ProjPoint::from_integers({1, 0, 0, 1});
  ProjPoint off = ProjPoint::from_integers({1, 0, 1, 0});
  CHECK(on_quadric(q, on));
  CHECK_FALSE(on_quadric(q, off));

  BBLimits lim = bb_limits(q, on);
  CHECK_FALSE(lim.fixed);
  CHECK(lim.sink == ProjPoint::from_integers({1, 0, 0, 0}));
  CHECK(lim.source == ProjPoint::from_integers({0, 0, 0, 1}));
  CHECK(in_sink(q, lim.sink));
  CHECK(in_source(q, lim.source));

  ProjPoint fixed = ProjPoint::from_integers({0, 1, 0, 0});
  BBLimits still = bb_limits(q, fixed);
  CHECK(still.fixed);
  CHECK(still.sink == fixed);
  CHECK_THROWS_AS(incidence_pairing(q, fixed), InputError);

  IncidencePairing h = incidence_pairing(q, off);
  CHECK(h.value == 1);
  CHECK(incidence_check(q, on));
  CHECK_THROWS_AS(on_quadric(q, ProjPoint::from_integers({1, 0})), DimensionError);
}

TEST_CASE("cone membership on the affine quadric") {
  QuadricModel q(2);
  auto sink = cone_membership(q, vec({1, 2, 3, 0, 0, 0}));
  CHECK(sink.in_b_minus);
  CHECK_FALSE(sink.in_b_plus);
  auto source = cone_membership(q, vec({0, 0, 0, 1, 0, 0}));
  CHECK_FALSE(source.in_b_minus);
  CHECK(source.in_b_plus);
  auto both = cone_membership(q, vec({1, 0, 0, 0, 1, 0}));
  CHECK(both.in_b_minus);
  CHECK(both.in_b_plus);
  CHECK_THROWS_AS(cone_membership(q, vec({1, 0, 0, 1, 0, 0})), InputError);
}

TEST_CASE("random points lie on the quadric") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    QuadricModel q(n);
    for (int k = 0; k < 200; ++k) {
      RationalVector v = random_quadric_point(q, rng);
      CHECK(q.form(v) == 0);
      ProjPoint p(v);
      CHECK(on_quadric(q, p));
      CHECK_FALSE(is_fixed(q, p));
    }
  }
}

TEST_CASE("fixed locus is the union of the two blocks") {
  for (std::size_t n = 1; n <= 4; ++n) {
    FixedLocusCheck f = fixed_locus_check(QuadricModel(n));
    CHECK(f.exact);
    CHECK(f.patterns == (std::size_t{1} << (2 * n + 2)) - 1);
  }
}

TEST_CASE("quadric witness for the Mukai flop") {
  for (std::size_t n = 1; n <= 5; ++n) {
    CAPTURE(n);
    MukaiCertificate c = mukai_witness(n, 200, 99);
    CHECK(c.pass());
    CHECK(c.incident_pairs == 200);
    CHECK(c.mu.bandwidth == 1);
    CHECK(c.quotient_dim == 2 * n);
    CHECK(c.codim_minus == n);
    CHECK(c.small == (n >= 2));
    CHECK(c.note.empty() == (n >= 2));
  }
  MukaiCertificate a = mukai_witness(3, 50, 7), b = mukai_witness(3, 50, 7);
  CHECK(a.incident_pairs == b.incident_pairs);
  CHECK(mukai_witness(3, 50, 8).pass());
  CHECK_THROWS_AS(mukai_witness(0, 10, 1), InputError);
  CHECK_THROWS_AS(mukai_witness(9, 10, 1), InputError);
  CHECK_THROWS_AS(mukai_witness(2, 0, 1), InputError);
  CHECK_THROWS_AS(mukai_witness(2, 1, 1, 1), InputError);
}
