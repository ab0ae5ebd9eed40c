#include <doctest.h>

#include "rooftop/drum.hpp"

using namespace rooftop;

namespace {

// Monomials of degree d in k variables, counted one by one.
long count_monomials(std::size_t k, long d) {
  if (k == 1) return 1;
  long total = 0;
  for (long first = 0; first <= d; ++first) total += count_monomials(k - 1, d - first);
  return total;
}

}  // namespace

TEST_CASE("sections of the two bundles") {
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t l = 0; l <= 4; ++l)
      for (long a = 1; a <= 3; ++a) {
        DrumTriple t = DrumTriple::product(m, l, a, 1);
        CHECK(t.h0_minus == count_monomials(m + 1, a));
        CHECK(t.h0_plus == count_monomials(l + 1, 1));
        CHECK(t.dim_y == m + l);
        CHECK(drum_dimension(t) == m + l + 1);
        CHECK(ambient_dimension(t) == t.h0_minus + t.h0_plus);
      }
  DrumTriple f = DrumTriple::flag(3, 2, 1);
  CHECK(f.dim_y == 5);
  CHECK(f.h0_minus == count_monomials(4, 2));
  CHECK(drum_dimension(f) == 6);
  CHECK_THROWS_AS(DrumTriple::flag(1), InputError);
  CHECK_THROWS_AS(DrumTriple::product(1, 1, 0, 1), InputError);
  CHECK(DrumTriple::product(1, 2, 3, 1).swapped().m == 2);
  CHECK(DrumTriple::product(1, 2, 3, 1).swapped().degree_minus == 1);
  CHECK(DrumTriple::product(1, 1).description() == "(P^1 x P^1, O(1,0), O(0,1))");
}

TEST_CASE("Segre drum fills its projective space") {
  for (std::size_t m = 0; m <= 6; ++m)
    for (std::size_t l = 0; l <= 6; ++l) {
      CAPTURE(m);
      CAPTURE(l);
      SegreCertificate c = segre_drum(m, l);
      CHECK(c.pass());
      CHECK(c.ambient_coordinates == static_cast<long>(m + l + 2));
      CHECK(c.drum_dimension == m + l + 1);
      CHECK(c.sink_dim == m);
      CHECK(c.source_dim == l);
      CHECK(c.mu.bandwidth == 1);
      CHECK(c.smoothness.smooth());
    }
}

TEST_CASE("smoothness criteria") {
  CHECK(smoothness_check(DrumTriple::product(2, 3)).smooth());
  for (std::size_t n = 2; n <= 4; ++n) CHECK(smoothness_check(DrumTriple::flag(n)).smooth());

  SmoothnessVerdict bad = smoothness_check(DrumTriple::product(1, 1, 2, 1));
  CHECK(bad.nef_cone);
  CHECK(bad.projective_bundles);
  CHECK_FALSE(bad.fiber_degrees);
  CHECK(bad.reason.find("degree 2") != std::string::npos);
  CHECK_FALSE(smoothness_check(DrumTriple::product(1, 1, 1, 2)).smooth());
  CHECK_FALSE(smoothness_check(DrumTriple::flag(2, 2, 1)).smooth());
  // Over a point fiber there is no degree condition.
  CHECK(smoothness_check(DrumTriple::product(0, 2, 3, 1)).smooth());
}

TEST_CASE("mu values and bandwidth") {
  MuData d = mu_data({1, 1, 0, 0});
  CHECK(d.mu_sink == 0);
  CHECK(d.mu_source == 1);
  CHECK(d.bandwidth == 1);
  MuData e = mu_data({3, 1, 0});
  CHECK(e.mu_source == 3);
  CHECK(e.bandwidth == 3);
  CHECK_THROWS_AS(mu_data({2, 2}), InputError);
  CHECK(bandwidth_of_drum(DrumTriple::product(2, 2, 2, 3)).bandwidth == 1);
  std::vector<long> w = drum_weights(DrumTriple::product(1, 2, 2, 1));
  CHECK(std::count(w.begin(), w.end(), 1) == 3);
  CHECK(std::count(w.begin(), w.end(), 0) == 3);
}

TEST_CASE("isotropy and equalized actions") {
  CHECK(is_equalized({1, 1, 0}));
  // A point supported on weights 0 and 2 has isotropy Z/2.
  CHECK_FALSE(is_equalized({0, 1, 2}));
  CHECK(isotropy_order({0, 1, 2}, {Rational(1), Rational(0), Rational(1)}) == 2);
  CHECK_FALSE(is_equalized({2, 0}));
  CHECK_FALSE(is_equalized({0, 2, 3}));

  std::vector<long> w{2, 0, 0};
  CHECK(isotropy_order(w, {Rational(1), Rational(1), Rational(0)}) == 2);
  CHECK(isotropy_order(w, {Rational(0), Rational(1), Rational(1)}) == 0);
  CHECK(isotropy_order({1, 0}, {Rational(1), Rational(5)}) == 1);
  CHECK_THROWS_AS(isotropy_order(w, {Rational(1)}), DimensionError);
}
