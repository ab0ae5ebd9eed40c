#include <doctest.h>

#include "../support/convert.hpp"

#include "rooftop/exact.hpp"

#include <random>

using namespace rooftop;

namespace {

oracle::Mat random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long max) {
  std::uniform_int_distribution<long> e(-max, max);
  oracle::Mat m(rows, oracle::Vec(cols));
  for (auto& r : m)
    for (auto& x : r) x = e(rng);
  return m;
}

bool is_hermite(const IntMatrix& h) {
  std::size_t last = 0;
  bool first = true;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (j == h.cols()) {
      for (std::size_t k = i; k < h.rows(); ++k)
        if (!is_zero(h.row(k))) return false;
      return true;
    }
    if (!first && j <= last) return false;
    if (h(i, j) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, j) < 0 || h(k, j) >= h(i, j)) return false;
    last = j;
    first = false;
  }
  return true;
}

}  // namespace

TEST_CASE("vector helpers") {
  LatticeVector v = make_vector({4, -6, 10});
  CHECK(content(v) == 2);
  CHECK(primitive(v) == make_vector({2, -3, 5}));
  CHECK(primitive_normalized(make_vector({0, -2, 4})) == make_vector({0, 1, -2}));
  CHECK(dot(v, make_vector({1, 1, 1})) == 8);
  CHECK(is_primitive(make_vector({3, 5})));
  CHECK_FALSE(is_primitive(zero_vector(2)));
  CHECK(to_string(make_vector({1, -2})) == "(1,-2)");
  CHECK_THROWS_AS(dot(make_vector({1}), make_vector({1, 2})), DimensionError);
}

TEST_CASE("determinant agrees with Laplace expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + trial % 4;
    oracle::Mat m = random_matrix(rng, n, n, 5);
    CHECK(determinant(support::matrix(m)) == Integer(static_cast<long>(oracle::det(m))));
  }
  CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("2x2 Hermite form matches the closed form") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 200) {
    oracle::Mat m = random_matrix(rng, 2, 2, 9);
    if (oracle::det(m) == 0 || (m[0][0] == 0 && m[1][0] == 0)) continue;
    HermiteForm h = hermite_normal_form(support::matrix(m));
    CHECK(support::machine(h.h.row_vectors()) == oracle::hnf_2x2(m[0][0], m[0][1], m[1][0], m[1][1]));
    CHECK(h.u * support::matrix(m) == h.h);
    CHECK(is_unimodular(h.u));
    ++checked;
  }
}

TEST_CASE("Hermite form of rectangular and singular matrices") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    oracle::Mat m = random_matrix(rng, 1 + trial % 4, 1 + (trial / 4) % 5, 4);
    if (trial % 7 == 0) m.push_back(m[0]);
    IntMatrix a = support::matrix(m);
    HermiteForm h = hermite_normal_form(a);
    CHECK(is_hermite(h.h));
    CHECK(h.u * a == h.h);
    CHECK(is_unimodular(h.u));
    CHECK(rank(h.h) == rank(a));
  }
}

TEST_CASE("Smith form matches determinantal divisors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t rows = 1 + trial % 3, cols = 1 + (trial / 3) % 4;
    oracle::Mat m = random_matrix(rng, rows, cols, 6);
    if (trial % 5 == 0) {
      // Force a nontrivial invariant factor.
      for (auto& r : m)
        for (auto& x : r) x *= 2;
    }
    IntMatrix a = support::matrix(m);
    SmithForm s = smith_normal_form(a);
    CHECK(s.u * a * s.v == s.d);
    CHECK(is_unimodular(s.u));
    CHECK(is_unimodular(s.v));
    std::vector<Integer> f = invariant_factors(a);
    oracle::Vec expected = oracle::invariant_factors(m);
    REQUIRE(f.size() == expected.size());
    for (std::size_t k = 0; k < f.size(); ++k) CHECK(f[k] == Integer(static_cast<long>(expected[k])));
  }
}

TEST_CASE("integer kernel is saturated and complete") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t rows = 1 + trial % 3, cols = 2 + trial % 4;
    IntMatrix a = support::matrix(random_matrix(rng, rows, cols, 5));
    std::vector<LatticeVector> k = integer_kernel(a);
    CHECK(k.size() == cols - rank(a));
    for (const LatticeVector& v : k) CHECK(is_zero(a * v));
    if (!k.empty()) {
      // Saturated: the kernel basis has trivial invariant factors.
      for (const Integer& f : invariant_factors(IntMatrix::from_rows(k, cols))) CHECK(f == 1);
    }
  }
  // Kernel of (2, 4) is spanned by (-2, 1), not by a multiple.
  auto k = integer_kernel(IntMatrix{{2, 4}});
  REQUIRE(k.size() == 1);
  CHECK(primitive_normalized(k[0]) == make_vector({2, -1}));
}

TEST_CASE("right inverse and rational solve") {
  IntMatrix m{{1, 2, 3}, {0, 1, 4}};
  IntMatrix s = right_inverse(m);
  CHECK(m * s == IntMatrix::identity(2));
  CHECK_THROWS_AS(right_inverse(IntMatrix{{2, 0}, {0, 1}}), InputError);

  auto x = solve(IntMatrix{{2, 0}, {0, 3}}, make_vector({1, 1}));
  REQUIRE(x);
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(1, 3));
  CHECK_FALSE(solve(IntMatrix{{1, 1}, {1, 1}}, make_vector({1, 2})));
  CHECK(primitive_multiple({Rational(1, 2), Rational(-1, 3)}) == make_vector({3, -2}));
}

TEST_CASE("saturated span") {
  auto s = saturated_span(std::vector<LatticeVector>{make_vector({2, 2, 0}), make_vector({0, 2, 2})}, 3);
  REQUIRE(s.size() == 2);
  for (const Integer& f : invariant_factors(IntMatrix::from_rows(s, 3))) CHECK(f == 1);
  CHECK(rank(s, 3) == 2);
}
