#pragma once

// Brute-force references on machine integers, sharing no code with the
// library algorithms they check.

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using i64 = long long;
using Vec = std::vector<i64>;
using Mat = std::vector<Vec>;

inline i64 dot(const Vec& a, const Vec& b) {
  i64 s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Laplace expansion along the first row.
inline i64 det(const Mat& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  i64 s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    s += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return s;
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(s);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

/// gcd of all k x k minors.
inline i64 determinantal_divisor(const Mat& m, std::size_t k) {
  i64 g = 0;
  for (const auto& rows : subsets(m.size(), k))
    for (const auto& cols : subsets(m[0].size(), k)) {
      Mat sub;
      for (std::size_t i : rows) {
        Vec r;
        for (std::size_t j : cols) r.push_back(m[i][j]);
        sub.push_back(r);
      }
      g = std::gcd(g, std::llabs(det(sub)));
    }
  return g;
}

/// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}.
inline Vec invariant_factors(const Mat& m) {
  Vec out;
  i64 prev = 1;
  for (std::size_t k = 1; k <= std::min(m.size(), m[0].size()); ++k) {
    i64 d = determinantal_divisor(m, k);
    if (d == 0) break;
    out.push_back(d / prev);
    prev = d;
  }
  return out;
}

/// Row Hermite form of a nonsingular 2x2 matrix [[a, b], [c, d]] with a, c not
/// both zero: [[g, x], [0, |det| / g]], g = gcd(a, c), x = s b + t d reduced.
inline Mat hnf_2x2(i64 a, i64 b, i64 c, i64 d) {
  i64 s = 1, t = 0, g = a, s1 = 0, t1 = 1, g1 = c;
  while (g1 != 0) {
    i64 q = g / g1;
    std::tie(g, g1) = std::pair{g1, g - q * g1};
    std::tie(s, s1) = std::pair{s1, s - q * s1};
    std::tie(t, t1) = std::pair{t1, t - q * t1};
  }
  if (g < 0) g = -g, s = -s, t = -t;
  i64 p = std::llabs(a * d - b * c) / g;
  i64 x = ((s * b + t * d) % p + p) % p;
  return {{g, x}, {0, p}};
}

inline Vec cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline i64 gcd_all(const Vec& v) {
  i64 g = 0;
  for (i64 x : v) g = std::gcd(g, std::llabs(x));
  return g;
}

/// Inward facet normals of a full-dimensional cone in rank 1, 2 or 3: every
/// hyperplane through rank-1 rays with all rays on one side.
inline Mat facet_normals(const Mat& rays, std::size_t rank) {
  std::set<Vec> out;
  auto consider = [&](Vec n) {
    i64 g = gcd_all(n);
    if (g == 0) return;
    for (i64& x : n) x /= g;
    bool pos = true, neg = true;
    for (const Vec& r : rays) {
      pos = pos && dot(n, r) >= 0;
      neg = neg && dot(n, r) <= 0;
    }
    if (neg && !pos)
      for (i64& x : n) x = -x;
    if (pos || neg) out.insert(n);
  };
  if (rank == 1) {
    consider({1});
    consider({-1});
  } else if (rank == 2) {
    for (const Vec& r : rays) consider({-r[1], r[0]});
  } else {
    for (std::size_t i = 0; i < rays.size(); ++i)
      for (std::size_t j = i + 1; j < rays.size(); ++j) consider(cross(rays[i], rays[j]));
  }
  return {out.begin(), out.end()};
}

inline bool in_cone(const Mat& normals, const Vec& x) {
  return std::all_of(normals.begin(), normals.end(), [&](const Vec& n) { return dot(n, x) >= 0; });
}

/// Small integer functional positive on every ray, if any.
inline std::optional<Vec> positive_functional(const Mat& rays, std::size_t rank) {
  std::vector<Vec> candidates{{}};
  for (std::size_t k = 0; k < rank; ++k) {
    std::vector<Vec> next;
    for (const Vec& c : candidates)
      for (i64 v = -4; v <= 4; ++v) {
        Vec e = c;
        e.push_back(v);
        next.push_back(e);
      }
    candidates = next;
  }
  for (const Vec& g : candidates)
    if (std::all_of(rays.begin(), rays.end(), [&](const Vec& r) { return dot(g, r) > 0; })) return g;
  return std::nullopt;
}

/// Irreducible lattice points of a full-dimensional pointed cone. Every Hilbert
/// basis element lies in the box |x_j| <= sum_i |r_ij| (it is a ray or sits in
/// a half-open parallelepiped of linearly independent rays), and a reducible
/// point has a Hilbert basis element below it.
inline Mat brute_force_hilbert_basis(const Mat& rays, std::size_t rank) {
  Mat normals = facet_normals(rays, rank);
  Vec g = *positive_functional(rays, rank);
  Vec bound(rank, 0);
  for (const Vec& r : rays)
    for (std::size_t j = 0; j < rank; ++j) bound[j] += std::llabs(r[j]);
  Mat points;
  Vec x(rank);
  std::size_t total = 1;
  for (i64 b : bound) total *= static_cast<std::size_t>(2 * b + 1);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (std::size_t j = 0; j < rank; ++j) {
      const std::size_t w = static_cast<std::size_t>(2 * bound[j] + 1);
      x[j] = static_cast<i64>(c % w) - bound[j];
      c /= w;
    }
    if (std::any_of(x.begin(), x.end(), [](i64 v) { return v != 0; }) && in_cone(normals, x)) points.push_back(x);
  }
  std::sort(points.begin(), points.end(), [&](const Vec& a, const Vec& b) { return dot(g, a) < dot(g, b); });
  Mat basis;
  for (const Vec& p : points) {
    bool reducible = std::any_of(basis.begin(), basis.end(), [&](const Vec& h) {
      Vec d(rank);
      for (std::size_t j = 0; j < rank; ++j) d[j] = p[j] - h[j];
      return std::any_of(d.begin(), d.end(), [](i64 v) { return v != 0; }) && in_cone(normals, d);
    });
    if (!reducible) basis.push_back(p);
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

/// Random full-dimensional pointed cone with `count` rays, entries in [-max, max].
inline Mat random_pointed_cone(std::mt19937_64& rng, std::size_t rank, std::size_t count, i64 max) {
  std::uniform_int_distribution<i64> entry(-max, max);
  for (;;) {
    Mat rays;
    for (std::size_t k = 0; k < count; ++k) {
      Vec r(rank);
      for (i64& v : r) v = entry(rng);
      if (gcd_all(r) == 0) continue;
      i64 g = gcd_all(r);
      for (i64& v : r) v /= g;
      rays.push_back(r);
    }
    if (rays.size() < rank) continue;
    bool full = false;
    for (const auto& s : subsets(rays.size(), rank)) {
      Mat sq;
      for (std::size_t i : s) sq.push_back(rays[i]);
      full = full || det(sq) != 0;
    }
    if (full && positive_functional(rays, rank)) return rays;
  }
}

}  // namespace oracle
