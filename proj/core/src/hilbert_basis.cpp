#include "rooftop/polyhedral.hpp"

#include <algorithm>
#include <set>

namespace rooftop {

namespace {

void pull(const Cone& c, const RaySet& face, std::size_t dim, RaySet apexes, std::vector<RaySet>& out) {
  if (face.size() == dim) {
    RaySet s = apexes;
    s.insert(s.end(), face.begin(), face.end());
    std::sort(s.begin(), s.end());
    out.push_back(std::move(s));
    return;
  }
  const std::size_t apex = face.front();
  apexes.push_back(apex);
  for (const RaySet& g : c.facets_of(face))
    if (!std::binary_search(g.begin(), g.end(), apex)) pull(c, g, dim - 1, apexes, out);
}

// Nonzero lattice points of the half-open parallelepiped spanned by the
// columns of `r` (square, nonsingular), one per class of Z^d / r Z^d.
void parallelepiped_points(const IntMatrix& r, std::set<LatticeVector>& out) {
  const std::size_t d = r.rows();
  SmithForm s = smith_normal_form(r);
  IntMatrix u_inv = right_inverse(s.u);
  std::vector<Integer> bound(d);
  for (std::size_t i = 0; i < d; ++i) bound[i] = s.d(i, i);
  LatticeVector digit = zero_vector(d);
  while (true) {
    LatticeVector x = u_inv * digit;
    auto lambda = solve(r, x);
    for (std::size_t i = 0; i < d; ++i) {
      Rational l = (*lambda)[i];
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), l.get_num_mpz_t(), l.get_den_mpz_t());
      if (f != 0)
        for (std::size_t t = 0; t < d; ++t) x[t] -= f * r(t, i);
    }
    if (!rooftop::is_zero(x)) out.insert(x);
    std::size_t i = 0;
    for (; i < d; ++i) {
      if (++digit[i] < bound[i]) break;
      digit[i] = 0;
    }
    if (i == d) break;
  }
}

std::vector<LatticeVector> full_dimensional_basis(const Cone& c) {
  const std::size_t d = c.rank();
  std::set<LatticeVector> candidates(c.rays().begin(), c.rays().end());
  for (const RaySet& s : triangulate(c)) parallelepiped_points(IntMatrix::from_columns(c.rays_of(s), d), candidates);

  LatticeVector grading = zero_vector(d);
  for (const LatticeVector& n : c.facet_normals()) grading = grading + n;
  std::vector<std::pair<Integer, LatticeVector>> ordered;
  for (const LatticeVector& x : candidates) ordered.emplace_back(dot(grading, x), x);
  std::sort(ordered.begin(), ordered.end());

  std::vector<std::pair<Integer, LatticeVector>> basis;
  for (const auto& [deg, x] : ordered) {
    bool reducible = std::any_of(basis.begin(), basis.end(), [&](const auto& b) {
      return b.first < deg && c.contains(x - b.second);
    });
    if (!reducible) basis.emplace_back(deg, x);
  }
  std::vector<LatticeVector> out;
  for (auto& b : basis) out.push_back(std::move(b.second));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<RaySet> triangulate(const Cone& c) {
  if (!c.is_pointed()) throw InputError("triangulate needs a pointed cone");
  RaySet all(c.rays().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::vector<RaySet> out;
  pull(c, all, c.dim(), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeVector> hilbert_basis(const Cone& c) {
  if (!c.is_pointed()) throw InputError("Hilbert basis needs a pointed cone");
  if (c.rays().empty()) return {};
  if (c.is_full_dimensional()) return full_dimensional_basis(c);

  // Work in the saturated lattice spanned by the cone.
  const std::size_t n = c.rank();
  std::vector<LatticeVector> basis = saturated_span(c.rays(), n);
  IntMatrix embed = IntMatrix::from_columns(basis, n);
  std::vector<LatticeVector> coords;
  for (const LatticeVector& r : c.rays()) coords.push_back(primitive_multiple(*solve(embed, r)));
  std::vector<LatticeVector> out;
  for (const LatticeVector& y : full_dimensional_basis(Cone::from_generators(basis.size(), coords)))
    out.push_back(embed * y);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rooftop
