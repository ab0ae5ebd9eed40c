#include "rooftop/polyhedral.hpp"

#include <algorithm>
#include <set>

namespace rooftop {

namespace {

std::vector<LatticeVector> flatten(const Generators& g) {
  std::vector<LatticeVector> out = g.rays;
  for (const LatticeVector& l : g.lineality) {
    out.push_back(l);
    out.push_back(-l);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_sizes(std::size_t rank, const std::vector<LatticeVector>& vs) {
  for (const LatticeVector& v : vs)
    if (v.size() != rank)
      throw DimensionError("vector " + to_string(v) + " does not live in Z^" + std::to_string(rank));
}

}  // namespace

Cone Cone::from_descriptions(std::size_t rank, const Generators& v, const Generators& h) {
  Cone c;
  c.rank_ = rank;
  c.rays_ = flatten(v);
  c.normals_ = flatten(h);
  c.lineality_dim_ = v.lineality.size();
  c.equation_dim_ = h.lineality.size();
  return c;
}

Cone Cone::from_generators(std::size_t rank, const std::vector<LatticeVector>& generators) {
  check_sizes(rank, generators);
  Generators h = dual_generators(rank, generators);
  Generators v = dual_generators(rank, flatten(h));
  return from_descriptions(rank, v, h);
}

Cone Cone::from_inequalities(std::size_t rank, const std::vector<LatticeVector>& normals) {
  check_sizes(rank, normals);
  Generators v = dual_generators(rank, normals);
  Generators h = dual_generators(rank, flatten(v));
  return from_descriptions(rank, v, h);
}

Cone Cone::orthant(std::size_t rank) {
  std::vector<LatticeVector> gens;
  for (std::size_t i = 0; i < rank; ++i) gens.push_back(unit_vector(rank, i));
  return from_generators(rank, gens);
}

bool Cone::contains(const LatticeVector& v) const {
  if (v.size() != rank_) throw DimensionError("point " + to_string(v) + " does not live in Z^" + std::to_string(rank_));
  return std::all_of(normals_.begin(), normals_.end(), [&](const LatticeVector& n) { return dot(n, v) >= 0; });
}

bool Cone::contains(const RationalVector& v) const {
  if (v.size() != rank_) throw DimensionError("point does not live in Q^" + std::to_string(rank_));
  bool zero = std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  return zero || contains(primitive_multiple(v));
}

bool Cone::contains(const Cone& other) const {
  if (other.rank_ != rank_) throw DimensionError("cones live in lattices of different rank");
  return std::all_of(other.rays_.begin(), other.rays_.end(), [&](const LatticeVector& r) { return contains(r); });
}

bool Cone::contains_in_relative_interior(const LatticeVector& v) const {
  return contains(v) && minimal_face({v}).size() == rays_.size();
}

void Cone::require_pointed(const char* op) const {
  if (!is_pointed()) throw InputError(std::string(op) + " needs a pointed cone");
}

bool Cone::is_simplicial() const {
  require_pointed("is_simplicial");
  return rays_.size() == dim();
}

bool Cone::is_smooth() const {
  if (!is_simplicial()) return false;
  if (rays_.empty()) return true;
  for (const Integer& f : invariant_factors(IntMatrix::from_rows(rays_, rank_)))
    if (f != 1) return false;
  return true;
}

Cone Cone::dual() const {
  Cone d;
  d.rank_ = rank_;
  d.rays_ = normals_;
  d.normals_ = rays_;
  d.lineality_dim_ = equation_dim_;
  d.equation_dim_ = lineality_dim_;
  return d;
}

RaySet Cone::minimal_face(const std::vector<LatticeVector>& points) const {
  std::vector<const LatticeVector*> tight;
  for (const LatticeVector& n : normals_)
    if (std::all_of(points.begin(), points.end(), [&](const LatticeVector& p) { return dot(n, p) == 0; }))
      tight.push_back(&n);
  RaySet face;
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (std::all_of(tight.begin(), tight.end(), [&](const LatticeVector* n) { return dot(*n, rays_[i]) == 0; }))
      face.push_back(i);
  return face;
}

std::vector<LatticeVector> Cone::rays_of(const RaySet& face) const {
  std::vector<LatticeVector> out;
  for (std::size_t i : face) out.push_back(rays_.at(i));
  return out;
}

std::size_t Cone::face_dim(const RaySet& face) const {
  if (face.empty()) return 0;
  if (is_pointed() && rays_.size() == dim()) return face.size();
  return rooftop::rank(rays_of(face), rank_);
}

std::vector<RaySet> Cone::facets_of(const RaySet& face) const {
  require_pointed("facets_of");
  const std::size_t d = face_dim(face);
  if (d == 0) return {};
  if (d == face.size()) {
    std::vector<RaySet> out;
    for (std::size_t drop = face.size(); drop-- > 0;) {
      RaySet g = face;
      g.erase(g.begin() + static_cast<std::ptrdiff_t>(drop));
      out.push_back(std::move(g));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  std::set<RaySet> found;
  for (const LatticeVector& n : normals_) {
    RaySet g;
    for (std::size_t i : face)
      if (dot(n, rays_[i]) == 0) g.push_back(i);
    if (g.size() == face.size() || found.count(g)) continue;
    if (face_dim(g) + 1 == d) found.insert(g);
  }
  return {found.begin(), found.end()};
}

std::vector<RaySet> Cone::faces() const {
  require_pointed("faces");
  if (rays_.size() == dim()) {
    // Simplicial: every subset of rays spans a face.
    std::vector<RaySet> out;
    const std::size_t n = rays_.size();
    for (std::size_t size = 0; size <= n; ++size) {
      std::vector<bool> pick(n, false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
      std::vector<RaySet> level;
      do {
        RaySet f;
        for (std::size_t i = 0; i < n; ++i)
          if (pick[i]) f.push_back(i);
        level.push_back(std::move(f));
      } while (std::prev_permutation(pick.begin(), pick.end()));
      std::sort(level.begin(), level.end());
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }
  RaySet all(rays_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<RaySet> seen{all};
  std::vector<RaySet> frontier{all};
  while (!frontier.empty()) {
    std::vector<RaySet> next;
    for (const RaySet& f : frontier)
      for (RaySet& g : facets_of(f))
        if (seen.insert(g).second) next.push_back(std::move(g));
    frontier = std::move(next);
  }
  std::vector<std::pair<std::size_t, RaySet>> keyed;
  for (const RaySet& f : seen) keyed.emplace_back(face_dim(f), f);
  std::sort(keyed.begin(), keyed.end());
  std::vector<RaySet> out;
  for (auto& k : keyed) out.push_back(std::move(k.second));
  return out;
}

Cone dual_cone(const Cone& c) { return c.dual(); }
bool cone_contains(const Cone& c, const LatticeVector& v) { return c.contains(v); }
bool is_smooth(const Cone& c) { return c.is_smooth(); }
bool is_simplicial(const Cone& c) { return c.is_simplicial(); }

IntMatrix quotient_projection(const std::vector<LatticeVector>& vectors, std::size_t rank) {
  if (vectors.empty()) return IntMatrix::identity(rank);
  auto k = integer_kernel(IntMatrix::from_rows(vectors, rank));
  return IntMatrix::from_rows(k, rank);
}

}  // namespace rooftop
