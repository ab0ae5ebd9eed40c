#include "rooftop/polyhedral.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace rooftop {

namespace {

bool is_subset(const RaySet& a, const RaySet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

Fan::Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<RaySet> maximal_cones) : rank_(rank) {
  for (const LatticeVector& r : rays) {
    if (r.size() != rank) throw DimensionError("ray " + to_string(r) + " does not live in Z^" + std::to_string(rank));
    if (rooftop::is_zero(r)) throw InputError("zero vector listed as a ray");
    if (!is_primitive(r)) throw InputError("ray " + to_string(r) + " is not primitive");
  }
  std::vector<std::vector<LatticeVector>> gens;
  for (std::size_t k = 0; k < maximal_cones.size(); ++k) {
    std::vector<LatticeVector> g;
    for (std::size_t i : maximal_cones[k]) {
      if (i >= rays.size()) throw InputError("cone " + std::to_string(k) + " refers to missing ray " + std::to_string(i));
      g.push_back(rays[i]);
    }
    Cone c = Cone::from_generators(rank, g);
    if (!c.is_pointed()) throw InputError("cone " + std::to_string(k) + " is not pointed");
    for (const LatticeVector& v : g)
      if (!std::binary_search(c.rays().begin(), c.rays().end(), v))
        throw InputError("generator " + to_string(v) + " is not an extremal ray of cone " + std::to_string(k));
    gens.push_back(c.rays());
  }

  std::set<LatticeVector> used;
  for (const auto& g : gens) used.insert(g.begin(), g.end());
  rays_.assign(used.begin(), used.end());

  std::set<RaySet> sets;
  for (const auto& g : gens) {
    RaySet s;
    for (const LatticeVector& v : g) s.push_back(*ray_index(v));
    std::sort(s.begin(), s.end());
    sets.insert(std::move(s));
  }
  for (const RaySet& s : sets) {
    bool dominated = std::any_of(sets.begin(), sets.end(), [&](const RaySet& t) {
      return t.size() > s.size() && is_subset(s, t);
    });
    if (!dominated) maximal_.push_back(s);
  }
  for (const RaySet& s : maximal_) cones_.push_back(cone_of(s));
}

Fan Fan::from_cones(std::size_t rank, const std::vector<Cone>& cones) {
  std::set<LatticeVector> all;
  for (const Cone& c : cones) {
    if (c.rank() != rank) throw DimensionError("cone does not live in Z^" + std::to_string(rank));
    all.insert(c.rays().begin(), c.rays().end());
  }
  std::vector<LatticeVector> rays(all.begin(), all.end());
  std::vector<RaySet> sets;
  for (const Cone& c : cones) {
    RaySet s;
    for (const LatticeVector& v : c.rays())
      s.push_back(static_cast<std::size_t>(std::lower_bound(rays.begin(), rays.end(), v) - rays.begin()));
    sets.push_back(std::move(s));
  }
  return Fan(rank, std::move(rays), std::move(sets));
}

Fan Fan::single_cone(const Cone& c) { return from_cones(c.rank(), {c}); }

std::optional<std::size_t> Fan::ray_index(const LatticeVector& v) const {
  auto it = std::lower_bound(rays_.begin(), rays_.end(), v);
  if (it == rays_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - rays_.begin());
}

std::vector<LatticeVector> Fan::rays_of(const RaySet& s) const {
  std::vector<LatticeVector> out;
  for (std::size_t i : s) out.push_back(rays_.at(i));
  return out;
}

Cone Fan::cone_of(const RaySet& s) const { return Cone::from_generators(rank_, rays_of(s)); }

std::vector<RaySet> Fan::all_cones() const {
  std::set<std::pair<std::size_t, RaySet>> seen;
  for (std::size_t k = 0; k < maximal_.size(); ++k)
    for (const RaySet& local : cones_[k].faces()) {
      // Cone rays and fan rays are both sorted, so local order matches.
      RaySet global;
      for (std::size_t i : local) global.push_back(maximal_[k][i]);
      seen.emplace(cones_[k].face_dim(local), std::move(global));
    }
  std::vector<RaySet> out;
  for (const auto& s : seen) out.push_back(s.second);
  return out;
}

std::optional<RaySet> Fan::minimal_cone(const std::vector<LatticeVector>& points) const {
  LatticeVector sum = zero_vector(rank_);
  for (const LatticeVector& p : points) sum = sum + p;
  // In a fan every maximal cone containing the points cuts out the same face.
  for (std::size_t k = 0; k < maximal_.size(); ++k) {
    const Cone& c = cones_[k];
    if (!c.contains(sum)) continue;
    if (!std::all_of(points.begin(), points.end(), [&](const LatticeVector& p) { return c.contains(p); })) continue;
    RaySet global;
    for (std::size_t i : c.minimal_face({sum})) global.push_back(maximal_[k][i]);
    return global;
  }
  return std::nullopt;
}

bool Fan::contains(const LatticeVector& v) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const Cone& c) { return c.contains(v); });
}

bool Fan::contains(const RationalVector& v) const {
  return std::any_of(cones_.begin(), cones_.end(), [&](const Cone& c) { return c.contains(v); });
}

bool Fan::is_smooth() const {
  return std::all_of(cones_.begin(), cones_.end(), [](const Cone& c) { return c.is_smooth(); });
}

bool Fan::is_simplicial() const {
  return std::all_of(cones_.begin(), cones_.end(), [](const Cone& c) { return c.is_simplicial(); });
}

Fan::Check Fan::check() const {
  for (std::size_t i = 0; i < cones_.size(); ++i)
    for (std::size_t j = i + 1; j < cones_.size(); ++j) {
      std::vector<LatticeVector> normals = cones_[i].facet_normals();
      normals.insert(normals.end(), cones_[j].facet_normals().begin(), cones_[j].facet_normals().end());
      Cone meet = Cone::from_inequalities(rank_, normals);
      for (std::size_t k : {i, j}) {
        const Cone& c = cones_[k];
        Cone face = Cone::from_generators(rank_, c.rays_of(c.minimal_face(meet.rays())));
        if (!(face == meet))
          return {false, "cones " + std::to_string(i) + " and " + std::to_string(j) +
                             " meet in a set that is not a face of cone " + std::to_string(k)};
      }
    }
  return {};
}

bool Fan::covers(const Cone& c) const {
  if (c.rank() != rank_ || !c.is_full_dimensional() || cones_.empty()) return false;
  for (const Cone& k : cones_)
    if (!k.is_full_dimensional() || !c.contains(k)) return false;
  if (!is_valid()) return false;
  // A full-dimensional union of cones inside c equals c when every facet of
  // every cone either lies on the boundary of c or is shared with a cone on
  // the opposite side.
  for (std::size_t k = 0; k < cones_.size(); ++k) {
    for (const LatticeVector& n : cones_[k].facet_normals()) {
      RaySet facet;
      for (std::size_t i : maximal_[k])
        if (dot(n, rays_[i]) == 0) facet.push_back(i);
      bool boundary = std::any_of(c.facet_normals().begin(), c.facet_normals().end(), [&](const LatticeVector& m) {
        return std::all_of(facet.begin(), facet.end(), [&](std::size_t i) { return dot(m, rays_[i]) == 0; });
      });
      if (boundary) continue;
      std::size_t across = 0;
      for (std::size_t o = 0; o < cones_.size(); ++o) {
        if (o == k || !is_subset(facet, maximal_[o])) continue;
        for (std::size_t i : maximal_[o])
          if (dot(n, rays_[i]) < 0) {
            ++across;
            break;
          }
      }
      if (across != 1) return false;
    }
  }
  return true;
}

bool Fan::refines(const Fan& coarse) const {
  if (coarse.rank_ != rank_ || !is_valid()) return false;
  std::vector<std::vector<Cone>> inside(coarse.size());
  for (const Cone& fine : cones_) {
    bool placed = false;
    for (std::size_t k = 0; k < coarse.size(); ++k)
      if (coarse.cones_[k].contains(fine)) {
        inside[k].push_back(fine);
        placed = true;
      }
    if (!placed) return false;
  }
  for (std::size_t k = 0; k < coarse.size(); ++k) {
    const Cone& target = coarse.cones_[k];
    if (inside[k].empty()) return false;
    if (!target.is_full_dimensional()) {
      // Lower-dimensional support: compare within the span of the target.
      bool exact = inside[k].size() == 1 && inside[k][0] == target;
      if (!exact) return false;
      continue;
    }
    std::vector<Cone> full;
    for (const Cone& c : inside[k])
      if (c.is_full_dimensional()) full.push_back(c);
    if (full.empty() || !from_cones(rank_, full).covers(target)) return false;
  }
  return true;
}

StarFan star_fan(const Fan& fan, const RaySet& tau) {
  RaySet sorted = tau;
  std::sort(sorted.begin(), sorted.end());
  IntMatrix q = quotient_projection(fan.rays_of(sorted), fan.rank());
  std::vector<Cone> cones;
  for (const RaySet& m : fan.maximal_cones()) {
    if (!is_subset(sorted, m)) continue;
    std::vector<LatticeVector> gens;
    for (std::size_t i : m)
      if (!std::binary_search(sorted.begin(), sorted.end(), i)) gens.push_back(primitive(q * fan.rays()[i]));
    cones.push_back(Cone::from_generators(q.rows(), gens));
  }
  if (cones.empty()) throw InputError("cone is not in the fan");
  return {Fan::from_cones(q.rows(), cones), q};
}

Fan star_subdivision(const Fan& fan, const LatticeVector& r) {
  if (r.size() != fan.rank()) throw DimensionError("ray does not live in Z^" + std::to_string(fan.rank()));
  if (rooftop::is_zero(r) || !is_primitive(r)) throw InputError("subdivision ray must be primitive");
  if (fan.ray_index(r)) return fan;
  if (!fan.contains(r)) throw InputError("ray " + to_string(r) + " is outside the support of the fan");
  std::vector<Cone> cones;
  for (std::size_t k = 0; k < fan.size(); ++k) {
    const Cone& c = fan.cone(k);
    if (!c.contains(r)) {
      cones.push_back(c);
      continue;
    }
    for (const LatticeVector& n : c.facet_normals()) {
      if (dot(n, r) <= 0) continue;
      std::vector<LatticeVector> gens{r};
      for (const LatticeVector& v : c.rays())
        if (dot(n, v) == 0) gens.push_back(v);
      cones.push_back(Cone::from_generators(fan.rank(), gens));
    }
  }
  return Fan::from_cones(fan.rank(), cones);
}

Fan projective_space_fan(std::size_t k) {
  std::vector<LatticeVector> rays;
  LatticeVector last = zero_vector(k);
  for (std::size_t i = 0; i < k; ++i) {
    rays.push_back(unit_vector(k, i));
    last[i] = -1;
  }
  if (k == 0) return Fan(0, {}, {RaySet{}});
  rays.push_back(last);
  std::vector<RaySet> cones;
  for (std::size_t omit = 0; omit <= k; ++omit) {
    RaySet s;
    for (std::size_t i = 0; i <= k; ++i)
      if (i != omit) s.push_back(i);
    cones.push_back(s);
  }
  return Fan(k, rays, cones);
}

Fan product_fan(const Fan& a, const Fan& b) {
  const std::size_t n = a.rank() + b.rank();
  std::vector<LatticeVector> rays;
  for (const LatticeVector& r : a.rays()) {
    LatticeVector v = r;
    v.resize(n, 0);
    rays.push_back(v);
  }
  for (const LatticeVector& r : b.rays()) {
    LatticeVector v = zero_vector(a.rank());
    v.insert(v.end(), r.begin(), r.end());
    rays.push_back(v);
  }
  std::vector<RaySet> cones;
  for (const RaySet& x : a.maximal_cones())
    for (const RaySet& y : b.maximal_cones()) {
      RaySet s = x;
      for (std::size_t j : y) s.push_back(j + a.rays().size());
      cones.push_back(s);
    }
  return Fan(n, rays, cones);
}

}  // namespace rooftop
