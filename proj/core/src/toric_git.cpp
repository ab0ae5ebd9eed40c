#include "rooftop/toric_git.hpp"

#include "rooftop/fan_isomorphism.hpp"

#include <algorithm>
#include <set>

namespace rooftop {

WeightedAction WeightedAction::cobordism(std::size_t m, std::size_t l) {
  WeightedAction a;
  a.n_minus = m + 1;
  a.n_plus = l + 1;
  a.point_weights.assign(m + 1, 1);
  a.point_weights.insert(a.point_weights.end(), l + 1, -1);
  return a;
}

bool WeightedAction::is_cobordism() const {
  if (n_minus == 0 || n_plus == 0 || point_weights.size() != n_minus + n_plus) return false;
  for (std::size_t i = 0; i < point_weights.size(); ++i)
    if (point_weights[i] != (i < n_minus ? 1 : -1)) return false;
  return true;
}

namespace {

void check_point(const WeightedAction& a, const RationalVector& v) {
  if (v.size() != a.coordinate_count())
    throw DimensionError("point has " + std::to_string(v.size()) + " coordinates, action has " +
                         std::to_string(a.coordinate_count()));
}

void require_cobordism(const WeightedAction& a) {
  if (!a.is_cobordism())
    throw InputError("quotient fans are only built for weights +1 on the first block and -1 on the second");
}

}  // namespace

bool limit_exists(const WeightedAction& a, const RationalVector& v, LimitDirection direction) {
  check_point(a, v);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    long w = a.point_weights[i];
    if (direction == LimitDirection::toward_zero && w < 0) return false;
    if (direction == LimitDirection::toward_infinity && w > 0) return false;
  }
  return true;
}

CobordismMembership cobordism_membership(const WeightedAction& a, const RationalVector& v) {
  return {!limit_exists(a, v, LimitDirection::toward_infinity), !limit_exists(a, v, LimitDirection::toward_zero)};
}

namespace {

IntMatrix weight_kernel(const WeightedAction& a) {
  IntMatrix w(1, a.coordinate_count());
  for (std::size_t i = 0; i < a.coordinate_count(); ++i) w(0, i) = a.point_weights[i];
  return IntMatrix::from_rows(integer_kernel(w), a.coordinate_count());
}

}  // namespace

InvariantCone git_quotient_cone(const WeightedAction& a) {
  bool pos = std::any_of(a.point_weights.begin(), a.point_weights.end(), [](long w) { return w > 0; });
  bool neg = std::any_of(a.point_weights.begin(), a.point_weights.end(), [](long w) { return w < 0; });
  if (!pos || !neg) throw InputError("weights of one sign only: the quotient is a point");
  InvariantCone out;
  out.kernel = weight_kernel(a);
  std::vector<LatticeVector> normals;
  for (std::size_t k = 0; k < out.kernel.cols(); ++k) normals.push_back(out.kernel.column(k));
  out.cone = Cone::from_inequalities(out.kernel.rows(), normals);
  out.hilbert_basis = hilbert_basis(out.cone);
  IntMatrix kt = out.kernel.transpose();
  for (const LatticeVector& c : out.hilbert_basis) out.monomials.push_back(kt * c);
  return out;
}

std::vector<LatticeVector> quotient_rays(const WeightedAction& a) {
  IntMatrix k = weight_kernel(a);
  std::vector<LatticeVector> out;
  for (std::size_t j = 0; j < k.cols(); ++j) out.push_back(primitive(k.column(j)));
  return out;
}

Fan quotient_fan(const WeightedAction& a, Side side) {
  require_cobordism(a);
  std::vector<LatticeVector> rays = quotient_rays(a);
  const std::size_t n = rays.size();
  const std::size_t begin = side == Side::minus ? 0 : a.n_minus;
  const std::size_t end = side == Side::minus ? a.n_minus : n;
  std::vector<RaySet> cones;
  for (std::size_t omit = begin; omit < end; ++omit) {
    RaySet s;
    for (std::size_t i = 0; i < n; ++i)
      if (i != omit) s.push_back(i);
    cones.push_back(std::move(s));
  }
  return Fan(n - 1, rays, cones);
}

LatticeVector blowup_ray(const WeightedAction& a) {
  require_cobordism(a);
  std::vector<LatticeVector> rays = quotient_rays(a);
  LatticeVector sum = zero_vector(rays.size() - 1);
  for (std::size_t i = 0; i < a.n_minus; ++i) sum = sum + rays[i];
  return primitive(sum);
}

Fan blowup_fan(const QuotientData& q) {
  if (!q.git_cone.is_full_dimensional() || !q.git_cone.is_pointed())
    throw InputError("blow-up needs a full-dimensional pointed quotient cone");
  return star_subdivision(Fan::single_cone(q.git_cone), q.blowup_ray);
}

QuotientData quotient_data(const WeightedAction& a) {
  require_cobordism(a);
  QuotientData q;
  q.action = a;
  q.invariants = git_quotient_cone(a);
  q.quotient_lattice_rank = a.coordinate_count() - 1;
  q.git_cone = Cone::from_generators(q.quotient_lattice_rank, quotient_rays(a));
  q.fan_minus = quotient_fan(a, Side::minus);
  q.fan_plus = quotient_fan(a, Side::plus);
  q.blowup_ray = blowup_ray(a);
  q.blowup_fan = blowup_fan(q);
  return q;
}

FanMorphism make_morphism(IntMatrix lattice_map, Fan source, Fan target) {
  if (lattice_map.rows() != target.rank() || lattice_map.cols() != source.rank())
    throw DimensionError("lattice map is " + std::to_string(lattice_map.rows()) + "x" + std::to_string(lattice_map.cols()) +
                         ", fans need " + std::to_string(target.rank()) + "x" + std::to_string(source.rank()));
  FanMorphism f{std::move(lattice_map), std::move(source), std::move(target), {}};
  for (std::size_t k = 0; k < f.source.size(); ++k) {
    std::vector<LatticeVector> images;
    for (const LatticeVector& r : f.source.cone(k).rays()) images.push_back(f.lattice_map * r);
    std::optional<std::size_t> hit;
    for (std::size_t t = 0; t < f.target.size() && !hit; ++t)
      if (std::all_of(images.begin(), images.end(), [&](const LatticeVector& v) { return f.target.cone(t).contains(v); }))
        hit = t;
    if (!hit) {
      std::string rays;
      for (const LatticeVector& r : f.source.cone(k).rays()) rays += to_string(r);
      throw InputError("source cone " + std::to_string(k) + " " + rays + " does not map into any target cone");
    }
    f.cone_assignment.push_back(*hit);
  }
  return f;
}

FanMorphism compose(const FanMorphism& second, const FanMorphism& first) {
  if (!(first.target == second.source)) throw InputError("morphisms do not compose: intermediate fans differ");
  return make_morphism(second.lattice_map * first.lattice_map, first.source, second.target);
}

std::optional<RaySet> image_cone(const FanMorphism& f, const RaySet& tau) {
  std::vector<LatticeVector> images;
  for (std::size_t i : tau) images.push_back(f.lattice_map * f.source.rays().at(i));
  return f.target.minimal_cone(images);
}

Morphisms build_morphisms(const QuotientData& q) {
  IntMatrix id = IntMatrix::identity(q.quotient_lattice_rank);
  Fan base = Fan::single_cone(q.git_cone);
  return {make_morphism(id, q.blowup_fan, q.fan_minus), make_morphism(id, q.blowup_fan, q.fan_plus),
          make_morphism(id, q.fan_minus, base), make_morphism(id, q.fan_plus, base),
          make_morphism(id, q.blowup_fan, base)};
}

FactorizationCheck check_factorization(const FanMorphism& first, const FanMorphism& second, const FanMorphism& direct) {
  FanMorphism composite;
  try {
    composite = compose(second, first);
  } catch (const InputError& e) {
    return {false, e.what()};
  }
  if (!(composite.source == direct.source) || !(composite.target == direct.target))
    return {false, "composite and direct map have different fans"};
  for (std::size_t k = 0; k < composite.source.size(); ++k) {
    const RaySet& cone = composite.source.maximal_cones()[k];
    for (std::size_t i : cone) {
      const LatticeVector& r = composite.source.rays()[i];
      if (composite.lattice_map * r != direct.lattice_map * r)
        return {false, "ray " + to_string(r) + " of cone " + std::to_string(k) + " has different images"};
    }
    if (image_cone(composite, cone) != image_cone(direct, cone))
      return {false, "cone " + std::to_string(k) + " lands in different target cones"};
  }
  return {true, ""};
}

std::size_t cone_dimension(const Fan& fan, const RaySet& s) {
  if (s.empty()) return 0;
  return rank(fan.rays_of(s), fan.rank());
}

ExceptionalLocus exceptional_locus(const FanMorphism& f) {
  ExceptionalLocus out;
  const bool source_simplicial = f.source.is_simplicial();
  const bool target_simplicial = f.target.is_simplicial();
  for (const RaySet& tau : f.source.all_cones()) {
    auto img = image_cone(f, tau);
    if (!img) throw InputError("morphism is not certified: a source cone has no target cone");
    std::size_t d = source_simplicial ? tau.size() : cone_dimension(f.source, tau);
    std::size_t e = target_simplicial ? img->size() : cone_dimension(f.target, *img);
    if (e <= d) continue;
    out.cones.push_back(tau);
    if (!out.codimension || d < *out.codimension) out.codimension = d;
  }
  for (const RaySet& c : out.cones) {
    bool minimal = std::none_of(out.cones.begin(), out.cones.end(), [&](const RaySet& o) {
      return o.size() < c.size() && std::includes(c.begin(), c.end(), o.begin(), o.end());
    });
    if (minimal) out.minimal_cones.push_back(c);
  }
  return out;
}

FibrationCheck check_projective_fibration(const Fan& source, const Fan& base, const IntMatrix& map) {
  FibrationCheck out;
  if (map.rows() != base.rank() || map.cols() != source.rank()) {
    out.reason = "lattice map has the wrong shape";
    return out;
  }
  if (base.rank() > 0) {
    auto f = invariant_factors(map);
    if (f.size() != base.rank() || std::any_of(f.begin(), f.end(), [](const Integer& x) { return x != 1; })) {
      out.reason = "lattice map is not surjective";
      return out;
    }
  }
  out.fiber_dim = source.rank() - base.rank();

  std::vector<std::size_t> kernel_rays;
  std::vector<LatticeVector> images(source.rays().size());
  for (std::size_t i = 0; i < source.rays().size(); ++i) {
    images[i] = map * source.rays()[i];
    if (is_zero(images[i])) kernel_rays.push_back(i);
  }

  std::set<std::pair<RaySet, RaySet>> pairs;
  std::set<RaySet> fiber_cones;
  for (std::size_t k = 0; k < source.size(); ++k) {
    RaySet fiber, down;
    for (std::size_t i : source.maximal_cones()[k]) {
      if (is_zero(images[i])) {
        fiber.push_back(i);
        continue;
      }
      auto j = base.ray_index(images[i]);
      if (!j) {
        out.reason = "ray " + to_string(source.rays()[i]) + " maps to " + to_string(images[i]) + ", not a base ray";
        return out;
      }
      down.push_back(*j);
    }
    RaySet sorted = down;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() ||
        !std::binary_search(base.maximal_cones().begin(), base.maximal_cones().end(), sorted)) {
      out.reason = "cone " + std::to_string(k) + " does not map onto a maximal base cone";
      return out;
    }
    if (!pairs.emplace(fiber, sorted).second) {
      out.reason = "cone " + std::to_string(k) + " repeats a fiber and base cone pair";
      return out;
    }
    fiber_cones.insert(fiber);
  }
  if (pairs.size() != fiber_cones.size() * base.size()) {
    out.reason = "fiber cones and base cones do not combine as a product";
    return out;
  }

  std::vector<LatticeVector> basis = integer_kernel(map);
  IntMatrix embed = IntMatrix::from_columns(basis, source.rank());
  std::vector<LatticeVector> coords;
  for (std::size_t i : kernel_rays) coords.push_back(primitive_multiple(*solve(embed, source.rays()[i])));
  std::vector<RaySet> cones;
  for (const RaySet& f : fiber_cones) {
    RaySet local;
    for (std::size_t i : f)
      local.push_back(static_cast<std::size_t>(std::find(kernel_rays.begin(), kernel_rays.end(), i) - kernel_rays.begin()));
    cones.push_back(std::move(local));
  }
  out.fiber = Fan(out.fiber_dim, coords, cones);
  if (!find_fan_isomorphism(out.fiber, projective_space_fan(out.fiber_dim))) {
    out.reason = "fiber fan is not the fan of P^" + std::to_string(out.fiber_dim);
    return out;
  }
  out.holds = true;
  return out;
}

}  // namespace rooftop
