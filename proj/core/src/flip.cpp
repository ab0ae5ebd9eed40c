#include "rooftop/flip.hpp"

#include "rooftop/fan_isomorphism.hpp"

#include <algorithm>

namespace rooftop {

namespace {

const char* side_name(Side s) { return s == Side::minus ? "minus" : "plus"; }

bool contains_all(const RaySet& big, const RaySet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

// Map between star fans induced by f, so that result * q_source = q_target * f.
std::optional<IntMatrix> induced_map(const IntMatrix& f, const IntMatrix& q_source, const IntMatrix& q_target) {
  IntMatrix down = q_target * f;
  IntMatrix m = down * right_inverse(q_source);
  if (!(m * q_source == down)) return std::nullopt;
  return m;
}

struct SmallSide {
  bool ok = false;
  std::string reason;
  ExceptionalSide side;
  std::size_t image_dim = 0;
};

SmallSide small_side(const FanMorphism& s, const Fan& lambda, Side which) {
  SmallSide out;
  const std::string name = std::string("s_") + side_name(which);
  ExceptionalLocus locus;
  try {
    locus = exceptional_locus(s);
  } catch (const InputError& e) {
    out.reason = name + ": " + e.what();
    return out;
  }
  if (!locus.codimension) {
    out.reason = name + " has no exceptional locus";
    return out;
  }
  if (locus.minimal_cones.size() != 1) {
    out.reason = name + " has " + std::to_string(locus.minimal_cones.size()) + " minimal exceptional cones";
    return out;
  }
  const RaySet& delta = locus.minimal_cones.front();
  out.side.cone_rays = s.source.rays_of(delta);
  out.side.cone_dim = cone_dimension(s.source, delta);
  out.side.locus_dim = s.source.rank() - out.side.cone_dim;
  out.side.codimension = *locus.codimension;
  if (out.side.codimension < 2) {
    out.reason = name + " is not small: exceptional codimension " + std::to_string(out.side.codimension);
    return out;
  }
  auto img = image_cone(s, delta);
  out.image_dim = cone_dimension(s.target, *img);
  if (out.image_dim != s.target.rank()) {
    out.reason = name + " sends its exceptional locus onto a positive-dimensional orbit";
    return out;
  }
  Fan star = star_fan(s.source, delta).fan;
  auto iso = find_fan_isomorphism(star, lambda);
  if (!iso || !verify_fan_isomorphism(*iso, star, lambda)) {
    out.reason = "exceptional locus of " + name + " is not the model variety";
    return out;
  }
  out.side.identification = *iso;
  out.ok = true;
  return out;
}

struct DivisorSide {
  bool ok = false;
  std::string reason;
  LatticeVector ray;
  BundleSide bundle;
};

DivisorSide divisor_side(const FanMorphism& b, Side which) {
  DivisorSide out;
  const std::string name = std::string("b_") + side_name(which);
  ExceptionalLocus locus;
  try {
    locus = exceptional_locus(b);
  } catch (const InputError& e) {
    out.reason = name + ": " + e.what();
    return out;
  }
  if (!locus.codimension) {
    out.reason = name + " has no exceptional locus";
    return out;
  }
  if (locus.minimal_cones.size() != 1) {
    out.reason = name + " has " + std::to_string(locus.minimal_cones.size()) + " minimal exceptional cones";
    return out;
  }
  const RaySet& rho = locus.minimal_cones.front();
  if (rho.size() != 1 || *locus.codimension != 1) {
    out.reason = "exceptional locus of " + name + " has codimension " + std::to_string(*locus.codimension) + ", not a divisor";
    return out;
  }
  out.ray = b.source.rays()[rho.front()];
  RaySet delta = *image_cone(b, rho);
  StarFan top = star_fan(b.source, rho);
  StarFan bottom = star_fan(b.target, delta);
  auto m = induced_map(b.lattice_map, top.projection, bottom.projection);
  if (!m) {
    out.reason = name + " does not descend to the star fans";
    return out;
  }
  FibrationCheck fib = check_projective_fibration(top.fan, bottom.fan, *m);
  out.bundle.base_dim = bottom.fan.rank();
  out.bundle.fiber_dim = fib.fiber_dim;
  if (!fib.holds) {
    out.reason = name + " on the divisor: " + fib.reason;
    return out;
  }
  out.ok = true;
  return out;
}

SmallCondition check_condition_small_unguarded(const RooftopWitness& w) {
  SmallCondition out;
  SmallSide minus = small_side(w.s_minus, w.p_minus.target, Side::minus);
  SmallSide plus = small_side(w.s_plus, w.p_plus.target, Side::plus);
  out.minus = minus.side;
  out.plus = plus.side;
  out.z0_dim = w.s_minus.target.rank() - std::max(minus.image_dim, plus.image_dim);
  out.pass = minus.ok && plus.ok;
  out.reason = !minus.ok ? minus.reason : plus.reason;
  return out;
}

DivisorCondition check_condition_divisor_unguarded(const RooftopWitness& w) {
  DivisorCondition out;
  DivisorSide minus = divisor_side(w.b_minus, Side::minus);
  DivisorSide plus = divisor_side(w.b_plus, Side::plus);
  out.minus = minus.bundle;
  out.plus = plus.bundle;
  out.ray = minus.ray;
  out.divisor_codim = 1;
  if (!minus.ok || !plus.ok) {
    out.reason = !minus.ok ? minus.reason : plus.reason;
    return out;
  }
  if (!(w.b_minus.source == w.b_plus.source) || minus.ray != plus.ray) {
    out.reason = "b_minus and b_plus contract different divisors";
    return out;
  }
  out.pass = true;
  return out;
}

FiberCondition check_condition_fiber_unguarded(const RooftopWitness& w) {
  FiberCondition out;
  const FanMorphism& beta = w.beta;
  const std::size_t top_rank = beta.target.rank();

  std::vector<RaySet> fiber;
  const bool target_simplicial = beta.target.is_simplicial();
  for (const RaySet& tau : beta.source.all_cones()) {
    auto img = image_cone(beta, tau);
    if (!img) {
      out.reason = "beta is not certified";
      return out;
    }
    std::size_t d = target_simplicial ? img->size() : cone_dimension(beta.target, *img);
    if (d == top_rank) fiber.push_back(tau);
  }
  out.fiber_cones = fiber.size();
  if (fiber.empty()) {
    out.reason = "beta has an empty fiber over the fixed point";
    return out;
  }
  // all_cones lists cones by dimension, so the first is minimal.
  const RaySet rho = fiber.front();
  std::size_t over = 0;
  for (const RaySet& tau : beta.source.all_cones())
    if (contains_all(tau, rho)) ++over;
  bool closed = over == fiber.size() &&
                std::all_of(fiber.begin(), fiber.end(), [&](const RaySet& t) { return contains_all(t, rho); });
  if (!closed) {
    out.reason = "fiber of beta over the fixed point is not a single orbit closure";
    return out;
  }

  StarFan top = star_fan(beta.source, rho);
  struct Down {
    IntMatrix map;
    StarFan star;
  };
  std::vector<Down> downs;
  for (const FanMorphism* b : {&w.b_minus, &w.b_plus}) {
    if (!(b->source == beta.source)) {
      out.reason = "b and beta have different sources";
      return out;
    }
    auto delta = image_cone(*b, rho);
    if (!delta) {
      out.reason = "b is not certified on the fiber";
      return out;
    }
    StarFan bottom = star_fan(b->target, *delta);
    auto m = induced_map(b->lattice_map, top.projection, bottom.projection);
    if (!m) {
      out.reason = "b does not descend to the star fans";
      return out;
    }
    downs.push_back({*m, bottom});
  }

  const std::vector<const FanMorphism*> proj{&w.p_minus, &w.p_plus};
  for (std::size_t s = 0; s < 2; ++s)
    if (!(proj[s]->source == w.model_fan)) {
      out.reason = "model projection does not start at the model fan";
      return out;
    }
  IsomorphismOptions opt;
  for (const LatticeVector& r : top.fan.rays())
    opt.source_labels.push_back(int(is_zero(downs[0].map * r)) + 2 * int(is_zero(downs[1].map * r)));
  for (const LatticeVector& r : w.model_fan.rays())
    opt.target_labels.push_back(int(is_zero(w.p_minus.lattice_map * r)) + 2 * int(is_zero(w.p_plus.lattice_map * r)));
  opt.accept = [&](const IntMatrix& phi) {
    for (std::size_t s = 0; s < 2; ++s) {
      std::vector<LatticeVector> ker = integer_kernel(downs[s].map);
      std::vector<LatticeVector> target_ker = integer_kernel(proj[s]->lattice_map);
      if (ker.size() != target_ker.size()) return false;
      for (const LatticeVector& k : ker)
        if (!is_zero(proj[s]->lattice_map * (phi * k))) return false;
    }
    return true;
  };
  auto phi = find_fan_isomorphism(top.fan, w.model_fan, opt);
  if (!phi || !verify_fan_isomorphism(*phi, top.fan, w.model_fan)) {
    out.reason = "fiber over the fixed point is not the model compatibly with both projections";
    return out;
  }
  out.phi = *phi;
  for (std::size_t s = 0; s < 2; ++s) {
    IntMatrix lhs = proj[s]->lattice_map * *phi;
    IntMatrix side = lhs * right_inverse(downs[s].map);
    if (!(side * downs[s].map == lhs) || !verify_fan_isomorphism(side, downs[s].star.fan, proj[s]->target)) {
      out.reason = "projection " + std::string(side_name(s == 0 ? Side::minus : Side::plus)) +
                   " does not match the model projection";
      return out;
    }
    (s == 0 ? out.phi_minus : out.phi_plus) = side;
  }
  out.pass = true;
  return out;
}

template <class Result>
Result guarded(Result (*check)(const RooftopWitness&), const RooftopWitness& w) {
  try {
    return check(w);
  } catch (const std::invalid_argument& e) {
    Result r;
    r.pass = false;
    r.reason = e.what();
    return r;
  }
}

}  // namespace

SmallCondition check_condition_small(const RooftopWitness& w) { return guarded(check_condition_small_unguarded, w); }
DivisorCondition check_condition_divisor(const RooftopWitness& w) { return guarded(check_condition_divisor_unguarded, w); }
FiberCondition check_condition_fiber(const RooftopWitness& w) { return guarded(check_condition_fiber_unguarded, w); }

FlipReport check_rooftop(const RooftopWitness& w) {
  FlipReport r;
  r.model_name = w.model_name;
  r.condition1 = check_condition_small(w);
  r.condition2 = check_condition_divisor(w);
  r.condition3 = check_condition_fiber(w);
  r.factorization_minus = check_factorization(w.b_minus, w.s_minus, w.beta);
  r.factorization_plus = check_factorization(w.b_plus, w.s_plus, w.beta);
  return r;
}

ProductModel product_model(std::size_t m, std::size_t l) {
  ProductModel out;
  Fan pm = projective_space_fan(m);
  Fan pl = projective_space_fan(l);
  out.fan = product_fan(pm, pl);
  IntMatrix first(m, m + l), second(l, m + l);
  for (std::size_t i = 0; i < m; ++i) first(i, i) = 1;
  for (std::size_t i = 0; i < l; ++i) second(i, m + i) = 1;
  out.p_minus = make_morphism(first, out.fan, pm);
  out.p_plus = make_morphism(second, out.fan, pl);
  out.name = "P^" + std::to_string(m) + " x P^" + std::to_string(l);
  return out;
}

RooftopWitness atiyah_witness(std::size_t m, std::size_t l) {
  return atiyah_witness(quotient_data(WeightedAction::cobordism(m, l)));
}

RooftopWitness atiyah_witness(const QuotientData& q) {
  if (!q.action.is_cobordism()) throw InputError("quotient data of a non-cobordism action");
  const std::size_t m = q.action.n_minus - 1, l = q.action.n_plus - 1;
  Morphisms mor = build_morphisms(q);
  ProductModel model = product_model(m, l);
  return {q.blowup_fan, q.fan_minus, q.fan_plus, q.git_cone, mor.b_minus, mor.b_plus, mor.s_minus, mor.s_plus,
          mor.beta, model.fan, model.p_minus, model.p_plus, model.name};
}

FlipReport verify_atiyah(std::size_t m, std::size_t l, std::size_t cap) {
  if (m < 1 || l < 1) throw InputError("m and l must be at least 1: with an empty side there is no flip");
  if (m > cap || l > cap)
    throw InputError("m and l must not exceed " + std::to_string(cap));
  return check_rooftop(atiyah_witness(m, l));
}

}  // namespace rooftop
