#pragma once

// Deciding whether two fans agree up to a unimodular change of lattice basis.

#include "rooftop/polyhedral.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace rooftop {

struct IsomorphismOptions {
  /// Optional colouring of rays; a ray may only be sent to a ray of the same
  /// colour. Either empty or one entry per ray.
  std::vector<int> source_labels;
  std::vector<int> target_labels;
  /// Extra condition on a candidate map, checked after the fan structure.
  std::function<bool(const IntMatrix&)> accept;
};

/// Unimodular A with A(rays of a) = rays of b and A(cones of a) = cones of b.
/// Backtracks over ray bijections, pruning by how many maximal cones each pair
/// of rays shares and by linear independence of the images. Fans whose rays
/// do not span the lattice are only matched when both have no rays at all.
std::optional<IntMatrix> find_fan_isomorphism(const Fan& a, const Fan& b, const IsomorphismOptions& options = {});

/// Independent check of a claimed isomorphism.
bool verify_fan_isomorphism(const IntMatrix& map, const Fan& a, const Fan& b);

}  // namespace rooftop
