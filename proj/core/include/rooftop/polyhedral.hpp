#pragma once

// Rational polyhedral cones and fans over Z^rank.

#include "rooftop/exact.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rooftop {

/// Sorted indices into a ray list.
using RaySet = std::vector<std::size_t>;

/// Generators of {u : <a, u> >= 0 for every constraint a}, found by double
/// description. The lineality basis is saturated and in Hermite form; rays are
/// primitive, orthogonal to the lineality space and sorted lexicographically.
struct Generators {
  std::vector<LatticeVector> lineality;
  std::vector<LatticeVector> rays;
};

Generators dual_generators(std::size_t rank, const std::vector<LatticeVector>& constraints);

/// A rational polyhedral cone, kept in a canonical double description.
///
/// `rays()` lists generators: for a pointed cone these are its primitive
/// extremal rays; a lineality space contributes each basis vector with both
/// signs. `facet_normals()` lists the inequalities <n, v> >= 0 cutting the
/// cone out, with implicit equations contributing both signs. The two lists
/// are each other's role in the dual cone.
class Cone {
public:
  Cone() = default;

  static Cone from_generators(std::size_t rank, const std::vector<LatticeVector>& generators);
  static Cone from_inequalities(std::size_t rank, const std::vector<LatticeVector>& normals);
  static Cone orthant(std::size_t rank);

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<LatticeVector>& facet_normals() const { return normals_; }

  std::size_t lineality_dim() const { return lineality_dim_; }
  bool is_pointed() const { return lineality_dim_ == 0; }
  std::size_t dim() const { return rank_ - equation_dim_; }
  bool is_full_dimensional() const { return equation_dim_ == 0; }

  bool contains(const LatticeVector& v) const;
  bool contains(const RationalVector& v) const;
  bool contains(const Cone& other) const;
  /// v lies in the relative interior.
  bool contains_in_relative_interior(const LatticeVector& v) const;

  /// Throw InputError on non-pointed cones.
  bool is_simplicial() const;
  bool is_smooth() const;

  Cone dual() const;

  /// Indices of rays spanning the smallest face containing all `points`
  /// (which must lie in the cone).
  RaySet minimal_face(const std::vector<LatticeVector>& points) const;
  /// Facets of the face spanned by `face`, each as a ray subset. Pointed only.
  std::vector<RaySet> facets_of(const RaySet& face) const;
  /// Every face, the zero face included, as ray subsets. Pointed only.
  std::vector<RaySet> faces() const;
  std::vector<LatticeVector> rays_of(const RaySet& face) const;
  std::size_t face_dim(const RaySet& face) const;

  friend bool operator==(const Cone& a, const Cone& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_;
  }

private:
  static Cone from_descriptions(std::size_t rank, const Generators& v, const Generators& h);
  void require_pointed(const char* op) const;

  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<LatticeVector> normals_;
  std::size_t lineality_dim_ = 0;
  std::size_t equation_dim_ = 0;
};

/// Dual cone {u : <u, v> >= 0 for all v in C}.
Cone dual_cone(const Cone& c);
bool cone_contains(const Cone& c, const LatticeVector& v);
bool is_smooth(const Cone& c);
bool is_simplicial(const Cone& c);

/// A finite fan of pointed cones given by its maximal cones.
///
/// Rays are primitive, deduplicated and sorted lexicographically; each maximal
/// cone is the sorted list of indices of its extremal rays.
class Fan {
public:
  Fan() = default;
  /// Validates that every listed generator is an extremal ray of its cone and
  /// that every cone is pointed; drops unused rays and non-maximal duplicates.
  Fan(std::size_t rank, std::vector<LatticeVector> rays, std::vector<RaySet> maximal_cones);
  static Fan from_cones(std::size_t rank, const std::vector<Cone>& cones);
  static Fan single_cone(const Cone& c);

  std::size_t rank() const { return rank_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<RaySet>& maximal_cones() const { return maximal_; }
  const Cone& cone(std::size_t i) const { return cones_.at(i); }
  std::size_t size() const { return maximal_.size(); }

  std::optional<std::size_t> ray_index(const LatticeVector& v) const;
  std::vector<LatticeVector> rays_of(const RaySet& s) const;
  Cone cone_of(const RaySet& s) const;

  /// All cones of the fan (faces of maximal cones), deduplicated, sorted by
  /// dimension and then lexicographically. Includes the zero cone.
  std::vector<RaySet> all_cones() const;
  /// Smallest cone of the fan containing every point, or nullopt when the
  /// points are not in a common cone.
  std::optional<RaySet> minimal_cone(const std::vector<LatticeVector>& points) const;

  bool contains(const LatticeVector& v) const;
  bool contains(const RationalVector& v) const;
  bool is_smooth() const;
  bool is_simplicial() const;

  struct Check {
    bool valid = true;
    std::string reason;
  };
  /// Pairwise intersections of maximal cones are faces of both.
  Check check() const;
  bool is_valid() const { return check().valid; }

  /// Fan cones cover the full-dimensional cone `c` exactly (needs a valid fan).
  bool covers(const Cone& c) const;
  /// Every cone of this fan sits in a cone of `coarse` and each maximal cone
  /// of `coarse` is the union of the cones of this fan inside it.
  bool refines(const Fan& coarse) const;

  friend bool operator==(const Fan& a, const Fan& b) {
    return a.rank_ == b.rank_ && a.rays_ == b.rays_ && a.maximal_ == b.maximal_;
  }

private:
  std::size_t rank_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<RaySet> maximal_;
  std::vector<Cone> cones_;
};

/// Star (link) of a cone `tau` of `fan`, projected to Z^rank / span(tau).
struct StarFan {
  Fan fan;
  IntMatrix projection;  ///< surjective Z^rank -> Z^(rank - dim tau), kernel span(tau)
};

StarFan star_fan(const Fan& fan, const RaySet& tau);

/// Surjection Z^rank -> Z^(rank - dim) with kernel span(vectors) ∩ Z^rank, rows in
/// Hermite form.
IntMatrix quotient_projection(const std::vector<LatticeVector>& vectors, std::size_t rank);

/// Star subdivision at primitive `r`: every maximal cone containing r is
/// replaced by the cones spanned by r and its facets that miss r. A fan already
/// having r as a ray is returned unchanged.
Fan star_subdivision(const Fan& fan, const LatticeVector& r);

/// Pulling triangulation of a pointed cone, as ray subsets of `c.rays()`.
std::vector<RaySet> triangulate(const Cone& c);

/// Minimal generating set of the monoid C ∩ Z^rank, sorted lexicographically.
std::vector<LatticeVector> hilbert_basis(const Cone& c);

/// Fan of P^k: rays e_1..e_k and -(e_1+...+e_k), maximal cones omit one ray.
Fan projective_space_fan(std::size_t k);
/// Product fan in Z^(a.rank + b.rank).
Fan product_fan(const Fan& a, const Fan& b);

}  // namespace rooftop
