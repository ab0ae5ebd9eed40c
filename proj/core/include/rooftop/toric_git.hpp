#pragma once

// One-parameter diagonal torus actions on affine space, their cobordism open
// sets, the invariant cone and the toric quotients on both sides.

#include "rooftop/polyhedral.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rooftop {

/// t acts on a point v of the affine space by v_i -> t^{w_i} v_i.
struct WeightedAction {
  std::size_t n_minus = 0;
  std::size_t n_plus = 0;
  std::vector<long> point_weights;

  /// Weight +1 on the first m+1 coordinates and -1 on the next l+1.
  static WeightedAction cobordism(std::size_t m, std::size_t l);
  std::size_t coordinate_count() const { return point_weights.size(); }
  /// Weights are +1 on the first block and -1 on the second, both nonempty.
  bool is_cobordism() const;
};

enum class LimitDirection { toward_zero, toward_infinity };

/// Whether lim t.v exists as t -> 0 (resp. infinity).
bool limit_exists(const WeightedAction& a, const RationalVector& v, LimitDirection direction);

struct CobordismMembership {
  bool in_b_minus = false;  ///< no limit at infinity
  bool in_b_plus = false;   ///< no limit at zero
};

CobordismMembership cobordism_membership(const WeightedAction& a, const RationalVector& v);

/// Invariant monomials: exponents mu >= 0 with <w, mu> = 0, written in the
/// basis `kernel` of the saturated lattice w-perp.
struct InvariantCone {
  IntMatrix kernel;                          ///< (N-1) x N, rows a Hermite basis of w-perp
  Cone cone;                                 ///< in kernel coordinates
  std::vector<LatticeVector> hilbert_basis;  ///< in kernel coordinates
  std::vector<LatticeVector> monomials;      ///< same elements as exponent vectors in Z^N
};

/// Throws InputError unless the weights take both signs.
InvariantCone git_quotient_cone(const WeightedAction& a);

enum class Side { minus, plus };

/// Image of e_k in Z^N / Z w, using the kernel basis of the invariant cone as
/// coordinates on the quotient lattice.
std::vector<LatticeVector> quotient_rays(const WeightedAction& a);

/// Toric model of B_minus / C* (resp. B_plus / C*): maximal cones are images
/// of coordinate cones omitting one index of the first (resp. second) block.
Fan quotient_fan(const WeightedAction& a, Side side);

struct QuotientData {
  WeightedAction action;
  InvariantCone invariants;
  std::size_t quotient_lattice_rank = 0;
  Cone git_cone;  ///< image of the positive orthant: the support of every quotient fan
  Fan fan_minus;
  Fan fan_plus;
  LatticeVector blowup_ray;
  Fan blowup_fan;
};

/// Everything above for a cobordism action.
QuotientData quotient_data(const WeightedAction& a);

/// Sum of the images of the first block, which equals the sum over the second.
LatticeVector blowup_ray(const WeightedAction& a);
Fan blowup_fan(const QuotientData& q);

/// A lattice map together with fans it is compatible with.
struct FanMorphism {
  IntMatrix lattice_map;
  Fan source;
  Fan target;
  std::vector<std::size_t> cone_assignment;  ///< source maximal cone -> target maximal cone
};

/// Certifies that every source maximal cone maps into some target maximal
/// cone; throws InputError naming the first that does not.
FanMorphism make_morphism(IntMatrix lattice_map, Fan source, Fan target);
/// second o first; throws InputError when first.target differs from second.source.
FanMorphism compose(const FanMorphism& second, const FanMorphism& first);
/// Smallest target cone containing the image of the source cone `tau`.
std::optional<RaySet> image_cone(const FanMorphism& f, const RaySet& tau);

struct Morphisms {
  FanMorphism b_minus, b_plus, s_minus, s_plus, beta;
};

/// b: blow-up -> quotient fan, s: quotient fan -> cone, beta: blow-up -> cone.
Morphisms build_morphisms(const QuotientData& q);

struct FactorizationCheck {
  bool holds = false;
  std::string reason;
};

/// Checks second o first = direct cone by cone on the maximal cones of the
/// common source.
FactorizationCheck check_factorization(const FanMorphism& first, const FanMorphism& second, const FanMorphism& direct);

struct ExceptionalLocus {
  /// Source cones whose smallest target cone has larger dimension.
  std::vector<RaySet> cones;
  /// Inclusion-minimal members of `cones`.
  std::vector<RaySet> minimal_cones;
  /// Minimum dimension over `cones`; the codimension of the locus. Empty when
  /// the map is an isomorphism on orbits.
  std::optional<std::size_t> codimension;
};

ExceptionalLocus exceptional_locus(const FanMorphism& f);

/// Dimension of the cone spanned by rays `s` of `fan`.
std::size_t cone_dimension(const Fan& fan, const RaySet& s);

struct FibrationCheck {
  bool holds = false;
  std::string reason;
  std::size_t fiber_dim = 0;
  Fan fiber;  ///< in coordinates of the kernel lattice
};

/// The fan `source` splits over `base` along the surjection `map`: every
/// maximal cone is a cone of kernel rays plus rays sent bijectively onto the
/// rays of a base maximal cone, each (fiber cone, base cone) pair occurs once,
/// and the kernel cones form the fan of a projective space.
FibrationCheck check_projective_fibration(const Fan& source, const Fan& base, const IntMatrix& map);

}  // namespace rooftop
