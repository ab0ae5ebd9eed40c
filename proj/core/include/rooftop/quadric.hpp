#pragma once

// The quadric Q^{2n} = {x_0 x_{n+1} + ... + x_n x_{2n+1} = 0} in P^{2n+1} with
// t acting by weight 1 on x_0..x_n and weight 0 on x_{n+1}..x_{2n+1}.

#include "rooftop/drum.hpp"
#include "rooftop/toric_git.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace rooftop {

/// A point of projective space, scaled so its first nonzero coordinate is 1.
class ProjPoint {
public:
  ProjPoint() = default;
  /// Throws InputError for the zero vector.
  explicit ProjPoint(RationalVector coords);
  static ProjPoint from_integers(std::initializer_list<long> coords);

  const RationalVector& coords() const { return coords_; }
  std::size_t size() const { return coords_.size(); }
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;

private:
  RationalVector coords_;
};

class QuadricModel {
public:
  explicit QuadricModel(std::size_t n);

  std::size_t n() const { return n_; }
  std::size_t coordinate_count() const { return 2 * n_ + 2; }
  /// Weight 1 on the x block and 0 on the y block, as on projective space.
  std::vector<long> projective_weights() const;
  /// Lift to the affine cone: +1 on the x block, -1 on the y block.
  WeightedAction cone_action() const;

  /// q(v) = sum_i v_i v_{n+1+i}.
  Rational form(const RationalVector& v) const;
  /// t.v with t acting by projective_weights.
  RationalVector act(const Rational& t, const RationalVector& v) const;

private:
  std::size_t n_;
};

bool on_quadric(const QuadricModel& q, const ProjPoint& p);
/// Support inside a single weight block.
bool is_fixed(const QuadricModel& q, const ProjPoint& p);
bool in_sink(const QuadricModel& q, const ProjPoint& p);    ///< y block vanishes
bool in_source(const QuadricModel& q, const ProjPoint& p);  ///< x block vanishes

struct BBLimits {
  ProjPoint sink;    ///< limit as t -> infinity
  ProjPoint source;  ///< limit as t -> 0
  bool fixed = false;
};

/// For a fixed point both limits are the point itself and `fixed` is set.
BBLimits bb_limits(const QuadricModel& q, const ProjPoint& p);

struct IncidencePairing {
  RationalVector point;       ///< x block, a point of P(V)
  RationalVector functional;  ///< y block, a point of P(V^dual)
  Rational value;
};

/// Pairs the two limits of p. Throws InputError when either block vanishes.
IncidencePairing incidence_pairing(const QuadricModel& q, const ProjPoint& p);
bool incidence_check(const QuadricModel& q, const ProjPoint& p);

/// Membership of a point of the affine cone in B- / B+. Throws InputError off
/// the cone.
CobordismMembership cone_membership(const QuadricModel& q, const RationalVector& v);

/// Random rational point of the quadric with both blocks nonzero: every
/// coordinate but one is drawn, the last solves the linear equation it
/// appears in.
RationalVector random_quadric_point(const QuadricModel& q, std::mt19937_64& rng);
RationalVector random_rational_vector(std::size_t size, std::mt19937_64& rng);

struct FixedLocusCheck {
  bool exact = false;  ///< fixed iff support in one block, for every support pattern
  std::size_t patterns = 0;
};

/// Runs over all nonempty supports and compares t.p = p for a sample t with
/// the single-block criterion.
FixedLocusCheck fixed_locus_check(const QuadricModel& q);

struct MukaiCertificate {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  FixedLocusCheck fixed_locus;
  MuData mu;
  std::size_t incident_pairs = 0;      ///< samples whose limit pair satisfies h(p) = 0
  bool limits_fixed = false;           ///< limits land in Y- / Y+, on Q, and are fixed
  bool pairing_identity = false;       ///< pairing of the blocks equals q, on and off Q
  bool both_sides = false;             ///< sampled points lie in B- and B+
  bool sink_cone_minus_only = false;   ///< points of the cone over Y- lie in B- only
  bool homothety_commutes = false;
  std::size_t dim_y_minus = 0, dim_y_plus = 0;
  std::size_t quotient_dim = 0;        ///< dimension of the quotients of the cone by C*
  std::size_t codim_minus = 0, codim_plus = 0;
  bool small = false;                  ///< both codimensions at least 2
  std::string note;
  bool pass() const;
};

/// Orbit-level evidence that the quadric drum induces the flip modeled by
/// P(T_{P^n}). Smallness is reported, not required. Throws InputError unless
/// 1 <= n <= cap.
MukaiCertificate mukai_witness(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t cap = 8);

}  // namespace rooftop
