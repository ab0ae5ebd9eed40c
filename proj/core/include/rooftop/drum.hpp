#pragma once

// Drums built on (Y, L-, L+) for the two supported families of Y: products of
// projective spaces and the flag variety P(T_{P^n}).

#include "rooftop/polyhedral.hpp"

#include <string>
#include <vector>

namespace rooftop {

enum class DrumKind { product, flag };

/// Y with its two contractions p-: Y -> Y- and p+: Y -> Y+, and line bundles
/// L- = p-^* O(degree_minus), L+ = p+^* O(degree_plus).
struct DrumTriple {
  DrumKind kind = DrumKind::product;
  std::size_t m = 0;  ///< Y- = P^m
  std::size_t l = 0;  ///< Y+ = P^l (equal to m for the flag kind)
  long degree_minus = 1;
  long degree_plus = 1;

  std::size_t dim_y = 0;
  Integer h0_minus, h0_plus;
  long fiber_degree_minus = 0;  ///< deg of L+ on a fiber of p-
  long fiber_degree_plus = 0;   ///< deg of L- on a fiber of p+
  std::size_t fiber_dim_minus = 0;
  std::size_t fiber_dim_plus = 0;

  static DrumTriple product(std::size_t m, std::size_t l, long degree_minus = 1, long degree_plus = 1);
  /// Y = P(T_{P^n}) inside P^n x (P^n)^dual, n >= 2.
  static DrumTriple flag(std::size_t n, long degree_minus = 1, long degree_plus = 1);
  /// The triple with the roles of L- and L+ exchanged.
  DrumTriple swapped() const;
  std::string description() const;
};

/// h0(L-) + h0(L+): the number of homogeneous coordinates of the ambient
/// projective space, which therefore has dimension one less.
Integer ambient_dimension(const DrumTriple& t);
std::size_t drum_dimension(const DrumTriple& t);

struct SmoothnessVerdict {
  bool nef_cone = false;
  bool projective_bundles = false;
  bool fiber_degrees = false;
  std::string reason;
  bool smooth() const { return nef_cone && projective_bundles && fiber_degrees; }
};

SmoothnessVerdict smoothness_check(const DrumTriple& t);

struct MuData {
  long mu_sink = 0;
  long mu_source = 0;
  long bandwidth = 0;
};

/// Diagonal action on projective space with the given coordinate weights and
/// the linearization of O(1), shifted so the sink has mu = 0. The sink is the
/// fixed component of the largest weight.
MuData mu_data(const std::vector<long>& coordinate_weights);
/// Weight 1 on the sections of L-, 0 on those of L+.
std::vector<long> drum_weights(const DrumTriple& t);
MuData bandwidth_of_drum(const DrumTriple& t);

/// Order of the isotropy group of a point: gcd of weight differences over its
/// nonzero coordinates (0 for fixed points).
Integer isotropy_order(const std::vector<long>& coordinate_weights, const RationalVector& point);
/// Every point outside the fixed locus has trivial isotropy, which for a
/// diagonal action means any two distinct weights differ by one.
bool is_equalized(const std::vector<long>& coordinate_weights);

struct SegreCertificate {
  std::size_t m = 0, l = 0;
  Integer ambient_coordinates;
  std::size_t drum_dimension = 0;
  std::size_t projective_dimension = 0;  ///< m + l + 1
  bool fills_ambient = false;
  std::vector<long> weights;
  std::size_t sink_dim = 0, source_dim = 0;
  MuData mu;
  SmoothnessVerdict smoothness;
  bool pass() const;
};

/// The drum on (P^m x P^l, O(1,0), O(0,1)) is P^{m+l+1}.
SegreCertificate segre_drum(std::size_t m, std::size_t l);

}  // namespace rooftop
