#pragma once

// Verifying the three rooftop flip conditions on toric data.

#include "rooftop/toric_git.hpp"

#include <string>

namespace rooftop {

/// Fans and maps of the diagram
///
///        W
///   b-  / \  b+
///     W-   W+
///   s-  \ /  s+
///        W0
///
/// together with the model fan of Lambda and its projections p- and p+ onto
/// the fans of Lambda- and Lambda+.
struct RooftopWitness {
  Fan w, w_minus, w_plus;
  Cone w0;
  FanMorphism b_minus, b_plus, s_minus, s_plus, beta;
  Fan model_fan;
  FanMorphism p_minus, p_plus;
  std::string model_name;
};

struct ExceptionalSide {
  std::vector<LatticeVector> cone_rays;  ///< rays of the minimal exceptional cone
  std::size_t cone_dim = 0;
  std::size_t locus_dim = 0;             ///< dimension of its orbit closure
  std::size_t codimension = 0;
  IntMatrix identification;              ///< star of the cone onto the fan of Lambda-/+
};

struct SmallCondition {
  bool pass = false;
  std::string reason;
  ExceptionalSide minus, plus;
  std::size_t z0_dim = 0;
};

struct BundleSide {
  std::size_t base_dim = 0;
  std::size_t fiber_dim = 0;
};

struct DivisorCondition {
  bool pass = false;
  std::string reason;
  LatticeVector ray;
  std::size_t divisor_codim = 0;
  BundleSide minus, plus;
};

struct FiberCondition {
  bool pass = false;
  std::string reason;
  std::size_t fiber_cones = 0;  ///< cones of W over the fixed point of W0
  IntMatrix phi;                ///< star of the exceptional ray onto the model fan
  IntMatrix phi_minus, phi_plus;
};

struct FlipReport {
  std::string model_name;
  SmallCondition condition1;
  DivisorCondition condition2;
  FiberCondition condition3;
  FactorizationCheck factorization_minus, factorization_plus;
  bool pass() const {
    return condition1.pass && condition2.pass && condition3.pass && factorization_minus.holds &&
           factorization_plus.holds;
  }
};

/// s-/+ contract the orbit closures of single cones, of codimension >= 2, onto
/// the fixed point of W0, and those closures are the toric varieties Lambda-/+.
SmallCondition check_condition_small(const RooftopWitness& w);
/// b-/+ contract the same divisor (a ray of W) onto Z-/+ as projective bundles.
DivisorCondition check_condition_divisor(const RooftopWitness& w);
/// The fiber of beta over the fixed point is the divisor, its fan is the model
/// fan, and b-/+ restricted to it become p-/+.
FiberCondition check_condition_fiber(const RooftopWitness& w);
FlipReport check_rooftop(const RooftopWitness& w);

/// Fan of P^m x P^l with its two projections.
struct ProductModel {
  Fan fan;
  FanMorphism p_minus, p_plus;
  std::string name;
};
ProductModel product_model(std::size_t m, std::size_t l);

RooftopWitness atiyah_witness(std::size_t m, std::size_t l);
RooftopWitness atiyah_witness(const QuotientData& q);

/// Throws InputError unless 1 <= m, l <= cap.
FlipReport verify_atiyah(std::size_t m, std::size_t l, std::size_t cap = 6);

}  // namespace rooftop
