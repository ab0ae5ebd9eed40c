#include "rooftop/drum.hpp"

#include "rooftop/toric_git.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace rooftop {

namespace {

Integer binomial(std::size_t n, std::size_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void require_positive(long a, long b) {
  if (a < 1 || b < 1) throw InputError("line bundle degrees must be positive");
}

}  // namespace

DrumTriple DrumTriple::product(std::size_t m, std::size_t l, long degree_minus, long degree_plus) {
  require_positive(degree_minus, degree_plus);
  DrumTriple t;
  t.kind = DrumKind::product;
  t.m = m;
  t.l = l;
  t.degree_minus = degree_minus;
  t.degree_plus = degree_plus;
  t.dim_y = m + l;
  t.h0_minus = binomial(m + static_cast<std::size_t>(degree_minus), m);
  t.h0_plus = binomial(l + static_cast<std::size_t>(degree_plus), l);
  t.fiber_degree_minus = degree_plus;
  t.fiber_degree_plus = degree_minus;
  t.fiber_dim_minus = l;
  t.fiber_dim_plus = m;
  return t;
}

DrumTriple DrumTriple::flag(std::size_t n, long degree_minus, long degree_plus) {
  require_positive(degree_minus, degree_plus);
  if (n < 2) throw InputError("P(T_{P^n}) has two projective bundle structures only for n >= 2");
  DrumTriple t;
  t.kind = DrumKind::flag;
  t.m = n;
  t.l = n;
  t.degree_minus = degree_minus;
  t.degree_plus = degree_plus;
  t.dim_y = 2 * n - 1;
  t.h0_minus = binomial(n + static_cast<std::size_t>(degree_minus), n);
  t.h0_plus = binomial(n + static_cast<std::size_t>(degree_plus), n);
  // Fibers of either projection are hyperplanes P^{n-1}, and the other
  // bundle restricts to O(degree) on them.
  t.fiber_degree_minus = degree_plus;
  t.fiber_degree_plus = degree_minus;
  t.fiber_dim_minus = n - 1;
  t.fiber_dim_plus = n - 1;
  return t;
}

DrumTriple DrumTriple::swapped() const {
  return kind == DrumKind::product ? product(l, m, degree_plus, degree_minus) : flag(m, degree_plus, degree_minus);
}

std::string DrumTriple::description() const {
  std::string y = kind == DrumKind::product ? "P^" + std::to_string(m) + " x P^" + std::to_string(l)
                                            : "P(T_{P^" + std::to_string(m) + "})";
  return "(" + y + ", O(" + std::to_string(degree_minus) + ",0), O(0," + std::to_string(degree_plus) + "))";
}

Integer ambient_dimension(const DrumTriple& t) { return t.h0_minus + t.h0_plus; }

std::size_t drum_dimension(const DrumTriple& t) { return t.dim_y + 1; }

namespace {

// Nef cone of a smooth complete toric variety as a cone of torus-invariant
// divisors (containing the principal ones as lineality space).
Cone toric_nef_cone(const Fan& fan) {
  const std::size_t n = fan.rays().size();
  std::vector<LatticeVector> inequalities;
  for (const RaySet& sigma : fan.maximal_cones()) {
    IntMatrix basis = IntMatrix::from_columns(fan.rays_of(sigma), fan.rank());
    for (std::size_t rho = 0; rho < n; ++rho) {
      if (std::binary_search(sigma.begin(), sigma.end(), rho)) continue;
      // The local linear function agreeing with the divisor on sigma must not
      // exceed it on rho.
      RationalVector lambda = *solve(basis, fan.rays()[rho]);
      RationalVector ineq(n, Rational(0));
      ineq[rho] = 1;
      for (std::size_t k = 0; k < sigma.size(); ++k) ineq[sigma[k]] -= lambda[k];
      inequalities.push_back(primitive_multiple(ineq));
    }
  }
  return Cone::from_inequalities(n, inequalities);
}

Cone toric_span_with_principal(const Fan& fan, const std::vector<LatticeVector>& divisors) {
  const std::size_t n = fan.rays().size();
  std::vector<LatticeVector> gens = divisors;
  for (std::size_t i = 0; i < fan.rank(); ++i) {
    LatticeVector d(n);
    for (std::size_t rho = 0; rho < n; ++rho) d[rho] = fan.rays()[rho][i];
    gens.push_back(d);
    gens.push_back(-d);
  }
  return Cone::from_generators(n, gens);
}

// Divisor k * D_rho where rho is the ray e_coordinate of the product fan.
LatticeVector pulled_back_hyperplane(const Fan& fan, std::size_t coordinate, long k) {
  LatticeVector d = zero_vector(fan.rays().size());
  auto rho = fan.ray_index(unit_vector(fan.rank(), coordinate));
  if (rho) d[*rho] = k;
  return d;
}

SmoothnessVerdict product_smoothness(const DrumTriple& t) {
  SmoothnessVerdict v;
  Fan pm = projective_space_fan(t.m);
  Fan pl = projective_space_fan(t.l);
  Fan y = product_fan(pm, pl);

  LatticeVector lm = t.m > 0 ? pulled_back_hyperplane(y, 0, t.degree_minus) : zero_vector(y.rays().size());
  LatticeVector lp = t.l > 0 ? pulled_back_hyperplane(y, t.m, t.degree_plus) : zero_vector(y.rays().size());
  v.nef_cone = toric_nef_cone(y) == toric_span_with_principal(y, {lm, lp});
  if (!v.nef_cone) v.reason = "Nef(Y) differs from the cone spanned by L- and L+";

  IntMatrix first(t.m, t.m + t.l), second(t.l, t.m + t.l);
  for (std::size_t i = 0; i < t.m; ++i) first(i, i) = 1;
  for (std::size_t i = 0; i < t.l; ++i) second(i, t.m + i) = 1;
  FibrationCheck fm = check_projective_fibration(y, pm, first);
  FibrationCheck fp = check_projective_fibration(y, pl, second);
  v.projective_bundles = fm.holds && fp.holds;
  if (!v.projective_bundles && v.reason.empty()) v.reason = "p-/+ fibration: " + (fm.holds ? fp.reason : fm.reason);
  return v;
}

SmoothnessVerdict flag_smoothness(const DrumTriple& t) {
  SmoothnessVerdict v;
  const std::size_t n = t.m;
  // Lines in the fibers of p- and p+. Columns: degrees of p-^*O(1), p+^*O(1).
  const std::vector<LatticeVector> curves{make_vector({0, 1}), make_vector({1, 0})};
  Cone nef = Cone::from_inequalities(2, curves);
  Cone spanned = Cone::from_generators(2, {make_vector({t.degree_minus, 0}), make_vector({0, t.degree_plus})});
  v.nef_cone = nef == spanned;
  if (!v.nef_cone) v.reason = "Nef(Y) differs from the cone spanned by L- and L+";

  // Over a point p the fiber of p- is {H : H(p) = 0}, a linear P^{n-1}; the
  // same holds for p+ with the roles exchanged. Sample the coordinate points
  // and the all-ones point.
  std::vector<LatticeVector> points;
  for (std::size_t i = 0; i <= n; ++i) points.push_back(unit_vector(n + 1, i));
  points.push_back(LatticeVector(n + 1, Integer(1)));
  v.projective_bundles = std::all_of(points.begin(), points.end(), [&](const LatticeVector& p) {
    return integer_kernel(IntMatrix::from_rows(std::vector<LatticeVector>{p}, n + 1)).size() == n;
  });
  if (v.projective_bundles) v.projective_bundles = t.fiber_dim_minus + n == t.dim_y && t.fiber_dim_plus + n == t.dim_y;
  if (!v.projective_bundles && v.reason.empty()) v.reason = "incidence fibers are not hyperplanes";
  return v;
}

}  // namespace

SmoothnessVerdict smoothness_check(const DrumTriple& t) {
  SmoothnessVerdict v = t.kind == DrumKind::product ? product_smoothness(t) : flag_smoothness(t);
  // A point fiber carries no degree condition.
  bool minus_ok = t.fiber_dim_minus == 0 || t.fiber_degree_minus == 1;
  bool plus_ok = t.fiber_dim_plus == 0 || t.fiber_degree_plus == 1;
  v.fiber_degrees = minus_ok && plus_ok;
  if (!v.fiber_degrees && v.reason.empty())
    v.reason = "fiber degree " + std::to_string(minus_ok ? t.fiber_degree_plus : t.fiber_degree_minus) + " instead of 1";
  return v;
}

MuData mu_data(const std::vector<long>& coordinate_weights) {
  std::set<long> distinct(coordinate_weights.begin(), coordinate_weights.end());
  if (distinct.size() < 2) throw InputError("trivial action: a single weight");
  // mu of the component of weight w is top - w.
  MuData out;
  const long top = *distinct.rbegin();
  out.mu_sink = 0;
  out.mu_source = top - *distinct.begin();
  out.bandwidth = out.mu_source - out.mu_sink;
  return out;
}

std::vector<long> drum_weights(const DrumTriple& t) {
  std::vector<long> w(t.h0_minus.get_ui(), 1);
  w.insert(w.end(), t.h0_plus.get_ui(), 0);
  return w;
}

MuData bandwidth_of_drum(const DrumTriple& t) { return mu_data(drum_weights(t)); }

Integer isotropy_order(const std::vector<long>& coordinate_weights, const RationalVector& point) {
  if (point.size() != coordinate_weights.size()) throw DimensionError("point and weights differ in length");
  Integer g = 0;
  std::optional<long> first;
  for (std::size_t i = 0; i < point.size(); ++i) {
    if (point[i] == 0) continue;
    if (!first) {
      first = coordinate_weights[i];
      continue;
    }
    Integer d = coordinate_weights[i] - *first;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
  }
  return g;
}

bool is_equalized(const std::vector<long>& coordinate_weights) {
  std::set<long> distinct(coordinate_weights.begin(), coordinate_weights.end());
  for (long a : distinct)
    for (long b : distinct)
      if (a < b && b - a != 1) return false;
  return true;
}

bool SegreCertificate::pass() const {
  return fills_ambient && ambient_coordinates == Integer(static_cast<unsigned long>(m + l + 2)) &&
         drum_dimension == projective_dimension && sink_dim == m && source_dim == l && mu.bandwidth == 1 &&
         smoothness.smooth();
}

SegreCertificate segre_drum(std::size_t m, std::size_t l) {
  DrumTriple t = DrumTriple::product(m, l);
  SegreCertificate c;
  c.m = m;
  c.l = l;
  c.ambient_coordinates = ambient_dimension(t);
  c.drum_dimension = drum_dimension(t);
  c.projective_dimension = m + l + 1;
  // The drum is closed of dimension equal to that of its ambient space.
  c.fills_ambient = c.ambient_coordinates == Integer(static_cast<unsigned long>(c.drum_dimension + 1));
  c.weights = drum_weights(t);
  const long top = *std::max_element(c.weights.begin(), c.weights.end());
  const long bottom = *std::min_element(c.weights.begin(), c.weights.end());
  c.sink_dim = static_cast<std::size_t>(std::count(c.weights.begin(), c.weights.end(), top)) - 1;
  c.source_dim = static_cast<std::size_t>(std::count(c.weights.begin(), c.weights.end(), bottom)) - 1;
  c.mu = mu_data(c.weights);
  c.smoothness = smoothness_check(t);
  return c;
}

}  // namespace rooftop
