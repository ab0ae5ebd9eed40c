#include "rooftop/quadric.hpp"

#include <algorithm>

namespace rooftop {

ProjPoint::ProjPoint(RationalVector coords) : coords_(std::move(coords)) {
  auto lead = std::find_if(coords_.begin(), coords_.end(), [](const Rational& c) { return c != 0; });
  if (lead == coords_.end()) throw InputError("the zero vector is not a point of projective space");
  Rational s = *lead;
  for (Rational& c : coords_) c /= s;
}

ProjPoint ProjPoint::from_integers(std::initializer_list<long> coords) {
  RationalVector v;
  for (long c : coords) v.emplace_back(c);
  return ProjPoint(std::move(v));
}

std::string ProjPoint::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) out += (i ? ":" : "") + coords_[i].get_str();
  return out + "]";
}

QuadricModel::QuadricModel(std::size_t n) : n_(n) {
  if (n < 1) throw InputError("the quadric needs n >= 1");
}

std::vector<long> QuadricModel::projective_weights() const {
  std::vector<long> w(n_ + 1, 1);
  w.insert(w.end(), n_ + 1, 0);
  return w;
}

WeightedAction QuadricModel::cone_action() const { return WeightedAction::cobordism(n_, n_); }

Rational QuadricModel::form(const RationalVector& v) const {
  if (v.size() != coordinate_count()) throw DimensionError("vector has the wrong number of coordinates");
  Rational s = 0;
  for (std::size_t i = 0; i <= n_; ++i) s += v[i] * v[n_ + 1 + i];
  return s;
}

RationalVector QuadricModel::act(const Rational& t, const RationalVector& v) const {
  if (v.size() != coordinate_count()) throw DimensionError("vector has the wrong number of coordinates");
  RationalVector out = v;
  for (std::size_t i = 0; i <= n_; ++i) out[i] *= t;
  return out;
}

namespace {

void check_size(const QuadricModel& q, const ProjPoint& p) {
  if (p.size() != q.coordinate_count()) throw DimensionError("point has the wrong number of coordinates");
}

bool block_zero(const RationalVector& v, std::size_t from, std::size_t count) {
  return std::all_of(v.begin() + from, v.begin() + from + count, [](const Rational& c) { return c == 0; });
}

RationalVector masked(const RationalVector& v, std::size_t from, std::size_t count) {
  RationalVector out(v.size(), Rational(0));
  std::copy(v.begin() + from, v.begin() + from + count, out.begin() + from);
  return out;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

}  // namespace

bool on_quadric(const QuadricModel& q, const ProjPoint& p) {
  check_size(q, p);
  return q.form(p.coords()) == 0;
}

bool in_sink(const QuadricModel& q, const ProjPoint& p) {
  check_size(q, p);
  return block_zero(p.coords(), q.n() + 1, q.n() + 1);
}

bool in_source(const QuadricModel& q, const ProjPoint& p) {
  check_size(q, p);
  return block_zero(p.coords(), 0, q.n() + 1);
}

bool is_fixed(const QuadricModel& q, const ProjPoint& p) { return in_sink(q, p) || in_source(q, p); }

BBLimits bb_limits(const QuadricModel& q, const ProjPoint& p) {
  check_size(q, p);
  if (is_fixed(q, p)) return {p, p, true};
  const std::size_t b = q.n() + 1;
  return {ProjPoint(masked(p.coords(), 0, b)), ProjPoint(masked(p.coords(), b, b)), false};
}

IncidencePairing incidence_pairing(const QuadricModel& q, const ProjPoint& p) {
  check_size(q, p);
  if (is_fixed(q, p)) throw InputError("a fixed point has a single limit");
  const std::size_t b = q.n() + 1;
  IncidencePairing out;
  out.point.assign(p.coords().begin(), p.coords().begin() + b);
  out.functional.assign(p.coords().begin() + b, p.coords().end());
  out.value = 0;
  for (std::size_t i = 0; i < b; ++i) out.value += out.point[i] * out.functional[i];
  return out;
}

bool incidence_check(const QuadricModel& q, const ProjPoint& p) { return incidence_pairing(q, p).value == 0; }

CobordismMembership cone_membership(const QuadricModel& q, const RationalVector& v) {
  if (q.form(v) != 0) throw InputError("vector is not on the affine cone over the quadric");
  return cobordism_membership(q.cone_action(), v);
}

RationalVector random_rational_vector(std::size_t size, std::mt19937_64& rng) {
  RationalVector v(size);
  for (Rational& c : v) c = random_rational(rng);
  return v;
}

RationalVector random_quadric_point(const QuadricModel& q, std::mt19937_64& rng) {
  const std::size_t b = q.n() + 1;
  std::uniform_int_distribution<std::size_t> pick(0, q.n());
  for (;;) {
    RationalVector v = random_rational_vector(q.coordinate_count(), rng);
    std::size_t j = pick(rng);
    if (v[j] == 0) continue;
    Rational rest = q.form(v) - v[j] * v[b + j];
    v[b + j] = -rest / v[j];
    if (!block_zero(v, 0, b) && !block_zero(v, b, b)) return v;
  }
}

FixedLocusCheck fixed_locus_check(const QuadricModel& q) {
  FixedLocusCheck out;
  const std::size_t size = q.coordinate_count();
  const std::size_t b = q.n() + 1;
  const unsigned long x_mask = (1UL << b) - 1;
  out.exact = true;
  for (unsigned long s = 1; s < (1UL << size); ++s) {
    RationalVector v(size, Rational(0));
    for (std::size_t i = 0; i < size; ++i)
      if (s >> i & 1) v[i] = Rational(static_cast<long>(i + 1));
    ProjPoint p(v);
    bool moved = !(ProjPoint(q.act(Rational(2), v)) == p);
    bool single_block = (s & x_mask) == 0 || (s & ~x_mask) == 0;
    if (moved == single_block) out.exact = false;
    ++out.patterns;
  }
  return out;
}

bool MukaiCertificate::pass() const {
  return fixed_locus.exact && mu.bandwidth == 1 && incident_pairs == samples && limits_fixed && pairing_identity &&
         both_sides && sink_cone_minus_only && homothety_commutes && dim_y_minus == n && dim_y_plus == n &&
         quotient_dim == 2 * n && codim_minus == n && codim_plus == n;
}

MukaiCertificate mukai_witness(std::size_t n, std::size_t samples, std::uint64_t seed, std::size_t cap) {
  if (n < 1) throw InputError("n must be at least 1");
  if (n > cap) throw InputError("n must not exceed " + std::to_string(cap));
  if (2 * n + 2 >= 8 * sizeof(unsigned long)) throw InputError("n too large for the support enumeration");
  if (samples < 1) throw InputError("at least one sample is needed");
  QuadricModel q(n);
  const std::size_t b = n + 1;
  MukaiCertificate c;
  c.n = n;
  c.samples = samples;
  c.seed = seed;
  c.fixed_locus = fixed_locus_check(q);
  c.mu = mu_data(q.projective_weights());

  const std::vector<long> w = q.projective_weights();
  c.dim_y_minus = static_cast<std::size_t>(std::count(w.begin(), w.end(), 1)) - 1;
  c.dim_y_plus = static_cast<std::size_t>(std::count(w.begin(), w.end(), 0)) - 1;
  // Affine cone over Q has dimension 2n+1; C* acts with finite stabilizers on B-/+.
  c.quotient_dim = 2 * n;
  // Unstable orbits for B+ are the cone over Y-: an (n+1)-dimensional cone mod C*.
  c.codim_minus = c.quotient_dim - c.dim_y_minus;
  c.codim_plus = c.quotient_dim - c.dim_y_plus;
  c.small = c.codim_minus >= 2 && c.codim_plus >= 2;
  if (!c.small) c.note = "n = 1: Y-/+ are divisors in the quotients, so the birational map is not small";

  std::mt19937_64 rng(seed);
  c.limits_fixed = c.pairing_identity = c.both_sides = c.homothety_commutes = true;
  for (std::size_t k = 0; k < samples; ++k) {
    RationalVector v = random_quadric_point(q, rng);
    ProjPoint p(v);
    BBLimits lim = bb_limits(q, p);
    bool good = !lim.fixed && in_sink(q, lim.sink) && in_source(q, lim.source) && on_quadric(q, lim.sink) &&
                on_quadric(q, lim.source) && is_fixed(q, lim.sink) && is_fixed(q, lim.source);
    c.limits_fixed = c.limits_fixed && good;
    if (incidence_check(q, p)) ++c.incident_pairs;

    CobordismMembership m = cone_membership(q, v);
    c.both_sides = c.both_sides && m.in_b_minus && m.in_b_plus;

    // Off the quadric the pairing of the limits is q itself, hence nonzero.
    RationalVector u = random_rational_vector(q.coordinate_count(), rng);
    if (!block_zero(u, 0, b) && !block_zero(u, b, b)) {
      ProjPoint pu(u);
      c.pairing_identity = c.pairing_identity && incidence_pairing(q, pu).value == q.form(pu.coords());
    }

    // The cone action t^{+1} x, t^{-1} y is the projective action of t^2
    // rescaled by t^{-1}, and both commute with homotheties.
    Rational t = random_rational(rng), s = random_rational(rng);
    if (t == 0 || s == 0) continue;
    RationalVector lifted = v;
    for (std::size_t i = 0; i < v.size(); ++i) lifted[i] *= i < b ? t : 1 / t;
    RationalVector proj = q.act(t * t, v);
    for (Rational& x : proj) x /= t;
    RationalVector sv = v;
    for (Rational& x : sv) x *= s;
    RationalVector act_sv = q.act(t, sv), s_act_v = q.act(t, v);
    for (Rational& x : s_act_v) x *= s;
    c.homothety_commutes = c.homothety_commutes && lifted == proj && act_sv == s_act_v;
  }

  RationalVector sink_point(q.coordinate_count(), Rational(0));
  for (std::size_t i = 0; i < b; ++i) sink_point[i] = Rational(static_cast<long>(i + 1));
  CobordismMembership sm = cone_membership(q, sink_point);
  c.sink_cone_minus_only = sm.in_b_minus && !sm.in_b_plus;
  return c;
}

}  // namespace rooftop
