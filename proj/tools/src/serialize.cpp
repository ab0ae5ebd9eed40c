#include "rooftop/cli/serialize.hpp"

namespace rooftop::cli {

Json to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Json to_json(const Rational& x) {
  if (x.get_den() == 1) return to_json(Integer(x.get_num()));
  return x.get_str();
}

Json to_json(const LatticeVector& v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const Rational& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

namespace {

Json vectors(const std::vector<LatticeVector>& vs) {
  Json out = Json::array();
  for (const LatticeVector& v : vs) out.push_back(to_json(v));
  return out;
}

Integer integer_at(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) == 0) return x;
  }
  throw FormatError(where, "expected an integer");
}

std::size_t index_at(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || (!j.is_number_unsigned() && j.get<long>() < 0))
    throw FormatError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

const Json& member(const Json& j, const char* key) {
  if (!j.contains(key)) throw FormatError("/" + std::string(key), "missing");
  return j.at(key);
}

}  // namespace

Json fan_to_json(const Fan& fan) {
  Json out;
  out["lattice_rank"] = fan.rank();
  out["rays"] = vectors(fan.rays());
  Json cones = Json::array();
  for (const RaySet& c : fan.maximal_cones()) cones.push_back(c);
  out["maximal_cones"] = cones;
  return out;
}

Fan fan_from_json(const Json& j) {
  if (!j.is_object()) throw FormatError("/", "a fan is a JSON object");
  const std::size_t rank = index_at(member(j, "lattice_rank"), "/lattice_rank");
  const Json& rays = member(j, "rays");
  if (!rays.is_array()) throw FormatError("/rays", "expected an array");
  std::vector<LatticeVector> parsed;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const std::string where = "/rays/" + std::to_string(i);
    if (!rays[i].is_array() || rays[i].size() != rank)
      throw FormatError(where, "expected an array of " + std::to_string(rank) + " integers");
    LatticeVector r;
    for (std::size_t k = 0; k < rank; ++k) r.push_back(integer_at(rays[i][k], where + "/" + std::to_string(k)));
    if (is_zero(r)) throw FormatError(where, "zero ray");
    if (!is_primitive(r)) throw FormatError(where, "ray is not primitive");
    parsed.push_back(std::move(r));
  }
  const Json& cones = member(j, "maximal_cones");
  if (!cones.is_array()) throw FormatError("/maximal_cones", "expected an array");
  std::vector<RaySet> sets;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const std::string where = "/maximal_cones/" + std::to_string(c);
    if (!cones[c].is_array()) throw FormatError(where, "expected an array of ray indices");
    RaySet s;
    for (std::size_t k = 0; k < cones[c].size(); ++k) {
      std::size_t idx = index_at(cones[c][k], where + "/" + std::to_string(k));
      if (idx >= parsed.size()) throw FormatError(where + "/" + std::to_string(k), "ray index out of range");
      s.push_back(idx);
    }
    sets.push_back(std::move(s));
  }
  try {
    return Fan(rank, std::move(parsed), std::move(sets));
  } catch (const std::invalid_argument& e) {
    throw FormatError("/maximal_cones", e.what());
  }
}

Fan parse_fan(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  return fan_from_json(j);
}

namespace {

Json exceptional_side(const ExceptionalSide& s) {
  Json out;
  out["cone_rays"] = vectors(s.cone_rays);
  out["cone_dim"] = s.cone_dim;
  out["locus_dim"] = s.locus_dim;
  out["codimension"] = s.codimension;
  out["identification"] = to_json(s.identification);
  return out;
}

Json bundle_side(const BundleSide& b) {
  Json out;
  out["base_dim"] = b.base_dim;
  out["fiber_dim"] = b.fiber_dim;
  return out;
}

void add_status(Json& out, bool pass, const std::string& reason) {
  out["pass"] = pass;
  if (!pass) out["reason"] = reason;
}

Json fan_summary(const Fan& fan) {
  Json out;
  out["rays"] = fan.rays().size();
  out["maximal_cones"] = fan.size();
  out["smooth"] = fan.is_smooth();
  return out;
}

}  // namespace

Json flip_report_to_json(const FlipReport& r) {
  Json out;
  out["model"] = r.model_name;

  Json c1;
  add_status(c1, r.condition1.pass, r.condition1.reason);
  c1["minus"] = exceptional_side(r.condition1.minus);
  c1["plus"] = exceptional_side(r.condition1.plus);
  c1["z0_dim"] = r.condition1.z0_dim;
  out["condition1"] = c1;

  Json c2;
  add_status(c2, r.condition2.pass, r.condition2.reason);
  c2["ray"] = to_json(r.condition2.ray);
  c2["divisor_codim"] = r.condition2.divisor_codim;
  c2["minus"] = bundle_side(r.condition2.minus);
  c2["plus"] = bundle_side(r.condition2.plus);
  out["condition2"] = c2;

  Json c3;
  add_status(c3, r.condition3.pass, r.condition3.reason);
  c3["fiber_cones"] = r.condition3.fiber_cones;
  c3["phi"] = to_json(r.condition3.phi);
  c3["phi_minus"] = to_json(r.condition3.phi_minus);
  c3["phi_plus"] = to_json(r.condition3.phi_plus);
  out["condition3"] = c3;

  Json fact;
  for (auto [name, f] : {std::pair{"minus", &r.factorization_minus}, std::pair{"plus", &r.factorization_plus}}) {
    Json side;
    side["holds"] = f->holds;
    if (!f->holds) side["reason"] = f->reason;
    fact[name] = side;
  }
  out["factorization"] = fact;
  return out;
}

Json quotient_summary_to_json(const QuotientData& q) {
  Json out;
  out["lattice_rank"] = q.quotient_lattice_rank;
  out["git_cone_rays"] = vectors(q.git_cone.rays());
  out["hilbert_basis_size"] = q.invariants.hilbert_basis.size();
  out["invariant_monomials"] = vectors(q.invariants.monomials);
  out["blowup_ray"] = to_json(q.blowup_ray);
  Json fans;
  fans["blowup"] = fan_summary(q.blowup_fan);
  fans["minus"] = fan_summary(q.fan_minus);
  fans["plus"] = fan_summary(q.fan_plus);
  out["fans"] = fans;
  return out;
}

Json segre_to_json(const SegreCertificate& c) {
  Json out;
  out["m"] = c.m;
  out["l"] = c.l;
  out["ambient_coordinates"] = to_json(c.ambient_coordinates);
  out["projective_dimension"] = c.projective_dimension;
  out["drum_dimension"] = c.drum_dimension;
  out["fills_ambient"] = c.fills_ambient;
  out["weights"] = c.weights;
  out["sink_dim"] = c.sink_dim;
  out["source_dim"] = c.source_dim;
  out["mu"] = {{"sink", c.mu.mu_sink}, {"source", c.mu.mu_source}, {"bandwidth", c.mu.bandwidth}};
  Json s;
  s["nef_cone"] = c.smoothness.nef_cone;
  s["projective_bundles"] = c.smoothness.projective_bundles;
  s["fiber_degrees"] = c.smoothness.fiber_degrees;
  s["smooth"] = c.smoothness.smooth();
  if (!c.smoothness.smooth()) s["reason"] = c.smoothness.reason;
  out["smoothness"] = s;
  return out;
}

Json mukai_to_json(const MukaiCertificate& c) {
  Json out;
  out["n"] = c.n;
  out["samples"] = c.samples;
  out["seed"] = c.seed;
  out["fixed_locus"] = {{"exact", c.fixed_locus.exact}, {"support_patterns", c.fixed_locus.patterns}};
  out["mu"] = {{"sink", c.mu.mu_sink}, {"source", c.mu.mu_source}, {"bandwidth", c.mu.bandwidth}};
  out["incident_pairs"] = c.incident_pairs;
  out["limits_fixed"] = c.limits_fixed;
  out["pairing_identity"] = c.pairing_identity;
  out["both_sides"] = c.both_sides;
  out["sink_cone_minus_only"] = c.sink_cone_minus_only;
  out["homothety_commutes"] = c.homothety_commutes;
  out["dim_y_minus"] = c.dim_y_minus;
  out["dim_y_plus"] = c.dim_y_plus;
  out["quotient_dim"] = c.quotient_dim;
  out["codim_minus"] = c.codim_minus;
  out["codim_plus"] = c.codim_plus;
  out["small"] = c.small;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

std::string failure_reason(const FlipReport& r) {
  if (!r.condition1.pass) return "condition 1: " + r.condition1.reason;
  if (!r.condition2.pass) return "condition 2: " + r.condition2.reason;
  if (!r.condition3.pass) return "condition 3: " + r.condition3.reason;
  if (!r.factorization_minus.holds) return "factorization minus: " + r.factorization_minus.reason;
  if (!r.factorization_plus.holds) return "factorization plus: " + r.factorization_plus.reason;
  return "";
}

std::string failure_reason(const SegreCertificate& c) {
  if (c.pass()) return "";
  if (!c.smoothness.smooth()) return c.smoothness.reason;
  if (!c.fills_ambient) return "drum does not fill its ambient projective space";
  return "dimension or weight bookkeeping mismatch";
}

std::string failure_reason(const MukaiCertificate& c) {
  if (c.pass()) return "";
  if (!c.fixed_locus.exact) return "fixed locus differs from Y- and Y+";
  if (c.mu.bandwidth != 1) return "bandwidth " + std::to_string(c.mu.bandwidth);
  if (c.incident_pairs != c.samples) return "a limit pair is not incident";
  if (!c.limits_fixed) return "a limit is not a fixed point of the quadric";
  if (!c.sink_cone_minus_only) return "cone over Y- is not in B- only";
  return "orbit evidence failed";
}

}  // namespace rooftop::cli
