#include "rooftop/cli/commands.hpp"

#include "rooftop/cli/serialize.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace rooftop::cli {

namespace {

struct Outcome {
  Json parameters = Json::object();
  Json results = Json::object();
  bool pass = false;
  std::string reason;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path, "cannot read file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::size_t checked_size(long v, const char* name, long low, std::size_t cap) {
  if (v < low) throw InputError(std::string(name) + " must be at least " + std::to_string(low));
  if (static_cast<std::size_t>(v) > cap)
    throw InputError(std::string(name) + " must not exceed " + std::to_string(cap) + " (raise with --max-size)");
  return static_cast<std::size_t>(v);
}

LatticeVector parse_ray(const std::string& text) {
  LatticeVector r;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    Integer x;
    if (item.empty() || x.set_str(item, 10) != 0) throw FormatError("--ray", "expected comma-separated integers");
    r.push_back(x);
  }
  if (r.empty()) throw FormatError("--ray", "empty ray");
  return r;
}

struct AtiyahArgs {
  long m = 0, l = 0;
  std::size_t cap = 6;
  std::string emit;
};

void cmd_atiyah(Outcome& o, const AtiyahArgs& a) {
  o.parameters = {{"m", a.m}, {"l", a.l}, {"max_size", a.cap}};
  if (!a.emit.empty()) o.parameters["emit_fans"] = a.emit;
  std::size_t m = checked_size(a.m, "m", 1, a.cap), l = checked_size(a.l, "l", 1, a.cap);
  QuotientData q = quotient_data(WeightedAction::cobordism(m, l));
  FlipReport r = check_rooftop(atiyah_witness(q));
  o.results["quotient"] = quotient_summary_to_json(q);
  o.results["rooftop"] = flip_report_to_json(r);
  if (!a.emit.empty()) {
    std::filesystem::path dir(a.emit);
    std::filesystem::create_directories(dir);
    Json written = Json::array();
    for (auto [name, fan] : {std::pair{"blowup.json", &q.blowup_fan}, std::pair{"minus.json", &q.fan_minus},
                             std::pair{"plus.json", &q.fan_plus}}) {
      write_file(dir / name, dump(fan_to_json(*fan)));
      written.push_back((dir / name).string());
    }
    o.results["emitted_fans"] = written;
  }
  o.pass = r.pass();
  o.reason = failure_reason(r);
}

struct SegreArgs {
  long m = 0, l = 0;
  std::size_t cap = 6;
};

void cmd_segre(Outcome& o, const SegreArgs& a) {
  o.parameters = {{"m", a.m}, {"l", a.l}, {"max_size", a.cap}};
  SegreCertificate c = segre_drum(checked_size(a.m, "m", 0, a.cap), checked_size(a.l, "l", 0, a.cap));
  o.results = segre_to_json(c);
  o.pass = c.pass();
  o.reason = failure_reason(c);
}

struct QuadricArgs {
  long n = 0;
  long samples = 1000;
  std::uint64_t seed = 1;
  std::size_t cap = 8;
};

void cmd_quadric(Outcome& o, const QuadricArgs& a) {
  o.parameters = {{"n", a.n}, {"samples", a.samples}, {"seed", a.seed}, {"max_size", a.cap}};
  std::size_t n = checked_size(a.n, "n", 1, a.cap);
  if (a.samples < 1) throw InputError("samples must be at least 1");
  MukaiCertificate c = mukai_witness(n, static_cast<std::size_t>(a.samples), a.seed, a.cap);
  o.results = mukai_to_json(c);
  o.pass = c.pass();
  o.reason = failure_reason(c);
}

Json cone_rays(const Fan& fan, std::size_t k) {
  Json out = Json::array();
  for (const LatticeVector& r : fan.rays_of(fan.maximal_cones()[k])) out.push_back(to_json(r));
  return out;
}

Json cone_entry(const Fan& fan, std::size_t k) {
  const Cone& c = fan.cone(k);
  Json e;
  e["rays"] = fan.maximal_cones()[k];
  e["dim"] = c.dim();
  e["simplicial"] = c.is_simplicial();
  if (c.is_simplicial()) {
    Integer mult = 1;
    for (const Integer& f : invariant_factors(IntMatrix::from_rows(c.rays(), fan.rank()))) mult *= f;
    e["multiplicity"] = to_json(mult);
  }
  e["smooth"] = c.is_smooth();
  return e;
}

void cmd_fan_check(Outcome& o, const std::string& file) {
  o.parameters = {{"file", file}};
  Fan fan = parse_fan(read_file(file));
  Fan::Check check = fan.check();
  o.results["fan"] = fan_to_json(fan);
  o.results["valid"] = check.valid;
  o.results["smooth"] = fan.is_smooth();
  Json cones = Json::array(), rough = Json::array();
  for (std::size_t k = 0; k < fan.size(); ++k) {
    cones.push_back(cone_entry(fan, k));
    if (!fan.cone(k).is_smooth()) rough.push_back(cone_rays(fan, k));
  }
  o.results["cones"] = cones;
  o.results["non_smooth_cones"] = rough;
  o.pass = check.valid;
  o.reason = check.reason;
}

void cmd_fan_dual(Outcome& o, const std::string& file) {
  o.parameters = {{"file", file}};
  Fan fan = parse_fan(read_file(file));
  if (fan.size() != 1) throw InputError("dual needs a fan with exactly one maximal cone");
  const Cone& c = fan.cone(0);
  Cone d = c.dual();
  if (!d.is_pointed()) throw InputError("the dual cone has a lineality space: the cone is not full-dimensional");
  o.results["fan"] = fan_to_json(Fan::single_cone(d));
  o.results["self_dual"] = d == c;
  o.pass = true;
}

void cmd_fan_subdivide(Outcome& o, const std::string& file, const std::string& ray_text) {
  o.parameters = {{"file", file}, {"ray", ray_text}};
  Fan fan = parse_fan(read_file(file));
  LatticeVector r = parse_ray(ray_text);
  if (r.size() != fan.rank()) throw FormatError("--ray", "expected " + std::to_string(fan.rank()) + " entries");
  if (is_zero(r) || !is_primitive(r)) throw FormatError("--ray", "ray must be primitive and nonzero");
  if (!fan.contains(r)) throw InputError("ray " + to_string(r) + " is outside the support of the fan");
  Fan sub = star_subdivision(fan, r);
  o.results["ray"] = to_json(r);
  o.results["fan"] = fan_to_json(sub);
  o.results["smooth"] = sub.is_smooth();
  o.pass = true;
}

Json envelope(const std::string& command, const std::vector<std::string>& args, const Outcome& o,
              const std::string& verdict) {
  Json env;
  env["tool"] = "rooftop";
  env["version"] = ROOFTOP_VERSION;
  env["command"] = command;
  env["arguments"] = args;
  env["parameters"] = o.parameters;
  env["results"] = o.results;
  env["verdict"] = verdict;
  if (verdict != "pass") env["reason"] = o.reason;
  return env;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric rooftop flips, drums and fan utilities", "rooftop"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON report to this file instead of stdout");

  std::string command;
  std::function<void(Outcome&)> action;

  AtiyahArgs atiyah;
  auto* a = app.add_subcommand("atiyah", "Verify the rooftop conditions for the toric flip of P^m x P^l");
  a->add_option("--m", atiyah.m, "m >= 1")->required();
  a->add_option("--l", atiyah.l, "l >= 1")->required();
  a->add_option("--emit-fans", atiyah.emit, "Directory for blowup.json, minus.json, plus.json");
  a->add_option("--max-size", atiyah.cap, "Upper bound on m and l")->capture_default_str();
  a->callback([&] {
    command = "atiyah";
    action = [&](Outcome& o) { cmd_atiyah(o, atiyah); };
  });

  auto* drum = app.add_subcommand("drum", "Drum certificates");
  drum->require_subcommand(1);
  SegreArgs segre;
  auto* s = drum->add_subcommand("segre", "The drum on P^m x P^l with O(1,0), O(0,1)");
  s->add_option("--m", segre.m)->required();
  s->add_option("--l", segre.l)->required();
  s->add_option("--max-size", segre.cap, "Upper bound on m and l")->capture_default_str();
  s->callback([&] {
    command = "drum segre";
    action = [&](Outcome& o) { cmd_segre(o, segre); };
  });
  QuadricArgs quadric;
  auto* qd = drum->add_subcommand("quadric", "Orbit evidence for the quadric drum of P(T_{P^n})");
  qd->add_option("--n", quadric.n, "n >= 1")->required();
  qd->add_option("--samples", quadric.samples)->capture_default_str();
  qd->add_option("--seed", quadric.seed, "64-bit seed")->capture_default_str();
  qd->add_option("--max-size", quadric.cap, "Upper bound on n")->capture_default_str();
  qd->callback([&] {
    command = "drum quadric";
    action = [&](Outcome& o) { cmd_quadric(o, quadric); };
  });

  auto* fan = app.add_subcommand("fan", "Operations on fan JSON files");
  fan->require_subcommand(1);
  std::string fan_file, ray;
  auto* fd = fan->add_subcommand("dual", "Dual of a single-cone fan");
  fd->add_option("file", fan_file)->required();
  fd->callback([&] {
    command = "fan dual";
    action = [&](Outcome& o) { cmd_fan_dual(o, fan_file); };
  });
  auto* fs = fan->add_subcommand("subdivide", "Star subdivision at a ray");
  fs->add_option("file", fan_file)->required();
  fs->add_option("--ray", ray, "Comma-separated primitive vector")->required();
  fs->callback([&] {
    command = "fan subdivide";
    action = [&](Outcome& o) { cmd_fan_subdivide(o, fan_file, ray); };
  });
  auto* fc = fan->add_subcommand("check", "Validate a fan and report its cones");
  fc->add_option("file", fan_file)->required();
  fc->callback([&] {
    command = "fan check";
    action = [&](Outcome& o) { cmd_fan_check(o, fan_file); };
  });

  auto emit = [&](const Json& env) {
    if (out_path.empty()) {
      out << dump(env);
      return true;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      err << "rooftop: cannot write " << out_path << "\n";
      return false;
    }
    f << dump(env);
    return true;
  };

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_pass;
  } catch (const CLI::ParseError& e) {
    Outcome o;
    o.reason = e.what();
    err << "rooftop: " << e.what() << "\n";
    emit(envelope(command, args, o, "error"));
    return exit_usage;
  }

  Outcome o;
  bool usage = false;
  try {
    action(o);
  } catch (const FormatError& e) {
    usage = true;
    o.reason = e.what();
    o.results = {{"location", e.location()}};
  } catch (const std::invalid_argument& e) {
    usage = true;
    o.reason = e.what();
    o.results = Json::object();
  } catch (const std::exception& e) {
    o.pass = false;
    o.reason = std::string("internal error: ") + e.what();
  }
  if (!o.pass && !o.reason.empty()) err << "rooftop: " << o.reason << "\n";
  const std::string verdict = usage ? "error" : o.pass ? "pass" : "fail";
  if (!emit(envelope(command, args, o, verdict))) return exit_usage;
  if (usage) return exit_usage;
  return o.pass ? exit_pass : exit_fail;
}

}  // namespace rooftop::cli
