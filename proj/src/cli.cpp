#include "nharmonic/cli.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "nharmonic/bvp.hpp"
#include "nharmonic/energy.hpp"
#include "nharmonic/errors.hpp"
#include "nharmonic/lagrangian.hpp"
#include "nharmonic/minimizer.hpp"
#include "nharmonic/nitsche.hpp"
#include "nharmonic/principal.hpp"
#include "nharmonic/profile.hpp"

namespace nharm::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr int kSchema = 1;

struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- output

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", x);
}

// Numbers that may be infinite travel as strings.
Json num(double x) {
  if (std::isfinite(x)) return x;
  return format_number(x);
}

Json opt_num(const std::optional<double>& x) { return x ? num(*x) : Json(nullptr); }

void write_json(std::ostream& os, const Json& j, int indent) {
  const std::string pad(indent + 2, ' ');
  const std::string close(indent, ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { os << "{}"; return; }
      os << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(key).dump() << ": ";
        write_json(os, value, indent + 2);
      }
      os << '\n' << close << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { os << "[]"; return; }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write_json(os, j[i], indent + 2);
      }
      os << '\n' << close << ']';
      return;
    }
    case Json::value_t::number_float:
      os << format_number(j.get<double>());
      return;
    default:
      os << j.dump();
  }
}

void emit_json(std::ostream& os, const Json& j) {
  write_json(os, j, 0);
  os << '\n';
}

class Csv {
 public:
  explicit Csv(std::ostream& os) : os_(os) {}

  void header(std::initializer_list<std::string_view> cols) { row_strings(cols); }

  template <class... T>
  void row(const T&... cells) {
    std::vector<std::string> v{cell(cells)...};
    row_strings(v);
  }

 private:
  static std::string cell(double x) { return format_number(x); }
  static std::string cell(int x) { return std::to_string(x); }
  static std::string cell(bool x) { return x ? "true" : "false"; }
  static std::string cell(std::string_view s) { return std::string(s); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }
  static std::string cell(const std::optional<double>& x) { return x ? format_number(*x) : ""; }

  template <class C>
  void row_strings(const C& cols) {
    bool first = true;
    for (const auto& c : cols) {
      if (!first) os_ << ',';
      first = false;
      os_ << c;
    }
    os_ << '\n';
  }

  std::ostream& os_;
};

// ---------------------------------------------------------------- input

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) {
    throw ArgumentError("not a number: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::string_view rest(text);
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_double(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

Annulus parse_annulus(const std::string& text, std::string_view flag) {
  const auto v = parse_list(text);
  if (v.size() != 2) {
    throw ArgumentError(std::string(flag) + " expects inner,outer");
  }
  return Annulus(v[0], v[1]);
}

double json_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ArgumentError("expected a number in the plan, got " + j.dump());
}

// ---------------------------------------------------------------- serializers

Json to_json(const Annulus& a) { return {{"inner", num(a.inner())}, {"outer", num(a.outer())}}; }

Json to_json(const Modulus& m) { return {{"value", num(m.value)}, {"log_ratio", num(m.log_ratio)}}; }

Json to_json(const RadialMap& m) {
  Json j;
  j["kind"] = to_string(m.kind);
  j["lambda"] = num(m.lambda);
  j["k"] = num(m.k);
  j["domain"] = to_json(m.domain);
  j["hammer_to"] = opt_num(m.hammer_to);
  j["hammer_zone"] = m.hammer_zone ? to_json(*m.hammer_zone) : Json(nullptr);
  return j;
}

RadialMap map_from_json(const Json& j) {
  RadialMap m;
  m.kind = parse_principal_kind(j.at("kind").get<std::string>());
  m.lambda = json_number(j.at("lambda"));
  m.k = json_number(j.at("k"));
  m.domain = Annulus(json_number(j.at("domain").at("inner")), json_number(j.at("domain").at("outer")));
  if (j.contains("hammer_to") && !j["hammer_to"].is_null()) {
    m.hammer_to = json_number(j["hammer_to"]);
    const Json& z = j.at("hammer_zone");
    m.hammer_zone = Annulus(json_number(z.at("inner")), json_number(z.at("outer")));
  }
  return m;
}

Json to_json(const EnergyReport& e) {
  return {{"value", num(e.value)},
          {"functional", to_string(e.functional)},
          {"formula_id", e.formula_id},
          {"quad_error", num(e.quad_error)},
          {"mod_source", to_json(e.mod_source)},
          {"mod_target", to_json(e.mod_target)}};
}

Json to_json(const PairClassification& pc) {
  return {{"regime", to_string(pc.regime)},
          {"mod_source", to_json(pc.mod_source)},
          {"mod_target", to_json(pc.mod_target)},
          {"alpha_ratio", num(pc.alpha_ratio)},
          {"lower_bound", to_json(pc.lower_bound)},
          {"upper_bound", to_json(pc.upper_bound)}};
}

Json to_json(const NonRadialWitness& w) {
  Json scan = Json::array();
  for (const auto& c : w.scan) {
    scan.push_back({{"lambda", num(c.lambda)},
                    {"admissible", c.admissible},
                    {"energy", num(c.energy)},
                    {"gap", num(c.gap)}});
  }
  return {{"functional", to_string(w.functional)},
          {"lambda", num(w.lambda)},
          {"radial_energy", num(w.radial_energy)},
          {"witness_energy", num(w.witness_energy)},
          {"gap", num(w.gap)},
          {"conclusive", w.conclusive},
          {"scan", scan}};
}

Json header(std::string_view command, Dimension n) {
  return {{"schema", kSchema}, {"command", command}, {"n", n.value()}};
}

// ---------------------------------------------------------------- commands

struct Common {
  int n = 2;
  std::string source;
  std::string target;
  double rtol = QuadratureOptions{}.rtol;
  double atol = QuadratureOptions{}.atol;
  std::string format = "json";
};

void add_common(CLI::App* sub, Common& c, bool needs_pair) {
  sub->add_option("-n,--dimension", c.n, "ambient dimension n >= 2")->required();
  auto* s = sub->add_option("--source", c.source, "source annulus inner,outer");
  auto* t = sub->add_option("--target", c.target, "target annulus inner,outer");
  if (needs_pair) {
    s->required();
    t->required();
  }
  sub->add_option("--rtol", c.rtol, "quadrature relative tolerance");
  sub->add_option("--atol", c.atol, "quadrature absolute tolerance");
  sub->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

QuadratureOptions tolerances(const Common& c) {
  QuadratureOptions q;
  q.rtol = c.rtol;
  q.atol = c.atol;
  return q;
}

void cmd_classify(const Common& c, std::ostream& out) {
  const Dimension n(c.n);
  const Annulus s = parse_annulus(c.source, "--source");
  const Annulus t = parse_annulus(c.target, "--target");
  const PairClassification pc = classify(s, t, n);
  if (c.format == "csv") {
    Csv csv(out);
    csv.header({"n", "source_inner", "source_outer", "target_inner", "target_outer", "regime",
                "mod_source", "mod_target", "alpha_ratio", "lower_bound", "upper_bound"});
    csv.row(c.n, s.inner(), s.outer(), t.inner(), t.outer(), to_string(pc.regime),
            pc.mod_source.value, pc.mod_target.value, pc.alpha_ratio, pc.lower_bound.value,
            pc.upper_bound.value);
    return;
  }
  Json j = header("classify", n);
  j["source"] = to_json(s);
  j["target"] = to_json(t);
  j["classification"] = to_json(pc);
  emit_json(out, j);
}

Json plan_json(const MinimizerPlan& p, const QuadratureOptions& q) {
  Json j = header("minimize", p.n);
  j["source"] = to_json(p.source);
  j["target"] = to_json(p.target);
  j["tolerances"] = {{"rtol", num(q.rtol)}, {"atol", num(q.atol)}};
  j["classification"] = to_json(p.classification);
  j["shape"] = to_string(p.shape);
  j["status"] = to_string(p.status);
  j["map"] = to_json(p.map);
  j["rho"] = opt_num(p.rho);
  j["planar"] = p.planar ? Json{{"omega", num(p.planar->omega)}, {"rescale", num(p.planar->rescale)}}
                         : Json(nullptr);
  j["energy"] = to_json(p.energy);
  j["lower_bound_energy"] = opt_num(p.lower_bound_energy);
  j["witness"] = p.witness ? to_json(*p.witness) : Json(nullptr);
  j["flags"] = p.flags;
  return j;
}

void cmd_minimize(const Common& c, std::ostream& out) {
  const Dimension n(c.n);
  const QuadratureOptions q = tolerances(c);
  const MinimizerPlan p =
      minimal_energy(parse_annulus(c.source, "--source"), parse_annulus(c.target, "--target"), n, q);
  if (c.format == "csv") {
    Csv csv(out);
    csv.header({"regime", "shape", "status", "kind", "lambda", "k", "rho", "omega", "energy",
                "formula_id", "lower_bound_energy"});
    csv.row(to_string(p.classification.regime), to_string(p.shape), to_string(p.status),
            to_string(p.map.kind), p.map.lambda, p.map.k, p.rho,
            p.planar ? std::optional<double>(p.planar->omega) : std::nullopt, p.energy.value,
            p.energy.formula_id, p.lower_bound_energy);
    return;
  }
  emit_json(out, plan_json(p, q));
}

struct EnergyArgs {
  std::string plan;
  std::string kind;
  double lambda = 1.0;
  double k = 1.0;
  std::optional<double> hammer_to;
  std::optional<double> hammer_inner;
  std::string functional = "E";
  std::string formula;
};

void cmd_energy(const Common& c, const EnergyArgs& e, CLI::App* sub, std::ostream& out) {
  QuadratureOptions q = tolerances(c);
  RadialMap map;
  std::optional<double> plan_value;
  int dim = c.n;
  std::string formula = e.formula;
  const Functional f = parse_functional(e.functional);

  if (!e.plan.empty()) {
    std::ifstream in(e.plan);
    if (!in) throw ArgumentError("cannot read plan file '" + e.plan + "'");
    Json plan;
    try {
      plan = Json::parse(in);
    } catch (const Json::exception& ex) {
      throw ArgumentError(std::string("plan is not valid JSON: ") + ex.what());
    }
    try {
      map = map_from_json(plan.at("map"));
      dim = plan.at("n").get<int>();
      if (sub->count("--rtol") == 0) q.rtol = json_number(plan.at("tolerances").at("rtol"));
      if (sub->count("--atol") == 0) q.atol = json_number(plan.at("tolerances").at("atol"));
      const Json& en = plan.at("energy");
      if (formula.empty() && parse_functional(en.at("functional").get<std::string>()) == f) {
        formula = en.at("formula_id").get<std::string>();
        plan_value = json_number(en.at("value"));
      }
    } catch (const Json::exception& ex) {
      throw ArgumentError(std::string("plan is missing fields: ") + ex.what());
    }
  } else {
    if (e.kind.empty() || c.source.empty()) {
      throw ArgumentError("energy needs --plan or --kind with --source");
    }
    map.kind = parse_principal_kind(e.kind);
    map.lambda = e.lambda;
    map.k = e.k;
    map.domain = parse_annulus(c.source, "--source");
    if (e.hammer_to.has_value() != e.hammer_inner.has_value()) {
      throw ArgumentError("--hammer-to and --hammer-inner go together");
    }
    if (e.hammer_to) {
      map.hammer_to = *e.hammer_to;
      map.hammer_zone = Annulus(*e.hammer_inner, map.domain.inner());
    }
  }
  const Dimension n(dim);
  if (formula.empty()) {
    formula = f == Functional::ConformalE ? preferred_formula(map, n)
              : map.hammered()            ? std::string(kHammerPrefix) + std::string(kFormulaQuadrature)
                                          : std::string(kFormulaQuadrature);
  }
  const EnergyReport rep = evaluate_energy(map, n, f, formula, q);

  if (c.format == "csv") {
    Csv csv(out);
    csv.header({"functional", "formula_id", "value", "quad_error", "plan_value"});
    csv.row(to_string(rep.functional), rep.formula_id, rep.value, rep.quad_error, plan_value);
    return;
  }
  Json j = header("energy", n);
  j["map"] = to_json(map);
  j["energy"] = to_json(rep);
  j["plan_value"] = opt_num(plan_value);
  j["relative_difference"] =
      plan_value ? num(std::abs(rep.value - *plan_value) / std::abs(*plan_value)) : Json(nullptr);
  emit_json(out, j);
}

struct ProfileArgs {
  std::string kind;
  double lambda = 1.0;
  double k = 1.0;
  std::optional<double> from;
  std::optional<double> to;
  int steps = 50;
};

void cmd_profile(const Common& c, const ProfileArgs& pa, std::ostream& out) {
  const Dimension n(c.n);
  RadialMap map;
  Json source_json = nullptr;
  if (!pa.kind.empty()) {
    map.kind = parse_principal_kind(pa.kind);
    map.lambda = pa.lambda;
    map.k = pa.k;
    if (!pa.from || !pa.to) throw ArgumentError("profile --kind needs --from and --to");
    map.domain = Annulus(*pa.from, *pa.to);
  } else if (!c.source.empty() && !c.target.empty()) {
    const Annulus s = parse_annulus(c.source, "--source");
    map = minimal_energy(s, parse_annulus(c.target, "--target"), n, tolerances(c)).map;
    source_json = to_json(s);
  } else {
    throw ArgumentError("profile needs --kind or --source with --target");
  }
  const Annulus whole = map.full_domain();
  const double a = pa.from.value_or(whole.inner());
  const double b = pa.to.value_or(whole.outer());
  if (!(a > 0.0) || !(b >= a)) throw ArgumentError("profile needs 0 < from <= to");
  if (pa.steps < 1) throw ArgumentError("--steps must be at least 1");
  const double cconst = map.characteristic_constant(n);

  Json rows = Json::array();
  Csv csv(out);
  if (c.format == "csv") csv.header({"t", "H", "Hdot", "eta", "characteristic_residual"});
  for (int i = 0; i < pa.steps; ++i) {
    const double t = pa.steps == 1 ? a : a * std::pow(b / a, static_cast<double>(i) / (pa.steps - 1));
    const StrainSample s = map.sample(t, n);
    const double residual = std::abs(characteristic(s, n) - cconst);
    if (c.format == "csv") {
      csv.row(s.t, s.H, s.Hdot, s.eta, residual);
    } else {
      rows.push_back({{"t", num(s.t)}, {"H", num(s.H)}, {"Hdot", num(s.Hdot)}, {"eta", num(s.eta)},
                      {"characteristic_residual", num(residual)}});
    }
  }
  if (c.format == "csv") return;
  Json j = header("profile", n);
  j["map"] = to_json(map);
  j["characteristic_constant"] = num(cconst);
  j["rows"] = rows;
  emit_json(out, j);
}

void cmd_nitsche_table(const Common& c, const std::string& ratios, std::ostream& out) {
  const Dimension n(c.n);
  const NitscheConstants& k = nitsche_constants(n);
  const auto logs = parse_list(ratios);
  if (c.format == "csv") {
    Csv csv(out);
    csv.header({"n", "alpha_n", "gamma_n", "delta_n", "log_ratio", "modulus", "lower_nitsche",
                "upper_nitsche"});
    for (double L : logs) {
      const Modulus m = Modulus::from_log_ratio(L, n);
      csv.row(c.n, k.alpha_n, k.gamma_n, k.delta_n, L, m.value, lower_nitsche(m, n).value,
              upper_nitsche(m, n).value);
    }
    return;
  }
  Json rows = Json::array();
  for (double L : logs) {
    const Modulus m = Modulus::from_log_ratio(L, n);
    rows.push_back({{"log_ratio", num(L)},
                    {"modulus", num(m.value)},
                    {"lower_nitsche", num(lower_nitsche(m, n).value)},
                    {"upper_nitsche", num(upper_nitsche(m, n).value)}});
  }
  Json j = header("nitsche-table", n);
  j["alpha_n"] = num(k.alpha_n);
  j["gamma_n"] = num(k.gamma_n);
  j["delta_n"] = opt_num(k.delta_n);
  j["rows"] = rows;
  emit_json(out, j);
}

Json triple(const LagrangianTriple& t) {
  return {{"jacobian", num(t.jacobian)},
          {"target_modulus", num(t.target_modulus)},
          {"source_modulus", num(t.source_modulus)}};
}

void cmd_verify(const Common& c, const std::string& which, std::ostream& out) {
  const Dimension n(c.n);
  const Annulus s = parse_annulus(c.source, "--source");
  const Annulus t = parse_annulus(c.target, "--target");
  const QuadratureOptions q = tolerances(c);
  const StrainProfile profile =
      which == "power" ? power_stretching(s, t) : to_profile(fit_annuli(s, t, n).map, n);
  const FreeLagrangianReport r = verify_free_lagrangians(profile, s, t, n, q);
  const LagrangianTriple est = free_lagrangian_estimates(profile, s, t, n, q);
  const DistortionCheck dc = distortion_integral_check(profile, n, q);
  if (c.format == "csv") {
    Csv csv(out);
    csv.header({"check", "lhs", "rhs", "residual"});
    csv.row("jacobian", r.lhs.jacobian, r.rhs.jacobian, r.residual.jacobian);
    csv.row("target_modulus", r.lhs.target_modulus, r.rhs.target_modulus, r.residual.target_modulus);
    csv.row("source_modulus", r.lhs.source_modulus, r.rhs.source_modulus, r.residual.source_modulus);
    csv.row("distortion_E", dc.inner_distortion_e, dc.energy_e, dc.residual_e);
    csv.row("distortion_F", dc.inner_distortion_f, dc.energy_f, dc.residual_f);
    return;
  }
  Json j = header("verify", n);
  j["source"] = to_json(s);
  j["target"] = to_json(t);
  j["map"] = which;
  j["lhs"] = triple(r.lhs);
  j["rhs"] = triple(r.rhs);
  j["residual"] = triple(r.residual);
  j["estimate_margins"] = triple(est);
  j["distortion"] = {{"inner_distortion_E", num(dc.inner_distortion_e)},
                     {"energy_E", num(dc.energy_e)},
                     {"residual_E", num(dc.residual_e)},
                     {"inner_distortion_F", num(dc.inner_distortion_f)},
                     {"energy_F", num(dc.energy_f)},
                     {"residual_F", num(dc.residual_f)}};
  emit_json(out, j);
}

void cmd_counterexample(const Common& c, const std::string& functional, std::ostream& out) {
  const Dimension n(c.n);
  const Annulus s = parse_annulus(c.source, "--source");
  const Annulus t = parse_annulus(c.target, "--target");
  const NonRadialWitness w = nonradial_witness(s, t, n, parse_functional(functional), tolerances(c));
  if (c.format == "csv") {
    Csv csv(out);
    csv.header({"lambda", "admissible", "energy", "radial_energy", "gap"});
    for (const auto& cand : w.scan) {
      if (cand.energy == 0.0) continue;
      csv.row(cand.lambda, cand.admissible, cand.energy, w.radial_energy, cand.gap);
    }
    return;
  }
  Json j = header("counterexample", n);
  j["source"] = to_json(s);
  j["target"] = to_json(t);
  j["witness"] = to_json(w);
  emit_json(out, j);
}

void cmd_qc(const Common& c, std::optional<double> ko, std::optional<double> ki, std::ostream& out) {
  const Dimension n(c.n);
  const Annulus s = parse_annulus(c.source, "--source");
  const Annulus t = parse_annulus(c.target, "--target");
  const double alpha = t.log_ratio() / s.log_ratio();
  const Dilatations pd = power_stretching_dilatations(alpha, n);
  const double k_outer = ko.value_or(pd.outer);
  const double k_inner = ki.value_or(pd.inner);
  const QcCheck q = qc_bounds(s, t, n, k_outer, k_inner);
  if (c.format == "csv") {
    Csv csv(out);
    csv.header({"alpha", "ratio_power", "k_outer", "k_inner", "lower_holds", "upper_holds",
                "lower_margin", "upper_margin"});
    csv.row(alpha, q.ratio_power, k_outer, k_inner, q.lower_holds, q.upper_holds, q.lower_margin,
            q.upper_margin);
    return;
  }
  Json j = header("qc", n);
  j["source"] = to_json(s);
  j["target"] = to_json(t);
  j["alpha"] = num(alpha);
  j["power_stretching"] = {{"k_outer", num(pd.outer)}, {"k_inner", num(pd.inner)}};
  j["k_outer"] = num(k_outer);
  j["k_inner"] = num(k_inner);
  j["ratio_power"] = num(q.ratio_power);
  j["lower_holds"] = q.lower_holds;
  j["upper_holds"] = q.upper_holds;
  j["lower_margin"] = num(q.lower_margin);
  j["upper_margin"] = num(q.upper_margin);
  emit_json(out, j);
}

int report_error(std::ostream& err, int code, std::string_view kind, std::string_view message,
                 std::optional<double> residual = std::nullopt) {
  Json j{{"schema", kSchema}, {"error", {{"code", code}, {"kind", kind}, {"message", message}}}};
  if (residual) j["error"]["residual"] = num(*residual);
  emit_json(err, j);
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Energy-minimal n-harmonic deformations between spherical annuli", "nharm"};
  app.require_subcommand(1);

  Common common;
  auto* classify_cmd = app.add_subcommand("classify", "regime of a pair of annuli");
  add_common(classify_cmd, common, true);

  auto* minimize_cmd = app.add_subcommand("minimize", "construct the energy-minimal map");
  add_common(minimize_cmd, common, true);

  EnergyArgs ea;
  auto* energy_cmd = app.add_subcommand("energy", "energy of a map or of a minimize plan");
  add_common(energy_cmd, common, false);
  energy_cmd->get_option("-n")->required(false);
  energy_cmd->add_option("--plan", ea.plan, "JSON file written by `minimize`");
  energy_cmd->add_option("--kind", ea.kind, "identity, inversion, plus or minus");
  energy_cmd->add_option("--lambda", ea.lambda);
  energy_cmd->add_option("--k", ea.k);
  energy_cmd->add_option("--hammer-to", ea.hammer_to, "radius the hammer zone collapses onto");
  energy_cmd->add_option("--hammer-inner", ea.hammer_inner, "inner radius of the hammer zone");
  energy_cmd->add_option("--functional", ea.functional)->check(CLI::IsMember({"E", "F", "F_op"}));
  energy_cmd->add_option("--formula", ea.formula, "quadrature, conformal_volume, planar_nitsche");

  ProfileArgs pa;
  auto* profile_cmd = app.add_subcommand("profile", "sample a strain t -> H(t)");
  add_common(profile_cmd, common, false);
  common.format = "csv";
  profile_cmd->add_option("--kind", pa.kind);
  profile_cmd->add_option("--lambda", pa.lambda);
  profile_cmd->add_option("--k", pa.k);
  profile_cmd->add_option("--from", pa.from);
  profile_cmd->add_option("--to", pa.to);
  profile_cmd->add_option("--steps", pa.steps);

  std::string ratios = "0.25,0.5,1,2";
  auto* table_cmd = app.add_subcommand("nitsche-table", "dimensional constants and Nitsche bounds");
  add_common(table_cmd, common, false);
  table_cmd->add_option("--log-ratios", ratios, "comma-separated log(R/r) values");

  std::string verify_map = "minimizer";
  auto* verify_cmd = app.add_subcommand("verify", "free-Lagrangian and distortion identities");
  add_common(verify_cmd, common, true);
  verify_cmd->add_option("--map", verify_map)->check(CLI::IsMember({"minimizer", "power"}));

  std::string witness_functional = "F";
  auto* counter_cmd = app.add_subcommand("counterexample", "non-radial map beating every radial one");
  add_common(counter_cmd, common, true);
  counter_cmd->add_option("--functional", witness_functional)->check(CLI::IsMember({"E", "F"}));

  std::optional<double> k_outer, k_inner;
  auto* qc_cmd = app.add_subcommand("qc", "modulus bounds under bounded distortion");
  add_common(qc_cmd, common, true);
  qc_cmd->add_option("--k-outer", k_outer);
  qc_cmd->add_option("--k-inner", k_inner);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    return report_error(err, kArgumentError, "argument", e.what());
  }
  // The profile verb defaults to CSV; every other verb to JSON.
  if (!profile_cmd->parsed() && (app.get_subcommands().front()->count("--format") == 0)) {
    common.format = "json";
  }

  try {
    if (classify_cmd->parsed()) cmd_classify(common, out);
    else if (minimize_cmd->parsed()) cmd_minimize(common, out);
    else if (energy_cmd->parsed()) cmd_energy(common, ea, energy_cmd, out);
    else if (profile_cmd->parsed()) cmd_profile(common, pa, out);
    else if (table_cmd->parsed()) cmd_nitsche_table(common, ratios, out);
    else if (verify_cmd->parsed()) cmd_verify(common, verify_map, out);
    else if (counter_cmd->parsed()) cmd_counterexample(common, witness_functional, out);
    else if (qc_cmd->parsed()) cmd_qc(common, k_outer, k_inner, out);
  } catch (const ArgumentError& e) {
    return report_error(err, kArgumentError, "argument", e.what());
  } catch (const DomainError& e) {
    return report_error(err, kDomainError, "domain", e.what());
  } catch (const NumericalError& e) {
    return report_error(err, kNumericalError, "numerical", e.what(), e.residual());
  }
  return kOk;
}

}  // namespace nharm::cli
