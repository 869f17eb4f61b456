// posmap: build, certify and apply positive maps and quantum channels
// constructed from block matrices. Matrices travel as JSON files; verdicts
// are single-line JSON objects on stdout, sweeps are CSV files, logs go to
// stderr. Exit codes: 0 success, 3 invalid input, 4 method precondition
// failure (verdicts themselves never drive a nonzero exit).

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posmap/builders.hpp"
#include "posmap/detector.hpp"
#include "posmap/matrix_io.hpp"

using nlohmann::json;
using namespace posmap;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 0;
  double tol = 1e-9;
  int restarts = 64;
};

json complex_json(const Complex& c) { return json::array({c.real(), c.imag()}); }

json vector_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

std::map<std::string, double> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, double> out;
  for (const std::string& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(Errc::MissingParam, "--param expects NAME=VALUE, got '" + kv + "'");
    try {
      size_t pos = 0;
      const double v = std::stod(kv.substr(eq + 1), &pos);
      if (pos != kv.size() - eq - 1) throw std::invalid_argument(kv);
      out[kv.substr(0, eq)] = v;
    } catch (const std::exception&) {
      throw Error(Errc::ParamOutOfDomain, "bad parameter value in '" + kv + "'");
    }
  }
  return out;
}

struct FamilyInfo {
  bool is_map;
  std::variant<MapFamily, StateFamily> family;
};

const std::map<std::string, FamilyInfo>& family_table() {
  static const std::map<std::string, FamilyInfo> table = {
      {"horodecki", {false, StateFamily::Horodecki}},
      {"werner", {false, StateFamily::Werner}},
      {"isotropic", {false, StateFamily::Isotropic}},
      {"flip", {false, StateFamily::Flip}},
      {"maxent", {false, StateFamily::MaxEnt}},
      {"phi1", {true, MapFamily::Phi1}},
      {"phi2", {true, MapFamily::Phi2}},
      {"phi3", {true, MapFamily::Phi3}},
      {"phi4", {true, MapFamily::Phi4}},
      {"reduction", {true, MapFamily::Reduction}},
      {"transpose", {true, MapFamily::Transpose}},
      {"trace", {true, MapFamily::TraceSigma}},
  };
  return table;
}

FamilyInfo lookup_family(const std::string& name) {
  const auto it = family_table().find(name);
  if (it == family_table().end())
    throw Error(Errc::UnknownFamily, "unknown family '" + name + "'");
  return it->second;
}

std::map<std::string, std::string> family_metadata(const std::string& family,
                                                   const std::map<std::string, double>& params) {
  std::map<std::string, std::string> md{{"family", family}};
  for (const auto& [k, v] : params) md["param." + k] = format_double(v);
  return md;
}

MatrixFile load_file(const std::string& path) { return read_matrix_file(path); }

LinearMapRep load_map(const std::string& path) {
  const MatrixFile f = load_file(path);
  if (f.kind != "map-choi")
    throw Error(Errc::BadFile, "'" + path + "' does not hold a map (kind map-choi)");
  return LinearMapRep(f.to_block());
}

std::string id_of(const MatrixFile& f, const std::string& path) {
  const auto it = f.metadata.find("family");
  return it != f.metadata.end() ? it->second : path;
}

void emit(const json& report) { std::cout << report.dump() << "\n"; }

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// ---------------------------------------------------------------------------
// subcommands

int cmd_gen(const GlobalOpts&, const std::string& family, Index dim,
            const std::vector<std::string>& param_kvs, const std::string& out_path) {
  const FamilyInfo info = lookup_family(family);
  const auto params = parse_params(param_kvs);
  MatrixFile file;
  if (info.is_map) {
    const MapFamilySpec spec{std::get<MapFamily>(info.family), dim, params};
    const LinearMapRep map = make_family(spec);
    file.m = map.choi().m();
    file.n = map.choi().n();
    file.kind = "map-choi";
    file.data = map.choi().full();
  } else {
    const StateFamilySpec spec{std::get<StateFamily>(info.family), dim, 0, params, {}, {}, {}};
    const BlockMatrix state = make_state(spec);
    file.m = state.m();
    file.n = state.n();
    file.kind = spec.family == StateFamily::Flip ? "block" : "state";
    file.data = state.full();
  }
  file.metadata = family_metadata(family, params);
  write_matrix_file(out_path, file);
  return 0;
}

int cmd_build(const GlobalOpts& g, const std::string& method, const std::string& input,
              const std::string& purification_path, const std::string& out_path) {
  const MatrixFile in = load_file(input);
  const BlockMatrix A = in.to_block();
  json report{{"method", method}};
  MatrixFile out;

  if (method == "lemma21") {
    std::optional<Vector> x;
    if (!purification_path.empty()) x = read_vector_file(purification_path);
    const Lemma21Result res = lemma21_build(A, x, g.tol);
    out.m = res.map.choi().m();
    out.n = res.map.choi().n();
    out.data = res.map.choi().full();
    report["reconstruction_error"] = res.reconstruction_error;
    report["completion_indices"] = res.completion_indices;
    report["cp"] = is_completely_positive(res.map, g.tol);
    report["tp"] = is_trace_preserving(res.map, 1e-9);
  } else if (method == "thm31") {
    const Thm31Result res = thm31_build(A, g.tol);
    out.m = res.map.choi().m();
    out.n = res.map.choi().n();
    out.data = res.map.choi().full();
    report["choi_min_eig"] = res.choi_min_eig;
    report["cotranspose_choi_min_eig"] = res.cotranspose_choi_min_eig;
    report["tp"] = is_trace_preserving(res.map, 1e-9);
  } else if (method == "thm41") {
    CertifierConfig cfg;
    cfg.restarts = g.restarts;
    cfg.seed = g.seed;
    const Thm41Result res = thm41_build(A, cfg);
    out.m = res.map.choi().m();
    out.n = res.map.choi().n();
    out.data = res.map.choi().full();
    report["diag_blocks_psd"] = res.diag_blocks_psd;
    report["condition"] = "no-violation-found";
    report["seesaw_min"] = res.condition_report.min_value;
    report["restarts"] = res.condition_report.restarts_run;
  } else {
    throw Error(Errc::BadFile, "unknown method '" + method + "'");
  }

  out.kind = "map-choi";
  out.metadata = {{"method", method}, {"source", id_of(in, input)}};
  write_matrix_file(out_path, out);
  emit(report);
  return 0;
}

int cmd_check(const GlobalOpts& g, const std::string& input, bool cp, bool positive, bool tp,
              bool hermitian) {
  const LinearMapRep map = load_map(input);
  json report;
  if (cp) {
    report["cp"] = is_completely_positive(map, g.tol);
    report["choi_min_eig"] = min_eigenvalue(map.choi().full());
  }
  if (positive) {
    CertifierConfig cfg;
    cfg.restarts = g.restarts;
    cfg.seed = g.seed;
    const PositivityVerdict v = map_positivity(map, cfg);
    report["positive"] =
        v.tag == VerdictTag::Violation ? "violation" : "no-violation-found";
    report["seesaw_min"] = v.min_value;
    report["restarts"] = v.restarts_run;
    if (v.tag == VerdictTag::Violation) {
      report["witness_u"] = vector_json(v.witness_u);
      report["witness_v"] = vector_json(v.witness_v);
    }
  }
  if (tp) report["tp"] = is_trace_preserving(map, g.tol);
  if (hermitian) report["hermitian"] = is_hermiticity_preserving(map, g.tol);
  emit(report);
  return 0;
}

int cmd_detect(const GlobalOpts& g, const std::string& state_path, const std::string& map_path) {
  const MatrixFile state_file = load_file(state_path);
  const LinearMapRep map = load_map(map_path);
  const DetectionReport res = detect(map, state_file.to_block(), g.tol,
                                     id_of(load_file(map_path), map_path),
                                     id_of(state_file, state_path));
  emit(json{{"min_eig", res.min_eig},
            {"detected", res.detected},
            {"map", res.map_id},
            {"state", res.state_id}});
  return 0;
}

int cmd_sweep(const GlobalOpts& g, const std::string& family, Index dim,
              const std::string& param, double from, double to, double step,
              const std::string& checks_csv, const std::string& csv_path) {
  const FamilyInfo info = lookup_family(family);
  if (step == 0.0 || (to - from) * step < 0.0)
    throw Error(Errc::ParamOutOfDomain, "sweep step must move from --from towards --to");

  SweepSpec spec;
  spec.param_name = param;
  if (info.is_map)
    spec.base = MapFamilySpec{std::get<MapFamily>(info.family), dim, {}};
  else
    spec.base = StateFamilySpec{std::get<StateFamily>(info.family), dim, 0, {}, {}, {}, {}};
  const double span = std::abs(to - from) / std::abs(step);
  for (Index k = 0; k <= static_cast<Index>(span + 1e-9); ++k)
    spec.grid.push_back(from + static_cast<double>(k) * step);

  std::set<SweepCheck> checks;
  for (const std::string& c : split_list(checks_csv)) {
    if (c == "cp") checks.insert(SweepCheck::Cp);
    else if (c == "positive") checks.insert(SweepCheck::Positive);
    else if (c == "ppt") checks.insert(SweepCheck::Ppt);
    else throw Error(Errc::ParamOutOfDomain, "unknown check '" + c + "'");
  }

  CertifierConfig cfg;
  cfg.restarts = g.restarts;
  cfg.seed = g.seed;
  const std::vector<SweepRow> rows = sweep(spec, checks, cfg, g.tol);
  std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::BadFile, "cannot write '" + csv_path + "'");
  out << sweep_to_csv(rows);
  std::cerr << "wrote " << rows.size() << " rows to " << csv_path << "\n";
  return 0;
}

int cmd_choi(const GlobalOpts&, const std::string& input) {
  const LinearMapRep map = load_map(input);
  const EigResult eig = hermitian_eig(map.choi().full());
  json eigs = json::array();
  for (Index i = 0; i < eig.eigenvalues.size(); ++i) eigs.push_back(eig.eigenvalues(i));
  emit(json{{"m", map.input_dim()}, {"n", map.output_dim()}, {"eigenvalues", eigs}});
  return 0;
}

int classify_exit(const Error& e) {
  switch (e.code()) {
    case Errc::BadFile:
    case Errc::UnknownFamily:
    case Errc::MissingParam:
    case Errc::ParamOutOfDomain:
    case Errc::DimensionMismatch:
    case Errc::ShapeMismatch:
      return 3;
    default:
      return 4;  // method precondition failures (NotPsd, InputIsPpt, ...)
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"positive maps and quantum channels from block matrices"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed/--tol/--restarts may follow the subcommand

  GlobalOpts g;
  app.add_option("--seed", g.seed, "certifier seed")->capture_default_str();
  app.add_option("--tol", g.tol, "numerical tolerance")->capture_default_str();
  app.add_option("--restarts", g.restarts, "certifier restarts")->capture_default_str();

  std::string family, param, input, state_path, map_path, out_path, method, purification;
  std::string checks = "cp,positive";
  Index dim = 3;
  double from = 0.0, to = 1.0, step = 0.1;
  bool cp = false, positive = false, tp = false, hermitian = false, eigs = false;

  CLI::App* gen = app.add_subcommand("gen", "generate a state or map family member");
  gen->add_option("--family", family)->required();
  gen->add_option("--dim", dim);
  std::vector<std::string> param_kvs;
  gen->add_option("--param", param_kvs, "NAME=VALUE (repeatable)");
  gen->add_option("-o,--output", out_path)->required();

  CLI::App* build = app.add_subcommand("build", "construct a map from a block matrix");
  build->add_option("--method", method, "lemma21 | thm31 | thm41")->required();
  build->add_option("--input", input)->required();
  build->add_option("--purification", purification);
  build->add_option("-o,--output", out_path)->required();

  CLI::App* check = app.add_subcommand("check", "certify map properties");
  check->add_option("--input", input)->required();
  check->add_flag("--cp", cp);
  check->add_flag("--positive", positive);
  check->add_flag("--tp", tp);
  check->add_flag("--hermitian", hermitian);

  CLI::App* det = app.add_subcommand("detect", "apply (id (x) map) to a state");
  det->add_option("--state", state_path)->required();
  det->add_option("--map", map_path)->required();

  CLI::App* sw = app.add_subcommand("sweep", "sweep a family parameter to CSV");
  sw->add_option("--family", family)->required();
  sw->add_option("--dim", dim);
  sw->add_option("--param", param)->required();
  sw->add_option("--from", from)->required();
  sw->add_option("--to", to)->required();
  sw->add_option("--step", step)->required();
  sw->add_option("--check", checks, "comma list of cp,positive,ppt")->capture_default_str();
  sw->add_option("--csv", out_path)->required();

  CLI::App* choi = app.add_subcommand("choi", "inspect a map's Choi matrix");
  choi->add_option("--input", input)->required();
  choi->add_flag("--eigs", eigs, "print eigenvalues (default behaviour)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(g, family, dim, param_kvs, out_path);
    if (build->parsed()) return cmd_build(g, method, input, purification, out_path);
    if (check->parsed()) return cmd_check(g, input, cp, positive, tp, hermitian);
    if (det->parsed()) return cmd_detect(g, state_path, map_path);
    if (sw->parsed()) return cmd_sweep(g, family, dim, param, from, to, step, checks, out_path);
    if (choi->parsed()) return cmd_choi(g, input);
  } catch (const Error& e) {
    std::cerr << json{{"error", e.name()}, {"message", e.what()}}.dump() << "\n";
    return classify_exit(e);
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "Unexpected"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return 0;
}
