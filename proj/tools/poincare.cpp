// poincare: verification suites, table dumps, bracket profiles and Mackey reports.
// Exit status: 0 success, 1 a check failed, 2 invalid configuration or input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "poincare/verify.hpp"

using namespace poincare;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kConfigError = 2;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand (not all of them use every flag).
struct RunConfig {
  int twice_spin = 1;
  double mass = 1.0;
  double p_max = 0.0;  // 0: 6 m
  int radial = 32;
  std::string angular = "lebedev26";
  std::string eps_seq = "0.2,0.1,0.05,0.025";
  std::string damping = "energy";
  std::uint64_t seed = 1;
  std::string out;  // empty: stdout
  std::string format = "json";
};

void add_common(CLI::App* app, RunConfig& c, const std::string& default_format) {
  c.format = default_format;
  app->add_option("--twice-spin", c.twice_spin, "2s (integer, >= 0)");
  app->add_option("--mass", c.mass, "particle mass m > 0")->capture_default_str();
  app->add_option("--pmax", c.p_max, "momentum cutoff of the grid (default 6 m)");
  app->add_option("--radial", c.radial, "radial grid nodes")->capture_default_str();
  app->add_option("--angular", c.angular, "angular rule: lebedev26, lebedev50, product:NTxNP")->capture_default_str();
  app->add_option("--eps-seq", c.eps_seq, "damping sequence, comma separated, decreasing")->capture_default_str();
  app->add_option("--damping", c.damping, "energy or gaussian")->capture_default_str();
  app->add_option("--seed", c.seed, "seed for randomized checks")->capture_default_str();
  app->add_option("--out", c.out, "output file (written atomically); default stdout");
  app->add_option("--format", c.format, "json or csv")->capture_default_str();
}

std::vector<double> parse_list(const std::string& text, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string(what) + ": cannot parse '" + item + "' as a number");
    }
  }
  return out;
}

KernelConfig kernel_config(const RunConfig& c) {
  KernelConfig k;
  k.eps = parse_list(c.eps_seq, "--eps-seq");
  if (k.eps.size() < 2) throw ConfigError("--eps-seq: need at least two values");
  for (std::size_t i = 0; i < k.eps.size(); ++i) {
    if (!(k.eps[i] > 0.0)) throw ConfigError("--eps-seq: values must be positive");
    if (i > 0 && !(k.eps[i] < k.eps[i - 1])) throw ConfigError("--eps-seq: values must decrease");
  }
  k.damping = parse_damping(c.damping);
  return k;
}

GridSpec grid_spec(const RunConfig& c) {
  if (!(c.mass > 0.0)) throw ConfigError("--mass must be positive");
  if (c.radial < 1) throw ConfigError("--radial must be positive");
  if (c.p_max < 0.0) throw ConfigError("--pmax must be positive");
  return {c.mass, c.p_max > 0.0 ? c.p_max : 6.0 * c.mass, c.radial, c.angular};
}

void check_format(const RunConfig& c, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (c.format == f) return;
  throw ConfigError("--format '" + c.format + "' is not supported by this subcommand");
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_atomic(c.out, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string csv_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// ---- verify

struct VerifyFlags {
  int samples = 200;
  std::vector<std::string> tol;
  bool corrupt_epsilon = false;
  bool quiet = false;
};

int cmd_verify(const RunConfig& c, const VerifyFlags& v) {
  check_format(c, {"json", "csv"});
  VerifyConfig cfg;
  cfg.seed = c.seed;
  cfg.samples = v.samples;
  cfg.mass = c.mass;
  cfg.max_twice_spin = std::max(3, c.twice_spin);
  cfg.grid = grid_spec(c);
  cfg.kernel = kernel_config(c);
  cfg.corrupt_epsilon = v.corrupt_epsilon;
  for (const std::string& t : v.tol) {
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ConfigError("--tol expects NAME=VALUE, got '" + t + "'");
    const auto vals = parse_list(t.substr(eq + 1), "--tol");
    if (vals.size() != 1) throw ConfigError("--tol expects one value per invariant");
    cfg.tolerance[t.substr(0, eq)] = vals[0];
  }
  VerifyReport report;
  try {
    report = run_verify(cfg);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (!v.quiet)
    for (const auto& r : report.invariants)
      std::cerr << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.value << (r.kind == "max" ? " <= " : " >= ")
                << r.bound << "\n";
  if (c.format == "json") {
    emit(c, dump(verify_json(cfg, report)));
  } else {
    std::string csv = "name,kind,tolerance,residual,passed\n";
    for (const auto& r : report.invariants)
      csv += r.name + "," + r.kind + "," + csv_number(r.bound) + "," + csv_number(r.value) + "," +
             (r.passed ? "true" : "false") + "\n";
    emit(c, csv);
  }
  if (!report.passed()) {
    for (const auto& f : report.failures()) std::cerr << "failed invariant: " << f << "\n";
    return kFailed;
  }
  return kOk;
}

// ---- table

struct TableFlags {
  std::string kind = "spin-rep";
  std::string sl2c;      // 8 numbers: re/im of a00, a01, a10, a11
  std::string momentum;  // px,py,pz
  std::string section = "canonical";
};

SL2C parse_sl2c(const std::string& text) {
  if (text.empty()) return SL2C();
  const auto v = parse_list(text, "--sl2c");
  if (v.size() != 8) throw ConfigError("--sl2c expects 8 numbers (re, im of a00, a01, a10, a11)");
  Mat2 m;
  m << Complex(v[0], v[1]), Complex(v[2], v[3]), Complex(v[4], v[5]), Complex(v[6], v[7]);
  try {
    return SL2C::from(m);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("--sl2c: ") + e.what());
  }
}

Json classes_json(const std::vector<std::array<int, 4>>& classes) {
  Json out = Json::array();
  for (const auto& a : classes) out.push_back(Json::array({a[0], a[1], a[2], a[3]}));
  return out;
}

int cmd_table(const RunConfig& c, const TableFlags& t) {
  check_format(c, {"json", "csv"});
  const SpinLabel s(c.twice_spin);
  Json j{{"schema", kSchemaVersion}, {"command", "table"}, {"kind", t.kind}, {"twice_spin", s.twice()}};
  std::vector<std::pair<std::string, MatX>> mats;
  if (t.kind == "spin-rep" || t.kind == "hat-rep") {
    const SL2C a = parse_sl2c(t.sl2c);
    j["sl2c"] = matrix_json(a.matrix());
    mats.emplace_back(t.kind, t.kind == "spin-rep" ? spin_rep(s, a) : hat_rep(s, a));
  } else if (t.kind == "gamma") {
    if (s.twice() < 1) throw ConfigError("gamma set needs 2s >= 1");
    const GammaSet g = gamma_matrices(s);
    j["count"] = g.size();
    j["classes"] = classes_json(g.classes);
    for (std::size_t i = 0; i < g.size(); ++i) mats.emplace_back("gamma[" + std::to_string(i) + "]", g.gamma[i]);
  } else if (t.kind == "sigma") {
    if (s.twice() < 1) throw ConfigError("sigma set needs 2s >= 1");
    const GeneralizedSigma g = extract_sigma(s);
    j["count"] = g.size();
    j["classes"] = classes_json(g.classes);
    for (std::size_t i = 0; i < g.size(); ++i) {
      mats.emplace_back("sigma[" + std::to_string(i) + "]", g.sigma[i]);
      mats.emplace_back("sigma_hat[" + std::to_string(i) + "]", g.sigma_hat[i]);
    }
  } else if (t.kind == "boost") {
    const auto p = parse_list(t.momentum.empty() ? "0,0,0" : t.momentum, "--momentum");
    if (p.size() != 3) throw ConfigError("--momentum expects px,py,pz");
    if (!(c.mass > 0.0)) throw ConfigError("--mass must be positive for boosts");
    BoostChoice ch;
    if (t.section == "canonical") ch = BoostChoice::canonical;
    else if (t.section == "helicity") ch = BoostChoice::helicity;
    else throw ConfigError("--section must be canonical or helicity");
    const FourVector mom = on_shell(c.mass, p[0], p[1], p[2]);
    const SL2C l = boost(ch, c.mass, mom);
    j["momentum"] = four_vector_json(mom);
    j["section"] = t.section;
    mats.emplace_back("L", l.matrix());
    mats.emplace_back("D(L)", spin_rep(s, l));
  } else {
    throw ConfigError("--kind must be spin-rep, hat-rep, gamma, sigma or boost");
  }
  if (c.format == "json") {
    Json arr = Json::array();
    for (const auto& [name, m] : mats) {
      Json e = matrix_json(m);
      e["name"] = name;
      arr.push_back(std::move(e));
    }
    j["matrices"] = std::move(arr);
    emit(c, dump(j));
  } else {
    std::string csv = "matrix,row,col,re,im\n";
    for (const auto& [name, m] : mats)
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index k = 0; k < m.cols(); ++k)
          csv += name + "," + std::to_string(r) + "," + std::to_string(k) + "," + csv_number(m(r, k).real()) + "," +
                 csv_number(m(r, k).imag()) + "\n";
    emit(c, csv);
  }
  return kOk;
}

// ---- bracket

struct BracketFlags {
  std::string xi = "0,2,0,0";
  std::string sign = "both";
  std::string verdict_out;  // empty: stderr
  double ratio = 1e3;
  double light_cone_floor = kLightConeFloor;
};

const char* bracket_name(Bracket b) { return b == Bracket::commutator ? "commutator" : "anticommutator"; }

int cmd_bracket(const RunConfig& c, const BracketFlags& b) {
  check_format(c, {"csv", "json"});
  const auto x = parse_list(b.xi, "--xi");
  if (x.size() != 4) throw ConfigError("--xi expects t,x,y,z");
  if (!(c.mass > 0.0)) throw ConfigError("--mass must be positive");
  if (!(b.ratio > 1.0)) throw ConfigError("--ratio must exceed 1");
  if (b.sign != "both" && b.sign != "commutator" && b.sign != "anticommutator")
    throw ConfigError("--sign must be commutator, anticommutator or both");
  VerdictConfig v;
  v.mass = c.mass;
  v.twice_spins = {SpinLabel(c.twice_spin).twice()};
  v.points = {FourVector(x[0], x[1], x[2], x[3])};
  v.ratio = b.ratio;
  v.light_cone_floor = b.light_cone_floor;
  v.kernel = kernel_config(c);
  const StatisticsReport rep = spin_statistics_verdict(v);
  const PointReport& p = rep.points.front();
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";

  Json verdict{{"schema", kSchemaVersion}, {"command", "bracket"}, {"twice_spin", c.twice_spin}, {"mass", c.mass},
               {"xi", four_vector_json(p.xi)}};
  verdict["interval"] = minkowski_dot(p.xi, p.xi);
  // locality says nothing near the light cone or inside it
  const bool no_verdict = p.skipped || minkowski_dot(p.xi, p.xi) > 0.0;
  if (no_verdict) {
    verdict["verdict"] = nullptr;
  } else {
    verdict["verdict"] = verdict_name(rep.verdict);
  }
  const Json stats = statistics_json(rep);
  verdict["local_bracket"] = stats["points"][0]["local_bracket"];
  if (!p.skipped) {
    verdict["ratio"] = p.ratio;
    verdict["monotone"] = p.monotone;
    verdict["local_magnitude"] = p.local_kernel.magnitude();
    verdict["nonlocal_magnitude"] = p.nonlocal_kernel.magnitude();
  }
  verdict["warnings"] = rep.warnings;

  std::vector<std::pair<Bracket, const KernelSequence*>> kernels;
  if (!p.skipped) {
    const Bracket other = p.local == Bracket::commutator ? Bracket::anticommutator : Bracket::commutator;
    for (auto [br, k] : {std::pair{p.local, &p.local_kernel}, std::pair{other, &p.nonlocal_kernel}})
      if (b.sign == "both" || b.sign == bracket_name(br)) kernels.emplace_back(br, k);
  }

  if (c.format == "csv") {
    std::string csv = "bracket,kind,eps,row,col,re,im\n";
    for (const auto& [br, k] : kernels) {
      auto rows = [&](const char* kind, double eps, const MatX& m) {
        for (Eigen::Index r = 0; r < m.rows(); ++r)
          for (Eigen::Index q = 0; q < m.cols(); ++q)
            csv += std::string(bracket_name(br)) + "," + kind + "," + csv_number(eps) + "," + std::to_string(r) + "," +
                   std::to_string(q) + "," + csv_number(m(r, q).real()) + "," + csv_number(m(r, q).imag()) + "\n";
      };
      for (std::size_t i = 0; i < k->values.size(); ++i) rows("damped", k->eps[i], k->values[i]);
      rows("extrapolated", 0.0, k->extrapolated);
    }
    emit(c, csv);
    if (b.verdict_out.empty()) std::cerr << dump(verdict);
    else write_atomic(b.verdict_out, dump(verdict));
  } else {
    Json kj = Json::object();
    for (const auto& [br, k] : kernels) kj[bracket_name(br)] = kernel_json(*k);
    verdict["kernels"] = std::move(kj);
    emit(c, dump(verdict));
  }
  if (no_verdict) return kOk;  // warned above
  return rep.verdict == Verdict::pass ? kOk : kFailed;
}

// ---- mackey

struct MackeyFlags {
  std::string group;
  std::string group_file;
};

int cmd_mackey(const RunConfig& c, const MackeyFlags& m) {
  check_format(c, {"json"});
  if (m.group.empty() == m.group_file.empty()) throw ConfigError("give exactly one of --group and --group-file");
  SemidirectProduct g;
  try {
    if (!m.group.empty()) {
      g = builtin_group(m.group);
    } else {
      std::ifstream in(m.group_file);
      if (!in) throw ConfigError("cannot read " + m.group_file);
      Json j;
      try {
        j = Json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("group spec is not valid JSON: ") + e.what());
      }
      g = group_from_json(j, j.is_object() && j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>()
                                                                                           : "custom");
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("group spec: ") + e.what());
  }
  const MackeyReport rep = verify_mackey(g, c.seed);
  Json j{{"schema", kSchemaVersion}, {"command", "mackey"}};
  const Json body = mackey_json(rep);
  for (const auto& [k, v] : body.items()) j[k] = v;
  emit(c, dump(j));
  std::cerr << rep.group << ": sum dim^2 = " << rep.sum_dim_squared << ", |G| = " << rep.order << ", "
            << (rep.passed() ? "all checks passed" : "FAILED") << "\n";
  return rep.passed() ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare group representations: verification, tables, bracket kernels, Mackey reports"};
  app.require_subcommand(1);

  RunConfig verify_cfg, table_cfg, bracket_cfg, mackey_cfg;
  VerifyFlags vf;
  TableFlags tf;
  BracketFlags bf;
  MackeyFlags mf;

  auto* verify = app.add_subcommand("verify", "run the invariant suites of every module");
  add_common(verify, verify_cfg, "json");
  verify->add_option("--samples", vf.samples, "random draws per invariant")->capture_default_str();
  verify->add_option("--tol", vf.tol, "override a tolerance, NAME=VALUE (repeatable)");
  verify->add_flag("--corrupt-epsilon", vf.corrupt_epsilon, "negative control: replace the symplectic matrix");
  verify->add_flag("--quiet", vf.quiet, "no per-invariant lines on stderr");

  auto* table = app.add_subcommand("table", "dump D(A), gamma or sigma sets, boosts");
  add_common(table, table_cfg, "json");
  table->add_option("--kind", tf.kind, "spin-rep, hat-rep, gamma, sigma, boost")->capture_default_str();
  table->add_option("--sl2c", tf.sl2c, "A as re,im of a00,a01,a10,a11 (default identity)");
  table->add_option("--momentum", tf.momentum, "px,py,pz for --kind boost");
  table->add_option("--section", tf.section, "canonical or helicity")->capture_default_str();

  auto* bracket = app.add_subcommand("bracket", "bracket kernel profile and spin-statistics verdict at one point");
  add_common(bracket, bracket_cfg, "csv");
  bracket->footer("Kernels use adaptive quadrature in |p| and theta; --pmax, --radial and --angular are accepted but do not change them.");
  bracket->add_option("--xi", bf.xi, "separation t,x,y,z")->capture_default_str();
  bracket->add_option("--sign", bf.sign, "commutator, anticommutator or both")->capture_default_str();
  bracket->add_option("--verdict-out", bf.verdict_out, "verdict JSON file (csv format); default stderr");
  bracket->add_option("--ratio", bf.ratio, "required separation |wrong|/|right|")->capture_default_str();
  bracket->add_option("--light-cone-floor", bf.light_cone_floor, "skip points with |m^2 xi.xi| below this")
      ->capture_default_str();

  auto* mackey = app.add_subcommand("mackey", "induced representations of a finite semidirect product");
  add_common(mackey, mackey_cfg, "json");
  mackey->add_option("--group", mf.group, "built-in group: S3, D4, A4, Z5:Z4, Heis3, Z<n>, Z<m>xZ<n>");
  mackey->add_option("--group-file", mf.group_file, "JSON {\"A\": table, \"H\": table, \"action\": table}");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_cfg, vf);
    if (table->parsed()) return cmd_table(table_cfg, tf);
    if (bracket->parsed()) return cmd_bracket(bracket_cfg, bf);
    if (mackey->parsed()) return cmd_mackey(mackey_cfg, mf);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kConfigError;
}
