#include "poincare/json_io.hpp"

#include <fstream>
#include <system_error>

namespace poincare {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw DomainError(std::string("json: missing key '") + key + "'");
  return j.at(key);
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw DomainError("json: complex entries must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

// rows of [re, im] pairs
Json rows_json(const MatX& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(complex_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

MatX rows_from_json(const Json& rows, Eigen::Index n_rows, Eigen::Index n_cols) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != n_rows)
    throw DomainError("json: amplitude row count does not match the grid");
  MatX m(n_rows, n_cols);
  for (Eigen::Index i = 0; i < n_rows; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n_cols)
      throw DomainError("json: amplitude row length does not match the component count");
    for (Eigen::Index k = 0; k < n_cols; ++k) m(i, k) = complex_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Table table_from_json(const Json& j, const char* what) {
  if (!j.is_array() || j.empty()) throw DomainError(std::string("group spec: '") + what + "' must be a non-empty table");
  Table t;
  for (const Json& row : j) {
    if (!row.is_array()) throw DomainError(std::string("group spec: rows of '") + what + "' must be arrays");
    std::vector<int> r;
    for (const Json& v : row) {
      if (!v.is_number_integer()) throw DomainError(std::string("group spec: '") + what + "' entries must be integers");
      r.push_back(v.get<int>());
    }
    t.push_back(std::move(r));
  }
  return t;
}

std::string section_name(BoostChoice c) { return c == BoostChoice::canonical ? "canonical" : "helicity"; }

BoostChoice parse_section(const std::string& s) {
  if (s == "canonical") return BoostChoice::canonical;
  if (s == "helicity") return BoostChoice::helicity;
  throw DomainError("json: unknown boost section '" + s + "'");
}

}  // namespace

Json matrix_json(const MatX& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index k = 0; k < m.cols(); ++k) data.push_back(complex_json(m(i, k)));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

MatX matrix_from_json(const Json& j) {
  const auto rows = require(j, "rows").get<Eigen::Index>();
  const auto cols = require(j, "cols").get<Eigen::Index>();
  const Json& data = require(j, "data");
  if (rows < 0 || cols < 0 || !data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
    throw DomainError("json: matrix data size does not match rows x cols");
  MatX m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = complex_from_json(data[static_cast<std::size_t>(i * cols + k)]);
  return m;
}

Json four_vector_json(const FourVector& x) { return Json::array({x[0], x[1], x[2], x[3]}); }

FourVector four_vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw DomainError("json: a four-vector has 4 components");
  return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

Json grid_spec_json(const GridSpec& spec) {
  return Json{{"mass", spec.mass}, {"p_max", spec.p_max}, {"radial", spec.radial}, {"angular", spec.angular}};
}

GridSpec grid_spec_from_json(const Json& j) {
  GridSpec s;
  s.mass = require(j, "mass").get<double>();
  s.p_max = require(j, "p_max").get<double>();
  s.radial = require(j, "radial").get<int>();
  s.angular = require(j, "angular").get<std::string>();
  return s;
}

Json wave_json(const WaveFunction& f) {
  return Json{{"schema", kSchemaVersion},
              {"mass", f.mass()},
              {"twice_spin", f.spin.twice()},
              {"grid", grid_spec_json(f.grid->spec())},
              {"amplitudes", rows_json(f.amp)}};
}

WaveFunction wave_from_json(const Json& j) {
  const GridSpec spec = grid_spec_from_json(require(j, "grid"));
  if (require(j, "mass").get<double>() != spec.mass) throw DomainError("json: mass differs from the grid mass");
  const SpinLabel s(require(j, "twice_spin").get<int>());
  GridPtr grid = make_grid(spec);
  MatX amp = rows_from_json(require(j, "amplitudes"), static_cast<Eigen::Index>(grid->size()), s.dim());
  return WaveFunction(std::move(grid), s, std::move(amp));
}

Json field_json(const Field& field) {
  Json j{{"schema", kSchemaVersion},
         {"mass", field.mass()},
         {"twice_spin", field.spin.twice()},
         {"grid", grid_spec_json(field.grid->spec())},
         {"layout", layout_name(field.layout)},
         {"section", section_name(field.section)}};
  if (field.layout == FieldLayout::pf) j["undotted"] = field.undotted;
  j["amplitudes"] = rows_json(field.values);
  return j;
}

Field field_from_json(const Json& j) {
  Field f;
  const GridSpec spec = grid_spec_from_json(require(j, "grid"));
  f.grid = make_grid(spec);
  f.spin = SpinLabel(require(j, "twice_spin").get<int>());
  f.layout = parse_layout(require(j, "layout").get<std::string>());
  f.section = parse_section(require(j, "section").get<std::string>());
  if (f.layout == FieldLayout::pf) {
    f.undotted = require(j, "undotted").get<int>();
    if (f.undotted < 0 || f.undotted > f.spin.twice()) throw DomainError("json: pf undotted count out of range");
  }
  f.values = rows_from_json(require(j, "amplitudes"), static_cast<Eigen::Index>(f.grid->size()),
                            component_count(f.layout, f.spin));
  return f;
}

Json kernel_json(const KernelSequence& k) {
  Json values = Json::array();
  for (std::size_t i = 0; i < k.values.size(); ++i)
    values.push_back(Json{{"eps", k.eps[i]}, {"kernel", matrix_json(k.values[i])}});
  return Json{{"sequence", std::move(values)},
              {"extrapolated", matrix_json(k.extrapolated)},
              {"magnitude", k.magnitude()},
              {"extrapolation_error", k.extrapolation_error}};
}

namespace {
const char* bracket_name(Bracket b) { return b == Bracket::commutator ? "commutator" : "anticommutator"; }
}  // namespace

Json statistics_json(const StatisticsReport& r) {
  Json points = Json::array();
  for (const PointReport& p : r.points) {
    Json j{{"twice_spin", p.twice_s},
           {"xi", four_vector_json(p.xi)},
           {"local_bracket", bracket_name(p.local)},
           {"skipped", p.skipped}};
    if (!p.skipped) {
      j["local_magnitude"] = p.local_kernel.magnitude();
      j["nonlocal_magnitude"] = p.nonlocal_kernel.magnitude();
      j["ratio"] = p.ratio;
      j["monotone"] = p.monotone;
      j["local_magnitudes"] = p.local_kernel.magnitudes();
    }
    points.push_back(std::move(j));
  }
  return Json{{"verdict", verdict_name(r.verdict)}, {"points", std::move(points)}, {"warnings", r.warnings}};
}

Json mackey_json(const MackeyReport& r) {
  Json orbits = Json::array();
  for (const OrbitData& o : r.orbits)
    orbits.push_back(Json{{"characters", o.orbit}, {"stabilizer", o.stabilizer}, {"section", o.section}});
  Json classes = Json::array();
  for (const InducedClass& c : r.classes)
    classes.push_back(Json{{"orbit", c.orbit},
                           {"irrep", c.irrep},
                           {"dim", c.dim},
                           {"orbit_size", c.orbit_size},
                           {"stabilizer_order", c.stabilizer_order},
                           {"norm_times_order", c.norm_times_order},
                           {"norm", c.norm},
                           {"homomorphism_defect", c.homomorphism_defect},
                           {"unitarity_defect", c.unitarity_defect},
                           {"restriction_ok", c.restriction_ok},
                           {"imprimitivity",
                            {{"resolution_defect", c.imprimitivity.resolution_defect},
                             {"orthogonality_defect", c.imprimitivity.orthogonality_defect},
                             {"covariance_defect", c.imprimitivity.covariance_defect},
                             {"passed", c.imprimitivity.passed}}}});
  return Json{{"group", r.group},
              {"order", r.order},
              {"exact_order", r.exact_order},
              {"orbits", std::move(orbits)},
              {"classes", std::move(classes)},
              {"sum_dim_squared", r.sum_dim_squared},
              {"assertions",
               {{"irreducible", r.irreducible},
                {"inequivalent", r.inequivalent},
                {"complete", r.complete},
                {"imprimitive", r.imprimitive}}},
              {"failures", r.failures},
              {"passed", r.passed()}};
}

SemidirectProduct group_from_json(const Json& j, const std::string& name) {
  if (!j.is_object()) throw DomainError("group spec: expected an object with keys A, H, action");
  for (const char* key : {"A", "H", "action"})
    if (!j.contains(key)) throw DomainError(std::string("group spec: missing '") + key + "'");
  FiniteGroup a = FiniteGroup::from_table(table_from_json(j.at("A"), "A"));
  FiniteGroup h = FiniteGroup::from_table(table_from_json(j.at("H"), "H"));
  return SemidirectProduct(name, std::move(a), std::move(h), table_from_json(j.at("action"), "action"));
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
  }
}

}  // namespace poincare
