#ifndef POINCARE_JSON_IO_HPP
#define POINCARE_JSON_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "poincare/fields.hpp"
#include "poincare/mackey.hpp"
#include "poincare/spinstat.hpp"

namespace poincare {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// {"rows", "cols", "data"}: data row-major as [re, im] pairs.
Json matrix_json(const MatX& m);
MatX matrix_from_json(const Json& j);

Json four_vector_json(const FourVector& x);
FourVector four_vector_from_json(const Json& j);

Json grid_spec_json(const GridSpec& spec);
GridSpec grid_spec_from_json(const Json& j);

/// {"schema", "mass", "twice_spin", "grid", "amplitudes"}; amplitudes row per node.
Json wave_json(const WaveFunction& f);
WaveFunction wave_from_json(const Json& j);

/// Wave-function layout plus "layout", "section" and (pf) "undotted".
Json field_json(const Field& field);
Field field_from_json(const Json& j);

Json kernel_json(const KernelSequence& k);
Json statistics_json(const StatisticsReport& r);
Json mackey_json(const MackeyReport& r);

/// {"A": table, "H": table, "action": table}, 0-based. Validation errors throw DomainError.
SemidirectProduct group_from_json(const Json& j, const std::string& name = "custom");

/// Writes to a sibling temporary and renames it over `path`.
void write_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace poincare

#endif  // POINCARE_JSON_IO_HPP
