#ifndef POINCARE_VERIFY_HPP
#define POINCARE_VERIFY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "poincare/json_io.hpp"

namespace poincare {

struct VerifyConfig {
  std::uint64_t seed = 1;
  int samples = 200;    // random draws per algebraic invariant
  int max_twice_spin = 3;
  double mass = 1.0;
  GridSpec grid{1.0, 6.0, 32, "lebedev26"};
  KernelConfig kernel;
  std::map<std::string, double> tolerance;  // overrides by invariant name
  /// Negative control: use [[0, 1], [1, 0]] in place of the symplectic matrix.
  bool corrupt_epsilon = false;
};

/// "max": passes iff value <= bound. "min": passes iff value >= bound.
struct InvariantResult {
  std::string module;
  std::string name;  // module.invariant
  std::string kind = "max";
  double bound = 0.0;
  double value = 0.0;
  bool passed = false;
  std::string note;
};

struct VerifyReport {
  std::vector<InvariantResult> invariants;
  bool passed() const;
  std::vector<std::string> failures() const;
};

/// Names of every invariant, in report order.
std::vector<std::string> verify_invariant_names();

/// Runs the invariant suites of all modules. Throws DomainError on an invalid config
/// (including a tolerance override for an unknown invariant).
VerifyReport run_verify(const VerifyConfig& config);

Json verify_json(const VerifyConfig& config, const VerifyReport& report);

}  // namespace poincare

#endif  // POINCARE_VERIFY_HPP
