#ifndef FATLAB_ACCEPTANCE_HPP
#define FATLAB_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace fatlab {

/// One verification criterion of the shipped claim suite. Runtime limits
/// (where a criterion carries one) count toward pass/fail.
struct CriterionResult {
  int id{0};
  std::string desc;
  bool pass{true};
  double seconds{0.0};
  std::vector<std::string> notes;  // failure details and flagged observations
};

struct AcceptanceOptions {
  std::uint64_t seed{2026};
  int threads{1};
};

/// Runs the full claim suite in order and reports each criterion.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts);

}  // namespace fatlab

#endif
