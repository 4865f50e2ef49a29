#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "commulab/report.hpp"

namespace commulab {

/// Per-run knobs; every field has a reproducible default baked into the
/// registry entry.
struct CheckConfig {
  std::optional<std::string> ring_override;
  std::optional<std::uint64_t> seed_override;
  std::optional<std::uint64_t> enumeration_budget;
  std::optional<std::size_t> groebner_pair_budget;
};

/// One registered verification: a theorem instance (T1..T14), a
/// counterexample (C1..C5) or a dimension experiment (D1..D6).
struct RegistryEntry {
  std::string id;
  std::string claim;  // the mathematical statement being machine-checked
  std::uint64_t default_seed;
  bool in_quick_profile;
};

const std::vector<RegistryEntry>& registry_entries();

/// Runs one registered check. Unknown ids throw std::invalid_argument.
CheckReport run_check(const std::string& id, const CheckConfig& config = {});

enum class Profile { Quick, Full, Extended };

Profile profile_from_name(const std::string& name);

/// quick = everything except T9 and D6; full adds T9; extended adds D6.
/// Reports come back in registry order regardless of worker count.
std::vector<CheckReport> run_all(Profile profile, const CheckConfig& config = {},
                                 int workers = 1);

}  // namespace commulab
