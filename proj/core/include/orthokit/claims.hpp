#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orthokit/search.hpp"

namespace orthokit {

struct ClaimResult {
  int id = 0;
  std::string title;
  bool verdict = false;  // the checked facts hold
  double seconds = 0;
  double limit = 0;      // runtime bound in seconds
  std::string detail;

  bool within_limit() const { return seconds <= limit; }
  bool passed() const { return verdict && within_limit(); }
};

struct ClaimInfo {
  int id;
  std::string title;
  double limit;
};

const std::vector<ClaimInfo>& claim_list();

/// Runs every reproduction claim, or only `only`. Throws `UnknownName` for
/// an id that does not exist.
std::vector<ClaimResult> run_claims(std::optional<int> only = std::nullopt, const SearchOptions& options = {});

/// Seed and size of the randomized hierarchy sample.
inline constexpr unsigned kHierarchySeed = 20240607;
inline constexpr std::size_t kHierarchySamples = 100;

}  // namespace orthokit
