#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orthokit {

/// Shipped derivation texts. Mutated variants record the step at which the
/// checker must reject them.
struct SampleDerivation {
  std::string name;
  std::string text;
  std::optional<std::size_t> rejected_at;
};

const std::vector<SampleDerivation>& sample_derivations();
const SampleDerivation& find_sample(std::string_view name);

}  // namespace orthokit
