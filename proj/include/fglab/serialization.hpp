#pragma once

#include "fglab/stallings.hpp"
#include "fglab/theorem.hpp"
#include "fglab/word.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fglab {

struct KernelMap {
  std::int64_t d;
  std::vector<std::int64_t> images; // alphabet order
};

/// Subgroup description file:
///   {"alphabet": [...], "generators": ["x^3", "y", ...]}
///   {"alphabet": [...], "kernel": {"d": 3, "f": {"x": 1, "y": 0}}}
struct SubgroupDescription {
  Alphabet alphabet;
  std::vector<Word> generators;
  std::optional<KernelMap> kernel;

  SubgroupGraph graph() const;
  /// For kernels: the first generator mapped to 1 mod d, else the first one
  /// mapped to a unit. Unset for generator lists.
  std::optional<GenIndex> preferred_generator() const;
};

/// Throws ParseError on malformed input.
SubgroupDescription parse_subgroup(std::string_view json_text);
SubgroupDescription load_subgroup(const std::filesystem::path &path);

nlohmann::ordered_json to_json(const WitnessCertificate &cert);

/// Inverse of to_json; throws ParseError on schema violations.
WitnessCertificate certificate_from_json(const nlohmann::json &j);

} // namespace fglab
