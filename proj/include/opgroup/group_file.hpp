#pragma once

// Group files: a JSON object with the keys
//
//   "elements"   list of element names (required)
//   "table"      Cayley table, a list of rows of element names (required)
//   "operator"   images of the elements, parallel to "elements" (optional)
//   "action"     action[x][a] = name of act(x, a) (optional)
//   "subgroups"  object mapping a subgroup name to a list of element names (optional)
//
// Any other key is rejected.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opgroup/finite.hpp"

namespace opgroup {

struct GroupFile {
  FiniteGroup group;
  std::optional<OperatorMap> op;
  std::optional<GroupAction> action;
  std::map<std::string, std::vector<ElementIndex>> subgroups;
};

/// Throws ValidationError on malformed content or an invalid group.
GroupFile parse_group_file(std::string_view text);
GroupFile load_group_file(const std::filesystem::path& path);

std::string write_group_file(const FiniteGroup& g, const std::optional<OperatorMap>& op = std::nullopt,
                             const std::map<std::string, std::vector<ElementIndex>>& subgroups = {});

}  // namespace opgroup
