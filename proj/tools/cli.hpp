#pragma once

// Command implementations behind the `opgroup` executable. Each command
// returns an OutputRecord; `run` parses arguments and prints records.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opgroup/finite.hpp"
#include "opgroup/group_file.hpp"

namespace opgroup::cli {

enum class Theory { kOperated, kDiff, kRb };

Theory parse_theory(std::string_view name);
IdentityKind parse_kind(std::string_view name, const GroupFile& file);

struct OutputRecord {
  bool ok = true;
  /// One entry per output line.
  std::vector<std::string> results;
  std::string diagnostics;

  static OutputRecord success(std::vector<std::string> results) { return {true, std::move(results), {}}; }
  static OutputRecord failure(std::string diagnostics, std::vector<std::string> results = {}) {
    return {false, std::move(results), std::move(diagnostics)};
  }
};

/// Resolves --operator: "file" (the file's operator), "identity",
/// "inversion", "trivial", or "projection:G1,G2" naming two file subgroups.
OperatorMap resolve_operator(const GroupFile& file, std::string_view spec);

OutputRecord cmd_normalize(Theory theory, std::string_view expr);
OutputRecord cmd_mul(Theory theory, std::string_view lhs, std::string_view rhs);
OutputRecord cmd_apply(Theory theory, std::string_view expr);
OutputRecord cmd_depth(Theory theory, std::string_view expr);
OutputRecord cmd_breadth(Theory theory, std::string_view expr);
/// `assignment` is "x=name,y=name".
OutputRecord cmd_eval(Theory theory, std::string_view expr, const GroupFile& file,
                      std::string_view assignment, std::string_view operator_spec = "file");
OutputRecord cmd_check(const GroupFile& file, std::string_view kind,
                       std::string_view operator_spec = "file");
OutputRecord cmd_enumerate(const GroupFile& file, std::string_view kind,
                           std::uint64_t budget = kDefaultEnumerationBudget);

/// Entry point; returns the process exit code (0 iff every record is ok).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace opgroup::cli
