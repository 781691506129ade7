#include "cli.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "opgroup/differential.hpp"
#include "opgroup/error.hpp"
#include "opgroup/operated.hpp"
#include "opgroup/rota_baxter.hpp"
#include "opgroup/word.hpp"

namespace opgroup::cli {

namespace {

Word parse_bracketed(Theory theory, std::string_view expr) {
  Word w = parse(expr, ParseOptions{.allow_b_alias = true});
  if (theory == Theory::kRb) {
    if (auto violation = rb_violation(w)) throw NotRbWord("not a Rota-Baxter word: " + *violation);
  }
  return w;
}

template <class F>
OutputRecord guarded(F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return OutputRecord::failure(e.what());
  } catch (const std::invalid_argument& e) {
    return OutputRecord::failure(e.what());
  }
}

std::vector<std::pair<std::string, std::string>> split_assignment(std::string_view text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size()) {
      throw std::invalid_argument("malformed assignment '" + std::string(item) +
                                  "', expected gen=element");
    }
    std::string gen(item.substr(0, eq));
    if (!is_identifier(gen)) throw std::invalid_argument("invalid generator name '" + gen + "'");
    out.emplace_back(std::move(gen), std::string(item.substr(eq + 1)));
    start = end + 1;
  }
  return out;
}

Assignment<ElementIndex> resolve_assignment(const FiniteGroup& g, std::string_view text) {
  Assignment<ElementIndex> f;
  for (const auto& [gen, element] : split_assignment(text)) {
    if (!f.emplace(gen, g.require_index(element)).second) {
      throw std::invalid_argument("generator '" + gen + "' assigned twice");
    }
  }
  return f;
}

std::string format_map(const FiniteGroup& g, const OperatorMap& op) {
  std::string out;
  for (ElementIndex v : op.images) {
    if (!out.empty()) out += ' ';
    out += g.name(v);
  }
  return out;
}

}  // namespace

Theory parse_theory(std::string_view name) {
  if (name == "operated") return Theory::kOperated;
  if (name == "diff") return Theory::kDiff;
  if (name == "rb") return Theory::kRb;
  throw std::invalid_argument("unknown theory '" + std::string(name) + "' (operated, diff, rb)");
}

IdentityKind parse_kind(std::string_view name, const GroupFile& file) {
  if (name == "endo") return IdentityKind::endo();
  if (name == "diff1") return IdentityKind::diff_plus1();
  if (name == "diff-1") return IdentityKind::diff_minus1();
  if (name == "rb1") return IdentityKind::rb_plus1();
  if (name == "rb-1") return IdentityKind::rb_minus1();
  if (name == "crossed") {
    if (!file.action) throw ValidationError("kind 'crossed' needs an 'action' in the group file");
    return IdentityKind::crossed(*file.action);
  }
  if (name == "crossed-adjoint") return IdentityKind::crossed(GroupAction::adjoint(file.group));
  throw std::invalid_argument("unknown kind '" + std::string(name) +
                              "' (endo, diff1, diff-1, rb1, rb-1, crossed, crossed-adjoint)");
}

OperatorMap resolve_operator(const GroupFile& file, std::string_view spec) {
  const FiniteGroup& g = file.group;
  if (spec == "file") {
    if (!file.op) throw ValidationError("the group file has no 'operator'");
    return *file.op;
  }
  if (spec == "identity") return identity_operator(g);
  if (spec == "inversion") return inversion_operator(g);
  if (spec == "trivial") return trivial_operator(g);
  constexpr std::string_view kProjection = "projection:";
  if (spec.substr(0, kProjection.size()) == kProjection) {
    std::string_view rest = spec.substr(kProjection.size());
    std::size_t comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw std::invalid_argument("projection needs two subgroup names: projection:G1,G2");
    }
    auto subgroup = [&](std::string_view name) -> const std::vector<ElementIndex>& {
      auto it = file.subgroups.find(std::string(name));
      if (it == file.subgroups.end()) {
        throw ValidationError("unknown subgroup '" + std::string(name) + "'");
      }
      return it->second;
    };
    return projection_operator(g, subgroup(rest.substr(0, comma)), subgroup(rest.substr(comma + 1)));
  }
  throw std::invalid_argument("unknown operator '" + std::string(spec) +
                              "' (file, identity, inversion, trivial, projection:G1,G2)");
}

OutputRecord cmd_normalize(Theory theory, std::string_view expr) {
  return guarded([&] {
    if (theory == Theory::kDiff) return OutputRecord::success({to_string(parse_diff(expr))});
    return OutputRecord::success({to_string(parse_bracketed(theory, expr))});
  });
}

OutputRecord cmd_mul(Theory theory, std::string_view lhs, std::string_view rhs) {
  return guarded([&] {
    switch (theory) {
      case Theory::kDiff:
        return OutputRecord::success({to_string(mul(parse_diff(lhs), parse_diff(rhs)))});
      case Theory::kRb:
        return OutputRecord::success(
            {to_string(diamond(parse_bracketed(theory, lhs), parse_bracketed(theory, rhs)))});
      case Theory::kOperated:
        break;
    }
    return OutputRecord::success(
        {to_string(mul(parse_bracketed(theory, lhs), parse_bracketed(theory, rhs)))});
  });
}

OutputRecord cmd_apply(Theory theory, std::string_view expr) {
  return guarded([&] {
    if (theory == Theory::kDiff) return OutputRecord::success({to_string(differentiate(parse_diff(expr)))});
    return OutputRecord::success({to_string(rb_op(parse_bracketed(theory, expr)))});
  });
}

OutputRecord cmd_depth(Theory theory, std::string_view expr) {
  return guarded([&] {
    if (theory == Theory::kDiff) {
      parse_diff(expr);
      return OutputRecord::success({"0"});
    }
    return OutputRecord::success({std::to_string(depth(parse_bracketed(theory, expr)))});
  });
}

OutputRecord cmd_breadth(Theory theory, std::string_view expr) {
  return guarded([&] {
    if (theory == Theory::kDiff) return OutputRecord::success({std::to_string(parse_diff(expr).size())});
    return OutputRecord::success({std::to_string(breadth(parse_bracketed(theory, expr)))});
  });
}

OutputRecord cmd_eval(Theory theory, std::string_view expr, const GroupFile& file,
                      std::string_view assignment, std::string_view operator_spec) {
  return guarded([&] {
    const FiniteGroup& g = file.group;
    OperatorMap op = resolve_operator(file, operator_spec);
    Assignment<ElementIndex> f = resolve_assignment(g, assignment);
    ElementIndex value = 0;
    switch (theory) {
      case Theory::kOperated:
        value = eval_operated(parse_bracketed(theory, expr), f, FiniteOperated(g, op));
        break;
      case Theory::kDiff: {
        DiffWord w = parse_diff(expr);
        value = eval_diff(w, f, make_diff_target(g, op));
        break;
      }
      case Theory::kRb: {
        Word w = parse_bracketed(theory, expr);
        value = eval_rb(w, f, make_rb_target(g, op));
        break;
      }
    }
    return OutputRecord::success({g.name(value)});
  });
}

OutputRecord cmd_check(const GroupFile& file, std::string_view kind, std::string_view operator_spec) {
  return guarded([&] {
    const FiniteGroup& g = file.group;
    IdentityKind k = parse_kind(kind, file);
    OperatorMap op = resolve_operator(file, operator_spec);
    if (auto c = check_identity(g, op, k)) {
      return OutputRecord::failure(
          "operator violates the " + law_name(k.law) + " law at (" + g.name(c->first) + ", " +
              g.name(c->second) + ")",
          {"counterexample " + g.name(c->first) + " " + g.name(c->second)});
    }
    return OutputRecord::success({"pass"});
  });
}

OutputRecord cmd_enumerate(const GroupFile& file, std::string_view kind, std::uint64_t budget) {
  return guarded([&] {
    IdentityKind k = parse_kind(kind, file);
    EnumerationOptions options;
    options.budget = budget;
    auto maps = enumerate_operators(file.group, k, options);
    std::vector<std::string> lines;
    for (const auto& m : maps) lines.push_back(format_map(file.group, m));
    lines.push_back("count " + std::to_string(maps.size()));
    return OutputRecord::success(std::move(lines));
  });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Free operated, differential and Rota-Baxter groups", "opgroup"};
  app.require_subcommand(1, 1);

  std::string theory_name = "operated";
  std::string group_path;
  std::string assignment;
  std::string kind;
  std::string operator_spec = "file";
  std::uint64_t budget = kDefaultEnumerationBudget;
  bool json_output = false;

  app.add_option("--theory", theory_name, "operated, diff or rb")->capture_default_str();
  app.add_option("--group", group_path, "group file (JSON)");
  app.add_option("--map", assignment, "generator assignment x=name,y=name");
  app.add_option("--kind", kind, "endo, diff1, diff-1, rb1, rb-1, crossed, crossed-adjoint");
  app.add_option("--operator", operator_spec,
                 "file, identity, inversion, trivial or projection:G1,G2")
      ->capture_default_str();
  app.add_option("--budget", budget, "enumeration budget on |G|^|G|")->capture_default_str();
  app.add_flag("--json", json_output, "print one JSON record per line");
  app.fallthrough();

  std::string expr, lhs, rhs;
  auto* normalize = app.add_subcommand("normalize", "print the canonical form");
  normalize->add_option("expr", expr)->required();
  auto* mul_cmd = app.add_subcommand("mul", "multiply two words");
  mul_cmd->add_option("lhs", lhs)->required();
  mul_cmd->add_option("rhs", rhs)->required();
  auto* apply = app.add_subcommand("apply", "apply the operator");
  apply->add_option("expr", expr)->required();
  auto* depth_cmd = app.add_subcommand("depth", "bracket nesting depth");
  depth_cmd->add_option("expr", expr)->required();
  auto* breadth_cmd = app.add_subcommand("breadth", "number of atoms");
  breadth_cmd->add_option("expr", expr)->required();
  auto* eval = app.add_subcommand("eval", "evaluate in a finite operated group");
  eval->add_option("expr", expr)->required();
  auto* check = app.add_subcommand("check", "check an operator identity exhaustively");
  auto* enumerate = app.add_subcommand("enumerate", "list all operators satisfying a law");
  for (auto* sub : {normalize, mul_cmd, apply, depth_cmd, breadth_cmd, eval, check, enumerate}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  OutputRecord record;
  auto need_group = [&]() -> std::optional<GroupFile> {
    if (group_path.empty()) {
      record = OutputRecord::failure("--group is required for this command");
      return std::nullopt;
    }
    try {
      return load_group_file(group_path);
    } catch (const Error& e) {
      record = OutputRecord::failure(e.what());
      return std::nullopt;
    }
  };

  std::optional<Theory> theory;
  try {
    theory = parse_theory(theory_name);
  } catch (const std::invalid_argument& e) {
    record = OutputRecord::failure(e.what());
  }

  if (theory) {
    if (normalize->parsed()) {
      record = cmd_normalize(*theory, expr);
    } else if (mul_cmd->parsed()) {
      record = cmd_mul(*theory, lhs, rhs);
    } else if (apply->parsed()) {
      record = cmd_apply(*theory, expr);
    } else if (depth_cmd->parsed()) {
      record = cmd_depth(*theory, expr);
    } else if (breadth_cmd->parsed()) {
      record = cmd_breadth(*theory, expr);
    } else if (eval->parsed()) {
      if (auto file = need_group()) record = cmd_eval(*theory, expr, *file, assignment, operator_spec);
    } else if (check->parsed() || enumerate->parsed()) {
      if (kind.empty()) {
        record = OutputRecord::failure("--kind is required for this command");
      } else if (auto file = need_group()) {
        record = check->parsed() ? cmd_check(*file, kind, operator_spec)
                                 : cmd_enumerate(*file, kind, budget);
      }
    }
  }

  if (json_output) {
    for (const auto& line : record.results) {
      nlohmann::ordered_json j;
      j["status"] = record.ok ? "ok" : "error";
      j["result"] = line;
      j["diagnostics"] = record.diagnostics;
      out << j.dump() << '\n';
    }
    if (record.results.empty()) {
      nlohmann::ordered_json j;
      j["status"] = record.ok ? "ok" : "error";
      j["result"] = nullptr;
      j["diagnostics"] = record.diagnostics;
      out << j.dump() << '\n';
    }
  } else {
    for (const auto& line : record.results) out << line << '\n';
  }
  if (!record.ok) err << "error: " << record.diagnostics << '\n';
  return record.ok ? 0 : 1;
}

}  // namespace opgroup::cli
