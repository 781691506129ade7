#include "opgroup/group_file.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "opgroup/error.hpp"

namespace opgroup {

namespace {

using nlohmann::json;

std::vector<std::string> name_list(const json& value, const std::string& key) {
  if (!value.is_array()) throw ValidationError("'" + key + "' must be a list of names");
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) throw ValidationError("'" + key + "' must contain only strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::vector<std::string>> name_matrix(const json& value, const std::string& key) {
  if (!value.is_array()) throw ValidationError("'" + key + "' must be a list of rows");
  std::vector<std::vector<std::string>> out;
  for (const auto& row : value) out.push_back(name_list(row, key));
  return out;
}

}  // namespace

GroupFile parse_group_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("group file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ValidationError("group file must be a JSON object");
  static const std::set<std::string> known{"elements", "table", "operator", "action", "subgroups"};
  for (const auto& [key, _] : doc.items()) {
    if (!known.count(key)) throw ValidationError("unknown key '" + key + "' in group file");
  }
  if (!doc.contains("elements")) throw ValidationError("group file lacks 'elements'");
  if (!doc.contains("table")) throw ValidationError("group file lacks 'table'");

  GroupFile out{validate_group(name_list(doc["elements"], "elements"),
                               name_matrix(doc["table"], "table")),
                std::nullopt, std::nullopt, {}};
  const FiniteGroup& g = out.group;

  if (doc.contains("operator")) {
    auto names = name_list(doc["operator"], "operator");
    if (names.size() != g.order()) {
      throw ValidationError("'operator' must list exactly one image per element");
    }
    OperatorMap op;
    for (const auto& n : names) op.images.push_back(g.require_index(n));
    out.op = std::move(op);
  }
  if (doc.contains("action")) {
    std::vector<std::vector<ElementIndex>> rows;
    for (const auto& row : name_matrix(doc["action"], "action")) {
      auto& r = rows.emplace_back();
      for (const auto& n : row) r.push_back(g.require_index(n));
    }
    out.action = GroupAction::from_table(g, std::move(rows));
  }
  if (doc.contains("subgroups")) {
    const json& subs = doc["subgroups"];
    if (!subs.is_object()) throw ValidationError("'subgroups' must map names to element lists");
    for (const auto& [name, members] : subs.items()) {
      std::vector<ElementIndex> idx;
      for (const auto& n : name_list(members, "subgroups." + name)) idx.push_back(g.require_index(n));
      out.subgroups.emplace(name, std::move(idx));
    }
  }
  return out;
}

GroupFile load_group_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open group file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_file(buf.str());
}

std::string write_group_file(const FiniteGroup& g, const std::optional<OperatorMap>& op,
                             const std::map<std::string, std::vector<ElementIndex>>& subgroups) {
  json doc = json::object();
  doc["elements"] = g.names();
  json table = json::array();
  for (ElementIndex a = 0; a < g.order(); ++a) {
    json row = json::array();
    for (ElementIndex b = 0; b < g.order(); ++b) row.push_back(g.name(g.multiply(a, b)));
    table.push_back(row);
  }
  doc["table"] = table;
  if (op) {
    json images = json::array();
    for (ElementIndex v : op->images) images.push_back(g.name(v));
    doc["operator"] = images;
  }
  if (!subgroups.empty()) {
    json subs = json::object();
    for (const auto& [name, members] : subgroups) {
      json list = json::array();
      for (ElementIndex v : members) list.push_back(g.name(v));
      subs[name] = list;
    }
    doc["subgroups"] = subs;
  }
  return doc.dump(2) + "\n";
}

}  // namespace opgroup
