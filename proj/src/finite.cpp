#include "opgroup/finite.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "opgroup/error.hpp"

namespace opgroup {

namespace {

std::string triple_text(const std::vector<std::string>& names, ElementIndex a, ElementIndex b,
                        ElementIndex c) {
  return "(" + names[a] + ", " + names[b] + ", " + names[c] + ")";
}

void require_order(std::size_t order, std::size_t bound, const char* what) {
  if (order > bound) {
    throw BudgetExceeded(std::string(what) + ": group order " + std::to_string(order) +
                         " exceeds the bound " + std::to_string(bound));
  }
}

enum class Verdict { kHolds, kViolated, kUnknown };

// Evaluates one instance (x, y) of the law. `get` returns the operator image
// or nullopt when still unassigned (during enumeration).
template <class Get>
Verdict evaluate_law(const FiniteGroup& g, const IdentityKind& kind, Get&& get, ElementIndex x,
                     ElementIndex y) {
  auto verdict = [](bool ok) { return ok ? Verdict::kHolds : Verdict::kViolated; };
  switch (kind.law) {
    case Law::kEndo: {
      auto px = get(x), py = get(y), pxy = get(g.multiply(x, y));
      if (!px || !py || !pxy) return Verdict::kUnknown;
      return verdict(*pxy == g.multiply(*px, *py));
    }
    case Law::kDiffPlus1: {
      auto dx = get(x), dy = get(y), dxy = get(g.multiply(x, y));
      if (!dx || !dy || !dxy) return Verdict::kUnknown;
      return verdict(*dxy == g.multiply(*dx, g.conjugate(x, *dy)));
    }
    case Law::kDiffMinus1: {
      auto dx = get(x), dy = get(y), dxy = get(g.multiply(x, y));
      if (!dx || !dy || !dxy) return Verdict::kUnknown;
      return verdict(*dxy == g.multiply(g.conjugate(x, *dy), *dx));
    }
    case Law::kRBPlus1: {
      auto bx = get(x), by = get(y);
      if (!bx || !by) return Verdict::kUnknown;
      auto barg = get(g.multiply(x, g.conjugate(*bx, y)));
      if (!barg) return Verdict::kUnknown;
      return verdict(g.multiply(*bx, *by) == *barg);
    }
    case Law::kRBMinus1: {
      auto cx = get(x), cy = get(y);
      if (!cx || !cy) return Verdict::kUnknown;
      auto carg = get(g.multiply(g.conjugate(*cx, y), x));
      if (!carg) return Verdict::kUnknown;
      return verdict(g.multiply(*cx, *cy) == *carg);
    }
    case Law::kCrossed: {
      const GroupAction& act = *kind.action;
      auto fx = get(x), fy = get(y), fxy = get(g.multiply(x, y));
      if (!fx || !fy || !fxy) return Verdict::kUnknown;
      return verdict(*fxy == g.multiply(*fx, act.act(x, *fy)));
    }
  }
  return Verdict::kUnknown;
}

void require_action(const FiniteGroup& g, const IdentityKind& kind) {
  if (kind.law != Law::kCrossed) return;
  if (!kind.action) throw ValidationError("crossed homomorphism check needs a group action");
  if (kind.action->order() != g.order()) {
    throw ValidationError("group action has the wrong size for this group");
  }
}

}  // namespace

FiniteGroup FiniteGroup::from_indices(std::vector<std::string> names,
                                      std::vector<std::vector<ElementIndex>> table,
                                      std::size_t order_bound) {
  const std::size_t n = names.size();
  if (n == 0) throw ValidationError("empty group table");
  require_order(n, order_bound, "group validation");
  {
    std::set<std::string> seen;
    for (const auto& name : names) {
      if (name.empty()) throw ValidationError("empty element name");
      if (!seen.insert(name).second) throw ValidationError("duplicate element name '" + name + "'");
    }
  }
  if (table.size() != n) {
    throw ValidationError("table has " + std::to_string(table.size()) + " rows, expected " +
                          std::to_string(n));
  }
  FiniteGroup g;
  g.names_ = std::move(names);
  g.table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw ValidationError("row " + g.names_[i] + " has " + std::to_string(table[i].size()) +
                            " entries, expected " + std::to_string(n));
    }
    for (ElementIndex v : table[i]) {
      if (v >= n) throw ValidationError("table entry out of range in row " + g.names_[i]);
      g.table_.push_back(v);
    }
  }

  std::optional<ElementIndex> identity;
  for (ElementIndex e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (ElementIndex a = 0; a < n && ok; ++a) ok = g.multiply(e, a) == a && g.multiply(a, e) == a;
    if (ok) identity = e;
  }
  if (!identity) throw ValidationError("no identity element");
  g.identity_ = *identity;

  g.inverse_.assign(n, n);
  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      if (g.multiply(a, b) == g.identity_ && g.multiply(b, a) == g.identity_) {
        g.inverse_[a] = b;
        break;
      }
    }
    if (g.inverse_[a] == n) throw ValidationError("element " + g.names_[a] + " has no inverse");
  }

  for (ElementIndex a = 0; a < n; ++a) {
    for (ElementIndex b = 0; b < n; ++b) {
      const ElementIndex ab = g.multiply(a, b);
      for (ElementIndex c = 0; c < n; ++c) {
        if (g.multiply(ab, c) != g.multiply(a, g.multiply(b, c))) {
          throw ValidationError("associativity fails for " + triple_text(g.names_, a, b, c));
        }
      }
    }
  }
  return g;
}

FiniteGroup validate_group(const std::vector<std::string>& names,
                           const std::vector<std::vector<std::string>>& table,
                           std::size_t order_bound) {
  std::map<std::string, ElementIndex> index;
  for (ElementIndex i = 0; i < names.size(); ++i) {
    if (!index.emplace(names[i], i).second) {
      throw ValidationError("duplicate element name '" + names[i] + "'");
    }
  }
  std::vector<std::vector<ElementIndex>> rows;
  rows.reserve(table.size());
  for (const auto& row : table) {
    auto& out = rows.emplace_back();
    for (const auto& entry : row) {
      auto it = index.find(entry);
      if (it == index.end()) {
        throw ValidationError("table is not closed: '" + entry + "' is not an element");
      }
      out.push_back(it->second);
    }
  }
  return FiniteGroup::from_indices(names, std::move(rows), order_bound);
}

std::optional<ElementIndex> FiniteGroup::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ElementIndex>(it - names_.begin());
}

ElementIndex FiniteGroup::require_index(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw ValidationError("unknown element '" + std::string(name) + "'");
}

bool FiniteGroup::is_abelian() const {
  for (ElementIndex a = 0; a < order(); ++a) {
    for (ElementIndex b = 0; b < a; ++b) {
      if (multiply(a, b) != multiply(b, a)) return false;
    }
  }
  return true;
}

OperatorMap identity_operator(const FiniteGroup& g) {
  OperatorMap op;
  for (ElementIndex i = 0; i < g.order(); ++i) op.images.push_back(i);
  return op;
}

OperatorMap inversion_operator(const FiniteGroup& g) {
  OperatorMap op;
  for (ElementIndex i = 0; i < g.order(); ++i) op.images.push_back(g.invert(i));
  return op;
}

OperatorMap trivial_operator(const FiniteGroup& g) {
  return OperatorMap{std::vector<ElementIndex>(g.order(), g.identity())};
}

void validate_operator(const FiniteGroup& g, const OperatorMap& op) {
  if (op.images.size() != g.order()) {
    throw ValidationError("operator has " + std::to_string(op.images.size()) +
                          " images, expected " + std::to_string(g.order()));
  }
  for (ElementIndex v : op.images) {
    if (v >= g.order()) throw ValidationError("operator image out of range");
  }
}

GroupAction GroupAction::from_table(const FiniteGroup& g,
                                    std::vector<std::vector<ElementIndex>> table) {
  const std::size_t n = g.order();
  if (table.size() != n) throw ValidationError("action table has the wrong number of rows");
  std::vector<ElementIndex> flat;
  flat.reserve(n * n);
  for (const auto& row : table) {
    if (row.size() != n) throw ValidationError("action table row has the wrong length");
    for (ElementIndex v : row) {
      if (v >= n) throw ValidationError("action table entry out of range");
      flat.push_back(v);
    }
  }
  GroupAction action(n, std::move(flat));
  for (ElementIndex a = 0; a < n; ++a) {
    if (action.act(g.identity(), a) != a) {
      throw ValidationError("identity does not act trivially on " + g.name(a));
    }
  }
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex y = 0; y < n; ++y) {
      for (ElementIndex a = 0; a < n; ++a) {
        if (action.act(g.multiply(x, y), a) != action.act(x, action.act(y, a))) {
          throw ValidationError("action is not compatible with multiplication at " +
                                triple_text(g.names(), x, y, a));
        }
        if (action.act(x, g.multiply(y, a)) != g.multiply(action.act(x, y), action.act(x, a))) {
          throw ValidationError("action is not by automorphisms at " +
                                triple_text(g.names(), x, y, a));
        }
      }
    }
  }
  return action;
}

GroupAction GroupAction::adjoint(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<ElementIndex> flat;
  flat.reserve(n * n);
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex a = 0; a < n; ++a) flat.push_back(g.conjugate(x, a));
  }
  return GroupAction(n, std::move(flat));
}

GroupAction GroupAction::trivial(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<ElementIndex> flat;
  flat.reserve(n * n);
  for (ElementIndex x = 0; x < n; ++x) {
    for (ElementIndex a = 0; a < n; ++a) flat.push_back(a);
  }
  return GroupAction(n, std::move(flat));
}

std::string law_name(Law law) {
  switch (law) {
    case Law::kEndo: return "endo";
    case Law::kDiffPlus1: return "diff1";
    case Law::kDiffMinus1: return "diff-1";
    case Law::kRBPlus1: return "rb1";
    case Law::kRBMinus1: return "rb-1";
    case Law::kCrossed: return "crossed";
  }
  return "?";
}

std::optional<Counterexample> check_identity(const FiniteGroup& g, const OperatorMap& op,
                                             const IdentityKind& kind, std::size_t order_bound) {
  require_order(g.order(), order_bound, "check_identity");
  validate_operator(g, op);
  require_action(g, kind);
  auto get = [&](ElementIndex i) -> std::optional<ElementIndex> { return op(i); };
  for (ElementIndex x = 0; x < g.order(); ++x) {
    for (ElementIndex y = 0; y < g.order(); ++y) {
      if (evaluate_law(g, kind, get, x, y) == Verdict::kViolated) return Counterexample{x, y};
    }
  }
  return std::nullopt;
}

namespace {

class OperatorSearch {
 public:
  OperatorSearch(const FiniteGroup& g, const IdentityKind& kind)
      : g_(g), kind_(kind), n_(g.order()), partial_(n_, kUnassigned) {}

  std::vector<OperatorMap> run() {
    descend(0);
    return std::move(found_);
  }

 private:
  static constexpr ElementIndex kUnassigned = static_cast<ElementIndex>(-1);

  bool consistent() const {
    auto get = [&](ElementIndex i) -> std::optional<ElementIndex> {
      if (partial_[i] == kUnassigned) return std::nullopt;
      return partial_[i];
    };
    for (ElementIndex x = 0; x < n_; ++x) {
      for (ElementIndex y = 0; y < n_; ++y) {
        if (evaluate_law(g_, kind_, get, x, y) == Verdict::kViolated) return false;
      }
    }
    return true;
  }

  void descend(ElementIndex position) {
    if (position == n_) {
      found_.push_back(OperatorMap{partial_});
      return;
    }
    for (ElementIndex value = 0; value < n_; ++value) {
      partial_[position] = value;
      if (consistent()) descend(position + 1);
    }
    partial_[position] = kUnassigned;
  }

  const FiniteGroup& g_;
  const IdentityKind& kind_;
  std::size_t n_;
  std::vector<ElementIndex> partial_;
  std::vector<OperatorMap> found_;
};

}  // namespace

std::vector<OperatorMap> enumerate_operators(const FiniteGroup& g, const IdentityKind& kind,
                                             EnumerationOptions options) {
  require_order(g.order(), options.order_bound, "enumerate_operators");
  require_action(g, kind);
  // |G|^|G| against the budget, saturating.
  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (candidates > options.budget / g.order() + 1) {
      candidates = options.budget + 1;
      break;
    }
    candidates *= g.order();
  }
  if (candidates > options.budget) {
    throw BudgetExceeded("enumerate_operators: " + std::to_string(g.order()) + "^" +
                         std::to_string(g.order()) + " candidate maps exceed the budget of " +
                         std::to_string(options.budget));
  }
  return OperatorSearch(g, kind).run();
}

bool is_subgroup(const FiniteGroup& g, std::span<const ElementIndex> elements) {
  std::set<ElementIndex> set(elements.begin(), elements.end());
  if (set.empty() || !set.count(g.identity())) return false;
  for (ElementIndex a : set) {
    if (a >= g.order()) return false;
    for (ElementIndex b : set) {
      if (!set.count(g.multiply(a, b))) return false;
    }
  }
  return true;
}

OperatorMap projection_operator(const FiniteGroup& g, std::span<const ElementIndex> first,
                                std::span<const ElementIndex> second) {
  if (!is_subgroup(g, first)) throw ValidationError("first factor is not a subgroup");
  if (!is_subgroup(g, second)) throw ValidationError("second factor is not a subgroup");
  const std::size_t n = g.order();
  constexpr ElementIndex kNone = static_cast<ElementIndex>(-1);
  std::vector<ElementIndex> images(n, kNone);
  const std::set<ElementIndex> a(first.begin(), first.end());
  const std::set<ElementIndex> b(second.begin(), second.end());
  for (ElementIndex g1 : a) {
    for (ElementIndex g2 : b) images[g.multiply(g1, g2)] = g1;
  }
  if (std::find(images.begin(), images.end(), kNone) != images.end()) {
    throw ValidationError("factorization not exhaustive: G1 G2 does not cover the group");
  }
  for (ElementIndex x : a) {
    if (x != g.identity() && b.count(x)) {
      throw ValidationError("nontrivial intersection: " + g.name(x) + " lies in both factors");
    }
  }
  return OperatorMap{std::move(images)};
}

OperatorMap convert_weight(const OperatorMap& op, const FiniteGroup& g) {
  validate_operator(g, op);
  OperatorMap out;
  out.images.reserve(g.order());
  for (ElementIndex i = 0; i < g.order(); ++i) out.images.push_back(op(g.invert(i)));
  return out;
}

FiniteOperated::FiniteOperated(FiniteGroup group, OperatorMap op)
    : group_(std::move(group)), op_(std::move(op)) {
  validate_operator(group_, op_);
}

namespace {

void require_law(const FiniteGroup& g, const OperatorMap& op, const IdentityKind& kind) {
  if (auto c = check_identity(g, op, kind)) {
    throw LawViolation("operator violates the " + law_name(kind.law) + " law at (" +
                           g.name(c->first) + ", " + g.name(c->second) + ")",
                       c->first, c->second);
  }
}

}  // namespace

DiffTarget<FiniteOperated> make_diff_target(FiniteGroup group, OperatorMap op) {
  require_law(group, op, IdentityKind::diff_plus1());
  return DiffTarget<FiniteOperated>::attest(FiniteOperated(std::move(group), std::move(op)));
}

RBTarget<FiniteOperated> make_rb_target(FiniteGroup group, OperatorMap op) {
  require_law(group, op, IdentityKind::rb_plus1());
  return RBTarget<FiniteOperated>::attest(FiniteOperated(std::move(group), std::move(op)));
}

}  // namespace opgroup
