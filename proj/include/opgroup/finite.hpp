#pragma once

// Finite groups given by Cayley tables, operators on them, and exhaustive
// checks of the operator identities:
//
//   Endo        P(gh) = P(g) P(h)
//   DiffPlus1   D(gh) = D(g) (g D(h) g^-1)
//   DiffMinus1  D(gh) = (g D(h) g^-1) D(g)
//   RBPlus1     B(g) B(h) = B(g B(g) h B(g)^-1)
//   RBMinus1    C(g) C(h) = C((C(g) h C(g)^-1) g)
//   Crossed     f(gh) = f(g) act(g, f(h))

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "opgroup/operated.hpp"

namespace opgroup {

using ElementIndex = std::size_t;

inline constexpr std::size_t kDefaultCheckOrderBound = 64;
inline constexpr std::size_t kDefaultEnumerationOrderBound = 12;
inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

class FiniteGroup {
 public:
  using element_type = ElementIndex;

  /// Validates every group axiom exhaustively; see validate_group.
  static FiniteGroup from_indices(std::vector<std::string> names,
                                  std::vector<std::vector<ElementIndex>> table,
                                  std::size_t order_bound = kDefaultCheckOrderBound);

  std::size_t order() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(ElementIndex i) const { return names_.at(i); }
  std::optional<ElementIndex> index_of(std::string_view name) const;
  /// Throws ValidationError for an unknown name.
  ElementIndex require_index(std::string_view name) const;

  ElementIndex identity() const { return identity_; }
  ElementIndex multiply(ElementIndex a, ElementIndex b) const { return table_[a * order() + b]; }
  ElementIndex invert(ElementIndex a) const { return inverse_[a]; }
  ElementIndex conjugate(ElementIndex g, ElementIndex h) const {
    return multiply(multiply(g, h), invert(g));
  }
  bool is_abelian() const;

  friend bool operator==(const FiniteGroup&, const FiniteGroup&) = default;

 private:
  FiniteGroup() = default;

  std::vector<std::string> names_;
  std::vector<ElementIndex> table_;
  std::vector<ElementIndex> inverse_;
  ElementIndex identity_ = 0;
};

/// Builds a group from a table of element names, checking: unique names,
/// square shape and closure, an identity, inverses, associativity (the
/// violating triple is reported). Throws ValidationError.
FiniteGroup validate_group(const std::vector<std::string>& names,
                           const std::vector<std::vector<std::string>>& table,
                           std::size_t order_bound = kDefaultCheckOrderBound);

/// A total self-map, images[i] = P(element i).
struct OperatorMap {
  std::vector<ElementIndex> images;

  ElementIndex operator()(ElementIndex g) const { return images[g]; }
  friend bool operator==(const OperatorMap&, const OperatorMap&) = default;
  friend auto operator<=>(const OperatorMap&, const OperatorMap&) = default;
};

OperatorMap identity_operator(const FiniteGroup& g);
OperatorMap inversion_operator(const FiniteGroup& g);
/// Sends everything to the identity element.
OperatorMap trivial_operator(const FiniteGroup& g);
/// Throws ValidationError if the map has the wrong length or leaves the group.
void validate_operator(const FiniteGroup& g, const OperatorMap& op);

/// A left action of the group on itself: act(x, a) = table[x][a].
/// Validation requires act(e, a) = a, act(xy, a) = act(x, act(y, a)), and
/// that each act(x, .) is an automorphism.
class GroupAction {
 public:
  static GroupAction from_table(const FiniteGroup& g, std::vector<std::vector<ElementIndex>> table);
  static GroupAction adjoint(const FiniteGroup& g);
  static GroupAction trivial(const FiniteGroup& g);

  ElementIndex act(ElementIndex x, ElementIndex a) const { return table_[x * order_ + a]; }
  std::size_t order() const { return order_; }

 private:
  GroupAction(std::size_t order, std::vector<ElementIndex> table)
      : order_(order), table_(std::move(table)) {}

  std::size_t order_;
  std::vector<ElementIndex> table_;
};

enum class Law { kEndo, kDiffPlus1, kDiffMinus1, kRBPlus1, kRBMinus1, kCrossed };

struct IdentityKind {
  Law law;
  std::optional<GroupAction> action;  // present iff law == kCrossed

  static IdentityKind endo() { return {Law::kEndo, std::nullopt}; }
  static IdentityKind diff_plus1() { return {Law::kDiffPlus1, std::nullopt}; }
  static IdentityKind diff_minus1() { return {Law::kDiffMinus1, std::nullopt}; }
  static IdentityKind rb_plus1() { return {Law::kRBPlus1, std::nullopt}; }
  static IdentityKind rb_minus1() { return {Law::kRBMinus1, std::nullopt}; }
  static IdentityKind crossed(GroupAction action) { return {Law::kCrossed, std::move(action)}; }
};

std::string law_name(Law law);

struct Counterexample {
  ElementIndex first;
  ElementIndex second;
  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Tests the law over all ordered pairs in element order; nullopt means it
/// holds. Throws BudgetExceeded above `order_bound`, ValidationError for a
/// Crossed kind without an action.
std::optional<Counterexample> check_identity(const FiniteGroup& g, const OperatorMap& op,
                                             const IdentityKind& kind,
                                             std::size_t order_bound = kDefaultCheckOrderBound);

struct EnumerationOptions {
  /// Upper bound on |G|^|G|, the size of the raw candidate space.
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::size_t order_bound = kDefaultEnumerationOrderBound;
};

/// Every operator satisfying the law, in lexicographic order of image vectors.
std::vector<OperatorMap> enumerate_operators(const FiniteGroup& g, const IdentityKind& kind,
                                             EnumerationOptions options = {});

bool is_subgroup(const FiniteGroup& g, std::span<const ElementIndex> elements);

/// For subgroups G1, G2 with G = G1 G2 and G1 n G2 = 1, the map g1 g2 -> g1.
/// Throws ValidationError when a precondition fails.
OperatorMap projection_operator(const FiniteGroup& g, std::span<const ElementIndex> first,
                                std::span<const ElementIndex> second);

/// g -> P(g^-1). Exchanges weight 1 and weight -1 Rota-Baxter operators.
OperatorMap convert_weight(const OperatorMap& op, const FiniteGroup& g);

/// A finite group with an operator, as an operated carrier.
class FiniteOperated {
 public:
  using element_type = ElementIndex;

  FiniteOperated(FiniteGroup group, OperatorMap op);

  const FiniteGroup& group() const { return group_; }
  const OperatorMap& op() const { return op_; }

  ElementIndex identity() const { return group_.identity(); }
  ElementIndex multiply(ElementIndex a, ElementIndex b) const { return group_.multiply(a, b); }
  ElementIndex invert(ElementIndex a) const { return group_.invert(a); }
  ElementIndex apply(ElementIndex a) const { return op_(a); }

 private:
  FiniteGroup group_;
  OperatorMap op_;
};

/// Exhaustively checks the weight-1 differential law; throws LawViolation.
DiffTarget<FiniteOperated> make_diff_target(FiniteGroup group, OperatorMap op);
/// Exhaustively checks the weight-1 Rota-Baxter relation; throws LawViolation.
RBTarget<FiniteOperated> make_rb_target(FiniteGroup group, OperatorMap op);

}  // namespace opgroup
