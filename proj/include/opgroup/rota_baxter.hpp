#pragma once

// The free Rota-Baxter group: Rota-Baxter words with the diamond product and
// the bracket as Rota-Baxter operator.
//
// A Rota-Baxter word is a reduced bracketed word with no two adjacent
// brackets of the same sign, at any nesting level. The diamond product
// concatenates and then merges same-sign bracket pairs:
//
//   <a> <> <b>         = < a <> AD_<a>(b) >
//   <a>^-1 <> <b>^-1   = (<b> <> <a>)^-1
//
// re-normalizing after every cancellation, so a merge may cascade along the
// seam between the two factors.

#include <cstddef>
#include <optional>
#include <string>

#include "opgroup/operated.hpp"
#include "opgroup/word.hpp"

namespace opgroup {

struct DiamondOptions {
  /// Maximum number of bracket merges in one top-level call.
  std::size_t step_limit = 1'000'000;
};

bool is_rb_word(const Word& w);

/// Describes the first same-sign bracket adjacency (outermost level first),
/// or nullopt for a Rota-Baxter word.
std::optional<std::string> rb_violation(const Word& w);

/// Product of the free Rota-Baxter group, computed by the case analysis on
/// standard factorizations (seam merging with cascades).
/// Throws NotRbWord for non-RB arguments, RecursionGuardExceeded on runaway.
Word diamond(const Word& u, const Word& v, DiamondOptions options = {});

/// Independent route to the same product: concatenate, then rewrite the
/// leftmost redex (inverse pair, ++ bracket pair, -- bracket pair) until none
/// remains.
Word diamond_rewrite(const Word& u, const Word& v, DiamondOptions options = {});

/// The twist AD_u(vbar) for a positive bracket u, by its branch formula.
/// Throws std::invalid_argument if u is not a positive bracket.
Word ad_diamond(const Atom& u, const Word& vbar, DiamondOptions options = {});

/// The Rota-Baxter operator of the free object: w -> <w>.
Word rb_op(const Word& w);
/// Group inverse in the free Rota-Baxter group (reverse and flip signs).
Word rb_inv(const Word& w);

/// The unique Rota-Baxter homomorphism extending f:
/// <w> -> B(eval w), <w>^-1 -> B(eval w)^-1, words -> products of atoms.
template <OperatedCarrier G>
typename G::element_type eval_rb(const Word& w, const Assignment<typename G::element_type>& f,
                                 const RBTarget<G>& target) {
  return detail::eval_bracketed(w, f, target.carrier());
}

/// (RBW, diamond, <.>) as an operated carrier.
struct FreeRotaBaxterGroup {
  using element_type = Word;
  Word identity() const { return Word(); }
  Word multiply(const Word& a, const Word& b) const { return diamond(a, b); }
  Word invert(const Word& a) const { return rb_inv(a); }
  Word apply(const Word& a) const { return rb_op(a); }
};

}  // namespace opgroup
