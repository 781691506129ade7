#pragma once

// The free operated group (G(X), <.>) and its evaluator into any operated
// group (G, P): the unique homomorphism extending a generator assignment
// with eval(<w>) = P(eval(w)).

#include <concepts>
#include <map>
#include <string>

#include "opgroup/error.hpp"
#include "opgroup/word.hpp"

namespace opgroup {

/// A group whose elements are opaque values; equality is the carrier's.
template <class G>
concept GroupCarrier = requires(const G& g, const typename G::element_type& a) {
  typename G::element_type;
  { g.identity() } -> std::convertible_to<typename G::element_type>;
  { g.multiply(a, a) } -> std::convertible_to<typename G::element_type>;
  { g.invert(a) } -> std::convertible_to<typename G::element_type>;
};

/// A group together with an arbitrary total self-map `apply`.
template <class G>
concept OperatedCarrier = GroupCarrier<G> && requires(const G& g, const typename G::element_type& a) {
  { g.apply(a) } -> std::convertible_to<typename G::element_type>;
};

template <class Element>
using Assignment = std::map<std::string, Element>;

namespace detail {

template <class Element>
const Element& lookup(const Assignment<Element>& f, const Symbol& s) {
  auto it = f.find(s.name());
  if (it == f.end()) throw UnassignedGenerator(s.name());
  return it->second;
}

template <OperatedCarrier G>
typename G::element_type eval_bracketed(const Word& w, const Assignment<typename G::element_type>& f,
                                        const G& target) {
  auto acc = target.identity();
  for (const Atom& a : w.atoms()) {
    auto value = a.is_generator() ? lookup(f, a.symbol())
                                  : target.apply(eval_bracketed(a.body(), f, target));
    if (a.sign() == Sign::kMinus) value = target.invert(value);
    acc = target.multiply(acc, value);
  }
  return acc;
}

}  // namespace detail

/// Structural recursion: generators through f, brackets through P, products
/// and inverses through the carrier.
template <OperatedCarrier G>
typename G::element_type eval_operated(const Word& w,
                                       const Assignment<typename G::element_type>& f,
                                       const G& target) {
  return detail::eval_bracketed(w, f, target);
}

/// The free operated group viewed as an operated carrier.
struct FreeOperatedGroup {
  using element_type = Word;
  Word identity() const { return Word(); }
  Word multiply(const Word& a, const Word& b) const { return mul(a, b); }
  Word invert(const Word& a) const { return inv(a); }
  Word apply(const Word& a) const { return bracket(a); }
};

/// An operated carrier whose operator is known to satisfy the law `Law`.
///
/// Finite carriers obtain one through exhaustive validation (see finite.hpp).
/// Procedural carriers cannot be checked, so the caller must vouch for them
/// explicitly with `attest`.
template <class Law, OperatedCarrier G>
class LawfulTarget {
 public:
  using element_type = typename G::element_type;

  static LawfulTarget attest(G carrier) { return LawfulTarget(std::move(carrier)); }

  const G& carrier() const { return carrier_; }

 private:
  explicit LawfulTarget(G carrier) : carrier_(std::move(carrier)) {}

  G carrier_;
};

struct DifferentialLaw {};
struct RotaBaxterLaw {};

template <OperatedCarrier G>
using DiffTarget = LawfulTarget<DifferentialLaw, G>;
template <OperatedCarrier G>
using RBTarget = LawfulTarget<RotaBaxterLaw, G>;

}  // namespace opgroup
