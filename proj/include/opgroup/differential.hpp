#pragma once

// The free differential group F{X} = F(X x N) with operator D of weight 1:
// D(gh) = D(g) g D(h) g^-1.

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "opgroup/operated.hpp"
#include "opgroup/word.hpp"

namespace opgroup {

/// The letter x^(n), or its inverse.
class DiffLetter {
 public:
  DiffLetter(Symbol symbol, std::uint32_t order, Sign sign = Sign::kPlus)
      : symbol_(std::move(symbol)), order_(order), sign_(sign) {}
  DiffLetter(std::string_view name, std::uint32_t order, Sign sign = Sign::kPlus)
      : DiffLetter(Symbol(std::string(name)), order, sign) {}

  const Symbol& symbol() const { return symbol_; }
  std::uint32_t order() const { return order_; }
  Sign sign() const { return sign_; }

  DiffLetter inverse() const { return {symbol_, order_, flip(sign_)}; }
  bool is_inverse_of(const DiffLetter& o) const {
    return sign_ != o.sign_ && order_ == o.order_ && symbol_ == o.symbol_;
  }

  friend bool operator==(const DiffLetter&, const DiffLetter&) = default;

 private:
  Symbol symbol_;
  std::uint32_t order_;
  Sign sign_;
};

class DiffWord {
 public:
  DiffWord() = default;

  static DiffWord from_letters(const std::vector<DiffLetter>& letters);
  static DiffWord of(DiffLetter letter) { return DiffWord({std::move(letter)}); }

  std::span<const DiffLetter> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const DiffWord&, const DiffWord&) = default;

 private:
  explicit DiffWord(std::vector<DiffLetter> letters) : letters_(std::move(letters)) {}

  std::vector<DiffLetter> letters_;
};

DiffWord mul(const DiffWord& u, const DiffWord& v);
DiffWord mul(std::initializer_list<DiffWord> factors);
DiffWord inv(const DiffWord& w);
DiffWord power(const DiffWord& w, std::size_t n);

/// The operator D, split at the first letter: D(x w) = D(x) x D(w) x^-1.
DiffWord differentiate(const DiffWord& w);
/// n-fold D; n = 0 is the identity map.
DiffWord differentiate_n(const DiffWord& w, std::size_t n);

/// (prod_i D(g_i) g_i) (g_1 ... g_n)^-1, evaluated by free multiplication.
/// Throws std::invalid_argument on an empty sequence.
DiffWord product_formula(std::span<const DiffWord> factors);
/// (g^-1 D(g)^-1)^n g^n, which equals D(g^-n). Throws std::invalid_argument for n = 0.
DiffWord inverse_power_formula(const DiffWord& g, std::size_t n);

/// The endomorphism x^(n) -> x^(n+1) applied letterwise.
DiffWord shift_endomorphism(const DiffWord& w);

/// Letters are `x.n`, `x.n^-1`; a bare `x` means `x.0`; brackets are rejected.
DiffWord parse_diff(std::string_view text);
std::string to_string(const DiffWord& w);
std::ostream& operator<<(std::ostream& os, const DiffWord& w);

/// The unique differential-group homomorphism extending f:
/// x^(n) -> d^n(f(x)).
template <OperatedCarrier G>
typename G::element_type eval_diff(const DiffWord& w,
                                   const Assignment<typename G::element_type>& f,
                                   const DiffTarget<G>& target) {
  const G& g = target.carrier();
  std::map<std::pair<std::string, std::uint32_t>, typename G::element_type> derived;
  auto image = [&](const DiffLetter& letter) {
    auto key = std::make_pair(letter.symbol().name(), letter.order());
    auto it = derived.find(key);
    if (it != derived.end()) return it->second;
    auto value = detail::lookup(f, letter.symbol());
    for (std::uint32_t i = 0; i < letter.order(); ++i) value = g.apply(value);
    derived.emplace(key, value);
    return value;
  };
  auto acc = g.identity();
  for (const DiffLetter& letter : w.letters()) {
    auto value = image(letter);
    if (letter.sign() == Sign::kMinus) value = g.invert(value);
    acc = g.multiply(acc, value);
  }
  return acc;
}

/// F{X} with D, as an operated carrier.
struct FreeDifferentialGroup {
  using element_type = DiffWord;
  DiffWord identity() const { return DiffWord(); }
  DiffWord multiply(const DiffWord& a, const DiffWord& b) const { return mul(a, b); }
  DiffWord invert(const DiffWord& a) const { return inv(a); }
  DiffWord apply(const DiffWord& a) const { return differentiate(a); }
};

}  // namespace opgroup
