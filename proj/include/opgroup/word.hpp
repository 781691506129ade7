#pragma once

// Bracketed group words: the elements of the free operated group.
//
// A Word is a freely reduced sequence of Atoms. An Atom is a generator or a
// bracket <w> around another Word, each carrying a sign (+1 or the inverse).
// The stratified free groups G_0 < G_1 < ... are never materialised: a
// bracket simply holds its body, so depth is a computed property.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace opgroup {

bool is_identifier(std::string_view text);

/// A generator name: [A-Za-z_][A-Za-z0-9_]*.
class Symbol {
 public:
  explicit Symbol(std::string name);

  const std::string& name() const { return name_; }

  friend bool operator==(const Symbol&, const Symbol&) = default;
  friend auto operator<=>(const Symbol&, const Symbol&) = default;

 private:
  std::string name_;
};

enum class Sign : std::int8_t { kPlus = 1, kMinus = -1 };

inline Sign flip(Sign s) { return s == Sign::kPlus ? Sign::kMinus : Sign::kPlus; }

class Word;

class Atom {
 public:
  static Atom generator(Symbol symbol, Sign sign = Sign::kPlus);
  static Atom generator(std::string_view name, Sign sign = Sign::kPlus);
  static Atom bracket(Word body, Sign sign = Sign::kPlus);

  bool is_generator() const { return std::holds_alternative<Symbol>(content_); }
  bool is_bracket() const { return !is_generator(); }
  bool is_positive_bracket() const { return is_bracket() && sign_ == Sign::kPlus; }
  bool is_negative_bracket() const { return is_bracket() && sign_ == Sign::kMinus; }
  Sign sign() const { return sign_; }

  // Precondition: is_generator().
  const Symbol& symbol() const { return std::get<Symbol>(content_); }
  // Precondition: is_bracket().
  const Word& body() const { return *std::get<std::shared_ptr<const Word>>(content_); }

  Atom inverse() const;
  /// Same generator or bracket body, opposite sign.
  bool is_inverse_of(const Atom& other) const;
  bool same_content(const Atom& other) const;

  friend bool operator==(const Atom& a, const Atom& b) {
    return a.sign_ == b.sign_ && a.same_content(b);
  }

 private:
  Atom(std::variant<Symbol, std::shared_ptr<const Word>> content, Sign sign)
      : content_(std::move(content)), sign_(sign) {}

  std::variant<Symbol, std::shared_ptr<const Word>> content_;
  Sign sign_;
};

class Word {
 public:
  /// The identity.
  Word() = default;

  /// Freely reduces the given sequence.
  static Word from_atoms(const std::vector<Atom>& atoms);
  /// Caller guarantees the sequence is already reduced.
  static Word from_reduced(std::vector<Atom> atoms);
  static Word of(const Atom& atom) { return from_reduced({atom}); }
  static Word generator(std::string_view name, Sign sign = Sign::kPlus);

  std::span<const Atom> atoms() const { return atoms_; }
  const std::vector<Atom>& atom_vector() const { return atoms_; }
  const Atom& operator[](std::size_t i) const { return atoms_[i]; }
  std::size_t size() const { return atoms_.size(); }
  bool is_identity() const { return atoms_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  explicit Word(std::vector<Atom> atoms) : atoms_(std::move(atoms)) {}

  std::vector<Atom> atoms_;
};

Word mul(const Word& u, const Word& v);
Word mul(std::initializer_list<Word> factors);
Word inv(const Word& w);
/// The one-atom word <w>; never the identity, even for w = 1.
Word bracket(const Word& w);

/// Maximal bracket nesting; 0 for bracket-free words.
std::size_t depth(const Word& w);
std::size_t depth(const Atom& a);
/// Number of atoms in the standard factorization.
std::size_t breadth(const Word& w);

struct ParseOptions {
  /// Accept `B(...)` as an alternative spelling of `<...>`.
  bool allow_b_alias = false;
};

Word parse(std::string_view text, ParseOptions options = {});
std::string to_string(const Word& w);
std::string to_string(const Atom& a);
std::ostream& operator<<(std::ostream& os, const Word& w);

}  // namespace opgroup
