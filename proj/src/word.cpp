#include "opgroup/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "opgroup/free_reduce.hpp"

namespace opgroup {

namespace {

bool is_ident_start(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

void print_atom(std::string& out, const Atom& a);

void print_word(std::string& out, const Word& w) {
  if (w.is_identity()) {
    out += '1';
    return;
  }
  bool first = true;
  for (const Atom& a : w.atoms()) {
    if (!first) out += ' ';
    first = false;
    print_atom(out, a);
  }
}

void print_atom(std::string& out, const Atom& a) {
  if (a.is_generator()) {
    out += a.symbol().name();
  } else {
    out += '<';
    print_word(out, a.body());
    out += '>';
  }
  if (a.sign() == Sign::kMinus) out += "^-1";
}

}  // namespace

bool is_identifier(std::string_view text) {
  if (text.empty() || !is_ident_start(text.front())) return false;
  return std::all_of(text.begin(), text.end(), is_ident_char);
}

Symbol::Symbol(std::string name) : name_(std::move(name)) {
  if (!is_identifier(name_)) {
    throw std::invalid_argument("invalid generator name '" + name_ + "'");
  }
}

Atom Atom::generator(Symbol symbol, Sign sign) { return Atom(std::move(symbol), sign); }

Atom Atom::generator(std::string_view name, Sign sign) {
  return Atom(Symbol(std::string(name)), sign);
}

Atom Atom::bracket(Word body, Sign sign) {
  return Atom(std::make_shared<const Word>(std::move(body)), sign);
}

Atom Atom::inverse() const { return Atom(content_, flip(sign_)); }

bool Atom::same_content(const Atom& other) const {
  if (content_.index() != other.content_.index()) return false;
  if (is_generator()) return symbol() == other.symbol();
  const auto& lhs = std::get<std::shared_ptr<const Word>>(content_);
  const auto& rhs = std::get<std::shared_ptr<const Word>>(other.content_);
  return lhs == rhs || *lhs == *rhs;
}

bool Atom::is_inverse_of(const Atom& other) const {
  return sign_ != other.sign_ && same_content(other);
}

Word Word::from_atoms(const std::vector<Atom>& atoms) { return Word(free_reduce(atoms)); }

Word Word::from_reduced(std::vector<Atom> atoms) { return Word(std::move(atoms)); }

Word Word::generator(std::string_view name, Sign sign) {
  return of(Atom::generator(name, sign));
}

Word mul(const Word& u, const Word& v) {
  std::vector<Atom> out(u.atoms().begin(), u.atoms().end());
  out.reserve(u.size() + v.size());
  for (const Atom& a : v.atoms()) append_reduced(out, a);
  return Word::from_reduced(std::move(out));
}

Word mul(std::initializer_list<Word> factors) {
  std::vector<Atom> out;
  for (const Word& f : factors) {
    for (const Atom& a : f.atoms()) append_reduced(out, a);
  }
  return Word::from_reduced(std::move(out));
}

Word inv(const Word& w) {
  std::vector<Atom> out;
  out.reserve(w.size());
  for (auto it = w.atoms().rbegin(); it != w.atoms().rend(); ++it) out.push_back(it->inverse());
  return Word::from_reduced(std::move(out));
}

Word bracket(const Word& w) { return Word::of(Atom::bracket(w)); }

std::size_t depth(const Atom& a) { return a.is_generator() ? 0 : depth(a.body()) + 1; }

std::size_t depth(const Word& w) {
  std::size_t d = 0;
  for (const Atom& a : w.atoms()) d = std::max(d, depth(a));
  return d;
}

std::size_t breadth(const Word& w) { return w.size(); }

std::string to_string(const Word& w) {
  std::string out;
  print_word(out, w);
  return out;
}

std::string to_string(const Atom& a) {
  std::string out;
  print_atom(out, a);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << to_string(w); }

}  // namespace opgroup
