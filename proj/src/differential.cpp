#include "opgroup/differential.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

#include "opgroup/error.hpp"
#include "opgroup/free_reduce.hpp"

namespace opgroup {

DiffWord DiffWord::from_letters(const std::vector<DiffLetter>& letters) {
  return DiffWord(free_reduce(letters));
}

DiffWord mul(const DiffWord& u, const DiffWord& v) { return mul({u, v}); }

DiffWord mul(std::initializer_list<DiffWord> factors) {
  std::vector<DiffLetter> out;
  for (const DiffWord& f : factors) {
    for (const DiffLetter& l : f.letters()) append_reduced(out, l);
  }
  return DiffWord::from_letters(out);
}

DiffWord inv(const DiffWord& w) {
  std::vector<DiffLetter> out;
  out.reserve(w.size());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
  return DiffWord::from_letters(out);
}

DiffWord power(const DiffWord& w, std::size_t n) {
  DiffWord acc;
  for (std::size_t i = 0; i < n; ++i) acc = mul(acc, w);
  return acc;
}

namespace {

DiffWord differentiate_letter(const DiffLetter& letter) {
  DiffLetter next(letter.symbol(), letter.order() + 1);
  if (letter.sign() == Sign::kPlus) return DiffWord::of(next);
  // D(x^-1) = x^-1 D(x)^-1 x
  return DiffWord::from_letters({letter, next.inverse(), letter.inverse()});
}

}  // namespace

DiffWord differentiate(const DiffWord& w) {
  auto letters = w.letters();
  if (letters.empty()) return DiffWord();
  DiffWord acc = differentiate_letter(letters.back());
  for (std::size_t i = letters.size() - 1; i-- > 0;) {
    const DiffWord x = DiffWord::of(letters[i]);
    acc = mul({differentiate_letter(letters[i]), x, acc, inv(x)});
  }
  return acc;
}

DiffWord differentiate_n(const DiffWord& w, std::size_t n) {
  DiffWord acc = w;
  for (std::size_t i = 0; i < n; ++i) acc = differentiate(acc);
  return acc;
}

DiffWord product_formula(std::span<const DiffWord> factors) {
  if (factors.empty()) throw std::invalid_argument("product_formula needs at least one factor");
  DiffWord lhs;
  DiffWord product;
  for (const DiffWord& g : factors) {
    lhs = mul({lhs, differentiate(g), g});
    product = mul(product, g);
  }
  return mul(lhs, inv(product));
}

DiffWord inverse_power_formula(const DiffWord& g, std::size_t n) {
  if (n == 0) throw std::invalid_argument("inverse_power_formula needs n >= 1");
  const DiffWord step = mul(inv(g), inv(differentiate(g)));
  return mul(power(step, n), power(g, n));
}

DiffWord shift_endomorphism(const DiffWord& w) {
  std::vector<DiffLetter> out;
  out.reserve(w.size());
  for (const DiffLetter& l : w.letters()) out.emplace_back(l.symbol(), l.order() + 1, l.sign());
  return DiffWord::from_letters(out);
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

DiffWord parse_diff(std::string_view text) {
  std::size_t pos = 0;
  auto peek = [&](std::size_t ahead = 0) {
    return pos + ahead < text.size() ? text[pos + ahead] : '\0';
  };
  auto skip_space = [&] {
    while (pos < text.size() && is_space(text[pos])) ++pos;
  };

  skip_space();
  if (pos == text.size()) throw ParseError(ParseErrorKind::kSyntax, pos, "expected a word");
  if (peek() == '1' && !is_digit(peek(1)) && !is_alpha(peek(1))) {
    ++pos;
    skip_space();
    if (pos != text.size()) {
      throw ParseError(ParseErrorKind::kSyntax, pos,
                       "identity '1' must stand alone as a whole word");
    }
    return DiffWord();
  }

  std::vector<DiffLetter> letters;
  while (pos < text.size()) {
    char c = peek();
    if (c == '<' || c == '>') {
      throw ParseError(ParseErrorKind::kInvalidToken, pos, "brackets are not allowed in diff words");
    }
    if (!is_alpha(c)) {
      if (c == '1') {
        throw ParseError(ParseErrorKind::kSyntax, pos,
                         "identity '1' must stand alone as a whole word");
      }
      throw ParseError(ParseErrorKind::kInvalidToken, pos,
                       std::string("invalid character '") + c + "'");
    }
    std::size_t end = pos;
    while (end < text.size() && (is_alpha(text[end]) || is_digit(text[end]))) ++end;
    Symbol symbol(std::string(text.substr(pos, end - pos)));
    pos = end;

    std::uint32_t order = 0;
    if (peek() == '.') {
      ++pos;
      if (!is_digit(peek())) {
        throw ParseError(ParseErrorKind::kSyntax, pos, "expected an order after '.'");
      }
      std::uint64_t value = 0;
      const std::size_t digits_start = pos;
      while (is_digit(peek())) {
        value = value * 10 + static_cast<std::uint64_t>(peek() - '0');
        if (value > std::numeric_limits<std::uint32_t>::max()) {
          throw ParseError(ParseErrorKind::kInvalidToken, digits_start, "order out of range");
        }
        ++pos;
      }
      order = static_cast<std::uint32_t>(value);
    }

    Sign sign = Sign::kPlus;
    if (peek() == '^') {
      if (peek(1) == '-' && peek(2) == '1' && !is_digit(peek(3))) {
        pos += 3;
        sign = Sign::kMinus;
      } else {
        throw ParseError(ParseErrorKind::kSyntax, pos, "only the exponent ^-1 is allowed");
      }
    }
    append_reduced(letters, DiffLetter(std::move(symbol), order, sign));

    if (pos < text.size() && !is_space(peek())) {
      throw ParseError(ParseErrorKind::kSyntax, pos, "expected whitespace between letters");
    }
    skip_space();
  }
  return DiffWord::from_letters(letters);
}

std::string to_string(const DiffWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (const DiffLetter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += l.symbol().name();
    out += '.';
    out += std::to_string(l.order());
    if (l.sign() == Sign::kMinus) out += "^-1";
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const DiffWord& w) { return os << to_string(w); }

}  // namespace opgroup
