#include <string>
#include <vector>

#include "opgroup/error.hpp"
#include "opgroup/free_reduce.hpp"
#include "opgroup/word.hpp"

namespace opgroup {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_alpha(char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Parser {
 public:
  Parser(std::string_view text, ParseOptions options) : text_(text), options_(options) {}

  Word parse_all() {
    skip_space();
    Word w = parse_word();
    skip_space();
    if (!at_end()) {
      char c = peek();
      if (c == '>' || c == ')') {
        throw ParseError(ParseErrorKind::kUnbalancedBracket, pos_,
                         std::string("unmatched '") + c + "'");
      }
      throw ParseError(ParseErrorKind::kSyntax, pos_, "unexpected trailing input");
    }
    return w;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  void skip_space() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }

  bool at_closer() const { return !at_end() && (peek() == '>' || peek() == ')'); }

  // The literal identity "1" (not the start of a longer numeral).
  bool at_identity_literal() const {
    return peek() == '1' && !is_digit(peek(1)) && !is_alpha(peek(1));
  }

  Word parse_word() {
    if (at_end() || at_closer()) {
      throw ParseError(ParseErrorKind::kSyntax, pos_, "expected a word");
    }
    if (at_identity_literal()) {
      ++pos_;
      skip_space();
      if (!at_end() && !at_closer()) {
        throw ParseError(ParseErrorKind::kSyntax, pos_,
                         "identity '1' must stand alone as a whole word");
      }
      return Word();
    }
    std::vector<Atom> atoms;
    while (true) {
      append_reduced(atoms, parse_term());
      skip_space();
      if (at_end() || at_closer()) break;
    }
    return Word::from_reduced(std::move(atoms));
  }

  Atom parse_term() {
    const std::size_t start = pos_;
    char c = peek();
    if (c == '<') {
      ++pos_;
      return finish_bracket(start, '>');
    }
    if (is_alpha(c)) {
      std::size_t end = pos_;
      while (end < text_.size() && (is_alpha(text_[end]) || is_digit(text_[end]))) ++end;
      std::string name(text_.substr(pos_, end - pos_));
      pos_ = end;
      if (options_.allow_b_alias && name == "B" && peek() == '(') {
        ++pos_;
        return finish_bracket(start, ')');
      }
      return Atom::generator(Symbol(std::move(name)), parse_sign());
    }
    if (c == '1') {
      throw ParseError(ParseErrorKind::kSyntax, pos_,
                       "identity '1' must stand alone as a whole word");
    }
    throw ParseError(ParseErrorKind::kInvalidToken, pos_,
                     std::string("invalid character '") + c + "'");
  }

  Atom finish_bracket(std::size_t open_pos, char closer) {
    skip_space();
    if (at_end()) {
      throw ParseError(ParseErrorKind::kUnbalancedBracket, open_pos, "unclosed bracket");
    }
    Word body = parse_word();
    skip_space();
    if (at_end()) {
      throw ParseError(ParseErrorKind::kUnbalancedBracket, open_pos, "unclosed bracket");
    }
    if (peek() != closer) {
      throw ParseError(ParseErrorKind::kUnbalancedBracket, pos_,
                       std::string("expected '") + closer + "'");
    }
    ++pos_;
    return Atom::bracket(std::move(body), parse_sign());
  }

  Sign parse_sign() {
    if (peek() != '^') return Sign::kPlus;
    if (peek(1) == '-' && peek(2) == '1' && !is_digit(peek(3))) {
      pos_ += 3;
      return Sign::kMinus;
    }
    throw ParseError(ParseErrorKind::kSyntax, pos_, "only the exponent ^-1 is allowed");
  }

  std::string_view text_;
  ParseOptions options_;
  std::size_t pos_ = 0;
};

}  // namespace

Word parse(std::string_view text, ParseOptions options) {
  return Parser(text, options).parse_all();
}

}  // namespace opgroup
