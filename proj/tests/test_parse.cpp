#include <doctest.h>

#include <string>

#include "opgroup/error.hpp"
#include "opgroup/word.hpp"
#include "support/generators.hpp"

using namespace opgroup;

namespace {

ParseErrorKind error_kind(std::string_view text, ParseOptions options = {}) {
  try {
    parse(text, options);
  } catch (const ParseError& e) {
    return e.kind();
  }
  FAIL("expected a parse error for '" << std::string(text) << "'");
  return ParseErrorKind::kSyntax;
}

}  // namespace

TEST_CASE("parse builds the denoted word") {
  Word x = Word::generator("x");
  Word y = Word::generator("y");
  CHECK(parse("x <y> x^-1") == mul({x, bracket(y), inv(x)}));
  CHECK(parse("x x^-1").is_identity());
  CHECK(parse("1").is_identity());
  CHECK(parse("<x <y>^-1>^-1") == inv(bracket(mul(x, inv(bracket(y))))));
  CHECK(parse("<1>") == bracket(Word()));
  CHECK(parse("  x   y ") == mul(x, y));
  CHECK(parse("x<y>") == mul(x, bracket(y)));
}

TEST_CASE("printing") {
  CHECK(to_string(Word()) == "1");
  CHECK(to_string(parse("x <y>^-1")) == "x <y>^-1");
  CHECK(to_string(parse("<<x>^-1 y>")) == "<<x>^-1 y>");
}

TEST_CASE("B(...) alias") {
  ParseOptions alias{.allow_b_alias = true};
  CHECK(parse("B(x) y^-1", alias) == parse("<x> y^-1"));
  CHECK(parse("B(x B(y)^-1)^-1", alias) == parse("<x <y>^-1>^-1"));
  CHECK(parse("B", alias) == parse("B"));
  // Without the alias, B is an ordinary generator and '(' is not a token.
  CHECK(error_kind("B(x)") == ParseErrorKind::kInvalidToken);
  CHECK(error_kind("B(x>", alias) == ParseErrorKind::kUnbalancedBracket);
}

TEST_CASE("parse errors") {
  CHECK(error_kind("") == ParseErrorKind::kSyntax);
  CHECK(error_kind("<>") == ParseErrorKind::kSyntax);
  CHECK(error_kind("x 1") == ParseErrorKind::kSyntax);
  CHECK(error_kind("<x") == ParseErrorKind::kUnbalancedBracket);
  CHECK(error_kind("x>") == ParseErrorKind::kUnbalancedBracket);
  CHECK(error_kind("x $") == ParseErrorKind::kInvalidToken);
  CHECK(error_kind("x^2") == ParseErrorKind::kSyntax);
  CHECK(error_kind("x^-") == ParseErrorKind::kSyntax);
  try {
    parse("x <y");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("at byte") != std::string::npos);
  }
}

TEST_CASE("round trip") {
  testing::Rng rng(9);
  for (int i = 0; i < 3000; ++i) {
    Word u = testing::random_word(rng, testing::WordShape{3, 5, 4});
    std::string text = to_string(u);
    Word back = parse(text);
    CHECK(back == u);
    CHECK(to_string(back) == text);
  }
}
