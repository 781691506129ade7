#include <doctest.h>

#include <string>
#include <vector>

#include "opgroup/error.hpp"
#include "opgroup/finite.hpp"
#include "opgroup/standard_groups.hpp"

using namespace opgroup;

namespace {

// Brute-force law checks, written straight from the definitions.
bool holds_everywhere(const FiniteGroup& g, const OperatorMap& p, Law law) {
  auto m = [&](ElementIndex a, ElementIndex b) { return g.multiply(a, b); };
  auto i = [&](ElementIndex a) { return g.invert(a); };
  for (ElementIndex a = 0; a < g.order(); ++a) {
    for (ElementIndex b = 0; b < g.order(); ++b) {
      bool ok = true;
      switch (law) {
        case Law::kEndo: ok = p(m(a, b)) == m(p(a), p(b)); break;
        case Law::kDiffPlus1: ok = p(m(a, b)) == m(m(m(p(a), a), p(b)), i(a)); break;
        case Law::kDiffMinus1: ok = p(m(a, b)) == m(m(m(a, p(b)), i(a)), p(a)); break;
        case Law::kRBPlus1: ok = m(p(a), p(b)) == p(m(a, m(m(p(a), b), i(p(a))))); break;
        case Law::kRBMinus1: ok = m(p(a), p(b)) == p(m(m(m(p(a), b), i(p(a))), a)); break;
        case Law::kCrossed: break;
      }
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<OperatorMap> all_maps(std::size_t n) {
  std::vector<OperatorMap> out;
  std::vector<ElementIndex> images(n, 0);
  for (;;) {
    out.push_back(OperatorMap{images});
    std::size_t k = n;
    while (k > 0 && ++images[k - 1] == n) images[--k] = 0;
    if (k == 0) return out;
  }
}

}  // namespace

TEST_CASE("group validation") {
  FiniteGroup z2 = validate_group({"e", "a"}, {{"e", "a"}, {"a", "e"}});
  CHECK(z2.order() == 2);
  CHECK(z2.name(z2.identity()) == "e");
  CHECK(z2.invert(1) == 1);

  CHECK_THROWS_AS(validate_group({}, {}), ValidationError);
  CHECK_THROWS_AS(validate_group({"e", "a"}, {{"e", "a"}}), ValidationError);
  CHECK_THROWS_AS(validate_group({"e", "e"}, {{"e", "e"}, {"e", "e"}}), ValidationError);
  CHECK_THROWS_WITH_AS(validate_group({"e", "a"}, {{"e", "b"}, {"a", "e"}}),
                       doctest::Contains("not closed"), ValidationError);
  // no identity
  CHECK_THROWS_AS(validate_group({"a", "b"}, {{"b", "a"}, {"a", "a"}}), ValidationError);
}

TEST_CASE("a non-associative Latin square is rejected with a witness") {
  // Order-5 loop with identity 0 in which every element is its own
  // inverse, so only associativity fails: (1*1)*2 = 2 but 1*(1*2) = 1*3 = 4.
  std::vector<std::vector<std::size_t>> t = {
      {0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  std::vector<std::string> names{"0", "1", "2", "3", "4"};
  std::vector<std::vector<std::string>> table;
  for (const auto& row : t) {
    auto& r = table.emplace_back();
    for (auto v : row) r.push_back(names[v]);
  }
  try {
    validate_group(names, table);
    FAIL("accepted a non-associative table");
  } catch (const ValidationError& e) {
    std::string what = e.what();
    CHECK(what.find("associativity") != std::string::npos);
    CHECK(what.find('(') != std::string::npos);
  }
}

TEST_CASE("standard groups") {
  CHECK(cyclic_group(5).order() == 5);
  CHECK(cyclic_group(5).is_abelian());
  CHECK(symmetric_group(3).order() == 6);
  CHECK_FALSE(symmetric_group(3).is_abelian());
  CHECK(alternating_group(4).order() == 12);
  CHECK(dihedral_group(4).order() == 8);
  FiniteGroup v4 = direct_product(cyclic_group(2), cyclic_group(2));
  CHECK(v4.order() == 4);
  CHECK(v4.index_of("a:a").has_value());
  FiniteGroup s3 = symmetric_group(3);
  // (12)(23) as functions, right factor first: 1->2->... gives (123)
  ElementIndex p = s3.multiply(s3.require_index("(12)"), s3.require_index("(23)"));
  CHECK(s3.name(p) == "(123)");
  CHECK_THROWS_AS(element_indices(s3, {"(1234)"}), ValidationError);
}

TEST_CASE("checker agrees with the brute-force definitions") {
  for (const FiniteGroup& g : {cyclic_group(3), symmetric_group(3), direct_product(cyclic_group(2), cyclic_group(2))}) {
    for (const auto& p : all_maps(g.order())) {
      for (Law law : {Law::kEndo, Law::kDiffPlus1, Law::kDiffMinus1, Law::kRBPlus1, Law::kRBMinus1}) {
        IdentityKind kind{law, std::nullopt};
        CHECK(!check_identity(g, p, kind).has_value() == holds_everywhere(g, p, law));
      }
    }
  }
}

TEST_CASE("standard operators") {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(5), symmetric_group(3), dihedral_group(4)}) {
    CHECK_FALSE(check_identity(g, identity_operator(g), IdentityKind::endo()));
    CHECK_FALSE(check_identity(g, inversion_operator(g), IdentityKind::rb_plus1()));
    CHECK_FALSE(check_identity(g, trivial_operator(g), IdentityKind::diff_plus1()));
  }
  FiniteGroup s3 = symmetric_group(3);
  auto c = check_identity(s3, identity_operator(s3), IdentityKind::rb_plus1());
  REQUIRE(c);
  // the counterexample really breaks the law
  ElementIndex a = c->first, b = c->second;
  CHECK(s3.multiply(a, b) != s3.multiply(a, s3.conjugate(a, b)));
}

TEST_CASE("crossed homomorphisms") {
  FiniteGroup s3 = symmetric_group(3);
  GroupAction adjoint = GroupAction::adjoint(s3);
  for (const auto& p : all_maps(s3.order())) {
    CHECK(check_identity(s3, p, IdentityKind::crossed(adjoint)).has_value() ==
          check_identity(s3, p, IdentityKind::diff_plus1()).has_value());
  }
  // trivial action: crossed = endomorphism
  GroupAction trivial = GroupAction::trivial(s3);
  CHECK(enumerate_operators(s3, IdentityKind::crossed(trivial)) == enumerate_operators(s3, IdentityKind::endo()));
  CHECK_THROWS_AS(check_identity(s3, identity_operator(s3), IdentityKind{Law::kCrossed, std::nullopt}),
                  ValidationError);
}

TEST_CASE("group actions are validated") {
  FiniteGroup z3 = cyclic_group(3);
  // a acting by inversion: then a^3 = e would act by inversion too
  std::vector<std::vector<ElementIndex>> inversion_by_a = {{0, 1, 2}, {0, 2, 1}, {0, 1, 2}};
  CHECK_THROWS_AS(GroupAction::from_table(z3, inversion_by_a), ValidationError);
  std::vector<std::vector<ElementIndex>> not_automorphism = {{0, 1, 2}, {1, 1, 2}, {0, 1, 2}};
  CHECK_THROWS_AS(GroupAction::from_table(z3, not_automorphism), ValidationError);
  CHECK_THROWS_AS(GroupAction::from_table(z3, {{0, 1, 2}}), ValidationError);
}

TEST_CASE("enumeration matches filtering all maps") {
  for (const FiniteGroup& g : {cyclic_group(2), cyclic_group(3), cyclic_group(4), symmetric_group(3)}) {
    for (Law law : {Law::kEndo, Law::kDiffPlus1, Law::kDiffMinus1, Law::kRBPlus1, Law::kRBMinus1}) {
      std::vector<OperatorMap> expected;
      for (const auto& p : all_maps(g.order())) {
        if (holds_everywhere(g, p, law)) expected.push_back(p);
      }
      CHECK(enumerate_operators(g, IdentityKind{law, std::nullopt}) == expected);
    }
  }
}

TEST_CASE("enumeration counts") {
  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  CHECK(enumerate_operators(z2, IdentityKind::rb_plus1()).size() == 2);
  CHECK(enumerate_operators(z2, IdentityKind::endo()).size() == 2);
  CHECK(enumerate_operators(z2, IdentityKind::diff_plus1()) == enumerate_operators(z2, IdentityKind::endo()));
  CHECK(enumerate_operators(z3, IdentityKind::endo()).size() == 3);
  CHECK(enumerate_operators(z3, IdentityKind::rb_plus1()) == enumerate_operators(z3, IdentityKind::endo()));
}

TEST_CASE("enumeration limits") {
  EnumerationOptions small;
  small.budget = 100;
  CHECK_THROWS_AS(enumerate_operators(cyclic_group(4), IdentityKind::endo(), small), BudgetExceeded);
  CHECK_NOTHROW(enumerate_operators(cyclic_group(3), IdentityKind::endo(), small));
  CHECK_THROWS_AS(enumerate_operators(cyclic_group(13), IdentityKind::endo()), BudgetExceeded);
  CHECK_THROWS_AS(check_identity(cyclic_group(65), trivial_operator(cyclic_group(65)), IdentityKind::endo()),
                  BudgetExceeded);
}

TEST_CASE("projections from exact factorizations") {
  FiniteGroup s3 = symmetric_group(3);
  auto a3 = element_indices(s3, {"e", "(123)", "(132)"});
  auto c2 = element_indices(s3, {"e", "(12)"});
  OperatorMap proj = projection_operator(s3, a3, c2);
  CHECK_FALSE(check_identity(s3, proj, IdentityKind::rb_minus1()));
  for (ElementIndex g = 0; g < s3.order(); ++g) {
    // g = proj(g) * (proj(g)^-1 g) with the right factor in C2
    ElementIndex rest = s3.multiply(s3.invert(proj(g)), g);
    CHECK((rest == c2[0] || rest == c2[1]));
  }
  CHECK_THROWS_WITH_AS(projection_operator(s3, a3, a3), doctest::Contains("not exhaustive"), ValidationError);
  auto c2b = element_indices(s3, {"e", "(13)"});
  auto v = element_indices(s3, {"e", "(12)", "(13)"});
  CHECK_THROWS_WITH_AS(projection_operator(s3, v, c2b), doctest::Contains("subgroup"), ValidationError);
  auto all = element_indices(s3, s3.names());
  CHECK_THROWS_WITH_AS(projection_operator(s3, all, c2), doctest::Contains("intersection"), ValidationError);

  FiniteGroup z2 = cyclic_group(2), z3 = cyclic_group(3);
  FiniteGroup prod = direct_product(z2, z3);
  std::vector<ElementIndex> first, second;
  for (const auto& n : z2.names()) first.push_back(prod.require_index(n + ":e"));
  for (const auto& n : z3.names()) second.push_back(prod.require_index("e:" + n));
  OperatorMap p = projection_operator(prod, first, second);
  CHECK_FALSE(check_identity(prod, p, IdentityKind::rb_minus1()));
  CHECK(prod.name(p(prod.require_index("a:a2"))) == "a:e");
}

TEST_CASE("weight conversion") {
  FiniteGroup z2 = cyclic_group(2), s3 = symmetric_group(3);
  CHECK(convert_weight(identity_operator(z2), z2) == identity_operator(z2));
  OperatorMap c = convert_weight(inversion_operator(s3), s3);
  CHECK(c == identity_operator(s3));
  CHECK_FALSE(check_identity(s3, c, IdentityKind::rb_minus1()));
  for (const auto& p : enumerate_operators(s3, IdentityKind::rb_plus1())) {
    CHECK(convert_weight(convert_weight(p, s3), s3) == p);
    CHECK_FALSE(check_identity(s3, convert_weight(p, s3), IdentityKind::rb_minus1()));
  }
}

TEST_CASE("operator validation") {
  FiniteGroup z3 = cyclic_group(3);
  CHECK_THROWS_AS(validate_operator(z3, OperatorMap{{0, 1}}), ValidationError);
  CHECK_THROWS_AS(validate_operator(z3, OperatorMap{{0, 1, 7}}), ValidationError);
  CHECK_NOTHROW(validate_operator(z3, OperatorMap{{0, 0, 0}}));
}
