#include <doctest.h>

#include <string>

#include "opgroup/error.hpp"
#include "opgroup/group_file.hpp"
#include "opgroup/standard_groups.hpp"

using namespace opgroup;

TEST_CASE("group files round trip") {
  FiniteGroup s3 = symmetric_group(3);
  std::map<std::string, std::vector<ElementIndex>> subs{{"A3", element_indices(s3, {"e", "(123)", "(132)"})}};
  GroupFile f = parse_group_file(write_group_file(s3, inversion_operator(s3), subs));
  CHECK(f.group == s3);
  REQUIRE(f.op);
  CHECK(*f.op == inversion_operator(s3));
  CHECK(f.subgroups == subs);
  CHECK_FALSE(f.action);
}

TEST_CASE("group file errors") {
  CHECK_THROWS_AS(parse_group_file("not json"), ValidationError);
  CHECK_THROWS_AS(parse_group_file("[]"), ValidationError);
  CHECK_THROWS_AS(parse_group_file(R"({"elements": ["e"]})"), ValidationError);
  CHECK_THROWS_WITH_AS(parse_group_file(R"({"elements": ["e"], "table": [["e"]], "extra": 1})"),
                       doctest::Contains("unknown key"), ValidationError);
  CHECK_THROWS_AS(parse_group_file(R"({"elements": ["e"], "table": [["e"]], "operator": ["e", "e"]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_group_file(R"({"elements": ["e"], "table": [["e"]], "operator": ["q"]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_group_file(R"({"elements": ["e"], "table": [[1]]})"), ValidationError);
  CHECK_THROWS_AS(load_group_file("/nonexistent/file.grp"), ValidationError);
}

TEST_CASE("actions in group files") {
  GroupFile f = load_group_file(OPGROUP_TEST_DATA "/z4_twisted.grp");
  REQUIRE(f.action);
  CHECK(f.action->act(1, 1) == 3);
  CHECK_FALSE(check_identity(f.group, *f.op, IdentityKind::crossed(*f.action)));
  // a -> a, a2 -> e is not an endomorphism, i.e. not crossed for the
  // (trivial) adjoint action of an abelian group
  CHECK(check_identity(f.group, *f.op, IdentityKind::crossed(GroupAction::adjoint(f.group))));
  CHECK(check_identity(f.group, *f.op, IdentityKind::endo()));
}
