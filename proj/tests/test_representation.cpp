#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgg/representation.hpp"

using namespace bgg;

TEST_CASE("trivial rep is one dimensional and inert") {
  auto r = trivial_rep(conformal_parabolic(3, 0));
  CHECK(r.space.dim() == 1);
  for (const auto& m : r.action) CHECK(m.is_zero());
  auto wd = weight_decomposition(r);
  CHECK(wd.layers.size() == 1);
  CHECK(wd.layers.begin()->first == 0);
}

TEST_CASE("standard rep of conformal(3,0)") {
  auto r = standard_rep(conformal_parabolic(3, 0));
  CHECK(r.space.dim() == 5);
  CHECK(validate_representation(r).empty());
  auto wd = weight_decomposition(r);
  REQUIRE(wd.layers.size() == 3);
  CHECK(wd.layers.at(rat(1)).size() == 1);
  CHECK(wd.layers.at(rat(0)).size() == 3);
  CHECK(wd.layers.at(rat(-1)).size() == 1);
  CHECK(wd.strictly_lowering);
}

TEST_CASE("standard rep of projective(2) has weights 2/3 and -1/3") {
  auto r = standard_rep(projective_parabolic(2));
  auto wd = weight_decomposition(r);
  REQUIRE(wd.layers.size() == 2);
  CHECK(wd.layers.at(rat(2, 3)).size() == 1);
  CHECK(wd.layers.at(rat(-1, 3)).size() == 2);
  CHECK(wd.strictly_lowering);
}

TEST_CASE("adjoint rep validates for all built-ins") {
  for (const char* name : {"conformal:3,0", "projective:2", "g2"}) {
    auto r = adjoint_rep(builtin_parabolic(name));
    CHECK(validate_representation(r).empty());
    CHECK(weight_decomposition(r).strictly_lowering);
  }
}

TEST_CASE("second exterior power of the standard rep of conformal(4,0)") {
  auto par = conformal_parabolic(4, 0);
  auto r = exterior_power_rep(standard_rep(par), 2);
  CHECK(r.space.dim() == 15);          // C(6,2), same as dim so(5,1)
  CHECK(r.space.dim() == adjoint_rep(par).space.dim());
  CHECK(validate_representation(r).empty());
}

TEST_CASE("dual and tensor functors validate") {
  auto par = projective_parabolic(2);
  auto v = standard_rep(par);
  auto dv = dual_rep(v);
  CHECK(dv.space.weight(0) == rat(-2, 3));
  auto t = tensor_rep(v, dv);
  CHECK(t.space.dim() == 9);
  CHECK(validate_representation(t).empty());
  auto wd = weight_decomposition(t);
  CHECK(wd.layers.at(rat(0)).size() == 5);
  CHECK(wd.layers.at(rat(1)).size() == 2);
  CHECK(wd.layers.at(rat(-1)).size() == 2);
}

TEST_CASE("an injected sign fault is reported with the offending pair") {
  auto r = adjoint_rep(conformal_parabolic(3, 0));
  r.action[0] = r.action[0].scaled(rat(-1));
  auto report = validate_representation(r);
  CHECK(!report.empty());
  bool names_pair = false;
  for (const auto& line : report)
    if (line.find("p1") != std::string::npos) names_pair = true;
  CHECK(names_pair);
}

TEST_CASE("g2 standard rep is 7 dimensional with symmetric weights") {
  auto r = standard_rep(g2_parabolic());
  CHECK(r.space.dim() == 7);
  auto wd = weight_decomposition(r);
  CHECK(wd.layers.at(rat(0)).size() == 1);
  CHECK(wd.layers.at(rat(1)).size() == 2);
  CHECK(wd.layers.at(rat(-1)).size() == 2);
  CHECK(wd.layers.at(rat(2)).size() == 1);
  CHECK(wd.layers.at(rat(-2)).size() == 1);
  CHECK(wd.strictly_lowering);
}

TEST_CASE("rep expression grammar") {
  auto par = conformal_parabolic(3, 0);
  CHECK(parse_rep(par, "standard").space.dim() == 5);
  CHECK(parse_rep(par, "dual(standard)").space.dim() == 5);
  CHECK(parse_rep(par, "tensor(trivial, standard)").space.dim() == 5);
  CHECK(parse_rep(par, "ext(standard, 2)").space.dim() == 10);
  CHECK_THROWS_AS(parse_rep(par, "spin"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rep(par, "dual(standard"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rep(par, "standard extra"), std::invalid_argument);
}
