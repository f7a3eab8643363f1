#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "bgg/lie_algebra.hpp"

using namespace bgg;

TEST_CASE("abelian algebra is valid with zero Killing form") {
  BasedSpace b({"a", "b", "c"});
  auto g = build_lie_algebra(b, {});
  CHECK(g.dim() == 3);
  CHECK(g.killing().is_zero());
}

TEST_CASE("sl2 structure constants give Killing(h,h) = 8") {
  BasedSpace b({"h", "e", "f"});
  std::map<std::pair<int, int>, SparseVec> raw;
  raw[{0, 1}] = {{1, rat(2)}};   // [h,e] = 2e
  raw[{0, 2}] = {{2, rat(-2)}};  // [h,f] = -2f
  raw[{1, 2}] = {{0, rat(1)}};   // [e,f] = h
  auto g = build_lie_algebra(b, raw);
  CHECK(g.killing(0, 0) == rat(8));
  CHECK(g.killing(1, 2) == rat(4));
  CHECK(g.killing(0, 1) == 0);
}

TEST_CASE("antisymmetry violation is reported with labels") {
  BasedSpace b({"a", "b"});
  std::map<std::pair<int, int>, SparseVec> raw;
  raw[{0, 1}] = {{0, rat(1)}};
  raw[{1, 0}] = {{0, rat(1)}};  // should be the negative
  CHECK_THROWS_WITH_AS(build_lie_algebra(b, raw),
                       doctest::Contains("antisymmetry fails on pair (a, b)"),
                       std::invalid_argument);
}

TEST_CASE("Jacobi violation names the offending triple") {
  BasedSpace b({"a", "b", "c"});
  std::map<std::pair<int, int>, SparseVec> raw;
  raw[{0, 1}] = {{2, rat(1)}};  // [a,b] = c
  raw[{1, 2}] = {{0, rat(1)}};  // [b,c] = a
  raw[{2, 0}] = {{0, rat(1)}};  // [c,a] = a
  CHECK_THROWS_WITH_AS(build_lie_algebra(b, raw),
                       doctest::Contains("(a, b, c)"), std::invalid_argument);
}

TEST_CASE("conformal(3,0) layers") {
  auto par = conformal_parabolic(3, 0);
  CHECK(par->dim() == 10);
  CHECK(par->m_dim == 3);
  CHECK(par->g0_dim == 4);
  CHECK(par->mstar_dim() == 3);
  CHECK(par->abelian_nilradical());
  CHECK(par->depth() == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(par->algebra.killing(par->mstar_index(i), par->m_index(j)) ==
            rat(i == j ? 1 : 0));
}

TEST_CASE("conformal with signature works and small dimensions are rejected") {
  auto par = conformal_parabolic(2, 1);
  CHECK(par->dim() == 10);
  CHECK_THROWS_AS(conformal_parabolic(1, 1), std::invalid_argument);
}

TEST_CASE("projective(2) is sl(3)") {
  auto par = projective_parabolic(2);
  CHECK(par->dim() == 8);
  CHECK(par->m_dim == 2);
  CHECK(par->abelian_nilradical());
  CHECK(par->standard_space.weight(0) == rat(2, 3));
  CHECK(par->standard_space.weight(1) == rat(-1, 3));
  CHECK_THROWS_AS(projective_parabolic(1), std::invalid_argument);
}

TEST_CASE("g2 has dim 14 and m weights {1,1,2,3,3}") {
  auto par = g2_parabolic();
  CHECK(par->dim() == 14);
  CHECK(par->m_dim == 5);
  CHECK(par->g0_dim == 4);
  std::vector<Rat> w;
  for (int i = 0; i < par->m_dim; ++i) w.push_back(par->weight(i));
  std::sort(w.begin(), w.end());
  CHECK(w == std::vector<Rat>{rat(1), rat(1), rat(2), rat(3), rat(3)});
  CHECK(!par->abelian_nilradical());
  CHECK(par->depth() == 3);
  // the nilradical is not abelian: some bracket of weight-1 elements is Z2
  CHECK(!par->algebra.bracket(0, 1).empty());
}

TEST_CASE("builtin_parabolic name strings") {
  CHECK(builtin_parabolic("conformal:3,0")->dim() == 10);
  CHECK(builtin_parabolic("projective:2")->dim() == 8);
  CHECK(builtin_parabolic("g2")->dim() == 14);
  CHECK_THROWS_WITH_AS(builtin_parabolic("e8"), doctest::Contains("unsupported"),
                       std::invalid_argument);
  CHECK_THROWS_AS(builtin_parabolic("conformal:x,y"), std::invalid_argument);
}

TEST_CASE("m*-action strictly lowers weight on the adjoint module") {
  for (const char* name : {"conformal:3,0", "projective:2", "g2"}) {
    auto par = builtin_parabolic(name);
    for (int i = 0; i < par->mstar_dim(); ++i) {
      int xi = par->mstar_index(i);
      for (int j = 0; j < par->dim(); ++j)
        for (const auto& [k, c] : par->algebra.bracket(xi, j))
          CHECK(par->weight(k) < par->weight(j));
    }
  }
}
