#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bgg/matrix.hpp"

using namespace bgg;

TEST_CASE("zero map has full kernel and empty image") {
  auto V = BasedSpace::anonymous(3, "x");
  auto f = rank_factor(OperatorMatrix::zero(V, V));
  CHECK(f.rank == 0);
  CHECK(f.kernel.dim() == 3);
  CHECK(f.image.dim() == 0);
}

TEST_CASE("identity has full rank and trivial kernel") {
  auto V = BasedSpace::anonymous(5, "x");
  auto f = rank_factor(OperatorMatrix::identity(V));
  CHECK(f.rank == 5);
  CHECK(f.kernel.dim() == 0);
  for (int j = 0; j < 5; ++j) {
    CHECK(f.image.vectors()[j].size() == 1);
    CHECK(f.image.vectors()[j].at(j) == 1);
  }
}

TEST_CASE("inverse of a scaled identity") {
  auto V = BasedSpace::anonymous(4, "x");
  auto a = OperatorMatrix::identity(V).scaled(rat(2));
  auto inv = inverse(a);
  CHECK(inv.compose(a) == OperatorMatrix::identity(V));
  CHECK(inv.entry(0, 0) == rat(1, 2));
}

TEST_CASE("compose, transpose and arithmetic") {
  auto V = BasedSpace::anonymous(2, "x");
  auto W = BasedSpace::anonymous(3, "y");
  OperatorMatrix a(V, W);  // 3x2
  a.set_entry(0, 0, rat(1));
  a.set_entry(1, 1, rat(2));
  a.set_entry(2, 0, rat(-1));
  OperatorMatrix b(W, V);  // 2x3
  b.set_entry(0, 2, rat(3));
  b.set_entry(1, 1, rat(1, 2));
  auto ba = b.compose(a);
  CHECK(ba.entry(0, 0) == rat(-3));
  CHECK(ba.entry(1, 1) == rat(1));
  CHECK(a.transpose().entry(0, 2) == rat(-1));
  CHECK((ba - ba).is_zero());
  CHECK(ba + ba == ba.scaled(rat(2)));
}

TEST_CASE("apply agrees between dense and sparse vectors") {
  auto V = BasedSpace::anonymous(3, "x");
  OperatorMatrix a(V, V);
  a.set_entry(0, 1, rat(5));
  a.set_entry(2, 2, rat(-1, 3));
  Vec x = {rat(1), rat(2), rat(3)};
  auto y = a.apply(x);
  CHECK(y[0] == rat(10));
  CHECK(y[1] == 0);
  CHECK(y[2] == rat(-1));
  CHECK(to_dense(a.apply(to_sparse(x)), 3) == y);
}

TEST_CASE("solve_linear finds a solution or reports inconsistency") {
  auto V = BasedSpace::anonymous(3, "x");
  auto W = BasedSpace::anonymous(2, "y");
  OperatorMatrix a(V, W);
  a.set_entry(0, 0, rat(1));
  a.set_entry(0, 1, rat(1));
  a.set_entry(1, 2, rat(2));
  auto x = solve_linear(a, {rat(3), rat(4)});
  REQUIRE(x.has_value());
  CHECK(a.apply(*x) == Vec{rat(3), rat(4)});
  // y1 never appears in the image of the second row alone
  OperatorMatrix b(V, W);
  b.set_entry(0, 0, rat(1));
  CHECK(!solve_linear(b, {rat(0), rat(1)}).has_value());
}

TEST_CASE("rank-nullity on a rectangular map") {
  auto V = BasedSpace::anonymous(4, "x");
  auto W = BasedSpace::anonymous(3, "y");
  OperatorMatrix a(V, W);
  a.set_entry(0, 0, rat(1));
  a.set_entry(0, 1, rat(2));
  a.set_entry(1, 1, rat(1));
  a.set_entry(1, 2, rat(1));
  a.set_entry(2, 0, rat(1));
  a.set_entry(2, 1, rat(1));
  a.set_entry(2, 3, rat(0));
  auto f = rank_factor(a);
  CHECK(f.rank + f.kernel.dim() == 4);
  // every kernel vector is annihilated
  for (const auto& k : f.kernel.vectors())
    CHECK(is_zero(a.apply(to_dense(k, 4))));
}

TEST_CASE("kernel basis is deterministic") {
  auto V = BasedSpace::anonymous(3, "x");
  auto W = BasedSpace::anonymous(1, "y");
  OperatorMatrix a(V, W);
  a.set_entry(0, 0, rat(1));
  a.set_entry(0, 1, rat(1));
  a.set_entry(0, 2, rat(1));
  auto k = rank_factor(a).kernel.vectors();
  REQUIRE(k.size() == 2);
  CHECK(k[0] == SparseVec{{0, rat(-1)}, {1, rat(1)}});
  CHECK(k[1] == SparseVec{{0, rat(-1)}, {2, rat(1)}});
}

TEST_CASE("invert_on_subspace inverts an invariant restriction") {
  auto V = BasedSpace::anonymous(3, "x");
  OperatorMatrix a(V, V);
  a.set_entry(0, 0, rat(2));
  a.set_entry(1, 1, rat(3));
  a.set_entry(2, 2, rat(7));
  SubspaceBasis s(V, {{{0, rat(1)}}, {{1, rat(1)}}});
  auto inv = invert_on_subspace(a, s);
  CHECK(inv.entry(0, 0) == rat(1, 2));
  CHECK(inv.entry(1, 1) == rat(1, 3));
}

TEST_CASE("invert_on_subspace reports a kernel vector when singular") {
  auto V = BasedSpace::anonymous(2, "x");
  OperatorMatrix a(V, V);
  a.set_entry(0, 0, rat(1));  // kills x1
  SubspaceBasis s(V, {{{1, rat(1)}}});
  CHECK_THROWS_WITH_AS(invert_on_subspace(a, s),
                       doctest::Contains("singular restriction"),
                       std::invalid_argument);
}

TEST_CASE("invert_on_subspace rejects a non-invariant subspace") {
  auto V = BasedSpace::anonymous(2, "x");
  OperatorMatrix a(V, V);
  a.set_entry(1, 0, rat(1));  // x0 -> x1
  SubspaceBasis s(V, {{{0, rat(1)}}});
  CHECK_THROWS_AS(invert_on_subspace(a, s), std::invalid_argument);
}

TEST_CASE("SubspaceBasis rejects dependent vectors") {
  auto V = BasedSpace::anonymous(2, "x");
  CHECK_THROWS_AS(SubspaceBasis(V, {{{0, rat(1)}}, {{0, rat(2)}}}),
                  std::invalid_argument);
}

TEST_CASE("based space duals negate weights") {
  BasedSpace V({"a", "b"}, {rat(1), rat(-2)});
  auto D = V.dual();
  CHECK(D.label(0) == "a*");
  CHECK(D.weight(1) == rat(2));
  CHECK(V.index_of("b") == 1);
  CHECK_THROWS_AS(V.index_of("c"), std::out_of_range);
}
