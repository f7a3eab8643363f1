#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "bgg/io.hpp"

using namespace bgg;

TEST_CASE("matrix round trip is bit identical") {
  auto par = conformal_parabolic(3, 0);
  ChainComplex cc(par, standard_rep(par));
  const OperatorMatrix& m = cc.delta(2);

  std::ostringstream first;
  write_matrix(first, m);
  std::istringstream in(first.str());
  OperatorMatrix back = read_matrix(in);
  CHECK(back == m);
  CHECK(back.domain().label(0) == m.domain().label(0));
  CHECK(back.codomain().weight(1) == m.codomain().weight(1));

  std::ostringstream second;
  write_matrix(second, back);
  CHECK(first.str() == second.str());
}

TEST_CASE("matrix reader rejects malformed input") {
  std::istringstream empty("");
  CHECK_THROWS_AS(read_matrix(empty), std::invalid_argument);
  std::istringstream wrong("vector\n");
  CHECK_THROWS_AS(read_matrix(wrong), std::invalid_argument);
  std::istringstream truncated("matrix\ndomain 1\nx 1 1\ncodomain 1\ny 1 1\nentries 2\n0 0 1 1\n");
  CHECK_THROWS_AS(read_matrix(truncated), std::invalid_argument);
}

TEST_CASE("section round trip is bit identical") {
  auto fiber = BasedSpace::anonymous(3, "w");
  auto space = poly_section_space(fiber, 2, 3);
  PolySection s = zero_section(space);
  s.coords[0] = rat(5, 3);
  s.coords[7] = rat(-2);
  s.coords[(int)s.coords.size() - 1] = rat(1, 7);

  std::ostringstream first;
  write_section(first, s);
  std::istringstream in(first.str());
  PolySection back = read_section(in);
  CHECK(back.coords == s.coords);
  CHECK(back.space->n_vars == 2);
  CHECK(back.space->max_degree == 3);

  std::ostringstream second;
  write_section(second, back);
  CHECK(first.str() == second.str());
}

TEST_CASE("section reader rejects malformed input") {
  std::istringstream wrong("matrix\n");
  CHECK_THROWS_AS(read_section(wrong), std::invalid_argument);
  std::istringstream truncated("section 2 1\nfiber 1\nw 1 1\nterms 1\n0 0 w\n");
  CHECK_THROWS_AS(read_section(truncated), std::invalid_argument);
  std::istringstream bad_label("section 2 1\nfiber 1\nw 1 1\nterms 1\n0 0 zz 1 1\n");
  CHECK_THROWS(read_section(bad_label));
}

TEST_CASE("structure constant files round trip and validate") {
  BracketTable raw;
  raw[{0, 1}][2] = rat(1);
  LieAlgebraData heis = build_lie_algebra(BasedSpace::anonymous(3, "e"), raw);
  Vec grading = {rat(1), rat(1), rat(2)};

  std::ostringstream first;
  write_structure_constants(first, heis, grading);
  std::istringstream in(first.str());
  Vec grading_back;
  LieAlgebraData back = read_structure_constants(in, &grading_back);
  CHECK(back.dim() == 3);
  CHECK(grading_back == grading);
  CHECK(back.bracket(0, 1).at(2) == rat(1));

  std::ostringstream second;
  write_structure_constants(second, back, grading_back);
  CHECK(first.str() == second.str());
}

TEST_CASE("structure constant reader rejects bad tables") {
  std::istringstream no_header("bracket 0 1 2 1 1\n");
  CHECK_THROWS_AS(read_structure_constants(no_header, nullptr), std::invalid_argument);
  std::istringstream out_of_range("dim 2\nbracket 0 3 1 1 1\ngrading 1 1 1 1\n");
  CHECK_THROWS_AS(read_structure_constants(out_of_range, nullptr), std::invalid_argument);
  std::istringstream no_grading("dim 2\n");
  CHECK_THROWS_AS(read_structure_constants(no_grading, nullptr), std::invalid_argument);
  // [e0,e1] = e1 with [e1,e2] = e0 breaks the Jacobi identity
  std::istringstream not_jacobi(
      "dim 3\nbracket 0 1 1 1 1\nbracket 1 2 0 1 1\ngrading 0 1 1 1 1 1\n");
  CHECK_THROWS_AS(read_structure_constants(not_jacobi, nullptr), std::invalid_argument);
}

TEST_CASE("homology table carries dimensions and weights") {
  auto par = builtin_parabolic("g2");
  ChainComplex cc(par, trivial_rep(par));
  std::string table = homology_table(cc);

  std::istringstream lines(table);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "homology table");
  std::getline(lines, line);  // column header
  int chi = 0, rows = 0;
  while (std::getline(lines, line)) {
    std::istringstream row(line);
    int k, dimc, imd, harm, imdelta, dimh;
    row >> k >> dimc >> imd >> harm >> imdelta >> dimh;
    CHECK(dimc == imd + harm + imdelta);
    CHECK(dimh == harm);
    chi += (k % 2 == 0 ? 1 : -1) * dimh;
    ++rows;
  }
  CHECK(rows == cc.top() + 1);
  CHECK(chi == 0);
}

TEST_CASE("report document formatting and verdict") {
  ReportDocument rep;
  rep.job = {"algebra=projective:2"};
  rep.checks.push_back({"alpha", "pass", ""});
  rep.checks.push_back({"beta", "not applicable", "out of scope"});
  CHECK(rep.all_pass());

  std::ostringstream os;
  write_report(os, rep);
  std::string text = os.str();
  CHECK(text.find("job: algebra=projective:2") != std::string::npos);
  CHECK(text.find("check: alpha | pass") != std::string::npos);
  CHECK(text.find("check: beta | not applicable | out of scope") != std::string::npos);
  CHECK(text.find("result: PASS (1 passed, 0 failed, 1 not applicable)") != std::string::npos);

  rep.checks.push_back({"gamma", "fail", "residual nonzero"});
  CHECK(!rep.all_pass());
  std::ostringstream os2;
  write_report(os2, rep);
  CHECK(os2.str().find("result: FAIL (1 passed, 1 failed, 1 not applicable)") !=
        std::string::npos);
}
