#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "bgg/flat_model.hpp"

namespace bgg {

// Sparse interchange format: a header with the domain and codomain label
// lists (with weights, so round trips are lossless), then one record per
// nonzero entry (row, column, numerator, denominator).
void write_matrix(std::ostream& os, const OperatorMatrix& m);
OperatorMatrix read_matrix(std::istream& is);

// Sections as (exponent vector, fiber label, numerator, denominator) records
// under a header fixing the variable count, degree cutoff and fiber.
void write_section(std::ostream& os, const PolySection& s);
PolySection read_section(std::istream& is);

// Per degree: dim C_k, the three Hodge summand dims, dim H_k, and the weight
// multiset of the harmonic basis.
std::string homology_table(ChainComplex& cc);

struct CheckRecord {
  std::string name;
  std::string status;  // pass | fail | not applicable
  std::string detail;
};

struct ReportDocument {
  std::vector<std::string> job;  // echoed configuration lines
  std::vector<CheckRecord> checks;

  bool all_pass() const;
};

void write_report(std::ostream& os, const ReportDocument& r);

// Structure-constant file: "dim n", then "bracket i j k num den" records,
// then "grading c0 c1 ..." with rational coordinates.
LieAlgebraData read_structure_constants(std::istream& is, Vec* grading_out);
void write_structure_constants(std::ostream& os, const LieAlgebraData& a,
                               const Vec& grading);

}  // namespace bgg
