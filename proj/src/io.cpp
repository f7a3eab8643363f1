#include "bgg/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bgg {

namespace {

void write_space(std::ostream& os, const std::string& tag, const BasedSpace& s) {
  os << tag << " " << s.dim() << "\n";
  for (int i = 0; i < s.dim(); ++i)
    os << s.label(i) << " " << s.weight(i).get_num() << " " << s.weight(i).get_den()
       << "\n";
}

BasedSpace read_space(std::istream& is, const std::string& tag) {
  std::string word;
  int dim = 0;
  if (!(is >> word >> dim) || word != tag)
    throw std::invalid_argument("read_matrix: expected '" + tag + "' header");
  std::vector<std::string> labels(dim);
  std::vector<Rat> weights(dim);
  for (int i = 0; i < dim; ++i) {
    std::string num, den;
    if (!(is >> labels[i] >> num >> den))
      throw std::invalid_argument("read_matrix: truncated label list");
    weights[i] = rat_from_string(num + "/" + den);
  }
  return BasedSpace(std::move(labels), std::move(weights));
}

Rat read_rat(std::istream& is, const char* who) {
  std::string num, den;
  if (!(is >> num >> den)) throw std::invalid_argument(std::string(who) + ": truncated");
  return rat_from_string(num + "/" + den);
}

}  // namespace

void write_matrix(std::ostream& os, const OperatorMatrix& m) {
  os << "matrix\n";
  write_space(os, "domain", m.domain());
  write_space(os, "codomain", m.codomain());
  os << "entries " << m.nnz() << "\n";
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, x] : m.row(r))
      os << r << " " << c << " " << x.get_num() << " " << x.get_den() << "\n";
  os << "end\n";
}

OperatorMatrix read_matrix(std::istream& is) {
  std::string word;
  if (!(is >> word) || word != "matrix")
    throw std::invalid_argument("read_matrix: missing 'matrix' header");
  BasedSpace dom = read_space(is, "domain");
  BasedSpace cod = read_space(is, "codomain");
  long n = 0;
  if (!(is >> word >> n) || word != "entries")
    throw std::invalid_argument("read_matrix: missing 'entries' count");
  OperatorMatrix m(dom, cod);
  for (long i = 0; i < n; ++i) {
    int r = 0, c = 0;
    if (!(is >> r >> c)) throw std::invalid_argument("read_matrix: truncated entry");
    m.set_entry(r, c, read_rat(is, "read_matrix"));
  }
  if (!(is >> word) || word != "end")
    throw std::invalid_argument("read_matrix: missing 'end'");
  return m;
}

void write_section(std::ostream& os, const PolySection& s) {
  os << "section " << s.space->n_vars << " " << s.space->max_degree << "\n";
  write_space(os, "fiber", s.space->fiber);
  long nnz = 0;
  for (const auto& x : s.coords)
    if (x != 0) ++nnz;
  os << "terms " << nnz << "\n";
  for (int i = 0; i < (int)s.coords.size(); ++i) {
    if (s.coords[i] == 0) continue;
    int mono = i / s.space->fiber.dim(), fib = i % s.space->fiber.dim();
    for (int e : s.space->monomials[mono]) os << e << " ";
    os << s.space->fiber.label(fib) << " " << s.coords[i].get_num() << " "
       << s.coords[i].get_den() << "\n";
  }
  os << "end\n";
}

PolySection read_section(std::istream& is) {
  std::string word;
  int n_vars = 0, degree = 0;
  if (!(is >> word >> n_vars >> degree) || word != "section")
    throw std::invalid_argument("read_section: missing 'section' header");
  BasedSpace fiber = read_space(is, "fiber");
  long terms = 0;
  if (!(is >> word >> terms) || word != "terms")
    throw std::invalid_argument("read_section: missing 'terms' count");
  PolySection s = zero_section(poly_section_space(fiber, n_vars, degree));
  for (long t = 0; t < terms; ++t) {
    std::vector<int> mono(n_vars);
    for (int& e : mono)
      if (!(is >> e)) throw std::invalid_argument("read_section: truncated exponents");
    std::string label;
    if (!(is >> label)) throw std::invalid_argument("read_section: truncated term");
    Rat x = read_rat(is, "read_section");
    s.coords[s.space->index(s.space->mono_pos.at(mono), fiber.index_of(label))] = x;
  }
  if (!(is >> word) || word != "end")
    throw std::invalid_argument("read_section: missing 'end'");
  return s;
}

std::string homology_table(ChainComplex& cc) {
  std::ostringstream os;
  os << "homology table\n";
  os << "degree dimC im_d harmonic im_delta dimH weights\n";
  for (int k = 0; k <= cc.top(); ++k) {
    HodgeSplit split = cc.hodge_split(k);
    const ChainSpace& c = cc.space(k);
    std::vector<Rat> ws;
    for (const auto& v : split.harmonic.vectors())
      ws.push_back(c.basis.weight(v.begin()->first));
    std::sort(ws.begin(), ws.end());
    os << k << " " << c.basis.dim() << " " << split.im_d.dim() << " "
       << split.harmonic.dim() << " " << split.im_delta.dim() << " "
       << split.harmonic.dim() << " [";
    for (int i = 0; i < (int)ws.size(); ++i) os << (i ? " " : "") << to_string(ws[i]);
    os << "]\n";
  }
  return os.str();
}

bool ReportDocument::all_pass() const {
  for (const auto& c : checks)
    if (c.status == "fail") return false;
  return true;
}

void write_report(std::ostream& os, const ReportDocument& r) {
  os << "verification report\n";
  for (const auto& line : r.job) os << "job: " << line << "\n";
  int pass = 0, fail = 0, na = 0;
  for (const auto& c : r.checks) {
    os << "check: " << c.name << " | " << c.status;
    if (!c.detail.empty()) os << " | " << c.detail;
    os << "\n";
    if (c.status == "pass")
      ++pass;
    else if (c.status == "fail")
      ++fail;
    else
      ++na;
  }
  os << "result: " << (fail == 0 ? "PASS" : "FAIL") << " (" << pass << " passed, "
     << fail << " failed, " << na << " not applicable)\n";
}

LieAlgebraData read_structure_constants(std::istream& is, Vec* grading_out) {
  std::string word;
  int dim = 0;
  if (!(is >> word >> dim) || word != "dim" || dim <= 0)
    throw std::invalid_argument("structure constants: missing 'dim' header");
  BracketTable raw;
  Vec grading;
  while (is >> word) {
    if (word == "bracket") {
      int i, j, k;
      if (!(is >> i >> j >> k))
        throw std::invalid_argument("structure constants: truncated bracket record");
      if (i < 0 || i >= dim || j < 0 || j >= dim || k < 0 || k >= dim)
        throw std::invalid_argument("structure constants: index out of range");
      raw[{i, j}][k] = read_rat(is, "structure constants");
    } else if (word == "grading") {
      for (int c = 0; c < dim; ++c) grading.push_back(read_rat(is, "grading"));
    } else {
      throw std::invalid_argument("structure constants: unknown record '" + word + "'");
    }
  }
  if ((int)grading.size() != dim)
    throw std::invalid_argument("structure constants: missing grading element");
  if (grading_out) *grading_out = grading;
  return build_lie_algebra(BasedSpace::anonymous(dim, "e"), raw);
}

void write_structure_constants(std::ostream& os, const LieAlgebraData& a,
                               const Vec& grading) {
  os << "dim " << a.dim() << "\n";
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i + 1; j < a.dim(); ++j)
      for (const auto& [k, x] : a.bracket(i, j))
        os << "bracket " << i << " " << j << " " << k << " " << x.get_num() << " "
           << x.get_den() << "\n";
  os << "grading";
  for (const auto& c : grading) os << " " << c.get_num() << " " << c.get_den();
  os << "\n";
}

}  // namespace bgg
