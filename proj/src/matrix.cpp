#include "bgg/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace bgg {

Vec to_dense(const SparseVec& v, int dim) {
  Vec out(dim, Rat(0));
  for (const auto& [i, x] : v) out.at(i) = x;
  return out;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (int i = 0; i < (int)v.size(); ++i)
    if (v[i] != 0) out[i] = v[i];
  return out;
}

bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

OperatorMatrix OperatorMatrix::identity(const BasedSpace& space) {
  OperatorMatrix m(space, space);
  for (int i = 0; i < space.dim(); ++i) m.rows_[i][i] = Rat(1);
  return m;
}

void OperatorMatrix::add_entry(int row, int col, const Rat& value) {
  if (value == 0) return;
  if (col < 0 || col >= cols()) throw std::out_of_range("OperatorMatrix: column out of range");
  auto& r = rows_.at(row);
  auto it = r.find(col);
  if (it == r.end()) {
    r.emplace(col, value);
  } else {
    it->second += value;
    if (it->second == 0) r.erase(it);
  }
}

void OperatorMatrix::set_entry(int row, int col, const Rat& value) {
  if (col < 0 || col >= cols()) throw std::out_of_range("OperatorMatrix: column out of range");
  auto& r = rows_.at(row);
  if (value == 0)
    r.erase(col);
  else
    r[col] = value;
}

Rat OperatorMatrix::entry(int row, int col) const {
  const auto& r = rows_.at(row);
  auto it = r.find(col);
  return it == r.end() ? Rat(0) : it->second;
}

bool OperatorMatrix::is_zero() const {
  for (const auto& r : rows_)
    if (!r.empty()) return false;
  return true;
}

long OperatorMatrix::nnz() const {
  long n = 0;
  for (const auto& r : rows_) n += (long)r.size();
  return n;
}

Vec OperatorMatrix::apply(const Vec& x) const {
  if ((int)x.size() != cols())
    throw std::invalid_argument("OperatorMatrix::apply: dimension mismatch");
  Vec y(rows(), Rat(0));
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, a] : rows_[r])
      if (x[c] != 0) y[r] += a * x[c];
  return y;
}

SparseVec OperatorMatrix::apply(const SparseVec& x) const {
  SparseVec y;
  for (int r = 0; r < rows(); ++r) {
    Rat acc(0);
    for (const auto& [c, a] : rows_[r]) {
      auto it = x.find(c);
      if (it != x.end()) acc += a * it->second;
    }
    if (acc != 0) y[r] = acc;
  }
  return y;
}

OperatorMatrix OperatorMatrix::compose(const OperatorMatrix& other) const {
  if (!domain_.same_labels(other.codomain_))
    throw std::invalid_argument("OperatorMatrix::compose: inner spaces disagree");
  OperatorMatrix out(other.domain_, codomain_);
  for (int r = 0; r < rows(); ++r)
    for (const auto& [k, a] : rows_[r])
      for (const auto& [c, b] : other.rows_[k]) out.add_entry(r, c, a * b);
  return out;
}

OperatorMatrix OperatorMatrix::transpose() const {
  OperatorMatrix out(codomain_, domain_);
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, a] : rows_[r]) out.rows_[c][r] = a;
  return out;
}

OperatorMatrix OperatorMatrix::adjoint_on_duals() const {
  OperatorMatrix out(codomain_.dual(), domain_.dual());
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, a] : rows_[r]) out.rows_[c][r] = a;
  return out;
}

OperatorMatrix OperatorMatrix::operator+(const OperatorMatrix& other) const {
  if (!domain_.same_labels(other.domain_) || !codomain_.same_labels(other.codomain_))
    throw std::invalid_argument("OperatorMatrix::operator+: spaces disagree");
  OperatorMatrix out = *this;
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, a] : other.rows_[r]) out.add_entry(r, c, a);
  return out;
}

OperatorMatrix OperatorMatrix::operator-(const OperatorMatrix& other) const {
  return *this + other.scaled(Rat(-1));
}

OperatorMatrix OperatorMatrix::scaled(const Rat& c) const {
  OperatorMatrix out(domain_, codomain_);
  if (c == 0) return out;
  for (int r = 0; r < rows(); ++r)
    for (const auto& [col, a] : rows_[r]) out.rows_[r][col] = c * a;
  return out;
}

bool OperatorMatrix::operator==(const OperatorMatrix& other) const {
  return rows() == other.rows() && cols() == other.cols() && rows_ == other.rows_;
}

OperatorMatrix OperatorMatrix::with_spaces(BasedSpace domain, BasedSpace codomain) const {
  if (domain.dim() != cols() || codomain.dim() != rows())
    throw std::invalid_argument("OperatorMatrix::with_spaces: dimension mismatch");
  OperatorMatrix out(std::move(domain), std::move(codomain));
  out.rows_ = rows_;
  return out;
}

SubspaceBasis::SubspaceBasis(BasedSpace ambient, std::vector<SparseVec> vectors)
    : ambient_(std::move(ambient)), vectors_(std::move(vectors)) {
  if (vectors_.empty()) return;
  OperatorMatrix m(BasedSpace::anonymous((int)vectors_.size(), "v"), ambient_);
  for (int j = 0; j < (int)vectors_.size(); ++j)
    for (const auto& [i, x] : vectors_[j]) m.set_entry(i, j, x);
  RowEchelon re(m);
  if (re.rank() != (int)vectors_.size())
    throw std::invalid_argument("SubspaceBasis: vectors are linearly dependent");
}

OperatorMatrix SubspaceBasis::as_matrix(const std::string& coord_prefix) const {
  OperatorMatrix m(BasedSpace::anonymous(dim(), coord_prefix), ambient_);
  for (int j = 0; j < dim(); ++j)
    for (const auto& [i, x] : vectors_[j]) m.set_entry(i, j, x);
  return m;
}

RowEchelon::RowEchelon(const OperatorMatrix& a)
    : ncols_(a.cols()), nrows_(a.rows()), rr_(a.rows()), ops_(a.rows()),
      is_pivot_col_(a.cols(), 0) {
  for (int r = 0; r < nrows_; ++r) {
    rr_[r] = a.row(r);
    ops_[r][r] = Rat(1);
  }
  int next = 0;  // next echelon row to fill
  for (int col = 0; col < ncols_ && next < nrows_; ++col) {
    int piv = -1;
    for (int r = next; r < nrows_; ++r) {
      auto it = rr_[r].find(col);
      if (it != rr_[r].end()) { piv = r; break; }
    }
    if (piv < 0) continue;
    std::swap(rr_[piv], rr_[next]);
    std::swap(ops_[piv], ops_[next]);
    Rat inv = 1 / rr_[next][col];
    if (inv != 1) {
      for (auto& [c, x] : rr_[next]) x *= inv;
      for (auto& [c, x] : ops_[next]) x *= inv;
    }
    for (int r = 0; r < nrows_; ++r) {
      if (r == next) continue;
      auto it = rr_[r].find(col);
      if (it == rr_[r].end()) continue;
      Rat f = it->second;
      for (const auto& [c, x] : rr_[next]) {
        auto jt = rr_[r].find(c);
        if (jt == rr_[r].end()) {
          rr_[r].emplace(c, -f * x);
        } else {
          jt->second -= f * x;
          if (jt->second == 0) rr_[r].erase(jt);
        }
      }
      for (const auto& [c, x] : ops_[next]) {
        auto jt = ops_[r].find(c);
        if (jt == ops_[r].end()) {
          ops_[r].emplace(c, -f * x);
        } else {
          jt->second -= f * x;
          if (jt->second == 0) ops_[r].erase(jt);
        }
      }
    }
    pivots_.emplace_back(col, next);
    is_pivot_col_[col] = 1;
    ++next;
  }
}

std::vector<SparseVec> RowEchelon::kernel_basis() const {
  std::vector<SparseVec> out;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot_col_[f]) continue;
    SparseVec v;
    v[f] = Rat(1);
    for (const auto& [pcol, prow] : pivots_) {
      auto it = rr_[prow].find(f);
      if (it != rr_[prow].end() && it->second != 0) v[pcol] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> RowEchelon::solve(const Vec& b) const {
  if ((int)b.size() != nrows_)
    throw std::invalid_argument("RowEchelon::solve: dimension mismatch");
  // c = E b where E records the row operations.
  Vec c(nrows_, Rat(0));
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [j, x] : ops_[r])
      if (b[j] != 0) c[r] += x * b[j];
  for (int r = rank(); r < nrows_; ++r)
    if (c[r] != 0) return std::nullopt;
  Vec x(ncols_, Rat(0));
  for (const auto& [pcol, prow] : pivots_) x[pcol] = c[prow];
  return x;
}

Vec RowEchelon::project_solution(const Vec& b) const {
  if ((int)b.size() != nrows_)
    throw std::invalid_argument("RowEchelon::project_solution: dimension mismatch");
  Vec c(nrows_, Rat(0));
  for (int r = 0; r < nrows_; ++r)
    for (const auto& [j, x] : ops_[r])
      if (b[j] != 0) c[r] += x * b[j];
  Vec x(ncols_, Rat(0));
  for (const auto& [pcol, prow] : pivots_) x[pcol] = c[prow];
  return x;
}

RankFactorization rank_factor(const OperatorMatrix& a) {
  RowEchelon re(a);
  RankFactorization out;
  out.rank = re.rank();
  out.kernel = SubspaceBasis(a.domain(), re.kernel_basis());
  std::vector<SparseVec> img;
  for (const auto& [pcol, prow] : re.pivots()) {
    SparseVec col;
    for (int r = 0; r < a.rows(); ++r) {
      Rat x = a.entry(r, pcol);
      if (x != 0) col[r] = x;
    }
    img.push_back(std::move(col));
  }
  out.image = SubspaceBasis(a.codomain(), std::move(img));
  if (out.rank + out.kernel.dim() != a.cols())
    throw std::logic_error("rank_factor: rank-nullity violated");
  return out;
}

std::optional<Vec> solve_linear(const OperatorMatrix& a, const Vec& b) {
  return RowEchelon(a).solve(b);
}

OperatorMatrix inverse(const OperatorMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix is not square");
  RowEchelon re(a);
  if (re.rank() != a.cols()) throw std::invalid_argument("inverse: matrix is singular");
  OperatorMatrix out(a.codomain(), a.domain());
  for (int j = 0; j < a.rows(); ++j) {
    Vec e(a.rows(), Rat(0));
    e[j] = Rat(1);
    Vec x = *re.solve(e);
    for (int i = 0; i < a.cols(); ++i)
      if (x[i] != 0) out.set_entry(i, j, x[i]);
  }
  return out;
}

static std::string vector_string(const BasedSpace& space, const Vec& v) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < (int)v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!first) os << " + ";
    os << "(" << to_string(v[i]) << ")*" << space.label(i);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

OperatorMatrix invert_on_subspace(const OperatorMatrix& a, const SubspaceBasis& s) {
  SubspaceSolver solver(s);
  BasedSpace coords = BasedSpace::anonymous(s.dim(), "s");
  OperatorMatrix restricted(coords, coords);
  for (int j = 0; j < s.dim(); ++j) {
    Vec image = a.apply(to_dense(s.vectors()[j], s.ambient().dim()));
    auto y = solver.coordinates(image);
    if (!y)
      throw std::invalid_argument(
          "invert_on_subspace: operator does not preserve the subspace (column " +
          std::to_string(j) + ")");
    for (int i = 0; i < s.dim(); ++i)
      if ((*y)[i] != 0) restricted.set_entry(i, j, (*y)[i]);
  }
  RowEchelon re(restricted);
  if (re.rank() != s.dim()) {
    SparseVec k = re.kernel_basis().front();
    Vec ambient(s.ambient().dim(), Rat(0));
    for (const auto& [j, c] : k)
      for (const auto& [i, x] : s.vectors()[j]) ambient[i] += c * x;
    throw std::invalid_argument("invert_on_subspace: singular restriction, kernel vector " +
                                vector_string(s.ambient(), ambient));
  }
  return inverse(restricted);
}

SubspaceSolver::SubspaceSolver(const SubspaceBasis& basis)
    : matrix_(basis.as_matrix()), echelon_(matrix_) {}

std::optional<Vec> SubspaceSolver::coordinates(const Vec& v) const {
  return echelon_.solve(v);
}

}  // namespace bgg
