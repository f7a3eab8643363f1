#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgg/based_space.hpp"

namespace bgg {

using Vec = std::vector<Rat>;        // dense coordinate vector
using SparseVec = std::map<int, Rat>;  // index -> nonzero entry

Vec to_dense(const SparseVec& v, int dim);
SparseVec to_sparse(const Vec& v);
bool is_zero(const Vec& v);

// Sparse exact-rational linear map between based spaces. Row index = codomain
// basis position, column index = domain basis position.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  OperatorMatrix(BasedSpace domain, BasedSpace codomain)
      : domain_(std::move(domain)), codomain_(std::move(codomain)),
        rows_(codomain_.dim()) {}

  static OperatorMatrix identity(const BasedSpace& space);
  static OperatorMatrix zero(const BasedSpace& domain, const BasedSpace& codomain) {
    return OperatorMatrix(domain, codomain);
  }

  const BasedSpace& domain() const { return domain_; }
  const BasedSpace& codomain() const { return codomain_; }
  int rows() const { return codomain_.dim(); }
  int cols() const { return domain_.dim(); }

  void add_entry(int row, int col, const Rat& value);
  void set_entry(int row, int col, const Rat& value);
  Rat entry(int row, int col) const;
  const std::map<int, Rat>& row(int r) const { return rows_.at(r); }

  bool is_zero() const;
  long nnz() const;

  Vec apply(const Vec& x) const;
  SparseVec apply(const SparseVec& x) const;

  // this ∘ other (other acts first); inner label lists must agree.
  OperatorMatrix compose(const OperatorMatrix& other) const;
  OperatorMatrix transpose() const;
  // Transpose regarded as a map between the dual spaces.
  OperatorMatrix adjoint_on_duals() const;
  OperatorMatrix operator+(const OperatorMatrix& other) const;
  OperatorMatrix operator-(const OperatorMatrix& other) const;
  OperatorMatrix scaled(const Rat& c) const;
  bool operator==(const OperatorMatrix& other) const;

  // Same entries, different (dimension-equal) domain/codomain labels.
  OperatorMatrix with_spaces(BasedSpace domain, BasedSpace codomain) const;

 private:
  BasedSpace domain_, codomain_;
  std::vector<std::map<int, Rat>> rows_;
};

// A list of linearly independent vectors in an ambient based space.
// Independence is verified at construction.
class SubspaceBasis {
 public:
  SubspaceBasis() = default;
  SubspaceBasis(BasedSpace ambient, std::vector<SparseVec> vectors);

  const BasedSpace& ambient() const { return ambient_; }
  const std::vector<SparseVec>& vectors() const { return vectors_; }
  int dim() const { return (int)vectors_.size(); }

  // Vectors as columns of a map (coordinate space -> ambient).
  OperatorMatrix as_matrix(const std::string& coord_prefix = "s") const;

 private:
  BasedSpace ambient_;
  std::vector<SparseVec> vectors_;
};

// Reduced row echelon form with deterministic pivoting: columns are processed
// in basis-label order and the first available row is used as pivot, so every
// emitted basis is reproducible bit for bit.
class RowEchelon {
 public:
  explicit RowEchelon(const OperatorMatrix& a);

  int rank() const { return (int)pivots_.size(); }
  // Pairs (pivot column, echelon row), in column order.
  const std::vector<std::pair<int, int>>& pivots() const { return pivots_; }

  // Deterministic kernel basis (one vector per free column, free entry = 1).
  std::vector<SparseVec> kernel_basis() const;
  // Particular solution of Ax = b with free variables set to zero.
  std::optional<Vec> solve(const Vec& b) const;
  // Like solve, but the component of b outside the column span is discarded
  // instead of rejected; for full-column-rank A this is a linear left inverse.
  Vec project_solution(const Vec& b) const;

 private:
  int ncols_ = 0;
  int nrows_ = 0;
  std::vector<std::map<int, Rat>> rr_;     // reduced rows of A
  std::vector<std::map<int, Rat>> ops_;    // row ops applied to the identity
  std::vector<std::pair<int, int>> pivots_;
  std::vector<int> is_pivot_col_;
};

struct RankFactorization {
  SubspaceBasis kernel;  // subspace of the domain
  SubspaceBasis image;   // subspace of the codomain (pivot columns of A)
  int rank = 0;
};

RankFactorization rank_factor(const OperatorMatrix& a);

std::optional<Vec> solve_linear(const OperatorMatrix& a, const Vec& b);

// Exact inverse of a square full-rank matrix.
OperatorMatrix inverse(const OperatorMatrix& a);

// Inverse of A restricted to span(S), expressed in the coordinates of S.
// Throws if A does not preserve span(S) or if the restriction is singular
// (the error names a kernel vector of the restriction).
OperatorMatrix invert_on_subspace(const OperatorMatrix& a, const SubspaceBasis& s);

// Repeated "express v in the span of this basis" solves against one echelon.
class SubspaceSolver {
 public:
  explicit SubspaceSolver(const SubspaceBasis& basis);
  // Coordinates of v in the basis, or nullopt if v is outside the span.
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  OperatorMatrix matrix_;
  RowEchelon echelon_;
};

}  // namespace bgg
