#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "bgg/matrix.hpp"

namespace bgg {

// Structure constants, stored for index pairs i < j only; the i > j values
// follow by antisymmetry and the diagonal vanishes.
using BracketTable = std::map<std::pair<int, int>, SparseVec>;

class LieAlgebraData {
 public:
  LieAlgebraData() = default;
  LieAlgebraData(BasedSpace basis, BracketTable table)
      : basis_(std::move(basis)), table_(std::move(table)) {}

  int dim() const { return basis_.dim(); }
  const BasedSpace& space() const { return basis_; }

  SparseVec bracket(int i, int j) const;
  Vec bracket(const Vec& x, const Vec& y) const;
  OperatorMatrix ad(int i) const;
  OperatorMatrix ad(const Vec& x) const;

  // Trace form of ad; computed once and cached.
  const OperatorMatrix& killing() const;
  Rat killing(int i, int j) const { return killing().entry(i, j); }

  // Checks the Jacobi identity on every basis triple; throws naming the
  // offending triple.
  void validate() const;

 private:
  BasedSpace basis_;
  BracketTable table_;
  mutable std::shared_ptr<OperatorMatrix> killing_;
};

// Builds a validated algebra from a raw user table which may list both (i,j)
// and (j,i) entries; antisymmetry between them is enforced, violations are
// reported with basis labels.
LieAlgebraData build_lie_algebra(const BasedSpace& basis,
                                 const std::map<std::pair<int, int>, SparseVec>& raw);

// A graded semisimple algebra g = m + g0 + m* with basis ordered m first,
// then g0, then m*. The m* basis is normalized so that the Killing pairing
// of eps^i with e_j is exactly delta^i_j; weights live on the BasedSpace.
class Parabolic {
 public:
  std::string name;
  LieAlgebraData algebra;
  int m_dim = 0;
  int g0_dim = 0;
  Vec grading_element;  // coordinates of E in the g basis

  BasedSpace standard_space;                    // defining module
  std::vector<OperatorMatrix> standard_action;  // per g basis element

  int dim() const { return algebra.dim(); }
  int mstar_dim() const { return m_dim; }
  int m_index(int i) const { return i; }
  int g0_index(int i) const { return m_dim + i; }
  int mstar_index(int i) const { return m_dim + g0_dim + i; }
  bool is_p_index(int gi) const { return gi >= m_dim; }

  const Rat& weight(int gi) const { return algebra.space().weight(gi); }
  // Highest geometric weight occurring on m.
  Rat depth() const;
  // True when m is abelian (equivalently the grading is |1|-graded).
  bool abelian_nilradical() const;

  // Component of [x_gi, e_j] lying in m, as m coordinates (e: m basis).
  SparseVec bracket_m(int gi, int mj) const;
  // Component of [x_gi, eps^j] lying in m*, as m* coordinates.
  SparseVec bracket_mstar(int gi, int mstar_j) const;

  // Grading invariants: ad(E) diagonal with the stored weights, layer
  // closure, sign pattern of the weights, duality normalization.
  void validate() const;
};

using ParabolicPtr = std::shared_ptr<const Parabolic>;

ParabolicPtr conformal_parabolic(int p, int q);
ParabolicPtr projective_parabolic(int n);
ParabolicPtr g2_parabolic();

// Name strings: "conformal:p,q", "projective:n", "g2".
ParabolicPtr builtin_parabolic(const std::string& name);

}  // namespace bgg
