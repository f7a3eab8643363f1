#pragma once

#include <map>
#include <string>
#include <vector>

#include "bgg/lie_algebra.hpp"

namespace bgg {

// A finite dimensional module over a graded algebra, with one action matrix
// per algebra basis element. Scope records whether the action is defined for
// all of g or only for p = g0 + m*.
struct RepresentationData {
  enum class Scope { g_module, p_module };

  ParabolicPtr par;
  BasedSpace space;
  std::vector<OperatorMatrix> action;
  Scope scope = Scope::g_module;
  std::string label;

  const OperatorMatrix& act(int gi) const { return action.at(gi); }
  OperatorMatrix act(const Vec& x) const;
  bool in_scope(int gi) const {
    return scope == Scope::g_module || par->is_p_index(gi);
  }
};

RepresentationData trivial_rep(ParabolicPtr par);
RepresentationData standard_rep(ParabolicPtr par);
RepresentationData adjoint_rep(ParabolicPtr par);
RepresentationData dual_rep(const RepresentationData& r);
RepresentationData tensor_rep(const RepresentationData& a, const RepresentationData& b);
RepresentationData exterior_power_rep(const RepresentationData& r, int k);

// One line per violated bracket pair; an empty report means valid.
std::vector<std::string> validate_representation(const RepresentationData& r);

struct WeightDecomposition {
  std::map<Rat, std::vector<int>> layers;  // weight -> basis positions
  bool strictly_lowering = true;           // every m*-action lowers weight
};

// Partition of the basis by eigenvalue of rho(E); throws if rho(E) is not
// diagonal on the given basis.
WeightDecomposition weight_decomposition(const RepresentationData& r);

// Expression grammar: trivial | standard | adjoint | dual(R) | tensor(R,R) |
// ext(R,k).
RepresentationData parse_rep(ParabolicPtr par, const std::string& expr);

// Increasing index subsets of {0..n-1} of size k, in lexicographic order.
std::vector<std::vector<int>> index_subsets(int n, int k);

}  // namespace bgg
