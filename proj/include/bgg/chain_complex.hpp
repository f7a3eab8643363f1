#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bgg/representation.hpp"

namespace bgg {

// Degree-k chains: multi-indexed wedge products of the dual nilradical basis
// tensored with a module W. Basis pairs (I, w) are ordered lexicographically
// in I, then by the W basis; every wedge and interior sign in the engine
// derives from this single ordering convention.
struct ChainSpace {
  int k = 0;
  std::vector<std::vector<int>> subsets;      // increasing indices into the eps basis
  std::map<std::vector<int>, int> subset_pos;
  BasedSpace basis;
  int dimW = 0;

  int index(int subset, int w) const { return subset * dimW + w; }
};

struct HodgeSplit {
  SubspaceBasis im_d, harmonic, im_delta;
};

struct HomologyModule {
  int k = 0;
  SubspaceBasis harmonic;                        // kernel of quabla in C_k
  OperatorMatrix project;                        // C_k -> harmonic coordinates
  std::map<std::string, OperatorMatrix> g0_action;  // on harmonic coordinates
  int dim_im_d = 0;
  int dim_im_delta = 0;

  int dim() const { return harmonic.dim(); }
};

class ChainComplex {
 public:
  ChainComplex(ParabolicPtr par, RepresentationData w);

  const ParabolicPtr& parabolic() const { return par_; }
  const RepresentationData& module() const { return w_; }
  int top() const { return par_->m_dim; }

  const ChainSpace& space(int k);

  // Action of the p basis element at algebra index gi on C_k.
  OperatorMatrix p_action(int gi, int k);
  // Boundary C_k -> C_{k-1} (zero map to a 0-dim space at k = 0).
  const OperatorMatrix& delta(int k);
  // Coboundary C_k -> C_{k+1}; requires a g-module.
  const OperatorMatrix& d(int k);
  OperatorMatrix quabla(int k);
  // Left wedge with eps^i as a map C_k -> C_{k+1}.
  OperatorMatrix wedge_eps(int i, int k);

  HodgeSplit hodge_split(int k);
  HomologyModule homology(int k);

 private:
  ParabolicPtr par_;
  RepresentationData w_;
  std::vector<std::optional<ChainSpace>> spaces_;
  std::map<int, OperatorMatrix> delta_cache_, d_cache_;

  std::vector<std::pair<std::vector<int>, Rat>> form_action(int gi,
                                                            const std::vector<int>& s) const;
};

}  // namespace bgg
