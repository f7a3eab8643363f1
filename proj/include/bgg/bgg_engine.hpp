#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bgg/flat_model.hpp"

namespace bgg {

// Exact inverse of a first-order quabla on sections valued in the image
// subspace B of a fiber arrow, obtained from the terminating Neumann series.
struct NeumannData {
  SubspaceBasis b_basis;    // B inside the fiber
  OperatorMatrix iota;      // B coordinates -> fiber
  OperatorMatrix pi;        // fiber -> B coordinates (left inverse of iota)
  FlatOperator inverse;     // of the quabla, on B-coordinate sections
  int symbol_index = 0;     // smallest j with N^j = 0 as a symbol operator

  int matrix_index(int max_degree) const {
    return std::min(symbol_index, max_degree + 1);
  }
};

// quabla_eta must be first order; arrow_in is a fiber map whose image is the
// invariant subspace B on which the zeroth-order part is invertible.
NeumannData neumann_invert(const FlatOperator& quabla_eta, const OperatorMatrix& arrow_in);

// Everything derived from one flat pair (algebra, module): the first-order
// quabla, Q and Pi, homology transfer maps and the BGG operators, all held as
// symbol operators so a single context serves every degree cutoff.
class BGGContext {
 public:
  BGGContext(ParabolicPtr par, RepresentationData w);

  FlatModel& model() { return fm_; }
  ChainComplex& chains() { return fm_.chains(); }
  const ParabolicPtr& parabolic() const { return par_; }
  int n() const { return par_->m_dim; }

  FlatOperator quabla_eta(int k);
  const NeumannData& neumann(int k);   // inverse on B_k-coordinate sections
  FlatOperator q_operator(int k);      // C_k -> C_{k-1} sections
  // Same operator built through the quotient C_k/Z_k instead of B_{k-1}.
  FlatOperator q_via_quotient(int k);
  FlatOperator pi_operator(int k);

  const HomologyModule& homology(int k);
  const BasedSpace& h_fiber(int k);
  FlatOperator represent(int k);       // H_k sections -> C_k sections
  FlatOperator project(int k);         // C_k sections -> H_k sections
  FlatOperator bgg_operator(int k);    // H_k sections -> H_{k+1} sections

 private:
  ParabolicPtr par_;
  FlatModel fm_;
  std::map<int, NeumannData> neumann_;
  std::map<int, HomologyModule> homology_;
  std::map<int, FlatOperator> pi_, bgg_;
};

// Equivariant fiber pairing W1 (x) W2 -> W3; the domain is indexed like the
// tensor-product basis (i1 * dim W2 + i2). Equivariance is verified.
struct PairingData {
  RepresentationData w1, w2, w3;
  OperatorMatrix map;

  PairingData(RepresentationData a, RepresentationData b, RepresentationData c,
              OperatorMatrix m);
};

PairingData tensor_pairing(const RepresentationData& a, const RepresentationData& b);
// The Lie bracket as a pairing adjoint (x) adjoint -> adjoint.
PairingData bracket_pairing(ParabolicPtr par);

// Wedge of chain-level sections through a fiber pairing; polynomial degrees
// and form degrees add, so the result is exact (no truncation loss).
PolySection wedge_sections(ChainComplex& cc1, int k, const PolySection& a,
                           ChainComplex& cc2, int l, const PolySection& b,
                           ChainComplex& cc3, const PairingData& p);

// Cup product on homology sections: project(wedge(represent, represent)).
PolySection cup_product(BGGContext& c1, int k, const PolySection& alpha,
                        BGGContext& c2, int l, const PolySection& beta,
                        BGGContext& c3, const PairingData& p);

struct TripleContexts {
  BGGContext* c1;
  BGGContext* c2;
  BGGContext* c3;
  BGGContext* c12;
  BGGContext* c23;
  BGGContext* c123;
  PairingData p12, p23, p12_3, p1_23;
};

// [Pi((-1)^k Pi a ^ Q(Pi b ^ Pi c) - Q(Pi a ^ Pi b) ^ Pi c)] on H-sections.
PolySection triple_product(TripleContexts& t, int k, int l, int m,
                           const PolySection& alpha, const PolySection& beta,
                           const PolySection& gamma);

// A-infinity tower for a single module with the tensor pairing: contexts for
// tensor powers W, W (x) W, ... up to the requested arity.
class AInfinity {
 public:
  AInfinity(ParabolicPtr par, const RepresentationData& w, int max_arity);

  BGGContext& context(int arity) { return *contexts_.at(arity - 1); }
  // lambda_m on chain-level sections a_i in C_{k_i}(W)-sections.
  PolySection lambda(const std::vector<int>& degrees,
                     const std::vector<PolySection>& args);
  // mu_m on homology sections.
  PolySection mu(const std::vector<int>& degrees, const std::vector<PolySection>& args);
  // number of wedge-monomials in the expansion of lambda_m
  static long lambda_term_count(int m);

 private:
  std::vector<RepresentationData> reps_;  // tensor powers of w
  std::vector<std::unique_ptr<BGGContext>> contexts_;
  std::map<std::pair<int, int>, PairingData> pairings_;

  // Concatenation pairing W^(x)j (x) W^(x)k -> W^(x)(j+k).
  const PairingData& pairing(int j, int k);
  // Q lambda on a segment; the base case is Q lambda_1 = -id.
  PolySection q_lambda(const std::vector<int>& degrees,
                       const std::vector<PolySection>& args);
};

// The dual sequence: cochain fibers C^k = (C_k)*, fiberwise differential
// d_T* = -delta^T, flat codifferential delta^g = -(d^g)*, and the hat
// operators produced by the same Neumann engine.
class DualBGGContext {
 public:
  explicit DualBGGContext(BGGContext& primal);

  BGGContext& primal() { return primal_; }
  const BasedSpace& dual_fiber(int k);
  FlatOperator d_tstar(int k);     // C^k -> C^{k+1}, fiberwise
  FlatOperator delta_g(int k);     // C^k -> C^{k-1}, first order
  FlatOperator quabla_eta_hat(int k);
  const NeumannData& neumann_hat(int k);
  FlatOperator q_hat(int k);       // C^k -> C^{k+1} sections
  FlatOperator pi_hat(int k);
  const BasedSpace& h_hat_fiber(int k);
  FlatOperator represent_hat(int k);   // Hhat_k sections -> C^k sections
  FlatOperator project_hat(int k);     // C^k sections -> Hhat_k sections
  FlatOperator dual_bgg_operator(int k);  // Hhat_{k+1} -> Hhat_k sections

 private:
  BGGContext& primal_;
  std::map<int, BasedSpace> fibers_, h_fibers_;
  std::map<int, NeumannData> neumann_;
  std::map<int, FlatOperator> pi_;
};

// Pointwise fiber pairing of a C_k-section with a C^k-dual section; the
// result is a scalar polynomial section (1-dim fiber), degrees adding.
PolySection pair_chain_sections(const PolySection& a, const PolySection& theta);
// Same for homology sections against dual homology sections.
PolySection pair_h_sections(const PolySection& alpha, const PolySection& b);

// Chain-level contraction: <a -| theta, c> = <theta, a ^ c> for c running
// over C_l(trivial); a is a C_k(W)-section, theta a C^{k+l}-dual section over
// the W complex paired against its dual module realization.
PolySection contract_sections(ChainComplex& cc_w, int k, const PolySection& a,
                              int l, const PolySection& theta,
                              ChainComplex& cc_triv);

// Cap on homology sections, landing in the dual homology of the trivial
// complex at form degree l.
PolySection cap_product(BGGContext& cw, DualBGGContext& dw, int k, int l,
                        const PolySection& alpha, const PolySection& b,
                        BGGContext& ctriv, DualBGGContext& dtriv);

struct DeformationReport {
  bool obstruction_closed = false;  // D2 of the obstruction vanishes
  bool exact = false;               // obstruction lies in the image of D1
  PolySection obstruction;          // A cup A as an H2-section
  std::optional<PolySection> primitive;  // X with D1 X = obstruction, when exact
};

// For A an H1(adjoint)-section with D1 A = 0: quadratic obstruction A cup A
// (bracket pairing), its closedness and exactness. Rejects non-closed input.
DeformationReport deformation_obstruction(BGGContext& adj, const PolySection& a);

// Deterministic seeded rational sections with small entries, for property
// tests and reports.
PolySection random_section(SectionSpacePtr space, std::uint64_t seed);

}  // namespace bgg
