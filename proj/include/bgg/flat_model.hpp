#pragma once

#include <map>
#include <memory>
#include <vector>

#include "bgg/chain_complex.hpp"

namespace bgg {

// Polynomial sections of a trivialized fiber bundle over the big cell:
// coefficients are rational polynomials in n variables truncated at total
// degree D. Monomials are ordered degree first, then lexicographically.
struct PolySectionSpace {
  BasedSpace fiber;
  int n_vars = 0;
  int max_degree = 0;
  std::vector<std::vector<int>> monomials;  // exponent vectors
  std::map<std::vector<int>, int> mono_pos;
  BasedSpace basis;

  int dim() const { return basis.dim(); }
  int index(int mono, int fib) const { return mono * fiber.dim() + fib; }
};

using SectionSpacePtr = std::shared_ptr<const PolySectionSpace>;

SectionSpacePtr poly_section_space(const BasedSpace& fiber, int n_vars, int max_degree);

struct PolySection {
  SectionSpacePtr space;
  Vec coords;
};

PolySection zero_section(SectionSpacePtr space);

// A constant-coefficient differential operator between section spaces,
// stored as a sum of symbols (fiber matrix, derivative multi-index). The
// symbol list does not depend on the degree cutoff; matrices are assembled
// per cutoff on demand. No symbol ever raises polynomial degree, so every
// assembled operator is total on the truncated space.
class FlatOperator {
 public:
  FlatOperator() = default;
  FlatOperator(BasedSpace fiber_in, BasedSpace fiber_out, int n_vars)
      : fiber_in_(std::move(fiber_in)), fiber_out_(std::move(fiber_out)),
        n_vars_(n_vars) {}

  static FlatOperator identity(const BasedSpace& fiber, int n_vars);
  // A acting fiberwise, one block per monomial.
  static FlatOperator fiberwise(const OperatorMatrix& a, int n_vars);
  // A composed with the derivative multi-index alpha.
  static FlatOperator symbol(const OperatorMatrix& a, std::vector<int> alpha);

  const BasedSpace& fiber_in() const { return fiber_in_; }
  const BasedSpace& fiber_out() const { return fiber_out_; }
  int n_vars() const { return n_vars_; }
  const std::map<std::vector<int>, OperatorMatrix>& symbols() const { return symbols_; }

  bool is_zero() const { return symbols_.empty(); }
  // Differential order: largest |alpha| present.
  int order() const;

  FlatOperator compose(const FlatOperator& other) const;
  FlatOperator operator+(const FlatOperator& other) const;
  FlatOperator operator-(const FlatOperator& other) const;
  FlatOperator scaled(const Rat& c) const;
  bool operator==(const FlatOperator& other) const;

  // Formal adjoint on dual fibers: (A, d^alpha) -> ((-1)^|alpha| A^T, d^alpha).
  FlatOperator adjoint() const;

  OperatorMatrix assemble(int max_degree) const;
  PolySection apply(const PolySection& s) const;

 private:
  BasedSpace fiber_in_, fiber_out_;
  int n_vars_ = 0;
  std::map<std::vector<int>, OperatorMatrix> symbols_;

  void add_symbol(std::vector<int> alpha, const OperatorMatrix& a);
};

// The flat |1|-graded model over a chain complex: coordinate exterior
// derivative and the twisted deRham differential with constant coefficients.
class FlatModel {
 public:
  FlatModel(ParabolicPtr par, RepresentationData w);

  ChainComplex& chains() { return cc_; }
  const ParabolicPtr& parabolic() const { return par_; }
  int n_vars() const { return par_->m_dim; }

  // Sum over i of (eps^i wedge) after d/dx_i; lowers polynomial degree.
  FlatOperator d_coord(int k);
  // d_coord plus the fiberwise chain coboundary.
  FlatOperator d_g(int k);
  // Fiberwise lift of the chain codifferential.
  FlatOperator delta_lift(int k);
  // Fiberwise lift of an arbitrary fiber map.
  FlatOperator lift(const OperatorMatrix& a) const;

 private:
  ParabolicPtr par_;
  ChainComplex cc_;
};

}  // namespace bgg
