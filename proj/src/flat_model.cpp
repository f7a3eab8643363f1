#include "bgg/flat_model.hpp"

#include <sstream>
#include <stdexcept>

namespace bgg {

namespace {

void enumerate_monomials(int n, int deg, std::vector<int>& cur, int var,
                         std::vector<std::vector<int>>& out) {
  if (var == n - 1) {
    cur[var] = deg;
    out.push_back(cur);
    return;
  }
  for (int e = deg; e >= 0; --e) {
    cur[var] = e;
    enumerate_monomials(n, deg - e, cur, var + 1, out);
  }
}

std::string monomial_label(const std::vector<int>& a) {
  std::string s;
  for (int i = 0; i < (int)a.size(); ++i) {
    if (a[i] == 0) continue;
    if (!s.empty()) s += ".";
    s += "x" + std::to_string(i + 1);
    if (a[i] > 1) s += "^" + std::to_string(a[i]);
  }
  return s.empty() ? "1" : s;
}

int total(const std::vector<int>& a) {
  int t = 0;
  for (int e : a) t += e;
  return t;
}

// Coefficient of d^alpha applied to x^beta (product of falling factorials),
// zero when beta does not dominate alpha.
Rat derivative_coefficient(const std::vector<int>& beta, const std::vector<int>& alpha) {
  Rat c(1);
  for (int i = 0; i < (int)beta.size(); ++i) {
    if (beta[i] < alpha[i]) return Rat(0);
    for (int t = 0; t < alpha[i]; ++t) c *= Rat(beta[i] - t);
  }
  return c;
}

}  // namespace

SectionSpacePtr poly_section_space(const BasedSpace& fiber, int n_vars, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("poly_section_space: negative degree");
  auto s = std::make_shared<PolySectionSpace>();
  s->fiber = fiber;
  s->n_vars = n_vars;
  s->max_degree = max_degree;
  std::vector<int> cur(n_vars, 0);
  for (int deg = 0; deg <= max_degree; ++deg)
    enumerate_monomials(n_vars, deg, cur, 0, s->monomials);
  std::vector<std::string> labels;
  std::vector<Rat> weights;
  for (int m = 0; m < (int)s->monomials.size(); ++m) {
    s->mono_pos[s->monomials[m]] = m;
    std::string ml = monomial_label(s->monomials[m]);
    for (int f = 0; f < fiber.dim(); ++f) {
      labels.push_back(ml + "|" + fiber.label(f));
      weights.push_back(fiber.weight(f));
    }
  }
  s->basis = BasedSpace(std::move(labels), std::move(weights));
  return s;
}

PolySection zero_section(SectionSpacePtr space) {
  PolySection s;
  s.coords.assign(space->dim(), Rat(0));
  s.space = std::move(space);
  return s;
}

void FlatOperator::add_symbol(std::vector<int> alpha, const OperatorMatrix& a) {
  if (a.is_zero()) return;
  auto it = symbols_.find(alpha);
  if (it == symbols_.end()) {
    symbols_.emplace(std::move(alpha), a);
  } else {
    it->second = it->second + a;
    if (it->second.is_zero()) symbols_.erase(it);
  }
}

FlatOperator FlatOperator::identity(const BasedSpace& fiber, int n_vars) {
  return fiberwise(OperatorMatrix::identity(fiber), n_vars);
}

FlatOperator FlatOperator::fiberwise(const OperatorMatrix& a, int n_vars) {
  FlatOperator f(a.domain(), a.codomain(), n_vars);
  f.add_symbol(std::vector<int>(n_vars, 0), a);
  return f;
}

FlatOperator FlatOperator::symbol(const OperatorMatrix& a, std::vector<int> alpha) {
  FlatOperator f(a.domain(), a.codomain(), (int)alpha.size());
  f.add_symbol(std::move(alpha), a);
  return f;
}

int FlatOperator::order() const {
  int o = 0;
  for (const auto& [alpha, a] : symbols_) o = std::max(o, total(alpha));
  return o;
}

FlatOperator FlatOperator::compose(const FlatOperator& other) const {
  if (!fiber_in_.same_labels(other.fiber_out_))
    throw std::invalid_argument("FlatOperator::compose: inner fibers disagree");
  FlatOperator out(other.fiber_in_, fiber_out_, n_vars_);
  for (const auto& [a1, m1] : symbols_)
    for (const auto& [a2, m2] : other.symbols_) {
      std::vector<int> sum = a1;
      for (int i = 0; i < n_vars_; ++i) sum[i] += a2[i];
      out.add_symbol(std::move(sum), m1.compose(m2));
    }
  return out;
}

FlatOperator FlatOperator::operator+(const FlatOperator& other) const {
  if (!fiber_in_.same_labels(other.fiber_in_) ||
      !fiber_out_.same_labels(other.fiber_out_))
    throw std::invalid_argument("FlatOperator::operator+: fibers disagree");
  FlatOperator out = *this;
  for (const auto& [alpha, a] : other.symbols_) out.add_symbol(alpha, a);
  return out;
}

FlatOperator FlatOperator::operator-(const FlatOperator& other) const {
  return *this + other.scaled(Rat(-1));
}

FlatOperator FlatOperator::scaled(const Rat& c) const {
  FlatOperator out(fiber_in_, fiber_out_, n_vars_);
  if (c == 0) return out;
  for (const auto& [alpha, a] : symbols_) out.symbols_.emplace(alpha, a.scaled(c));
  return out;
}

bool FlatOperator::operator==(const FlatOperator& other) const {
  if (symbols_.size() != other.symbols_.size()) return false;
  for (const auto& [alpha, a] : symbols_) {
    auto it = other.symbols_.find(alpha);
    if (it == other.symbols_.end() || !(it->second == a)) return false;
  }
  return true;
}

FlatOperator FlatOperator::adjoint() const {
  FlatOperator out(fiber_out_.dual(), fiber_in_.dual(), n_vars_);
  for (const auto& [alpha, a] : symbols_) {
    int sgn = total(alpha) % 2 == 0 ? 1 : -1;
    out.add_symbol(alpha, a.adjoint_on_duals().scaled(Rat(sgn)));
  }
  return out;
}

OperatorMatrix FlatOperator::assemble(int max_degree) const {
  auto dom = poly_section_space(fiber_in_, n_vars_, max_degree);
  auto cod = poly_section_space(fiber_out_, n_vars_, max_degree);
  OperatorMatrix m(dom->basis, cod->basis);
  for (const auto& [alpha, a] : symbols_)
    for (int b = 0; b < (int)dom->monomials.size(); ++b) {
      Rat coef = derivative_coefficient(dom->monomials[b], alpha);
      if (coef == 0) continue;
      std::vector<int> target = dom->monomials[b];
      for (int i = 0; i < n_vars_; ++i) target[i] -= alpha[i];
      int tm = cod->mono_pos.at(target);
      for (int r = 0; r < a.rows(); ++r)
        for (const auto& [f, x] : a.row(r))
          m.add_entry(cod->index(tm, r), dom->index(b, f), coef * x);
    }
  return m;
}

PolySection FlatOperator::apply(const PolySection& s) const {
  const PolySectionSpace& dom = *s.space;
  if (!dom.fiber.same_labels(fiber_in_) || dom.n_vars != n_vars_)
    throw std::invalid_argument("FlatOperator::apply: section space mismatch");
  auto cod = fiber_out_.same_labels(fiber_in_)
                 ? s.space
                 : poly_section_space(fiber_out_, n_vars_, dom.max_degree);
  PolySection out = zero_section(cod);
  for (const auto& [alpha, a] : symbols_)
    for (int b = 0; b < (int)dom.monomials.size(); ++b) {
      Rat coef = derivative_coefficient(dom.monomials[b], alpha);
      if (coef == 0) continue;
      std::vector<int> target = dom.monomials[b];
      for (int i = 0; i < n_vars_; ++i) target[i] -= alpha[i];
      int tm = cod->mono_pos.at(target);
      for (int r = 0; r < a.rows(); ++r) {
        Rat acc(0);
        for (const auto& [f, x] : a.row(r)) {
          const Rat& v = s.coords[dom.index(b, f)];
          if (v != 0) acc += x * v;
        }
        if (acc != 0) out.coords[cod->index(tm, r)] += coef * acc;
      }
    }
  return out;
}

FlatModel::FlatModel(ParabolicPtr par, RepresentationData w)
    : par_(par), cc_(par, std::move(w)) {
  if (!par_->abelian_nilradical())
    throw std::invalid_argument("flat calculus restricted to |1|-graded");
}

FlatOperator FlatModel::d_coord(int k) {
  const auto& ck = cc_.space(k).basis;
  const auto& cu = cc_.space(k + 1).basis;
  FlatOperator out(ck, cu, n_vars());
  for (int i = 0; i < n_vars(); ++i) {
    std::vector<int> alpha(n_vars(), 0);
    alpha[i] = 1;
    out = out + FlatOperator::symbol(cc_.wedge_eps(i, k), std::move(alpha));
  }
  return out;
}

FlatOperator FlatModel::d_g(int k) {
  return d_coord(k) + FlatOperator::fiberwise(cc_.d(k), n_vars());
}

FlatOperator FlatModel::delta_lift(int k) {
  return FlatOperator::fiberwise(cc_.delta(k), n_vars());
}

FlatOperator FlatModel::lift(const OperatorMatrix& a) const {
  return FlatOperator::fiberwise(a, par_->m_dim);
}

}  // namespace bgg
