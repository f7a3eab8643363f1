#include "bgg/bgg_engine.hpp"

#include <random>
#include <stdexcept>

namespace bgg {

namespace {

int total(const std::vector<int>& a) {
  int t = 0;
  for (int e : a) t += e;
  return t;
}

// Inverts A0 + sum_i A_i d/dx_i with A0 invertible on the whole fiber; the
// Neumann series of N = -A0^{-1} (sum A_i d_i) terminates because every
// symbol power raises the derivative order.
FlatOperator series_invert_first_order(const FlatOperator& op, int& index_out) {
  const BasedSpace& fiber = op.fiber_in();
  int n = op.n_vars();
  std::vector<int> zero(n, 0);
  OperatorMatrix a0(fiber, fiber);
  FlatOperator pert(fiber, fiber, n);
  for (const auto& [alpha, a] : op.symbols()) {
    int o = total(alpha);
    if (o == 0)
      a0 = a;
    else if (o == 1)
      pert = pert + FlatOperator::symbol(a, alpha);
    else
      throw std::logic_error("series_invert_first_order: operator is not first order");
  }
  if (fiber.dim() == 0) {
    index_out = 0;
    return FlatOperator(fiber, fiber, n);
  }
  OperatorMatrix a0inv = inverse(a0);
  FlatOperator neg = FlatOperator::fiberwise(a0inv, n).compose(pert).scaled(Rat(-1));
  FlatOperator series = FlatOperator::identity(fiber, n);
  FlatOperator power = FlatOperator::identity(fiber, n);
  int j = 0;
  while (true) {
    power = neg.compose(power);
    ++j;
    if (power.is_zero()) break;
    series = series + power;
    if (j > 64)
      throw std::logic_error("series_invert_first_order: series did not terminate");
  }
  index_out = j;
  return series.compose(FlatOperator::fiberwise(a0inv, n));
}

// Ordered merge of two increasing index sets; the sign counts the
// transpositions needed, nullopt marks a repeated index.
std::optional<std::pair<std::vector<int>, int>> merge_subsets(
    const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> u;
  u.reserve(a.size() + b.size());
  int inv = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) return std::nullopt;
    if (a[i] < b[j]) {
      u.push_back(a[i++]);
    } else {
      inv += (int)(a.size() - i);
      u.push_back(b[j++]);
    }
  }
  while (i < a.size()) u.push_back(a[i++]);
  while (j < b.size()) u.push_back(b[j++]);
  return std::make_pair(std::move(u), inv % 2 == 0 ? 1 : -1);
}

void axpy(PolySection& y, const PolySection& x, const Rat& c) {
  if (!y.space->basis.same_labels(x.space->basis))
    throw std::invalid_argument("axpy: section spaces disagree");
  for (int i = 0; i < (int)x.coords.size(); ++i)
    if (x.coords[i] != 0) y.coords[i] += c * x.coords[i];
}

}  // namespace

NeumannData neumann_invert(const FlatOperator& quabla_eta, const OperatorMatrix& arrow_in) {
  const BasedSpace& fiber = quabla_eta.fiber_in();
  if (!fiber.same_labels(quabla_eta.fiber_out()))
    throw std::invalid_argument("neumann_invert: quabla is not an endomorphism");
  if (!arrow_in.codomain().same_labels(fiber))
    throw std::invalid_argument("neumann_invert: arrow codomain is not the fiber");
  int n = quabla_eta.n_vars();

  NeumannData nd;
  nd.b_basis = rank_factor(arrow_in).image;
  nd.iota = nd.b_basis.as_matrix("b");
  const BasedSpace& bspace = nd.iota.domain();
  nd.pi = OperatorMatrix(fiber, bspace);
  RowEchelon re(nd.iota);
  for (int j = 0; j < fiber.dim(); ++j) {
    Vec e(fiber.dim(), Rat(0));
    e[j] = Rat(1);
    Vec x = re.project_solution(e);
    for (int i = 0; i < (int)x.size(); ++i)
      if (x[i] != 0) nd.pi.set_entry(i, j, x[i]);
  }

  // restrict symbol by symbol, checking that B stays invariant
  FlatOperator restricted(bspace, bspace, n);
  for (const auto& [alpha, a] : quabla_eta.symbols()) {
    OperatorMatrix abar = nd.pi.compose(a).compose(nd.iota);
    if (!(a.compose(nd.iota) == nd.iota.compose(abar)))
      throw std::logic_error("neumann_invert: quabla does not preserve the image subspace");
    restricted = restricted + FlatOperator::symbol(abar, alpha);
  }
  nd.inverse = series_invert_first_order(restricted, nd.symbol_index);
  return nd;
}

BGGContext::BGGContext(ParabolicPtr par, RepresentationData w)
    : par_(par), fm_(par, std::move(w)) {}

FlatOperator BGGContext::quabla_eta(int k) {
  const auto& ck = chains().space(k).basis;
  FlatOperator out(ck, ck, n());
  if (k < n()) out = out + fm_.delta_lift(k + 1).compose(fm_.d_g(k));
  if (k > 0) out = out + fm_.d_g(k - 1).compose(fm_.delta_lift(k));
  return out;
}

const NeumannData& BGGContext::neumann(int k) {
  auto it = neumann_.find(k);
  if (it != neumann_.end()) return it->second;
  const auto& ck = chains().space(k).basis;
  OperatorMatrix arrow = k < n() ? chains().delta(k + 1) : OperatorMatrix::zero(ck, ck);
  return neumann_.emplace(k, neumann_invert(quabla_eta(k), arrow)).first->second;
}

FlatOperator BGGContext::q_operator(int k) {
  if (k < 1 || k > n())
    throw std::invalid_argument("q_operator: degree out of range 1.." +
                                std::to_string(n()));
  const NeumannData& nd = neumann(k - 1);
  return fm_.lift(nd.iota)
      .compose(nd.inverse)
      .compose(fm_.lift(nd.pi.compose(chains().delta(k))));
}

FlatOperator BGGContext::q_via_quotient(int k) {
  if (k < 1 || k > n())
    throw std::invalid_argument("q_via_quotient: degree out of range 1.." +
                                std::to_string(n()));
  const auto& ck = chains().space(k).basis;
  const OperatorMatrix& dl = chains().delta(k);
  RowEchelon re(dl);
  int t = re.rank();
  auto kern = re.kernel_basis();

  // transversal of ker delta spanned by unit vectors at the pivot columns
  BasedSpace tspace = BasedSpace::anonymous(t, "t");
  OperatorMatrix iota_t(tspace, ck);
  OperatorMatrix joined(BasedSpace::anonymous(ck.dim(), "j"), ck);
  for (int j = 0; j < t; ++j) {
    iota_t.set_entry(re.pivots()[j].first, j, Rat(1));
    joined.set_entry(re.pivots()[j].first, j, Rat(1));
  }
  for (int j = 0; j < (int)kern.size(); ++j)
    for (const auto& [i, x] : kern[j]) joined.set_entry(i, t + j, x);
  OperatorMatrix full_inv = inverse(joined);
  OperatorMatrix pi_t(ck, tspace);
  for (int r = 0; r < t; ++r)
    for (const auto& [col, x] : full_inv.row(r)) pi_t.set_entry(r, col, x);

  FlatOperator quotient(tspace, tspace, n());
  FlatOperator qe = quabla_eta(k);
  for (const auto& [alpha, a] : qe.symbols())
    quotient = quotient + FlatOperator::symbol(pi_t.compose(a).compose(iota_t), alpha);
  int index = 0;
  FlatOperator inv = series_invert_first_order(quotient, index);
  return fm_.lift(dl.compose(iota_t)).compose(inv).compose(fm_.lift(pi_t));
}

FlatOperator BGGContext::pi_operator(int k) {
  auto it = pi_.find(k);
  if (it != pi_.end()) return it->second;
  FlatOperator out = FlatOperator::identity(chains().space(k).basis, n());
  if (k > 0) out = out - fm_.d_g(k - 1).compose(q_operator(k));
  if (k < n()) out = out - q_operator(k + 1).compose(fm_.d_g(k));
  return pi_.emplace(k, std::move(out)).first->second;
}

const HomologyModule& BGGContext::homology(int k) {
  auto it = homology_.find(k);
  if (it != homology_.end()) return it->second;
  return homology_.emplace(k, chains().homology(k)).first->second;
}

const BasedSpace& BGGContext::h_fiber(int k) { return homology(k).project.codomain(); }

FlatOperator BGGContext::represent(int k) {
  return pi_operator(k).compose(fm_.lift(homology(k).harmonic.as_matrix("H")));
}

FlatOperator BGGContext::project(int k) {
  return fm_.lift(homology(k).project).compose(pi_operator(k));
}

FlatOperator BGGContext::bgg_operator(int k) {
  auto it = bgg_.find(k);
  if (it != bgg_.end()) return it->second;
  if (k < 0 || k >= n())
    throw std::invalid_argument("bgg_operator: degree out of range 0.." +
                                std::to_string(n() - 1));
  FlatOperator out = project(k + 1).compose(fm_.d_g(k)).compose(represent(k));
  return bgg_.emplace(k, std::move(out)).first->second;
}

PairingData::PairingData(RepresentationData a, RepresentationData b,
                         RepresentationData c, OperatorMatrix m)
    : w1(std::move(a)), w2(std::move(b)), w3(std::move(c)), map(std::move(m)) {
  int d1 = w1.space.dim(), d2 = w2.space.dim();
  if (map.cols() != d1 * d2 || map.rows() != w3.space.dim())
    throw std::invalid_argument("PairingData: map shape does not match the modules");
  const ParabolicPtr& par = w1.par;
  if (w2.par != par || w3.par != par)
    throw std::invalid_argument("PairingData: modules over different algebras");
  for (int gi = 0; gi < par->dim(); ++gi) {
    if (!w1.in_scope(gi) || !w2.in_scope(gi) || !w3.in_scope(gi)) continue;
    OperatorMatrix t(map.domain(), map.domain());
    const OperatorMatrix& r1 = w1.act(gi);
    const OperatorMatrix& r2 = w2.act(gi);
    for (int r = 0; r < d1; ++r)
      for (const auto& [c1, x] : r1.row(r))
        for (int i2 = 0; i2 < d2; ++i2) t.add_entry(r * d2 + i2, c1 * d2 + i2, x);
    for (int r = 0; r < d2; ++r)
      for (const auto& [c2, x] : r2.row(r))
        for (int i1 = 0; i1 < d1; ++i1) t.add_entry(i1 * d2 + r, i1 * d2 + c2, x);
    if (!(map.compose(t) == w3.act(gi).compose(map)))
      throw std::invalid_argument("PairingData: pairing is not equivariant under " +
                                  par->algebra.space().label(gi));
  }
}

PairingData tensor_pairing(const RepresentationData& a, const RepresentationData& b) {
  RepresentationData c = tensor_rep(a, b);
  OperatorMatrix m = OperatorMatrix::identity(c.space);
  return PairingData(a, b, c, std::move(m));
}

PairingData bracket_pairing(ParabolicPtr par) {
  RepresentationData adj = adjoint_rep(par);
  RepresentationData ten = tensor_rep(adj, adj);
  OperatorMatrix m(ten.space, adj.space);
  int d = par->dim();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, x] : par->algebra.bracket(i, j)) m.set_entry(k, i * d + j, x);
  return PairingData(adj, adj, adj, std::move(m));
}

PolySection wedge_sections(ChainComplex& cc1, int k, const PolySection& a,
                           ChainComplex& cc2, int l, const PolySection& b,
                           ChainComplex& cc3, const PairingData& p) {
  if (cc1.parabolic() != cc2.parabolic() || cc1.parabolic() != cc3.parabolic())
    throw std::invalid_argument("wedge_sections: factors over different algebras");
  if (!cc1.module().space.same_labels(p.w1.space) ||
      !cc2.module().space.same_labels(p.w2.space) ||
      !cc3.module().space.same_labels(p.w3.space))
    throw std::invalid_argument("wedge_sections: pairing modules do not match");
  const ChainSpace& s1 = cc1.space(k);
  const ChainSpace& s2 = cc2.space(l);
  const ChainSpace& s3 = cc3.space(k + l);
  if (!a.space->fiber.same_labels(s1.basis) || !b.space->fiber.same_labels(s2.basis))
    throw std::invalid_argument("wedge_sections: section fibers do not match");

  std::vector<SparseVec> cols(p.map.cols());
  for (int r = 0; r < p.map.rows(); ++r)
    for (const auto& [c, x] : p.map.row(r)) cols[c][r] = x;

  int n = a.space->n_vars;
  auto out_space =
      poly_section_space(s3.basis, n, a.space->max_degree + b.space->max_degree);
  PolySection out = zero_section(out_space);
  for (int ia = 0; ia < (int)a.coords.size(); ++ia) {
    if (a.coords[ia] == 0) continue;
    int ma = ia / s1.basis.dim(), fa = ia % s1.basis.dim();
    int sa = fa / s1.dimW, wa = fa % s1.dimW;
    for (int ib = 0; ib < (int)b.coords.size(); ++ib) {
      if (b.coords[ib] == 0) continue;
      int mb = ib / s2.basis.dim(), fb = ib % s2.basis.dim();
      int sb = fb / s2.dimW, wb = fb % s2.dimW;
      auto merged = merge_subsets(s1.subsets[sa], s2.subsets[sb]);
      if (!merged) continue;
      int su = s3.subset_pos.at(merged->first);
      std::vector<int> mono = a.space->monomials[ma];
      for (int i = 0; i < n; ++i) mono[i] += b.space->monomials[mb][i];
      int mu = out_space->mono_pos.at(mono);
      Rat coef = a.coords[ia] * b.coords[ib] * Rat(merged->second);
      for (const auto& [w3, x] : cols[wa * s2.dimW + wb])
        out.coords[out_space->index(mu, s3.index(su, w3))] += coef * x;
    }
  }
  return out;
}

PolySection cup_product(BGGContext& c1, int k, const PolySection& alpha,
                        BGGContext& c2, int l, const PolySection& beta,
                        BGGContext& c3, const PairingData& p) {
  PolySection a = c1.represent(k).apply(alpha);
  PolySection b = c2.represent(l).apply(beta);
  PolySection w = wedge_sections(c1.chains(), k, a, c2.chains(), l, b, c3.chains(), p);
  return c3.project(k + l).apply(w);
}

PolySection triple_product(TripleContexts& t, int k, int l, int m,
                           const PolySection& alpha, const PolySection& beta,
                           const PolySection& gamma) {
  if (k + l + m < 1)
    throw std::invalid_argument("triple_product: total degree must be positive");
  PolySection a = t.c1->represent(k).apply(alpha);
  PolySection b = t.c2->represent(l).apply(beta);
  PolySection c = t.c3->represent(m).apply(gamma);

  int n = t.c1->n();
  int outk = k + l + m - 1;
  auto out_space = poly_section_space(
      t.c123->chains().space(outk).basis, n,
      a.space->max_degree + b.space->max_degree + c.space->max_degree);
  PolySection out = zero_section(out_space);

  if (l + m >= 1) {
    PolySection bc =
        wedge_sections(t.c2->chains(), l, b, t.c3->chains(), m, c, t.c23->chains(), t.p23);
    PolySection qbc = t.c23->q_operator(l + m).apply(bc);
    PolySection term = wedge_sections(t.c1->chains(), k, a, t.c23->chains(), l + m - 1,
                                      qbc, t.c123->chains(), t.p1_23);
    axpy(out, term, Rat(k % 2 == 0 ? 1 : -1));
  }
  if (k + l >= 1) {
    PolySection ab =
        wedge_sections(t.c1->chains(), k, a, t.c2->chains(), l, b, t.c12->chains(), t.p12);
    PolySection qab = t.c12->q_operator(k + l).apply(ab);
    PolySection term = wedge_sections(t.c12->chains(), k + l - 1, qab, t.c3->chains(), m,
                                      c, t.c123->chains(), t.p12_3);
    axpy(out, term, Rat(-1));
  }
  return t.c123->project(outk).apply(out);
}

AInfinity::AInfinity(ParabolicPtr par, const RepresentationData& w, int max_arity) {
  if (max_arity < 1) throw std::invalid_argument("AInfinity: arity must be positive");
  reps_.push_back(w);
  for (int m = 2; m <= max_arity; ++m) reps_.push_back(tensor_rep(reps_.back(), w));
  for (int m = 1; m <= max_arity; ++m)
    contexts_.push_back(std::make_unique<BGGContext>(par, reps_[m - 1]));
}

const PairingData& AInfinity::pairing(int j, int k) {
  auto it = pairings_.find({j, k});
  if (it != pairings_.end()) return it->second;
  const RepresentationData& wj = reps_.at(j - 1);
  const RepresentationData& wk = reps_.at(k - 1);
  const RepresentationData& wm = reps_.at(j + k - 1);
  // concatenating index tuples is the identity on flattened coordinates
  OperatorMatrix m =
      OperatorMatrix::identity(tensor_rep(wj, wk).space).with_spaces(
          tensor_rep(wj, wk).space, wm.space);
  return pairings_.emplace(std::make_pair(j, k), PairingData(wj, wk, wm, std::move(m)))
      .first->second;
}

PolySection AInfinity::q_lambda(const std::vector<int>& degrees,
                                const std::vector<PolySection>& args) {
  if (args.size() == 1) {
    PolySection out = args[0];
    for (auto& x : out.coords) x = -x;
    return out;
  }
  int m = (int)args.size();
  int deg = 0;
  for (int d : degrees) deg += d;
  deg -= m - 2;
  PolySection lam = lambda(degrees, args);
  return context(m).q_operator(deg).apply(lam);
}

PolySection AInfinity::lambda(const std::vector<int>& degrees,
                              const std::vector<PolySection>& args) {
  int m = (int)args.size();
  if (m < 1 || degrees.size() != args.size())
    throw std::invalid_argument("lambda: malformed argument list");
  if (m == 1) return context(1).model().d_g(degrees[0]).apply(args[0]);

  int n = context(1).n();
  int sum = 0, polydeg = 0;
  for (int d : degrees) sum += d;
  for (const auto& a : args) polydeg += a.space->max_degree;
  int outk = sum - m + 2;
  if (outk < 0 || outk > n)
    throw std::invalid_argument("lambda: target form degree out of range");
  auto out_space =
      poly_section_space(context(m).chains().space(outk).basis, n, polydeg);
  PolySection out = zero_section(out_space);

  for (int j = 1; j <= m - 1; ++j) {
    int k = m - j;
    std::vector<int> ldeg(degrees.begin(), degrees.begin() + j);
    std::vector<int> rdeg(degrees.begin() + j, degrees.end());
    int lsum = 0, rsum = 0;
    for (int d : ldeg) lsum += d;
    for (int d : rdeg) rsum += d;
    // segments whose lambda sits in degree <= 0 contribute nothing under Q
    if (j >= 2 && lsum - j + 2 <= 0) continue;
    if (k >= 2 && rsum - k + 2 <= 0) continue;
    std::vector<PolySection> largs(args.begin(), args.begin() + j);
    std::vector<PolySection> rargs(args.begin() + j, args.end());
    PolySection ql = q_lambda(ldeg, largs);
    PolySection qr = q_lambda(rdeg, rargs);
    int dl = j == 1 ? ldeg[0] : lsum - j + 1;
    int dr = k == 1 ? rdeg[0] : rsum - k + 1;
    PolySection term =
        wedge_sections(context(j).chains(), dl, ql, context(k).chains(), dr, qr,
                       context(m).chains(), pairing(j, k));
    int exponent = (k - 1) * (j + lsum);
    axpy(out, term, Rat(exponent % 2 == 0 ? 1 : -1));
  }
  return out;
}

PolySection AInfinity::mu(const std::vector<int>& degrees,
                          const std::vector<PolySection>& args) {
  int m = (int)args.size();
  if (m == 1) return context(1).bgg_operator(degrees[0]).apply(args[0]);
  std::vector<PolySection> chain;
  for (int i = 0; i < m; ++i)
    chain.push_back(context(1).represent(degrees[i]).apply(args[i]));
  int sum = 0;
  for (int d : degrees) sum += d;
  PolySection lam = lambda(degrees, chain);
  return context(m).project(sum - m + 2).apply(lam);
}

long AInfinity::lambda_term_count(int m) {
  std::vector<long> t(m + 1, 0);
  t[1] = 1;
  for (int i = 2; i <= m; ++i)
    for (int j = 1; j <= i - 1; ++j) t[i] += t[j] * t[i - j];
  return t[m];
}

DualBGGContext::DualBGGContext(BGGContext& primal) : primal_(primal) {}

const BasedSpace& DualBGGContext::dual_fiber(int k) {
  auto it = fibers_.find(k);
  if (it != fibers_.end()) return it->second;
  return fibers_.emplace(k, primal_.chains().space(k).basis.dual()).first->second;
}

FlatOperator DualBGGContext::d_tstar(int k) {
  return FlatOperator::fiberwise(
      primal_.chains().delta(k + 1).adjoint_on_duals().scaled(Rat(-1)), primal_.n());
}

FlatOperator DualBGGContext::delta_g(int k) {
  return primal_.model().d_g(k - 1).adjoint().scaled(Rat(-1));
}

FlatOperator DualBGGContext::quabla_eta_hat(int k) {
  FlatOperator out(dual_fiber(k), dual_fiber(k), primal_.n());
  if (k > 0) out = out + d_tstar(k - 1).compose(delta_g(k));
  if (k < primal_.n()) out = out + delta_g(k + 1).compose(d_tstar(k));
  return out;
}

const NeumannData& DualBGGContext::neumann_hat(int k) {
  auto it = neumann_.find(k);
  if (it != neumann_.end()) return it->second;
  OperatorMatrix arrow =
      k > 0 ? primal_.chains().delta(k).adjoint_on_duals().scaled(Rat(-1))
            : OperatorMatrix::zero(dual_fiber(0), dual_fiber(0));
  return neumann_.emplace(k, neumann_invert(quabla_eta_hat(k), arrow)).first->second;
}

FlatOperator DualBGGContext::q_hat(int k) {
  if (k < 0 || k >= primal_.n())
    throw std::invalid_argument("q_hat: degree out of range 0.." +
                                std::to_string(primal_.n() - 1));
  const NeumannData& nd = neumann_hat(k + 1);
  int n = primal_.n();
  OperatorMatrix arrow = primal_.chains().delta(k + 1).adjoint_on_duals().scaled(Rat(-1));
  return FlatOperator::fiberwise(nd.iota, n)
      .compose(nd.inverse)
      .compose(FlatOperator::fiberwise(nd.pi.compose(arrow), n));
}

FlatOperator DualBGGContext::pi_hat(int k) {
  auto it = pi_.find(k);
  if (it != pi_.end()) return it->second;
  FlatOperator out = FlatOperator::identity(dual_fiber(k), primal_.n());
  if (k < primal_.n()) out = out - delta_g(k + 1).compose(q_hat(k));
  if (k > 0) out = out - q_hat(k - 1).compose(delta_g(k));
  return pi_.emplace(k, std::move(out)).first->second;
}

const BasedSpace& DualBGGContext::h_hat_fiber(int k) {
  auto it = h_fibers_.find(k);
  if (it != h_fibers_.end()) return it->second;
  return h_fibers_.emplace(k, primal_.h_fiber(k).dual()).first->second;
}

FlatOperator DualBGGContext::represent_hat(int k) {
  return pi_hat(k).compose(FlatOperator::fiberwise(
      primal_.homology(k).project.adjoint_on_duals(), primal_.n()));
}

FlatOperator DualBGGContext::project_hat(int k) {
  return FlatOperator::fiberwise(
             primal_.homology(k).harmonic.as_matrix("H").adjoint_on_duals(),
             primal_.n())
      .compose(pi_hat(k));
}

FlatOperator DualBGGContext::dual_bgg_operator(int k) {
  return project_hat(k).compose(delta_g(k + 1)).compose(represent_hat(k + 1));
}

PolySection pair_chain_sections(const PolySection& a, const PolySection& theta) {
  const PolySectionSpace& sa = *a.space;
  const PolySectionSpace& st = *theta.space;
  if (sa.fiber.dim() != st.fiber.dim() || sa.n_vars != st.n_vars)
    throw std::invalid_argument("pair_chain_sections: fibers do not match");
  auto out_space = poly_section_space(BasedSpace({"1"}), sa.n_vars,
                                      sa.max_degree + st.max_degree);
  PolySection out = zero_section(out_space);
  for (int ia = 0; ia < (int)a.coords.size(); ++ia) {
    if (a.coords[ia] == 0) continue;
    int ma = ia / sa.fiber.dim(), fa = ia % sa.fiber.dim();
    for (int mt = 0; mt < (int)st.monomials.size(); ++mt) {
      const Rat& x = theta.coords[st.index(mt, fa)];
      if (x == 0) continue;
      std::vector<int> mono = sa.monomials[ma];
      for (int i = 0; i < sa.n_vars; ++i) mono[i] += st.monomials[mt][i];
      out.coords[out_space->mono_pos.at(mono)] += a.coords[ia] * x;
    }
  }
  return out;
}

PolySection pair_h_sections(const PolySection& alpha, const PolySection& b) {
  return pair_chain_sections(alpha, b);
}

PolySection contract_sections(ChainComplex& cc_w, int k, const PolySection& a,
                              int l, const PolySection& theta,
                              ChainComplex& cc_triv) {
  const ChainSpace& sk = cc_w.space(k);
  const ChainSpace& su = cc_w.space(k + l);
  const ChainSpace& sl = cc_triv.space(l);
  if (!a.space->fiber.same_labels(sk.basis))
    throw std::invalid_argument("contract_sections: first factor fiber mismatch");
  if (!theta.space->fiber.same_labels(su.basis.dual()))
    throw std::invalid_argument("contract_sections: dual factor fiber mismatch");
  int n = a.space->n_vars;
  auto out_space = poly_section_space(sl.basis.dual(), n,
                                      a.space->max_degree + theta.space->max_degree);
  PolySection out = zero_section(out_space);
  for (int ia = 0; ia < (int)a.coords.size(); ++ia) {
    if (a.coords[ia] == 0) continue;
    int ma = ia / sk.basis.dim(), fa = ia % sk.basis.dim();
    int sa = fa / sk.dimW, wa = fa % sk.dimW;
    for (int sc = 0; sc < (int)sl.subsets.size(); ++sc) {
      auto merged = merge_subsets(sk.subsets[sa], sl.subsets[sc]);
      if (!merged) continue;
      int pu = su.subset_pos.at(merged->first);
      int fu = su.index(pu, wa);
      for (int mt = 0; mt < (int)theta.space->monomials.size(); ++mt) {
        const Rat& x = theta.coords[theta.space->index(mt, fu)];
        if (x == 0) continue;
        std::vector<int> mono = a.space->monomials[ma];
        for (int i = 0; i < n; ++i) mono[i] += theta.space->monomials[mt][i];
        int mu = out_space->mono_pos.at(mono);
        out.coords[out_space->index(mu, sc)] +=
            a.coords[ia] * x * Rat(merged->second);
      }
    }
  }
  return out;
}

PolySection cap_product(BGGContext& cw, DualBGGContext& dw, int k, int l,
                        const PolySection& alpha, const PolySection& b,
                        BGGContext& ctriv, DualBGGContext& dtriv) {
  PolySection a = cw.represent(k).apply(alpha);
  PolySection theta = dw.represent_hat(k + l).apply(b);
  PolySection raw = contract_sections(cw.chains(), k, a, l, theta, ctriv.chains());
  return dtriv.project_hat(l).apply(raw);
}

DeformationReport deformation_obstruction(BGGContext& adj, const PolySection& a) {
  PolySection residual = adj.bgg_operator(1).apply(a);
  long bad = 0;
  for (const auto& x : residual.coords)
    if (x != 0) ++bad;
  if (bad != 0)
    throw std::invalid_argument(
        "deformation_obstruction: input is not closed, the curvature residual has " +
        std::to_string(bad) + " nonzero coefficients");

  DeformationReport rep;
  PairingData p = bracket_pairing(adj.parabolic());
  rep.obstruction = cup_product(adj, 1, a, adj, 1, a, adj, p);
  // in top form degree there is no further operator, closedness is vacuous
  rep.obstruction_closed =
      adj.n() < 3 || is_zero(adj.bgg_operator(2).apply(rep.obstruction).coords);

  int deg = rep.obstruction.space->max_degree;
  OperatorMatrix d1 = adj.bgg_operator(1).assemble(deg);
  auto sol = solve_linear(d1, rep.obstruction.coords);
  rep.exact = sol.has_value();
  if (sol) {
    PolySection prim = zero_section(poly_section_space(adj.h_fiber(1), adj.n(), deg));
    prim.coords = *sol;
    rep.primitive = std::move(prim);
  }
  return rep;
}

PolySection random_section(SectionSpacePtr space, std::uint64_t seed) {
  // mt19937_64 output is specified bit for bit, so reports reproduce anywhere
  std::mt19937_64 gen(seed);
  PolySection out = zero_section(std::move(space));
  for (auto& x : out.coords) {
    long num = (long)(gen() % 19) - 9;
    long den = (long)(gen() % 9) + 1;
    x = rat(num, den);
  }
  return out;
}

}  // namespace bgg
