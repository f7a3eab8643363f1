// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <array>
#include <iostream>
#include <sstream>
#include <vector>

#include "bgg/bgg_engine.hpp"
#include "bgg/verify.hpp"

using namespace bgg;

namespace {

int failures = 0;

void report(int num, const std::string& title, bool ok) {
  std::cout << "criterion " << num << ": " << title << " ... "
            << (ok ? "pass" : "fail") << "\n";
  if (!ok) ++failures;
}

PolySection random_h_section(BGGContext& c, int k, int deg, std::uint64_t seed) {
  return random_section(poly_section_space(c.h_fiber(k), c.n(), deg), seed);
}

// dim(ker d ∩ ker delta) via the stacked matrix
int closed_coclosed_dim(ChainComplex& cc, int k) {
  int n = cc.top();
  const OperatorMatrix& del = cc.delta(k);
  int extra = k < n ? cc.d(k).rows() : 0;
  OperatorMatrix st(del.domain(),
                    BasedSpace::anonymous(del.rows() + extra, "s"));
  for (int r = 0; r < del.rows(); ++r)
    for (const auto& [c, x] : del.row(r)) st.set_entry(r, c, x);
  if (k < n) {
    const OperatorMatrix& d = cc.d(k);
    for (int r = 0; r < d.rows(); ++r)
      for (const auto& [c, x] : d.row(r)) st.set_entry(del.rows() + r, c, x);
  }
  return st.cols() - RowEchelon(st).rank();
}

bool homology_suite(ParabolicPtr par, const RepresentationData& w) {
  ChainComplex cc(par, w);
  int n = cc.top();
  for (int k = 2; k <= n; ++k)
    if (!cc.delta(k - 1).compose(cc.delta(k)).is_zero()) return false;
  for (int k = 0; k + 2 <= n; ++k)
    if (!cc.d(k + 1).compose(cc.d(k)).is_zero()) return false;
  for (int i = 0; i < par->mstar_dim(); ++i)
    for (int k = 0; k < n; ++k) {
      OperatorMatrix lhs = cc.delta(k + 1).compose(cc.wedge_eps(i, k));
      if (k > 0) lhs = lhs + cc.wedge_eps(i, k - 1).compose(cc.delta(k));
      if (!(lhs == cc.p_action(par->mstar_index(i), k))) return false;
    }
  for (int gi = par->m_dim; gi < par->dim(); ++gi)
    for (int k = 1; k <= n; ++k)
      if (!(cc.delta(k).compose(cc.p_action(gi, k)) ==
            cc.p_action(gi, k - 1).compose(cc.delta(k))))
        return false;
  int chi = 0;
  for (int k = 0; k <= n; ++k) {
    HodgeSplit s = cc.hodge_split(k);
    int dim = cc.space(k).basis.dim();
    if (s.im_d.dim() + s.harmonic.dim() + s.im_delta.dim() != dim) return false;
    if (closed_coclosed_dim(cc, k) != s.harmonic.dim()) return false;
    OperatorMatrix incl = s.harmonic.as_matrix("H");
    if (!cc.delta(k).compose(incl).is_zero()) return false;
    if (k < n && !cc.d(k).compose(incl).is_zero()) return false;
    HomologyModule h = cc.homology(k);
    for (int i = 0; i < par->mstar_dim(); ++i)
      if (!h.project.compose(cc.p_action(par->mstar_index(i), k))
               .compose(h.harmonic.as_matrix("H"))
               .is_zero())
        return false;
    chi += (k % 2 == 0 ? 1 : -1) * s.harmonic.dim();
  }
  if (chi != 0) return false;
  ChainComplex cd(par, dual_rep(w));
  for (int k = 0; k <= n; ++k)
    if (cc.homology(k).dim() != cd.homology(n - k).dim()) return false;
  return true;
}

bool criterion1() {
  auto c30 = conformal_parabolic(3, 0);
  auto c40 = conformal_parabolic(4, 0);
  auto p2 = projective_parabolic(2);
  auto g2 = g2_parabolic();
  std::vector<std::pair<ParabolicPtr, RepresentationData>> fixtures = {
      {c30, trivial_rep(c30)},
      {c30, standard_rep(c30)},
      {c30, adjoint_rep(c30)},
      {c30, exterior_power_rep(standard_rep(c30), 2)},
      {c30, exterior_power_rep(standard_rep(c30), 3)},
      {c40, standard_rep(c40)},
      {c40, adjoint_rep(c40)},
      {p2, standard_rep(p2)},
      {g2, trivial_rep(g2)},
  };
  for (auto& [par, w] : fixtures)
    if (!homology_suite(par, w)) return false;
  return true;
}

bool criterion2() {
  auto c30 = conformal_parabolic(3, 0);
  {
    ChainComplex cc(c30, standard_rep(c30));
    std::vector<int> dims;
    for (int k = 0; k <= 3; ++k) dims.push_back(cc.homology(k).dim());
    if (dims != std::vector<int>{1, 5, 5, 1}) return false;
  }
  {
    auto c40 = conformal_parabolic(4, 0);
    ChainComplex cc(c40, adjoint_rep(c40));
    if (cc.homology(2).dim() != 10) return false;
  }
  {
    ChainComplex cc(c30, trivial_rep(c30));
    std::vector<int> dims;
    for (int k = 0; k <= 3; ++k) dims.push_back(cc.homology(k).dim());
    if (dims != std::vector<int>{1, 3, 3, 1}) return false;
  }
  return true;
}

bool criterion3() {
  for (auto par : {conformal_parabolic(3, 0), projective_parabolic(2)}) {
    BGGContext ctx(par, standard_rep(par));
    FlatModel& fm = ctx.model();
    int n = ctx.n();
    for (int k = 0; k <= n; ++k) {
      const NeumannData& nd = ctx.neumann(k);
      if (nd.matrix_index(4) > 5) return false;
      if (nd.b_basis.dim() > 0) {
        auto lift = [&](const OperatorMatrix& m) {
          return FlatOperator::fiberwise(m, ctx.n());
        };
        FlatOperator quabla = ctx.quabla_eta(k);
        FlatOperator ident = FlatOperator::identity(nd.iota.domain(), ctx.n());
        if (!(lift(nd.pi).compose(quabla).compose(lift(nd.iota)).compose(nd.inverse) ==
              ident))
          return false;
        if (!(nd.inverse.compose(lift(nd.pi)).compose(quabla).compose(lift(nd.iota)) ==
              ident))
          return false;
      }
      if (k >= 1 && !(ctx.q_operator(k) == ctx.q_via_quotient(k))) return false;
      FlatOperator pi = ctx.pi_operator(k);
      FlatOperator quabla = ctx.quabla_eta(k);
      if (k < n && !pi.compose(fm.delta_lift(k + 1)).is_zero()) return false;
      if (k > 0 && !fm.delta_lift(k).compose(pi).is_zero()) return false;
      if (!(pi.compose(pi) == pi)) return false;
      if (k < n &&
          !(ctx.pi_operator(k + 1).compose(fm.d_g(k)) == fm.d_g(k).compose(pi)))
        return false;
      if (!pi.compose(quabla).is_zero()) return false;
      if (!quabla.compose(pi).is_zero()) return false;
      // spot check through assembly at the degree cutoff
      OperatorMatrix p4 = pi.assemble(4);
      if (!(p4.compose(p4) == p4)) return false;
    }
  }
  return true;
}

bool criterion4() {
  auto c30 = conformal_parabolic(3, 0);
  auto p2 = projective_parabolic(2);
  std::vector<std::pair<ParabolicPtr, RepresentationData>> fixtures = {
      {c30, standard_rep(c30)},
      {p2, standard_rep(p2)},
      {c30, exterior_power_rep(standard_rep(c30), 3)},
  };
  for (auto& [par, w] : fixtures) {
    BGGContext ctx(par, w);
    for (int k = 0; k + 1 < ctx.n(); ++k) {
      FlatOperator sq = ctx.bgg_operator(k + 1).compose(ctx.bgg_operator(k));
      if (!sq.is_zero() || !sq.assemble(4).is_zero()) return false;
    }
  }
  return true;
}

bool criterion5() {
  auto c30 = conformal_parabolic(3, 0);
  auto p2 = projective_parabolic(2);
  auto kernel_dim = [](BGGContext& ctx, int max_degree) {
    OperatorMatrix d0 = ctx.bgg_operator(0).assemble(max_degree);
    return d0.cols() - RowEchelon(d0).rank();
  };
  BGGContext v(c30, standard_rep(c30));
  if (kernel_dim(v, 4) != 5) return false;
  BGGContext g(c30, adjoint_rep(c30));
  if (kernel_dim(g, 4) != 10) return false;
  BGGContext pv(p2, standard_rep(p2));
  if (kernel_dim(pv, 4) != 3) return false;
  if (v.bgg_operator(0).order() != 2) return false;
  if (g.bgg_operator(0).order() != 1) return false;

  // the conformal kernel is exactly span{1, x_i, sum x_i^2}
  OperatorMatrix d0 = v.bgg_operator(0).assemble(4);
  auto kern = RowEchelon(d0).kernel_basis();
  if ((int)kern.size() != 5) return false;
  SubspaceBasis kb(d0.domain(), kern);
  SubspaceSolver solver(kb);
  auto space = poly_section_space(v.h_fiber(0), 3, 4);
  auto member = [&](const std::vector<std::pair<std::vector<int>, Rat>>& poly) {
    Vec vec(space->dim(), Rat(0));
    for (const auto& [mono, c] : poly) vec[space->index(space->mono_pos.at(mono), 0)] = c;
    return solver.coordinates(vec).has_value();
  };
  return member({{{0, 0, 0}, rat(1)}}) && member({{{1, 0, 0}, rat(1)}}) &&
         member({{{0, 1, 0}, rat(1)}}) && member({{{0, 0, 1}, rat(1)}}) &&
         member({{{2, 0, 0}, rat(1)}, {{0, 2, 0}, rat(1)}, {{0, 0, 2}, rat(1)}});
}

bool criterion6() {
  auto par = conformal_parabolic(3, 0);
  BGGContext v(par, standard_rep(par));
  BGGContext v2(par, tensor_rep(standard_rep(par), standard_rep(par)));
  PairingData p = tensor_pairing(standard_rep(par), standard_rep(par));
  for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}})
    for (std::uint64_t s = 0; s < 20; ++s) {
      PolySection alpha = random_h_section(v, k, 3, 1000 * k + 100 * l + s);
      PolySection beta = random_h_section(v, l, 3, 5000 + 1000 * k + 100 * l + s);
      PolySection cup = cup_product(v, k, alpha, v, l, beta, v2, p);
      Vec lhs = v2.bgg_operator(k + l).apply(cup).coords;
      PolySection r1 =
          cup_product(v, k + 1, v.bgg_operator(k).apply(alpha), v, l, beta, v2, p);
      PolySection r2 =
          cup_product(v, k, alpha, v, l + 1, v.bgg_operator(l).apply(beta), v2, p);
      Rat sgn(k % 2 == 0 ? 1 : -1);
      Vec rhs = r1.coords;
      for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] += sgn * r2.coords[i];
      if (lhs != rhs) return false;
    }

  // twistor extension: on constants the cup is the induced fiber pairing
  PolySection ha = zero_section(poly_section_space(v.h_fiber(0), 3, 0));
  PolySection hb = zero_section(poly_section_space(v.h_fiber(0), 3, 0));
  ha.coords[0] = rat(2, 3);
  hb.coords[0] = rat(-5);
  PolySection cup = cup_product(v, 0, ha, v, 0, hb, v2, p);
  OperatorMatrix incl = v.homology(0).harmonic.as_matrix("H");
  Vec wa = incl.apply(ha.coords);
  Vec wb = incl.apply(hb.coords);
  Vec ten(wa.size() * wb.size(), Rat(0));
  for (int i = 0; i < (int)wa.size(); ++i)
    for (int j = 0; j < (int)wb.size(); ++j) ten[i * wb.size() + j] = wa[i] * wb[j];
  return cup.coords == v2.homology(0).project.apply(p.map.apply(ten));
}

bool criterion7() {
  auto par = conformal_parabolic(3, 0);
  AInfinity ainf(par, standard_rep(par), 3);
  BGGContext& c1 = ainf.context(1);
  BGGContext& c2 = ainf.context(2);
  BGGContext& c3 = ainf.context(3);
  RepresentationData v = standard_rep(par);
  RepresentationData vv = tensor_rep(v, v);
  TripleContexts tc{&c1, &c1, &c1, &c2, &c2, &c3,
                    tensor_pairing(v, v), tensor_pairing(v, v),
                    tensor_pairing(vv, v), tensor_pairing(v, vv)};

  if (AInfinity::lambda_term_count(2) != 1 || AInfinity::lambda_term_count(3) != 2 ||
      AInfinity::lambda_term_count(4) != 5)
    return false;
  std::cout << "  note: the bracketing expansion yields term counts (1, 2, 5) for"
               " arities (2, 3, 4); the closed form is the Catalan number of the"
               " arity minus one, not of the arity itself\n";

  // m = 1: the differential squares to zero
  for (int k = 0; k + 1 < c1.n(); ++k)
    if (!c1.bgg_operator(k + 1).compose(c1.bgg_operator(k)).is_zero()) return false;

  // m = 2: mu2 is the cup product and satisfies the Leibniz rule
  for (std::uint64_t s = 0; s < 3; ++s) {
    PolySection a = random_h_section(c1, 0, 2, 11 + s);
    PolySection b = random_h_section(c1, 1, 2, 23 + s);
    if (ainf.mu({0, 1}, {a, b}).coords !=
        cup_product(c1, 0, a, c1, 1, b, c2, tc.p12).coords)
      return false;
  }

  // m = 3: mu3 is the triple product and obeys the associator identity
  for (std::uint64_t s = 0; s < 3; ++s) {
    PolySection a = random_h_section(c1, 0, 2, 31 + s);
    PolySection b = random_h_section(c1, 0, 2, 41 + s);
    PolySection c = random_h_section(c1, 1, 2, 53 + s);
    if (ainf.mu({0, 0, 1}, {a, b, c}).coords !=
        triple_product(tc, 0, 0, 1, a, b, c).coords)
      return false;
  }
  for (auto [k, l, m] : std::vector<std::array<int, 3>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})
    for (std::uint64_t s = 0; s < 5; ++s) {
      PolySection a = random_h_section(c1, k, 2, 100 * k + s);
      PolySection b = random_h_section(c1, l, 2, 200 * l + 7 + s);
      PolySection c = random_h_section(c1, m, 2, 300 * m + 13 + s);
      PolySection trip = triple_product(tc, k, l, m, a, b, c);
      Vec lhs = c3.bgg_operator(k + l + m - 1).apply(trip).coords;

      PolySection ab = cup_product(c1, k, a, c1, l, b, c2, tc.p12);
      PolySection bc = cup_product(c1, l, b, c1, m, c, c2, tc.p23);
      Vec rhs = cup_product(c2, k + l, ab, c1, m, c, c3, tc.p12_3).coords;
      Vec t = cup_product(c1, k, a, c2, l + m, bc, c3, tc.p1_23).coords;
      for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] -= t[i];
      t = triple_product(tc, k + 1, l, m, c1.bgg_operator(k).apply(a), b, c).coords;
      for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] -= t[i];
      t = triple_product(tc, k, l + 1, m, a, c1.bgg_operator(l).apply(b), c).coords;
      Rat s1(k % 2 == 0 ? 1 : -1);
      for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] -= s1 * t[i];
      t = triple_product(tc, k, l, m + 1, a, b, c1.bgg_operator(m).apply(c)).coords;
      Rat s2((k + l) % 2 == 0 ? 1 : -1);
      for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] -= s2 * t[i];
      if (lhs != rhs) return false;
    }
  return true;
}

bool criterion8() {
  auto par = conformal_parabolic(3, 0);
  BGGContext v(par, standard_rep(par));
  DualBGGContext dv(v);
  for (int k = 0; k <= v.n(); ++k)
    if (!(dv.pi_hat(k) == v.pi_operator(k).adjoint())) return false;

  BGGContext triv(par, trivial_rep(par));
  DualBGGContext dtriv(triv);
  FlatOperator divg = dtriv.dual_bgg_operator(0);
  for (std::uint64_t s = 0; s < 20; ++s) {
    PolySection alpha = random_h_section(v, 0, 3, 900 + s);
    PolySection b =
        random_section(poly_section_space(dv.h_hat_fiber(1), v.n(), 3), 1900 + s);
    PolySection cap = cap_product(v, dv, 0, 1, alpha, b, triv, dtriv);
    Vec lhs = divg.apply(cap).coords;
    PolySection t1 = pair_h_sections(v.bgg_operator(0).apply(alpha), b);
    PolySection t2 = pair_h_sections(alpha, dv.dual_bgg_operator(0).apply(b));
    Vec rhs = t1.coords;
    for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] += t2.coords[i];
    if (lhs != rhs) return false;
  }

  for (int k : {0, 1})
    for (std::uint64_t s = 0; s < 5; ++s) {
      PolySection alpha = random_h_section(v, k, 2, 71 + 10 * k + s);
      PolySection b =
          random_section(poly_section_space(dv.h_hat_fiber(k), v.n(), 2), 83 + 10 * k + s);
      PolySection cap = cap_product(v, dv, k, 0, alpha, b, triv, dtriv);
      if (cap.coords != pair_h_sections(alpha, b).coords) return false;
    }
  return true;
}

bool criterion9() {
  auto par = conformal_parabolic(3, 0);
  BGGContext g(par, adjoint_rep(par));
  std::vector<bool> first_decisions;
  for (std::uint64_t s = 0; s < 10; ++s) {
    PolySection f = random_h_section(g, 0, 2, 7000 + s);
    PolySection a = g.bgg_operator(0).apply(f);
    if (!is_zero(g.bgg_operator(1).apply(a).coords)) return false;
    DeformationReport rep = deformation_obstruction(g, a);
    if (!rep.obstruction_closed) return false;
    first_decisions.push_back(rep.exact);
  }
  // re-run in a fresh context: decisions and obstructions must reproduce
  BGGContext g2ctx(par, adjoint_rep(par));
  for (std::uint64_t s = 0; s < 10; ++s) {
    PolySection f = random_h_section(g2ctx, 0, 2, 7000 + s);
    PolySection a = g2ctx.bgg_operator(0).apply(f);
    DeformationReport rep = deformation_obstruction(g2ctx, a);
    if (rep.exact != first_decisions[s]) return false;
  }
  return true;
}

bool criterion10() {
  VerifyConfig cfg;
  cfg.algebra = "projective:2";
  cfg.rep = "standard";
  cfg.degree = 2;
  cfg.seed = 5;
  std::ostringstream r1, r2;
  write_report(r1, verify_suite(cfg));
  write_report(r2, verify_suite(cfg));
  if (r1.str() != r2.str() || r1.str().empty()) return false;
  if (r1.str().find("result: PASS") == std::string::npos) return false;

  // export/import round trips
  auto par = conformal_parabolic(3, 0);
  ChainComplex cc(par, standard_rep(par));
  std::ostringstream m1;
  write_matrix(m1, cc.delta(2));
  std::istringstream min(m1.str());
  OperatorMatrix mback = read_matrix(min);
  std::ostringstream m2;
  write_matrix(m2, mback);
  if (!(mback == cc.delta(2)) || m1.str() != m2.str()) return false;

  PolySection s = random_section(poly_section_space(cc.space(1).basis, 3, 2), 99);
  std::ostringstream s1;
  write_section(s1, s);
  std::istringstream sin(s1.str());
  PolySection sback = read_section(sin);
  std::ostringstream s2;
  write_section(s2, sback);
  return sback.coords == s.coords && s1.str() == s2.str();
}

}  // namespace

int main() {
  report(1, "homology algebra suite over nine fixtures", criterion1());
  report(2, "homology dimension regression", criterion2());
  report(3, "Neumann series and projector calculus at degree 4", criterion3());
  report(4, "sequence operators compose to zero", criterion4());
  report(5, "twistor kernels and operator orders", criterion5());
  report(6, "cup product Leibniz rule and twistor extension", criterion6());
  report(7, "associativity up to homotopy and higher products", criterion7());
  report(8, "dual sequence, divergence adjointness and cap duality", criterion8());
  report(9, "deformation obstruction demo", criterion9());
  report(10, "deterministic reports and lossless round trips", criterion10());
  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: FAILURES PRESENT")
            << "\n";
  return failures == 0 ? 0 : 1;
}
