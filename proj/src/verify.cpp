#include "bgg/verify.hpp"

#include <functional>

#include "bgg/bgg_engine.hpp"

namespace bgg {

namespace {

struct Suite {
  ReportDocument rep;

  void push(const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({name, ok ? "pass" : "fail", detail});
  }
  void na(const std::string& name, const std::string& reason) {
    rep.checks.push_back({name, "not applicable", reason});
  }
  void guarded(const std::string& name, const std::function<bool()>& body) {
    try {
      push(name, body());
    } catch (const std::exception& e) {
      push(name, false, e.what());
    }
  }
};

// Rebuilds the bracket table with one structure constant negated; the Jacobi
// validator is expected to reject it and name a triple.
std::string fault_message(const Parabolic& p) {
  BracketTable raw;
  for (int i = 0; i < p.dim(); ++i)
    for (int j = i + 1; j < p.dim(); ++j) {
      SparseVec v = p.algebra.bracket(i, j);
      if (!v.empty()) raw[{i, j}] = std::move(v);
    }
  if (raw.empty()) return "";
  raw.begin()->second.begin()->second *= Rat(-1);
  try {
    build_lie_algebra(p.algebra.space(), raw);
    return "";
  } catch (const std::exception& e) {
    return e.what();
  }
}

}  // namespace

ReportDocument verify_suite(const VerifyConfig& cfg) {
  Suite s;
  s.rep.job = {"algebra=" + cfg.algebra, "rep=" + cfg.rep,
               "degree=" + std::to_string(cfg.degree),
               "seed=" + std::to_string(cfg.seed), "scope=" + cfg.scope,
               std::string("fault=") + (cfg.inject_fault ? "on" : "off")};

  ParabolicPtr par = builtin_parabolic(cfg.algebra);
  RepresentationData w = parse_rep(par, cfg.rep);
  int n = par->m_dim;
  int deg = cfg.degree;
  bool run_h = cfg.scope == "homology" || cfg.scope == "all";
  bool run_f = cfg.scope == "flat" || cfg.scope == "all";
  bool run_b = cfg.scope == "bgg" || cfg.scope == "all";
  bool abelian = par->abelian_nilradical();
  bool g_mod = w.scope == RepresentationData::Scope::g_module;

  // algebra layer
  if (cfg.inject_fault) {
    std::string msg = fault_message(*par);
    s.push("jacobi identity", false, msg.empty() ? "fault injection had no effect" : msg);
  } else {
    s.guarded("jacobi identity", [&] {
      par->algebra.validate();
      return true;
    });
  }
  s.guarded("grading invariants", [&] {
    par->validate();
    return true;
  });
  s.guarded("representation validity", [&] { return validate_representation(w).empty(); });

  ChainComplex cc(par, w);

  // linear core layer: deterministic pivoting and rank-nullity
  s.guarded("echelon determinism", [&] {
    RowEchelon a(cc.delta(1)), b(cc.delta(1));
    return a.pivots() == b.pivots() && a.kernel_basis() == b.kernel_basis();
  });
  s.guarded("rank-nullity", [&] {
    auto rf = rank_factor(cc.delta(1));
    return rf.rank + rf.kernel.dim() == cc.delta(1).cols();
  });

  if (run_h) {
    s.guarded("boundary squared zero", [&] {
      for (int k = 1; k <= n; ++k)
        if (!cc.delta(k - 1).compose(cc.delta(k)).is_zero()) return false;
      return true;
    });
    if (g_mod) {
      s.guarded("coboundary squared zero", [&] {
        for (int k = 0; k + 2 <= n; ++k)
          if (!cc.d(k + 1).compose(cc.d(k)).is_zero()) return false;
        return true;
      });
    } else {
      s.na("coboundary squared zero", "module is defined over p only");
    }
    s.guarded("cartan identity", [&] {
      for (int k = 0; k <= n; ++k)
        for (int i = 0; i < n; ++i) {
          OperatorMatrix lhs = cc.p_action(par->mstar_index(i), k);
          OperatorMatrix sum(lhs.domain(), lhs.codomain());
          if (k < n) sum = sum + cc.delta(k + 1).compose(cc.wedge_eps(i, k));
          if (k > 0) sum = sum + cc.wedge_eps(i, k - 1).compose(cc.delta(k));
          if (!(sum == lhs)) return false;
        }
      return true;
    });
    s.guarded("p-equivariance of the boundary", [&] {
      for (int k = 1; k <= n; ++k)
        for (int gi = par->m_dim; gi < par->dim(); ++gi)
          if (!(cc.delta(k).compose(cc.p_action(gi, k)) ==
                cc.p_action(gi, k - 1).compose(cc.delta(k))))
            return false;
      return true;
    });
    s.guarded("hodge split dimensions", [&] {
      for (int k = 0; k <= n; ++k) {
        HodgeSplit h = cc.hodge_split(k);
        if (h.im_d.dim() + h.harmonic.dim() + h.im_delta.dim() != cc.space(k).basis.dim())
          return false;
      }
      return true;
    });
    s.guarded("harmonic equals closed-coclosed", [&] {
      for (int k = 0; k <= n; ++k) cc.hodge_split(k);  // asserts internally
      return true;
    });
    s.guarded("nilradical dual acts trivially on homology", [&] {
      for (int k = 0; k <= n; ++k) {
        HomologyModule h = cc.homology(k);
        OperatorMatrix incl = h.harmonic.as_matrix("H");
        for (int i = 0; i < n; ++i)
          if (!h.project.compose(cc.p_action(par->mstar_index(i), k)).compose(incl)
                   .is_zero())
            return false;
      }
      return true;
    });
    s.guarded("euler characteristic zero", [&] {
      int sum = 0;
      for (int k = 0; k <= n; ++k) sum += (k % 2 == 0 ? 1 : -1) * cc.homology(k).dim();
      return sum == 0;
    });
    s.guarded("homology duality dimensions", [&] {
      ChainComplex dual(par, dual_rep(w));
      for (int k = 0; k <= n; ++k)
        if (cc.homology(k).dim() != dual.homology(n - k).dim()) return false;
      return true;
    });
  }

  if (run_f) {
    if (!abelian) {
      s.na("twisted differential squared zero", "nilradical is not abelian");
      s.na("codifferential perturbation identity", "nilradical is not abelian");
      s.na("degree filtration", "nilradical is not abelian");
    } else {
      FlatModel fm(par, w);
      if (g_mod) {
        s.guarded("twisted differential squared zero", [&] {
          for (int k = 0; k + 2 <= n; ++k) {
            auto sq = fm.d_g(k + 1).compose(fm.d_g(k));
            if (!sq.is_zero() || !sq.assemble(deg).is_zero()) return false;
          }
          return true;
        });
      } else {
        s.na("twisted differential squared zero", "module is defined over p only");
      }
      s.guarded("codifferential perturbation identity", [&] {
        for (int k = 0; k <= n; ++k) {
          FlatOperator lhs(cc.space(k).basis, cc.space(k).basis, n);
          if (k < n) lhs = lhs + fm.delta_lift(k + 1).compose(fm.d_coord(k));
          if (k > 0) lhs = lhs + fm.d_coord(k - 1).compose(fm.delta_lift(k));
          FlatOperator rhs(cc.space(k).basis, cc.space(k).basis, n);
          for (int i = 0; i < n; ++i) {
            std::vector<int> alpha(n, 0);
            alpha[i] = 1;
            rhs = rhs + FlatOperator::symbol(cc.p_action(par->mstar_index(i), k), alpha);
          }
          if (!(lhs == rhs)) return false;
        }
        return true;
      });
      s.guarded("degree filtration", [&] {
        for (int k = 0; k < n; ++k) {
          FlatOperator dc = fm.d_coord(k);
          for (const auto& [alpha, a] : dc.symbols()) {
            int t = 0;
            for (int e : alpha) t += e;
            if (t != 1) return false;
          }
        }
        return true;
      });
    }
  }

  if (run_b) {
    if (!abelian || !g_mod) {
      const std::string why =
          abelian ? "module is defined over p only" : "nilradical is not abelian";
      for (const char* nm :
           {"pi annihilates the boundary", "boundary annihilates pi", "pi idempotent",
            "pi chain map", "pi annihilates quabla", "quabla annihilates pi",
            "quabla commutes with the boundary", "neumann index bound",
            "neumann two-sided inverse", "q constructions agree",
            "project after represent is the identity", "bgg composition zero",
            "kernel of the first operator", "cup leibniz rule", "associator identity",
            "a-infinity relations", "dual pi is the formal adjoint",
            "dual composition zero", "divergence adjointness",
            "cap duality at degree zero"})
        s.na(nm, why);
    } else {
      BGGContext ctx(par, w);
      FlatModel& fm = ctx.model();
      s.guarded("pi annihilates the boundary", [&] {
        for (int k = 0; k < n; ++k)
          if (!ctx.pi_operator(k).compose(fm.delta_lift(k + 1)).is_zero()) return false;
        return true;
      });
      s.guarded("boundary annihilates pi", [&] {
        for (int k = 1; k <= n; ++k)
          if (!fm.delta_lift(k).compose(ctx.pi_operator(k)).is_zero()) return false;
        return true;
      });
      s.guarded("pi idempotent", [&] {
        for (int k = 0; k <= n; ++k) {
          auto pi = ctx.pi_operator(k);
          if (!(pi.compose(pi) == pi)) return false;
        }
        return true;
      });
      s.guarded("pi chain map", [&] {
        for (int k = 0; k < n; ++k)
          if (!(ctx.pi_operator(k + 1).compose(fm.d_g(k)) ==
                fm.d_g(k).compose(ctx.pi_operator(k))))
            return false;
        return true;
      });
      s.guarded("pi annihilates quabla", [&] {
        for (int k = 0; k <= n; ++k)
          if (!ctx.pi_operator(k).compose(ctx.quabla_eta(k)).is_zero()) return false;
        return true;
      });
      s.guarded("quabla annihilates pi", [&] {
        for (int k = 0; k <= n; ++k)
          if (!ctx.quabla_eta(k).compose(ctx.pi_operator(k)).is_zero()) return false;
        return true;
      });
      s.guarded("quabla commutes with the boundary", [&] {
        for (int k = 1; k <= n; ++k)
          if (!(fm.delta_lift(k).compose(ctx.quabla_eta(k)) ==
                ctx.quabla_eta(k - 1).compose(fm.delta_lift(k))))
            return false;
        return true;
      });
      s.guarded("neumann index bound", [&] {
        for (int k = 0; k <= n; ++k)
          if (ctx.neumann(k).matrix_index(deg) > deg + 1) return false;
        return true;
      });
      s.guarded("neumann two-sided inverse", [&] {
        for (int k = 0; k <= n; ++k) {
          const NeumannData& nd = ctx.neumann(k);
          if (nd.b_basis.dim() == 0) continue;
          FlatOperator quabla = ctx.quabla_eta(k);
          FlatOperator io = FlatOperator::fiberwise(nd.iota, n);
          FlatOperator po = FlatOperator::fiberwise(nd.pi, n);
          FlatOperator id = FlatOperator::identity(nd.iota.domain(), n);
          if (!(po.compose(quabla).compose(io).compose(nd.inverse) == id)) return false;
          if (!(nd.inverse.compose(po).compose(quabla).compose(io) == id)) return false;
        }
        return true;
      });
      s.guarded("q constructions agree", [&] {
        for (int k = 1; k <= n; ++k)
          if (!(ctx.q_operator(k) == ctx.q_via_quotient(k))) return false;
        return true;
      });
      s.guarded("project after represent is the identity", [&] {
        for (int k = 0; k <= n; ++k)
          if (!(ctx.project(k).compose(ctx.represent(k)) ==
                FlatOperator::identity(ctx.h_fiber(k), n)))
            return false;
        return true;
      });
      s.guarded("bgg composition zero", [&] {
        for (int k = 0; k + 1 < n; ++k) {
          auto sq = ctx.bgg_operator(k + 1).compose(ctx.bgg_operator(k));
          if (!sq.is_zero() || !sq.assemble(deg).is_zero()) return false;
        }
        return true;
      });
      s.guarded("kernel of the first operator", [&] {
        OperatorMatrix d0 = ctx.bgg_operator(0).assemble(deg);
        return d0.cols() - RowEchelon(d0).rank() == w.space.dim();
      });
      s.guarded("cup leibniz rule", [&] {
        BGGContext c2(par, tensor_rep(w, w));
        PairingData p = tensor_pairing(w, w);
        for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 1}}) {
          if (k + l + 1 > n) continue;
          for (std::uint64_t t = 0; t < 5; ++t) {
            std::uint64_t base = cfg.seed + 977 * (k + 3 * l) + t;
            PolySection a =
                random_section(poly_section_space(ctx.h_fiber(k), n, deg), base);
            PolySection b =
                random_section(poly_section_space(ctx.h_fiber(l), n, deg), base + 59);
            Vec lhs = c2.bgg_operator(k + l)
                          .apply(cup_product(ctx, k, a, ctx, l, b, c2, p))
                          .coords;
            Vec rhs = cup_product(ctx, k + 1, ctx.bgg_operator(k).apply(a), ctx, l, b,
                                  c2, p)
                          .coords;
            Vec r2 = cup_product(ctx, k, a, ctx, l + 1, ctx.bgg_operator(l).apply(b),
                                 c2, p)
                         .coords;
            Rat sgn(k % 2 == 0 ? 1 : -1);
            for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] += sgn * r2[i];
            if (lhs != rhs) return false;
          }
        }
        return true;
      });
      if (w.space.dim() > 5) {
        s.na("associator identity", "tensor cube too large for the verify suite");
        s.na("a-infinity relations", "tensor cube too large for the verify suite");
      } else {
        s.guarded("associator identity", [&] {
          AInfinity ainf(par, w, 3);
          RepresentationData ww = tensor_rep(w, w);
          TripleContexts tc{&ainf.context(1), &ainf.context(1), &ainf.context(1),
                            &ainf.context(2), &ainf.context(2), &ainf.context(3),
                            tensor_pairing(w, w), tensor_pairing(w, w),
                            tensor_pairing(ww, w), tensor_pairing(w, ww)};
          int d2 = std::min(deg, 2);
          for (std::uint64_t t = 0; t < 2; ++t) {
            BGGContext& c1 = ainf.context(1);
            BGGContext& c3 = ainf.context(3);
            PolySection a =
                random_section(poly_section_space(c1.h_fiber(0), n, d2), cfg.seed + t);
            PolySection b = random_section(poly_section_space(c1.h_fiber(0), n, d2),
                                           cfg.seed + 31 + t);
            PolySection c = random_section(poly_section_space(c1.h_fiber(1), n, d2),
                                           cfg.seed + 67 + t);
            Vec lhs = c3.bgg_operator(0).apply(triple_product(tc, 0, 0, 1, a, b, c))
                          .coords;
            BGGContext& cc2 = ainf.context(2);
            PolySection ab = cup_product(c1, 0, a, c1, 0, b, cc2, tc.p12);
            PolySection bc = cup_product(c1, 0, b, c1, 1, c, cc2, tc.p23);
            Vec rhs = cup_product(cc2, 0, ab, c1, 1, c, c3, tc.p12_3).coords;
            Vec t2 = cup_product(c1, 0, a, cc2, 1, bc, c3, tc.p1_23).coords;
            for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] -= t2[i];
            t2 = triple_product(tc, 1, 0, 1, c1.bgg_operator(0).apply(a), b, c).coords;
            for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] -= t2[i];
            t2 = triple_product(tc, 0, 1, 1, a, c1.bgg_operator(0).apply(b), c).coords;
            for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] -= t2[i];
            t2 = triple_product(tc, 0, 0, 2, a, b, c1.bgg_operator(1).apply(c)).coords;
            for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] -= t2[i];
            if (lhs != rhs) return false;
          }
          return true;
        });
        s.guarded("a-infinity relations", [&] {
          if (AInfinity::lambda_term_count(2) != 1 ||
              AInfinity::lambda_term_count(3) != 2 ||
              AInfinity::lambda_term_count(4) != 5)
            return false;
          AInfinity ainf(par, w, 2);
          BGGContext& c1 = ainf.context(1);
          BGGContext& cc2 = ainf.context(2);
          PairingData p = tensor_pairing(w, w);
          int d2 = std::min(deg, 2);
          for (std::uint64_t t = 0; t < 2; ++t) {
            PolySection a =
                random_section(poly_section_space(c1.h_fiber(0), n, d2), cfg.seed + 7 + t);
            PolySection b = random_section(poly_section_space(c1.h_fiber(0), n, d2),
                                           cfg.seed + 91 + t);
            // mu_2 equals the cup product
            if (ainf.mu({0, 0}, {a, b}).coords !=
                cup_product(c1, 0, a, c1, 0, b, cc2, p).coords)
              return false;
            // m = 2 relation (Leibniz in mu form)
            Vec lhs = cc2.bgg_operator(0).apply(ainf.mu({0, 0}, {a, b})).coords;
            Vec rhs = ainf.mu({1, 0}, {ainf.mu({0}, {a}), b}).coords;
            Vec r2 = ainf.mu({0, 1}, {a, ainf.mu({0}, {b})}).coords;
            for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] += r2[i];
            if (lhs != rhs) return false;
          }
          // m = 1 relation
          for (int k = 0; k + 1 < n; ++k)
            if (!c1.bgg_operator(k + 1).compose(c1.bgg_operator(k)).is_zero())
              return false;
          return true;
        });
      }
      s.guarded("dual pi is the formal adjoint", [&] {
        DualBGGContext dual(ctx);
        for (int k = 0; k <= n; ++k)
          if (!(dual.pi_hat(k) == ctx.pi_operator(k).adjoint())) return false;
        return true;
      });
      s.guarded("dual composition zero", [&] {
        DualBGGContext dual(ctx);
        for (int k = 0; k + 1 < n; ++k)
          if (!dual.dual_bgg_operator(k).compose(dual.dual_bgg_operator(k + 1)).is_zero())
            return false;
        return true;
      });
      s.guarded("divergence adjointness", [&] {
        DualBGGContext dual(ctx);
        BGGContext triv(par, trivial_rep(par));
        DualBGGContext dtriv(triv);
        FlatOperator divg = dtriv.dual_bgg_operator(0);
        for (std::uint64_t t = 0; t < 5; ++t) {
          PolySection a = random_section(poly_section_space(ctx.h_fiber(0), n, deg),
                                         cfg.seed + 311 + t);
          PolySection b = random_section(
              poly_section_space(dual.h_hat_fiber(1), n, deg), cfg.seed + 701 + t);
          Vec lhs =
              divg.apply(cap_product(ctx, dual, 0, 1, a, b, triv, dtriv)).coords;
          Vec rhs = pair_h_sections(ctx.bgg_operator(0).apply(a), b).coords;
          Vec r2 = pair_h_sections(a, dual.dual_bgg_operator(0).apply(b)).coords;
          for (int i = 0; i < (int)rhs.size(); ++i) rhs[i] += r2[i];
          if (lhs != rhs) return false;
        }
        return true;
      });
      s.guarded("cap duality at degree zero", [&] {
        DualBGGContext dual(ctx);
        BGGContext triv(par, trivial_rep(par));
        DualBGGContext dtriv(triv);
        for (std::uint64_t t = 0; t < 5; ++t) {
          PolySection a = random_section(poly_section_space(ctx.h_fiber(0), n, deg),
                                         cfg.seed + 401 + t);
          PolySection b = random_section(
              poly_section_space(dual.h_hat_fiber(0), n, deg), cfg.seed + 811 + t);
          if (cap_product(ctx, dual, 0, 0, a, b, triv, dtriv).coords !=
              pair_h_sections(a, b).coords)
            return false;
        }
        return true;
      });
    }
  }

  return s.rep;
}

}  // namespace bgg
