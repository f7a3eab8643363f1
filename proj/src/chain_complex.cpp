#include "bgg/chain_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace bgg {

namespace {

// e_i contraction: sign of removing i from s, or 0 when absent.
int interior_sign(std::vector<int>& s, int i) {
  auto it = std::find(s.begin(), s.end(), i);
  if (it == s.end()) return 0;
  int t = (int)(it - s.begin());
  s.erase(it);
  return t % 2 == 0 ? 1 : -1;
}

// eps^j wedge: sign of inserting j into s, or 0 when already present.
int wedge_sign(std::vector<int>& s, int j) {
  auto it = std::lower_bound(s.begin(), s.end(), j);
  if (it != s.end() && *it == j) return 0;
  int t = (int)(it - s.begin());
  s.insert(it, j);
  return t % 2 == 0 ? 1 : -1;
}

}  // namespace

ChainComplex::ChainComplex(ParabolicPtr par, RepresentationData w)
    : par_(std::move(par)), w_(std::move(w)), spaces_(par_->m_dim + 1) {
  if (w_.par != par_)
    throw std::invalid_argument("ChainComplex: module built over a different algebra");
}

const ChainSpace& ChainComplex::space(int k) {
  if (k < 0 || k > top())
    throw std::invalid_argument("chain degree " + std::to_string(k) +
                                " out of range 0.." + std::to_string(top()));
  if (!spaces_[k]) {
    ChainSpace c;
    c.k = k;
    c.dimW = w_.space.dim();
    c.subsets = index_subsets(par_->m_dim, k);
    std::vector<std::string> labels;
    std::vector<Rat> weights;
    for (int s = 0; s < (int)c.subsets.size(); ++s) {
      c.subset_pos[c.subsets[s]] = s;
      std::string form;
      Rat fw(0);
      for (int i : c.subsets[s]) {
        if (!form.empty()) form += "^";
        form += par_->algebra.space().label(par_->mstar_index(i));
        fw += par_->weight(par_->mstar_index(i));
      }
      for (int w = 0; w < c.dimW; ++w) {
        labels.push_back(form.empty() ? w_.space.label(w) : form + "|" + w_.space.label(w));
        weights.push_back(fw + w_.space.weight(w));
      }
    }
    c.basis = BasedSpace(std::move(labels), std::move(weights));
    spaces_[k] = std::move(c);
  }
  return *spaces_[k];
}

std::vector<std::pair<std::vector<int>, Rat>> ChainComplex::form_action(
    int gi, const std::vector<int>& s) const {
  std::vector<std::pair<std::vector<int>, Rat>> out;
  for (int t = 0; t < (int)s.size(); ++t) {
    int i = s[t];
    std::vector<int> s1 = s;
    s1.erase(s1.begin() + t);
    int sign1 = t % 2 == 0 ? 1 : -1;
    for (const auto& [j, c] : par_->bracket_mstar(gi, i)) {
      std::vector<int> s2 = s1;
      int sign2 = wedge_sign(s2, j);
      if (sign2) out.emplace_back(std::move(s2), c * sign1 * sign2);
    }
  }
  return out;
}

OperatorMatrix ChainComplex::p_action(int gi, int k) {
  if (!par_->is_p_index(gi))
    throw std::invalid_argument("p_action: " + par_->algebra.space().label(gi) +
                                " is not in p");
  const ChainSpace& c = space(k);
  OperatorMatrix m(c.basis, c.basis);
  OperatorMatrix actT = w_.act(gi).transpose();
  for (int s = 0; s < (int)c.subsets.size(); ++s) {
    auto fa = form_action(gi, c.subsets[s]);
    for (int w = 0; w < c.dimW; ++w) {
      int col = c.index(s, w);
      for (const auto& [s2, coef] : fa)
        m.add_entry(c.index(c.subset_pos.at(s2), w), col, coef);
      for (const auto& [w2, coef] : actT.row(w)) m.add_entry(c.index(s, w2), col, coef);
    }
  }
  return m;
}

const OperatorMatrix& ChainComplex::delta(int k) {
  auto it = delta_cache_.find(k);
  if (it != delta_cache_.end()) return it->second;
  const ChainSpace& ck = space(k);
  if (k == 0) {
    return delta_cache_
        .emplace(0, OperatorMatrix::zero(ck.basis, BasedSpace(std::vector<std::string>{})))
        .first->second;
  }
  const ChainSpace& cl = space(k - 1);
  OperatorMatrix m(ck.basis, cl.basis);
  const Rat half(1, 2);
  std::vector<OperatorMatrix> epsT;
  for (int i = 0; i < par_->mstar_dim(); ++i)
    epsT.push_back(w_.act(par_->mstar_index(i)).transpose());
  for (int s = 0; s < (int)ck.subsets.size(); ++s) {
    const auto& sub = ck.subsets[s];
    for (int t = 0; t < (int)sub.size(); ++t) {
      int i = sub[t];
      std::vector<int> s1 = sub;
      s1.erase(s1.begin() + t);
      int sign1 = t % 2 == 0 ? 1 : -1;
      int p1 = cl.subset_pos.at(s1);
      auto fa = form_action(par_->mstar_index(i), s1);
      for (int w = 0; w < ck.dimW; ++w) {
        int col = ck.index(s, w);
        for (const auto& [w2, coef] : epsT[i].row(w))
          m.add_entry(cl.index(p1, w2), col, sign1 * coef);
        for (const auto& [s2, coef] : fa)
          m.add_entry(cl.index(cl.subset_pos.at(s2), w), col, half * sign1 * coef);
      }
    }
  }
  return delta_cache_.emplace(k, std::move(m)).first->second;
}

const OperatorMatrix& ChainComplex::d(int k) {
  auto it = d_cache_.find(k);
  if (it != d_cache_.end()) return it->second;
  if (w_.scope != RepresentationData::Scope::g_module)
    throw std::invalid_argument("coboundary needs g-module");
  const ChainSpace& ck = space(k);
  const ChainSpace& cu = space(k + 1);
  OperatorMatrix m(ck.basis, cu.basis);
  const Rat half(1, 2);
  std::vector<OperatorMatrix> actT;
  for (int i = 0; i < par_->m_dim; ++i)
    actT.push_back(w_.act(par_->m_index(i)).transpose());
  for (int s = 0; s < (int)ck.subsets.size(); ++s) {
    const auto& sub = ck.subsets[s];
    for (int i = 0; i < par_->m_dim; ++i) {
      std::vector<int> s1 = sub;
      int signA = wedge_sign(s1, i);
      if (signA) {
        int p1 = cu.subset_pos.at(s1);
        for (int w = 0; w < ck.dimW; ++w) {
          int col = ck.index(s, w);
          for (const auto& [w2, coef] : actT[i].row(w))
            m.add_entry(cu.index(p1, w2), col, signA * coef);
        }
      }
      for (const auto& [s2, coef] : form_action(par_->m_index(i), sub)) {
        std::vector<int> s3 = s2;
        int signC = wedge_sign(s3, i);
        if (!signC) continue;
        int p3 = cu.subset_pos.at(s3);
        for (int w = 0; w < ck.dimW; ++w)
          m.add_entry(cu.index(p3, w), ck.index(s, w), half * signC * coef);
      }
    }
  }
  return d_cache_.emplace(k, std::move(m)).first->second;
}

OperatorMatrix ChainComplex::quabla(int k) {
  const ChainSpace& c = space(k);
  OperatorMatrix q(c.basis, c.basis);
  if (k < top()) q = q + delta(k + 1).compose(d(k));
  if (k > 0) q = q + d(k - 1).compose(delta(k));
  return q;
}

OperatorMatrix ChainComplex::wedge_eps(int i, int k) {
  const ChainSpace& ck = space(k);
  const ChainSpace& cu = space(k + 1);
  OperatorMatrix m(ck.basis, cu.basis);
  for (int s = 0; s < (int)ck.subsets.size(); ++s) {
    std::vector<int> s1 = ck.subsets[s];
    int sign = wedge_sign(s1, i);
    if (!sign) continue;
    int p1 = cu.subset_pos.at(s1);
    for (int w = 0; w < ck.dimW; ++w)
      m.set_entry(cu.index(p1, w), ck.index(s, w), Rat(sign));
  }
  return m;
}

HodgeSplit ChainComplex::hodge_split(int k) {
  const ChainSpace& c = space(k);
  HodgeSplit out;
  out.im_d = k > 0 ? rank_factor(d(k - 1)).image : SubspaceBasis(c.basis, {});
  out.im_delta = k < top() ? rank_factor(delta(k + 1)).image : SubspaceBasis(c.basis, {});
  out.harmonic = rank_factor(quabla(k)).kernel;
  // ker quabla = ker d  ∩ ker delta, verified vector by vector
  for (const auto& h : out.harmonic.vectors()) {
    Vec v = to_dense(h, c.basis.dim());
    bool in_ker_d = k == top() || bgg::is_zero(d(k).apply(v));
    bool in_ker_delta = k == 0 || bgg::is_zero(delta(k).apply(v));
    if (!in_ker_d || !in_ker_delta)
      throw std::logic_error("hodge_split: harmonic space is not ker d ∩ ker delta");
  }
  int total = out.im_d.dim() + out.harmonic.dim() + out.im_delta.dim();
  if (total != c.basis.dim())
    throw std::logic_error("hodge_split: summand dimensions do not fill C_k");
  OperatorMatrix joined(BasedSpace::anonymous(total, "h"), c.basis);
  int colno = 0;
  for (const auto* part : {&out.im_d, &out.harmonic, &out.im_delta})
    for (const auto& v : part->vectors()) {
      for (const auto& [i, x] : v) joined.set_entry(i, colno, x);
      ++colno;
    }
  if (RowEchelon(joined).rank() != total)
    throw std::logic_error("hodge_split: summands are not independent");
  return out;
}

HomologyModule ChainComplex::homology(int k) {
  auto split = hodge_split(k);
  const ChainSpace& c = space(k);
  HomologyModule h;
  h.k = k;
  h.harmonic = split.harmonic;
  h.dim_im_d = split.im_d.dim();
  h.dim_im_delta = split.im_delta.dim();
  int n = c.basis.dim();
  int hd = split.harmonic.dim();
  OperatorMatrix joined(BasedSpace::anonymous(n, "h"), c.basis);
  int colno = 0;
  for (const auto* part : {&split.harmonic, &split.im_d, &split.im_delta})
    for (const auto& v : part->vectors()) {
      for (const auto& [i, x] : v) joined.set_entry(i, colno, x);
      ++colno;
    }
  OperatorMatrix inv = inverse(joined);
  h.project = OperatorMatrix(c.basis, BasedSpace::anonymous(hd, "H"));
  for (int r = 0; r < hd; ++r)
    for (const auto& [col, x] : inv.row(r)) h.project.set_entry(r, col, x);
  OperatorMatrix incl = split.harmonic.as_matrix("H");
  for (int i = 0; i < par_->g0_dim; ++i) {
    int gi = par_->g0_index(i);
    OperatorMatrix act = p_action(gi, k);
    OperatorMatrix on_h = h.project.compose(act).compose(incl);
    // the harmonic space must be g0 stable
    if (!(incl.compose(on_h) == act.compose(incl)))
      throw std::logic_error("homology: harmonic space is not g0 stable");
    h.g0_action.emplace(par_->algebra.space().label(gi), std::move(on_h));
  }
  return h;
}

}  // namespace bgg
