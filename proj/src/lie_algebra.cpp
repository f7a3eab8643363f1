#include "bgg/lie_algebra.hpp"

#include <array>
#include <sstream>
#include <stdexcept>

namespace bgg {

SparseVec LieAlgebraData::bracket(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = table_.find({i, j});
  if (it == table_.end()) return {};
  if (!flip) return it->second;
  SparseVec out = it->second;
  for (auto& [k, c] : out) c = -c;
  return out;
}

Vec LieAlgebraData::bracket(const Vec& x, const Vec& y) const {
  Vec out(dim(), Rat(0));
  for (int i = 0; i < dim(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim(); ++j) {
      if (y[j] == 0) continue;
      for (const auto& [k, c] : bracket(i, j)) out[k] += x[i] * y[j] * c;
    }
  }
  return out;
}

OperatorMatrix LieAlgebraData::ad(int i) const {
  OperatorMatrix m(basis_, basis_);
  for (int j = 0; j < dim(); ++j)
    for (const auto& [k, c] : bracket(i, j)) m.set_entry(k, j, c);
  return m;
}

OperatorMatrix LieAlgebraData::ad(const Vec& x) const {
  OperatorMatrix m(basis_, basis_);
  for (int i = 0; i < dim(); ++i)
    if (x[i] != 0) m = m + ad(i).scaled(x[i]);
  return m;
}

const OperatorMatrix& LieAlgebraData::killing() const {
  if (!killing_) {
    std::vector<OperatorMatrix> ads;
    ads.reserve(dim());
    for (int i = 0; i < dim(); ++i) ads.push_back(ad(i));
    auto k = std::make_shared<OperatorMatrix>(basis_, basis_);
    for (int i = 0; i < dim(); ++i)
      for (int j = i; j < dim(); ++j) {
        auto prod = ads[i].compose(ads[j]);
        Rat tr(0);
        for (int r = 0; r < dim(); ++r) tr += prod.entry(r, r);
        if (tr != 0) {
          k->set_entry(i, j, tr);
          if (i != j) k->set_entry(j, i, tr);
        }
      }
    killing_ = std::move(k);
  }
  return *killing_;
}

// [x_l, x_k] contracted against a sparse left argument.
static SparseVec bracket_left(const LieAlgebraData& g, const SparseVec& x, int k) {
  SparseVec out;
  for (const auto& [l, c] : x)
    for (const auto& [r, d] : g.bracket(l, k)) {
      out[r] += c * d;
      if (out[r] == 0) out.erase(r);
    }
  return out;
}

void LieAlgebraData::validate() const {
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      for (int k = j + 1; k < dim(); ++k) {
        SparseVec acc = bracket_left(*this, bracket(i, j), k);
        for (const auto& [r, c] : bracket_left(*this, bracket(j, k), i)) {
          acc[r] += c;
          if (acc[r] == 0) acc.erase(r);
        }
        for (const auto& [r, c] : bracket_left(*this, bracket(k, i), j)) {
          acc[r] += c;
          if (acc[r] == 0) acc.erase(r);
        }
        if (!acc.empty())
          throw std::invalid_argument("Jacobi identity fails on triple (" +
                                      basis_.label(i) + ", " + basis_.label(j) + ", " +
                                      basis_.label(k) + ")");
      }
}

LieAlgebraData build_lie_algebra(const BasedSpace& basis,
                                 const std::map<std::pair<int, int>, SparseVec>& raw) {
  auto lookup = [&](int i, int j) -> SparseVec {
    auto it = raw.find({i, j});
    return it == raw.end() ? SparseVec{} : it->second;
  };
  BracketTable table;
  for (int i = 0; i < basis.dim(); ++i) {
    SparseVec diag = lookup(i, i);
    if (!diag.empty())
      throw std::invalid_argument("antisymmetry fails on pair (" + basis.label(i) +
                                  ", " + basis.label(i) + ")");
    for (int j = i + 1; j < basis.dim(); ++j) {
      SparseVec fwd = lookup(i, j);
      // when both orientations are listed they must be negatives of each other
      if (raw.count({j, i}) && raw.count({i, j})) {
        SparseVec sum = lookup(j, i);
        for (const auto& [k, c] : fwd) {
          sum[k] += c;
          if (sum[k] == 0) sum.erase(k);
        }
        if (!sum.empty())
          throw std::invalid_argument("antisymmetry fails on pair (" + basis.label(i) +
                                      ", " + basis.label(j) + ")");
      } else if (raw.count({j, i})) {
        for (const auto& [k, c] : lookup(j, i)) fwd[k] = -c;
      }
      if (!fwd.empty()) table[{i, j}] = fwd;
    }
  }
  LieAlgebraData g(basis, std::move(table));
  g.validate();
  return g;
}

// ---------------------------------------------------------------------------
// Construction from explicit matrices on a defining module.

static Vec flatten(const OperatorMatrix& m) {
  Vec v((size_t)m.rows() * m.cols(), Rat(0));
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, a] : m.row(r)) v[(size_t)r * m.cols() + c] = a;
  return v;
}

static OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) {
  return a.compose(b) - b.compose(a);
}

static LieAlgebraData algebra_from_matrices(const BasedSpace& g_space,
                                            const std::vector<OperatorMatrix>& mats) {
  int d = (int)mats.size();
  int n = mats.front().rows();
  OperatorMatrix basis_cols(BasedSpace::anonymous(d, "c"),
                            BasedSpace::anonymous(n * n, "f"));
  for (int j = 0; j < d; ++j) {
    Vec f = flatten(mats[j]);
    for (int i = 0; i < n * n; ++i)
      if (f[i] != 0) basis_cols.set_entry(i, j, f[i]);
  }
  RowEchelon re(basis_cols);
  if (re.rank() != d)
    throw std::logic_error("algebra_from_matrices: basis matrices are dependent");
  BracketTable table;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      auto coords = re.solve(flatten(commutator(mats[i], mats[j])));
      if (!coords)
        throw std::logic_error("algebra_from_matrices: bracket leaves the span");
      SparseVec sv = to_sparse(*coords);
      if (!sv.empty()) table[{i, j}] = std::move(sv);
    }
  return LieAlgebraData(g_space, std::move(table));
}

// ---------------------------------------------------------------------------
// Parabolic

Rat Parabolic::depth() const {
  Rat d(0);
  for (int i = 0; i < m_dim; ++i)
    if (weight(i) > d) d = weight(i);
  return d;
}

bool Parabolic::abelian_nilradical() const {
  for (int i = 0; i < m_dim; ++i)
    if (weight(i) != 1) return false;
  for (int i = 0; i < m_dim; ++i)
    for (int j = i + 1; j < m_dim; ++j)
      if (!algebra.bracket(i, j).empty()) return false;
  return true;
}

SparseVec Parabolic::bracket_m(int gi, int mj) const {
  SparseVec out;
  for (const auto& [k, c] : algebra.bracket(gi, m_index(mj)))
    if (k < m_dim) out[k] = c;
  return out;
}

SparseVec Parabolic::bracket_mstar(int gi, int mstar_j) const {
  SparseVec out;
  int base = m_dim + g0_dim;
  for (const auto& [k, c] : algebra.bracket(gi, mstar_index(mstar_j)))
    if (k >= base) out[k - base] = c;
  return out;
}

void Parabolic::validate() const {
  if (dim() != 2 * m_dim + g0_dim)
    throw std::logic_error(name + ": layer dimensions do not sum to dim g");
  for (int i = 0; i < dim(); ++i) {
    const Rat& w = weight(i);
    bool bad = (i < m_dim && w <= 0) ||
               (i >= m_dim && i < m_dim + g0_dim && w != 0) ||
               (i >= m_dim + g0_dim && w >= 0);
    if (bad)
      throw std::logic_error(name + ": weight sign pattern broken at " +
                             algebra.space().label(i));
  }
  OperatorMatrix adEt = algebra.ad(grading_element).transpose();
  for (int j = 0; j < dim(); ++j) {
    const auto& col = adEt.row(j);
    if (!((col.empty() && weight(j) == 0) ||
          (col.size() == 1 && col.count(j) && col.at(j) == weight(j))))
      throw std::logic_error(name + ": ad(E) is not diagonal with the stored weights");
  }
  for (int i = 0; i < dim(); ++i)
    for (int j = i + 1; j < dim(); ++j)
      for (const auto& [k, c] : algebra.bracket(i, j))
        if (weight(k) != weight(i) + weight(j))
          throw std::logic_error(name + ": bracket leaves the graded layer at (" +
                                 algebra.space().label(i) + ", " +
                                 algebra.space().label(j) + ")");
  for (int i = 0; i < m_dim; ++i)
    for (int j = 0; j < m_dim; ++j)
      if (algebra.killing(mstar_index(i), m_index(j)) != Rat(i == j ? 1 : 0))
        throw std::logic_error(name + ": duality pairing is not normalized");
  if ((int)standard_action.size() != dim())
    throw std::logic_error(name + ": standard action size mismatch");
  OperatorMatrix rhoE(standard_space, standard_space);
  for (int i = 0; i < dim(); ++i)
    if (grading_element[i] != 0)
      rhoE = rhoE + standard_action[i].scaled(grading_element[i]);
  OperatorMatrix rhoEt = rhoE.transpose();
  for (int j = 0; j < standard_space.dim(); ++j) {
    const auto& col = rhoEt.row(j);
    if (!((col.empty() && standard_space.weight(j) == 0) ||
          (col.size() == 1 && col.count(j) && col.at(j) == standard_space.weight(j))))
      throw std::logic_error(name + ": standard module weights disagree with rho(E)");
  }
}

// Renormalizes the raw m* matrices so the Killing pairing with the m basis is
// the identity, rebuilds the structure constants, and validates everything.
static std::shared_ptr<Parabolic> assemble(std::string name, BasedSpace g_space,
                                           std::vector<OperatorMatrix> mats, int m_dim,
                                           int g0_dim, BasedSpace standard_space) {
  LieAlgebraData raw = algebra_from_matrices(g_space, mats);
  int base = m_dim + g0_dim;
  BasedSpace pc = BasedSpace::anonymous(m_dim, "p");
  OperatorMatrix pairing(pc, pc);
  for (int k = 0; k < m_dim; ++k)
    for (int j = 0; j < m_dim; ++j)
      pairing.set_entry(k, j, raw.killing(base + k, j));
  OperatorMatrix coeff = inverse(pairing);
  std::vector<OperatorMatrix> old_mstar(mats.begin() + base, mats.end());
  for (int i = 0; i < m_dim; ++i) {
    OperatorMatrix eps = OperatorMatrix::zero(old_mstar[0].domain(), old_mstar[0].codomain());
    for (int k = 0; k < m_dim; ++k)
      if (coeff.entry(i, k) != 0) eps = eps + old_mstar[k].scaled(coeff.entry(i, k));
    mats[base + i] = std::move(eps);
  }
  auto par = std::make_shared<Parabolic>();
  par->name = std::move(name);
  par->algebra = algebra_from_matrices(g_space, mats);
  par->algebra.validate();
  par->m_dim = m_dim;
  par->g0_dim = g0_dim;
  par->grading_element.assign(g_space.dim(), Rat(0));
  par->grading_element[m_dim] = Rat(1);  // E is the first g0 basis element
  par->standard_space = std::move(standard_space);
  par->standard_action = std::move(mats);
  par->validate();
  return par;
}

ParabolicPtr conformal_parabolic(int p, int q) {
  if (p < 0 || q < 0 || p + q < 3)
    throw std::invalid_argument("conformal_parabolic: need p,q >= 0 and p+q >= 3");
  int n = p + q, N = n + 2;
  std::vector<Rat> sigma(N, Rat(0));
  for (int i = 1; i <= n; ++i) sigma[i] = Rat(i <= p ? 1 : -1);
  auto bform = [&](int a, int b) -> Rat {
    if ((a == 0 && b == n + 1) || (a == n + 1 && b == 0)) return Rat(1);
    if (a == b && a >= 1 && a <= n) return sigma[a];
    return Rat(0);
  };
  std::vector<std::string> xl;
  std::vector<Rat> xw(N, Rat(0));
  for (int i = 0; i < N; ++i) xl.push_back("x" + std::to_string(i));
  xw[0] = Rat(1);
  xw[N - 1] = Rat(-1);
  BasedSpace defining(xl, xw);
  auto gen = [&](int a, int b) {  // w -> b(e_b,w) e_a - b(e_a,w) e_b
    OperatorMatrix m(defining, defining);
    for (int k = 0; k < N; ++k) {
      m.add_entry(a, k, bform(b, k));
      m.add_entry(b, k, -bform(a, k));
    }
    return m;
  };
  std::vector<std::string> gl;
  std::vector<Rat> gw;
  std::vector<OperatorMatrix> mats;
  for (int i = 1; i <= n; ++i) {
    gl.push_back("p" + std::to_string(i));
    gw.push_back(Rat(1));
    mats.push_back(gen(0, i));
  }
  gl.push_back("E");
  gw.push_back(Rat(0));
  mats.push_back(gen(0, n + 1));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      gl.push_back("r" + std::to_string(i) + "_" + std::to_string(j));
      gw.push_back(Rat(0));
      mats.push_back(gen(i, j));
    }
  for (int i = 1; i <= n; ++i) {
    gl.push_back("q" + std::to_string(i));
    gw.push_back(Rat(-1));
    mats.push_back(gen(n + 1, i));
  }
  return assemble("conformal:" + std::to_string(p) + "," + std::to_string(q),
                  BasedSpace(gl, gw), std::move(mats), n, 1 + n * (n - 1) / 2, defining);
}

ParabolicPtr projective_parabolic(int n) {
  if (n < 2) throw std::invalid_argument("projective_parabolic: need n >= 2");
  int N = n + 1;
  std::vector<std::string> xl;
  std::vector<Rat> xw;
  for (int i = 0; i < N; ++i) {
    xl.push_back("x" + std::to_string(i));
    xw.push_back(i == 0 ? Rat(n, N) : Rat(-1, N));
  }
  BasedSpace defining(xl, xw);
  auto unit = [&](int a, int b) {
    OperatorMatrix m(defining, defining);
    m.set_entry(a, b, Rat(1));
    return m;
  };
  std::vector<std::string> gl;
  std::vector<Rat> gw;
  std::vector<OperatorMatrix> mats;
  for (int j = 1; j <= n; ++j) {
    gl.push_back("p" + std::to_string(j));
    gw.push_back(Rat(1));
    mats.push_back(unit(0, j));
  }
  gl.push_back("E");
  gw.push_back(Rat(0));
  OperatorMatrix E(defining, defining);
  for (int i = 0; i < N; ++i) E.set_entry(i, i, xw[i]);
  mats.push_back(E);
  for (int j = 1; j < n; ++j) {
    gl.push_back("d" + std::to_string(j));
    gw.push_back(Rat(0));
    mats.push_back(unit(j, j) - unit(j + 1, j + 1));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      gl.push_back("l" + std::to_string(i) + "_" + std::to_string(j));
      gw.push_back(Rat(0));
      mats.push_back(unit(i, j));
    }
  for (int j = 1; j <= n; ++j) {
    gl.push_back("q" + std::to_string(j));
    gw.push_back(Rat(-1));
    mats.push_back(unit(j, 0));
  }
  return assemble("projective:" + std::to_string(n), BasedSpace(gl, gw),
                  std::move(mats), n, n * n, defining);
}

// ---------------------------------------------------------------------------
// Split g2 as the derivation algebra of the split octonions.

namespace {

// Octonion basis order: E1, E2, u1, u2, u3, v1, v2, v3.
constexpr int kOct = 8;

int eps3(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1 && (k - j + 3) % 3 == 1) ? 1 : -1;
}

std::array<std::array<SparseVec, kOct>, kOct> octonion_table() {
  std::array<std::array<SparseVec, kOct>, kOct> t;
  auto U = [](int i) { return 2 + i; };
  auto V = [](int i) { return 5 + i; };
  t[0][0] = {{0, Rat(1)}};
  t[1][1] = {{1, Rat(1)}};
  for (int i = 0; i < 3; ++i) {
    t[0][U(i)] = {{U(i), Rat(1)}};
    t[U(i)][1] = {{U(i), Rat(1)}};
    t[1][V(i)] = {{V(i), Rat(1)}};
    t[V(i)][0] = {{V(i), Rat(1)}};
    for (int j = 0; j < 3; ++j) {
      if (i == j) {
        t[U(i)][V(j)] = {{0, Rat(1)}};
        t[V(i)][U(j)] = {{1, Rat(1)}};
        continue;
      }
      int k = 3 - i - j;
      t[U(i)][U(j)] = {{V(k), Rat(eps3(i, j, k))}};
      t[V(i)][V(j)] = {{U(k), Rat(-eps3(i, j, k))}};
    }
  }
  return t;
}

}  // namespace

ParabolicPtr g2_parabolic() {
  static ParabolicPtr cached = [] {
    auto mul = octonion_table();
    // Derivations: 8x8 unknown D with D(xy) = D(x)y + xD(y) on all basis pairs.
    BasedSpace unknowns = BasedSpace::anonymous(kOct * kOct, "d");
    BasedSpace eqs = BasedSpace::anonymous(kOct * kOct * kOct, "q");
    OperatorMatrix sys(unknowns, eqs);
    int row = 0;
    for (int a = 0; a < kOct; ++a)
      for (int b = 0; b < kOct; ++b) {
        for (int r = 0; r < kOct; ++r, ++row) {
          for (const auto& [s, c] : mul[a][b]) sys.add_entry(row, r * kOct + s, c);
          for (int s = 0; s < kOct; ++s) {
            auto it = mul[s][b].find(r);
            if (it != mul[s][b].end()) sys.add_entry(row, s * kOct + a, -it->second);
            auto jt = mul[a][s].find(r);
            if (jt != mul[a][s].end()) sys.add_entry(row, s * kOct + b, -jt->second);
          }
        }
      }
    auto der = rank_factor(sys).kernel;
    if (der.dim() != 14)
      throw std::logic_error("g2_parabolic: derivation algebra has dim " +
                             std::to_string(der.dim()));
    // The grading derivation: weights (0,0) on E1,E2; (2,-1,-1) on u; minus on v.
    const std::array<long, kOct> gw = {0, 0, 2, -1, -1, -2, 1, 1};
    Vec e_flat(kOct * kOct, Rat(0));
    for (int i = 0; i < kOct; ++i) e_flat[i * kOct + i] = Rat(gw[i]);
    SubspaceSolver in_der(der);
    if (!in_der.coordinates(e_flat))
      throw std::logic_error("g2_parabolic: grading element is not a derivation");
    auto unflatten = [&](const Vec& f) {
      OperatorMatrix m(BasedSpace::anonymous(kOct, "o"), BasedSpace::anonymous(kOct, "o"));
      for (int r = 0; r < kOct; ++r)
        for (int c = 0; c < kOct; ++c)
          if (f[r * kOct + c] != 0) m.set_entry(r, c, f[r * kOct + c]);
      return m;
    };
    OperatorMatrix Emat = unflatten(e_flat);
    // ad(E) in derivation coordinates.
    BasedSpace dc = BasedSpace::anonymous(14, "g");
    OperatorMatrix adE(dc, dc);
    std::vector<OperatorMatrix> der_mats;
    for (int j = 0; j < 14; ++j)
      der_mats.push_back(unflatten(to_dense(der.vectors()[j], kOct * kOct)));
    for (int j = 0; j < 14; ++j) {
      auto coords = in_der.coordinates(flatten(commutator(Emat, der_mats[j])));
      if (!coords) throw std::logic_error("g2_parabolic: ad(E) leaves the derivations");
      for (int i = 0; i < 14; ++i)
        if ((*coords)[i] != 0) adE.set_entry(i, j, (*coords)[i]);
    }
    auto layer = [&](long w) {
      return rank_factor(adE - OperatorMatrix::identity(dc).scaled(Rat(w))).kernel;
    };
    auto to_matrix = [&](const SparseVec& coords14) {
      OperatorMatrix m = OperatorMatrix::zero(der_mats[0].domain(), der_mats[0].codomain());
      for (const auto& [j, c] : coords14) m = m + der_mats[j].scaled(c);
      return m;
    };
    std::vector<OperatorMatrix> mats;
    std::vector<long> expect_dim = {2, 1, 2};
    for (long w = 1; w <= 3; ++w) {
      auto l = layer(w);
      if (l.dim() != expect_dim[w - 1])
        throw std::logic_error("g2_parabolic: unexpected layer dimension");
      for (const auto& v : l.vectors()) mats.push_back(to_matrix(v));
    }
    // g0: the grading element first, completed from the weight-0 layer.
    auto l0 = layer(0);
    if (l0.dim() != 4) throw std::logic_error("g2_parabolic: dim g0 != 4");
    Vec e_coords = *in_der.coordinates(e_flat);
    OperatorMatrix completion(BasedSpace::anonymous(5, "c"), dc);
    for (int i = 0; i < 14; ++i)
      if (e_coords[i] != 0) completion.set_entry(i, 0, e_coords[i]);
    for (int j = 0; j < 4; ++j)
      for (const auto& [i, c] : l0.vectors()[j]) completion.set_entry(i, j + 1, c);
    RowEchelon comp_re(completion);
    std::vector<OperatorMatrix> g0_mats;
    for (const auto& [pcol, prow] : comp_re.pivots()) {
      if (pcol == 0)
        g0_mats.push_back(Emat);
      else
        g0_mats.push_back(to_matrix(l0.vectors()[pcol - 1]));
    }
    if (g0_mats.size() != 4 || !(g0_mats[0] == Emat))
      throw std::logic_error("g2_parabolic: g0 completion failed");
    for (auto& m : g0_mats) mats.push_back(std::move(m));
    for (long w = -1; w >= -3; --w) {
      auto l = layer(w);
      if (l.dim() != expect_dim[-w - 1])
        throw std::logic_error("g2_parabolic: unexpected layer dimension");
      for (const auto& v : l.vectors()) mats.push_back(to_matrix(v));
    }
    std::vector<std::string> gl = {"X1", "Y1", "Z2", "X3", "Y3", "E", "h1", "h2", "h3",
                                   "X1*", "Y1*", "Z2*", "X3*", "Y3*"};
    std::vector<Rat> gwv = {Rat(1), Rat(1), Rat(2), Rat(3), Rat(3),
                            Rat(0), Rat(0), Rat(0), Rat(0),
                            Rat(-1), Rat(-1), Rat(-2), Rat(-3), Rat(-3)};
    BasedSpace oct({"e1", "e2", "u1", "u2", "u3", "v1", "v2", "v3"},
                   {Rat(0), Rat(0), Rat(2), Rat(-1), Rat(-1), Rat(-2), Rat(1), Rat(1)});
    for (auto& m : mats) m = m.with_spaces(oct, oct);
    auto par = assemble("g2", BasedSpace(gl, gwv), std::move(mats), 5, 4, oct);
    // The stored standard module is the 7-dim trace-zero part of the octonions.
    BasedSpace seven({"w0", "u1", "u2", "u3", "v1", "v2", "v3"},
                     {Rat(0), Rat(2), Rat(-1), Rat(-1), Rat(-2), Rat(1), Rat(1)});
    std::vector<SparseVec> seven_vecs = {{{0, Rat(1)}, {1, Rat(-1)}}};
    for (int i = 2; i < kOct; ++i) seven_vecs.push_back({{i, Rat(1)}});
    SubspaceBasis seven_basis(oct, seven_vecs);
    SubspaceSolver seven_solver(seven_basis);
    std::vector<OperatorMatrix> seven_action;
    for (const auto& m : par->standard_action) {
      OperatorMatrix r(seven, seven);
      for (int j = 0; j < 7; ++j) {
        auto coords = seven_solver.coordinates(m.apply(to_dense(seven_vecs[j], kOct)));
        if (!coords)
          throw std::logic_error("g2_parabolic: trace-zero part is not invariant");
        for (int i = 0; i < 7; ++i)
          if ((*coords)[i] != 0) r.set_entry(i, j, (*coords)[i]);
      }
      seven_action.push_back(std::move(r));
    }
    par->standard_space = seven;
    par->standard_action = std::move(seven_action);
    par->validate();
    return ParabolicPtr(par);
  }();
  return cached;
}

ParabolicPtr builtin_parabolic(const std::string& name) {
  auto fail = [&]() -> ParabolicPtr {
    throw std::invalid_argument("unsupported algebra name: " + name);
  };
  auto parse_int = [](const std::string& s, int& out) {
    try {
      size_t used = 0;
      out = std::stoi(s, &used);
      return used == s.size();
    } catch (const std::exception&) {
      return false;
    }
  };
  auto colon = name.find(':');
  std::string family = name.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : name.substr(colon + 1);
  if (family == "g2" && args.empty()) return g2_parabolic();
  if (family == "conformal") {
    auto comma = args.find(',');
    int p = 0, q = 0;
    if (comma == std::string::npos || !parse_int(args.substr(0, comma), p) ||
        !parse_int(args.substr(comma + 1), q))
      return fail();
    return conformal_parabolic(p, q);
  }
  if (family == "projective") {
    int n = 0;
    if (!parse_int(args, n)) return fail();
    return projective_parabolic(n);
  }
  return fail();
}

}  // namespace bgg
