#include "bgg/representation.hpp"

#include <cctype>
#include <stdexcept>

namespace bgg {

OperatorMatrix RepresentationData::act(const Vec& x) const {
  OperatorMatrix out(space, space);
  for (int i = 0; i < (int)x.size(); ++i)
    if (x[i] != 0) out = out + action[i].scaled(x[i]);
  return out;
}

std::vector<std::string> validate_representation(const RepresentationData& r) {
  std::vector<std::string> report;
  const auto& g = r.par->algebra;
  for (int i = 0; i < g.dim(); ++i) {
    if (!r.in_scope(i)) continue;
    for (int j = i + 1; j < g.dim(); ++j) {
      if (!r.in_scope(j)) continue;
      OperatorMatrix lhs(r.space, r.space);
      for (const auto& [k, c] : g.bracket(i, j)) lhs = lhs + r.act(k).scaled(c);
      OperatorMatrix rhs = r.act(i).compose(r.act(j)) - r.act(j).compose(r.act(i));
      if (!(lhs == rhs))
        report.push_back("bracket pair (" + g.space().label(i) + ", " +
                         g.space().label(j) + ") violates the action axiom");
    }
  }
  OperatorMatrix rhoEt = r.act(r.par->grading_element).transpose();
  for (int j = 0; j < r.space.dim(); ++j) {
    const auto& col = rhoEt.row(j);
    bool ok = (col.empty() && r.space.weight(j) == 0) ||
              (col.size() == 1 && col.count(j) && col.at(j) == r.space.weight(j));
    if (!ok) {
      report.push_back("rho(E) is not diagonal with the stored weights at " +
                       r.space.label(j));
      break;
    }
  }
  return report;
}

static RepresentationData checked(RepresentationData r) {
  auto report = validate_representation(r);
  if (!report.empty())
    throw std::logic_error("representation '" + r.label + "' invalid: " + report.front());
  return r;
}

RepresentationData trivial_rep(ParabolicPtr par) {
  RepresentationData r;
  r.par = std::move(par);
  r.space = BasedSpace({"1"}, {Rat(0)});
  r.action.assign(r.par->dim(), OperatorMatrix::zero(r.space, r.space));
  r.label = "trivial";
  return checked(std::move(r));
}

RepresentationData standard_rep(ParabolicPtr par) {
  RepresentationData r;
  r.par = par;
  r.space = par->standard_space;
  r.action = par->standard_action;
  r.label = "standard";
  return checked(std::move(r));
}

RepresentationData adjoint_rep(ParabolicPtr par) {
  RepresentationData r;
  r.par = par;
  r.space = par->algebra.space();
  for (int i = 0; i < par->dim(); ++i) r.action.push_back(par->algebra.ad(i));
  r.label = "adjoint";
  return checked(std::move(r));
}

RepresentationData dual_rep(const RepresentationData& a) {
  RepresentationData r;
  r.par = a.par;
  r.space = a.space.dual();
  for (const auto& m : a.action) r.action.push_back(m.adjoint_on_duals().scaled(Rat(-1)));
  r.scope = a.scope;
  r.label = "dual(" + a.label + ")";
  return checked(std::move(r));
}

RepresentationData tensor_rep(const RepresentationData& a, const RepresentationData& b) {
  if (a.par != b.par)
    throw std::invalid_argument("tensor_rep: factors live over different algebras");
  int da = a.space.dim(), db = b.space.dim();
  std::vector<std::string> labels;
  std::vector<Rat> weights;
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      labels.push_back(a.space.label(i) + "|" + b.space.label(j));
      weights.push_back(a.space.weight(i) + b.space.weight(j));
    }
  RepresentationData r;
  r.par = a.par;
  r.space = BasedSpace(std::move(labels), std::move(weights));
  r.scope = (a.scope == RepresentationData::Scope::p_module ||
             b.scope == RepresentationData::Scope::p_module)
                ? RepresentationData::Scope::p_module
                : RepresentationData::Scope::g_module;
  for (int gi = 0; gi < r.par->dim(); ++gi) {
    OperatorMatrix m(r.space, r.space);
    for (int r1 = 0; r1 < da; ++r1)
      for (const auto& [c1, x] : a.action[gi].row(r1))
        for (int j = 0; j < db; ++j) m.add_entry(r1 * db + j, c1 * db + j, x);
    for (int r2 = 0; r2 < db; ++r2)
      for (const auto& [c2, x] : b.action[gi].row(r2))
        for (int i = 0; i < da; ++i) m.add_entry(i * db + r2, i * db + c2, x);
    r.action.push_back(std::move(m));
  }
  r.label = "tensor(" + a.label + "," + b.label + ")";
  return checked(std::move(r));
}

std::vector<std::vector<int>> index_subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[t] == n - k + t) --t;
    if (t < 0) break;
    ++cur[t];
    for (int s = t + 1; s < k; ++s) cur[s] = cur[s - 1] + 1;
  }
  return out;
}

RepresentationData exterior_power_rep(const RepresentationData& a, int k) {
  int n = a.space.dim();
  if (k < 0 || k > n)
    throw std::invalid_argument("exterior_power_rep: degree out of range");
  auto subsets = index_subsets(n, k);
  std::map<std::vector<int>, int> pos;
  std::vector<std::string> labels;
  std::vector<Rat> weights;
  for (int s = 0; s < (int)subsets.size(); ++s) {
    pos[subsets[s]] = s;
    std::string l;
    Rat w(0);
    for (int i : subsets[s]) {
      if (!l.empty()) l += "^";
      l += a.space.label(i);
      w += a.space.weight(i);
    }
    labels.push_back(k == 0 ? "scalar" : l);
    weights.push_back(w);
  }
  RepresentationData r;
  r.par = a.par;
  r.space = BasedSpace(std::move(labels), std::move(weights));
  r.scope = a.scope;
  for (int gi = 0; gi < r.par->dim(); ++gi) {
    OperatorMatrix col = a.action[gi].transpose();  // row c = column c of the action
    OperatorMatrix m(r.space, r.space);
    for (int s = 0; s < (int)subsets.size(); ++s) {
      const auto& S = subsets[s];
      for (int t = 0; t < k; ++t)
        for (const auto& [j, c] : col.row(S[t])) {
          std::vector<int> idx = S;
          idx[t] = j;
          int sign = 1;
          bool dead = false;
          for (int u = 0; u < k && !dead; ++u)
            for (int v = u + 1; v < k; ++v) {
              if (idx[u] == idx[v]) { dead = true; break; }
              if (idx[u] > idx[v]) { std::swap(idx[u], idx[v]); sign = -sign; }
            }
          if (!dead) m.add_entry(pos.at(idx), s, c * sign);
        }
    }
    r.action.push_back(std::move(m));
  }
  r.label = "ext(" + a.label + "," + std::to_string(k) + ")";
  return checked(std::move(r));
}

WeightDecomposition weight_decomposition(const RepresentationData& r) {
  OperatorMatrix rhoEt = r.act(r.par->grading_element).transpose();
  for (int j = 0; j < r.space.dim(); ++j) {
    const auto& col = rhoEt.row(j);
    bool ok = (col.empty() && r.space.weight(j) == 0) ||
              (col.size() == 1 && col.count(j) && col.at(j) == r.space.weight(j));
    if (!ok)
      throw std::invalid_argument("weight_decomposition: basis must be weight-adapted");
  }
  WeightDecomposition out;
  for (int j = 0; j < r.space.dim(); ++j) out.layers[r.space.weight(j)].push_back(j);
  for (int i = 0; i < r.par->mstar_dim(); ++i) {
    const auto& m = r.act(r.par->mstar_index(i));
    for (int row = 0; row < r.space.dim(); ++row)
      for (const auto& [c, x] : m.row(row))
        if (!(r.space.weight(row) < r.space.weight(c))) out.strictly_lowering = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expression parser: trivial | standard | adjoint | dual(R) | tensor(R,R) |
// ext(R,k).

namespace {

struct RepParser {
  const std::string& s;
  size_t pos = 0;
  ParabolicPtr par;

  void skip() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("rep expression: expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos) + " in " + s);
  }
  std::string word() {
    skip();
    size_t start = pos;
    while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
    return s.substr(start, pos - start);
  }
  RepresentationData parse() {
    std::string w = word();
    if (w == "trivial") return trivial_rep(par);
    if (w == "standard") return standard_rep(par);
    if (w == "adjoint") return adjoint_rep(par);
    if (w == "dual") {
      expect('(');
      auto inner = parse();
      expect(')');
      return dual_rep(inner);
    }
    if (w == "tensor") {
      expect('(');
      auto a = parse();
      expect(',');
      auto b = parse();
      expect(')');
      return tensor_rep(a, b);
    }
    if (w == "ext") {
      expect('(');
      auto a = parse();
      expect(',');
      std::string num = word();
      expect(')');
      if (num.empty()) throw std::invalid_argument("rep expression: missing degree in ext");
      return exterior_power_rep(a, std::stoi(num));
    }
    throw std::invalid_argument("rep expression: unknown constructor '" + w + "'");
  }
};

}  // namespace

RepresentationData parse_rep(ParabolicPtr par, const std::string& expr) {
  RepParser p{expr, 0, std::move(par)};
  auto r = p.parse();
  p.skip();
  if (p.pos != expr.size())
    throw std::invalid_argument("rep expression: trailing input in " + expr);
  return r;
}

}  // namespace bgg
