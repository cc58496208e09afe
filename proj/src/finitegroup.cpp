#include "ubckit/finitegroup.hpp"

#include "ubckit/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ubckit {

FiniteGroupData::FiniteGroupData(std::vector<std::string> names, std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw InputError("a group has at least one element");
  if (static_cast<int>(table_.size()) != n) throw InputError("multiplication table has the wrong size");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw InputError("multiplication table has the wrong size");
    for (int x : row)
      if (x < 0 || x >= n) throw InputError("multiplication table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw InputError("multiplication table has no identity");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_ && table_[b][a] == identity_) inverse_[a] = b;
  if (std::find(inverse_.begin(), inverse_.end(), -1) != inverse_.end())
    throw InputError("multiplication table lacks inverses");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InputError("multiplication table is not associative");
}

FiniteGroupData FiniteGroupData::cyclic(int m) {
  if (m < 1) throw InputError("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < m; ++b) table[a][b] = (a + b) % m;
  }
  return FiniteGroupData(std::move(names), std::move(table));
}

FiniteGroupData FiniteGroupData::symmetric(int n) {
  if (n < 1 || n > 5) throw InputError("symmetric group degree must be between 1 and 5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> names;
  for (const auto& q : perms) {
    std::string s;
    for (int x : q) s += static_cast<char>('0' + x);
    names.push_back(s);
  }
  const int N = static_cast<int>(perms.size());
  std::vector<std::vector<int>> table(N, std::vector<int>(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      std::vector<int> c(n);
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<int>(std::lower_bound(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroupData(std::move(names), std::move(table));
}

int FiniteGroupData::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw InputError("unknown group element '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

void FiniteGroupData::check_subgroup(const std::vector<int>& elements) const {
  std::set<int> set(elements.begin(), elements.end());
  if (set.size() != elements.size()) throw InputError("subgroup lists an element twice");
  for (int x : set)
    if (x < 0 || x >= order()) throw InputError("subgroup element out of range");
  if (!set.count(identity_)) throw InputError("subset does not contain the identity");
  for (int a : set)
    for (int b : set)
      if (!set.count(mul(a, b))) throw InputError("subset is not closed under multiplication");
}

std::vector<int> FiniteGroupData::generated(const std::vector<int>& generators) const {
  std::set<int> out{identity_};
  std::vector<int> frontier{identity_};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int g : generators) {
        const int y = mul(x, g);
        if (out.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {out.begin(), out.end()};
}

int OrbitTable::code(const std::vector<int>& tuple) const {
  int c = 0;
  for (int x : tuple) c = c * points + x;
  return c;
}

namespace {

std::vector<int> decode(int code, int points, int length) {
  std::vector<int> t(length);
  for (int i = length - 1; i >= 0; --i) {
    t[i] = code % points;
    code /= points;
  }
  return t;
}

}  // namespace

OrbitTable orbit_table(const GroupAction& action, int length) {
  OrbitTable out;
  out.points = static_cast<int>(action.point_names.size());
  out.length = length;
  long total = 1;
  for (int i = 0; i < length; ++i) {
    total *= out.points;
    if (total > 5'000'000) throw InputError("tuple space too large for orbit enumeration");
  }
  out.orbit_of.assign(static_cast<std::size_t>(total), -1);
  for (int c = 0; c < total; ++c) {
    if (out.orbit_of[c] >= 0) continue;
    const int id = static_cast<int>(out.representatives.size());
    const std::vector<int> rep = decode(c, out.points, length);
    out.representatives.push_back(rep);
    for (const auto& g : action.act) {
      std::vector<int> image(length);
      for (int i = 0; i < length; ++i) image[i] = g[rep[i]];
      out.orbit_of[out.code(image)] = id;
    }
  }
  return out;
}

std::string tuple_label(const GroupAction& action, const std::vector<int>& tuple) {
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += '.';
    out += action.point_names[tuple[i]];
  }
  return out;
}

namespace {

std::vector<std::string> orbit_labels(const GroupAction& action, const OrbitTable& table) {
  std::vector<std::string> out;
  for (const auto& rep : table.representatives) out.push_back(tuple_label(action, rep));
  return out;
}

std::vector<OrbitTable> orbit_tables(const GroupAction& action, int k_max) {
  std::vector<OrbitTable> out;
  for (int k = 0; k <= k_max + 1; ++k) out.push_back(orbit_table(action, k + 1));
  return out;
}

NormedComplex cochains_from_tables(const GroupAction& action, const std::vector<OrbitTable>& tables,
                                   const std::string& name) {
  NormedComplex C(name, Direction::Cochain, NormFlavor::Linf);
  for (std::size_t k = 0; k < tables.size(); ++k) C.set_basis(static_cast<int>(k), orbit_labels(action, tables[k]));
  for (std::size_t k = 0; k + 1 < tables.size(); ++k) {
    const OrbitTable& src = tables[k];
    const OrbitTable& dst = tables[k + 1];
    SparseMat M(orbit_labels(action, dst), orbit_labels(action, src));
    for (std::size_t row = 0; row < dst.representatives.size(); ++row) {
      const auto& y = dst.representatives[row];
      for (std::size_t i = 0; i < y.size(); ++i) {
        std::vector<int> face = y;
        face.erase(face.begin() + static_cast<long>(i));
        M.add(static_cast<int>(row), src.orbit(face), i % 2 == 0 ? 1 : -1);
      }
    }
    C.set_differential(static_cast<int>(k), M);
  }
  return C;
}

SparseMat indexed_matrix(const GroupAction& row_action, const OrbitTable& rows, const GroupAction& col_action,
                         const OrbitTable& cols) {
  return SparseMat(orbit_labels(row_action, rows), orbit_labels(col_action, cols));
}

}  // namespace

NormedComplex invariant_cochains(const GroupAction& action, int k_max, const std::string& name) {
  if (k_max < 0) throw InputError("k_max must be nonnegative");
  return cochains_from_tables(action, orbit_tables(action, k_max), name);
}

GroupAction left_multiplication(const FiniteGroupData& G, const std::vector<int>& acting,
                                const std::vector<int>& points) {
  GroupAction out;
  for (int p : points) out.point_names.push_back(G.names()[p]);
  for (int a : acting) {
    std::vector<int> row;
    for (int p : points) {
      auto it = std::find(points.begin(), points.end(), G.mul(a, p));
      if (it == points.end()) throw InputError("point set is not invariant under the action");
      row.push_back(static_cast<int>(it - points.begin()));
    }
    out.act.push_back(std::move(row));
  }
  return out;
}

NormedComplex finite_group_bounded_cochains(const FiniteGroupData& G, int k_max) {
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  return invariant_cochains(left_multiplication(G, all, all), k_max, "Cb");
}

ShapiroMaps shapiro_maps(const FiniteGroupData& G, const std::vector<int>& H_in, int k_max) {
  if (k_max < 0) throw InputError("k_max must be nonnegative");
  std::vector<int> H = H_in;
  std::sort(H.begin(), H.end());
  G.check_subgroup(H);
  std::vector<int> all(G.order());
  std::iota(all.begin(), all.end(), 0);
  const GroupAction small_action = left_multiplication(G, H, H);
  const GroupAction large_action = left_multiplication(G, H, all);
  const auto small_tables = orbit_tables(small_action, k_max);
  const auto large_tables = orbit_tables(large_action, k_max);

  ShapiroMaps out;
  out.small = std::make_shared<NormedComplex>(cochains_from_tables(small_action, small_tables, "H"));
  out.large = std::make_shared<NormedComplex>(cochains_from_tables(large_action, large_tables, "JxH"));

  // g = h·j with j = min(Hg), and the identity for H itself.
  std::vector<int> coset_rep(G.order());
  for (int g = 0; g < G.order(); ++g) {
    int rep = G.order();
    bool identity_coset = false;
    for (int h : H) {
      const int x = G.mul(h, g);
      rep = std::min(rep, x);
      if (x == G.identity()) identity_coset = true;
    }
    coset_rep[g] = identity_coset ? G.identity() : rep;
  }
  std::set<int> reps(coset_rep.begin(), coset_rep.end());
  out.coset_representatives.push_back(G.identity());
  for (int j : reps)
    if (j != G.identity()) out.coset_representatives.push_back(j);
  // H-coordinate of g as a position in the sorted list H.
  std::vector<int> h_part(G.order());
  for (int g = 0; g < G.order(); ++g) {
    const int h = G.mul(g, G.inverse(coset_rep[g]));
    h_part[g] = static_cast<int>(std::lower_bound(H.begin(), H.end(), h) - H.begin());
  }

  out.phi = CochainMap{out.small, out.large, 0, {}, {}};
  out.psi = CochainMap{out.large, out.small, 0, {}, {}};
  out.homotopy = CochainMap{out.large, out.large, -1, {}, {}};
  for (int k = 0; k <= k_max + 1; ++k) {
    const OrbitTable& S = small_tables[k];
    const OrbitTable& L = large_tables[k];
    SparseMat phi = indexed_matrix(large_action, L, small_action, S);
    for (std::size_t row = 0; row < L.representatives.size(); ++row) {
      std::vector<int> t;
      for (int x : L.representatives[row]) t.push_back(h_part[x]);
      phi.set(static_cast<int>(row), S.orbit(t), 1);
    }
    SparseMat psi = indexed_matrix(small_action, S, large_action, L);
    for (std::size_t row = 0; row < S.representatives.size(); ++row) {
      std::vector<int> t;
      for (int p : S.representatives[row]) t.push_back(H[p]);
      psi.set(static_cast<int>(row), L.orbit(t), 1);
    }
    out.phi.components[k] = relabeled(phi, out.large->basis(k), out.small->basis(k));
    out.psi.components[k] = relabeled(psi, out.small->basis(k), out.large->basis(k));
    out.phi.declared_norm_bound[k] = 1;
    out.psi.declared_norm_bound[k] = 1;
    if (k == 0) continue;
    // (hf)(x_0..x_{k−1}) = Σ_j (−1)^j f(x_0..x_j, h_j..h_{k−1}).
    const OrbitTable& below = large_tables[k - 1];
    SparseMat h = indexed_matrix(large_action, below, large_action, L);
    for (std::size_t row = 0; row < below.representatives.size(); ++row) {
      const auto& x = below.representatives[row];
      for (int j = 0; j < k; ++j) {
        std::vector<int> t(x.begin(), x.begin() + j + 1);
        for (int i = j; i < k; ++i) t.push_back(H[h_part[x[i]]]);
        h.add(static_cast<int>(row), L.orbit(t), j % 2 == 0 ? 1 : -1);
      }
    }
    out.homotopy.components[k] = relabeled(h, out.large->basis(k - 1), out.large->basis(k));
    out.homotopy.declared_norm_bound[k] = k;
  }
  return out;
}

CochainMap alternating_projection(int s_size, int k) {
  if (s_size < 1) throw InputError("S must be nonempty");
  if (k < 0) throw InputError("degree must be nonnegative");
  GroupAction trivial;
  for (int s = 0; s < s_size; ++s) trivial.point_names.push_back("s" + std::to_string(s));
  std::vector<int> id(s_size);
  std::iota(id.begin(), id.end(), 0);
  trivial.act.push_back(id);
  const auto tables = orbit_tables(trivial, k);
  auto C = std::make_shared<NormedComplex>(cochains_from_tables(trivial, tables, "S"));
  CochainMap out{C, C, 0, {}, {}};
  for (int d = 0; d <= k + 1; ++d) {
    const OrbitTable& T = tables[d];
    std::vector<int> perm(d + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::pair<std::vector<int>, int>> perms;
    do {
      int inversions = 0;
      for (int a = 0; a <= d; ++a)
        for (int b = a + 1; b <= d; ++b)
          if (perm[a] > perm[b]) ++inversions;
      perms.emplace_back(perm, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    const Rational weight = Rational(1, static_cast<long>(perms.size()));
    SparseMat M = indexed_matrix(trivial, T, trivial, T);
    for (std::size_t row = 0; row < T.representatives.size(); ++row) {
      const auto& s = T.representatives[row];
      for (const auto& [sigma, sign] : perms) {
        std::vector<int> t(d + 1);
        for (int i = 0; i <= d; ++i) t[i] = s[sigma[i]];
        M.add(static_cast<int>(row), T.orbit(t), weight * sign);
      }
    }
    out.components[d] = relabeled(M, C->basis(d), C->basis(d));
    out.declared_norm_bound[d] = 1;
  }
  return out;
}

std::vector<ShapiroDegree> check_shapiro(const ShapiroMaps& maps, int k_max) {
  std::vector<ShapiroDegree> out;
  const NormedComplex& L = *maps.large;
  for (int k = 0; k <= k_max; ++k) {
    ShapiroDegree d;
    d.k = k;
    d.phi_norm = maps.phi.measured_norm(k);
    d.psi_norm = maps.psi.measured_norm(k);
    d.homotopy_norm = maps.homotopy.measured_norm(k);
    d.retraction = maps.psi.component(k) * maps.phi.component(k) == SparseMat::identity(maps.small->basis(k));
    SparseMat dh_hd = maps.homotopy.component(k + 1) * L.differential(k);
    if (k >= 1) dh_hd = dh_hd + L.differential(k - 1) * maps.homotopy.component(k);
    d.homotopy = dh_hd == maps.phi.component(k) * maps.psi.component(k) - SparseMat::identity(L.basis(k));
    out.push_back(d);
  }
  return out;
}

}  // namespace ubckit
