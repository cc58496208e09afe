#include "ubckit/complex.hpp"

#include "ubckit/linalg.hpp"
#include "ubckit/rng.hpp"

#include <algorithm>
#include <set>

namespace ubckit {

std::string to_string(Direction direction) { return direction == Direction::Chain ? "chain" : "cochain"; }
std::string to_string(NormFlavor flavor) { return flavor == NormFlavor::L1 ? "l1" : "linf"; }

NormedComplex::NormedComplex(std::string name, Direction direction, NormFlavor flavor)
    : name_(std::move(name)), direction_(direction), flavor_(flavor) {}

void NormedComplex::set_basis(int k, std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw InputError("duplicate basis label in degree " + std::to_string(k));
  for (const auto& l : labels)
    if (l.empty()) throw InputError("empty basis label in degree " + std::to_string(k));
  bases_[k] = std::move(labels);
  // Differentials touching degree k no longer match; re-validate lazily.
  for (int key : {k, direction_ == Direction::Chain ? k + 1 : k - 1}) {
    auto it = maps_.find(key);
    if (it == maps_.end()) continue;
    SparseMat old = it->second;
    maps_.erase(it);
    set_differential(key, old);
  }
}

int NormedComplex::min_degree() const { return bases_.empty() ? 0 : bases_.begin()->first; }
int NormedComplex::max_degree() const { return bases_.empty() ? -1 : bases_.rbegin()->first; }

const std::vector<std::string>& NormedComplex::basis(int k) const {
  static const std::vector<std::string> none;
  auto it = bases_.find(k);
  return it == bases_.end() ? none : it->second;
}

bool NormedComplex::contains(int k, const std::string& label) const {
  const auto& b = basis(k);
  return std::binary_search(b.begin(), b.end(), label);
}

SparseMat relabeled(const SparseMat& m, const std::vector<std::string>& rows, const std::vector<std::string>& cols) {
  if (m.row_labels() == rows && m.col_labels() == cols) return m;
  SparseMat out(rows, cols);
  for (int j = 0; j < m.cols(); ++j) {
    const auto c = out.col_index(m.col_labels()[j]);
    for (const auto& e : m.column(j)) {
      const auto r = out.row_index(m.row_labels()[e.row]);
      if (!r || !c)
        throw InputError("entry (" + m.row_labels()[e.row] + ", " + m.col_labels()[j] + ") is outside the basis");
      out.set(*r, *c, e.value);
    }
  }
  return out;
}

void NormedComplex::set_differential(int k, const SparseMat& matrix) {
  const auto& rows = basis(target_degree(k));
  const auto& cols = basis(k);
  auto same_set = [](std::vector<std::string> a, const std::vector<std::string>& sorted) {
    std::sort(a.begin(), a.end());
    return a == sorted;
  };
  if (!same_set(matrix.row_labels(), rows) || !same_set(matrix.col_labels(), cols))
    throw InputError("differential " + std::to_string(k) + " does not match the declared bases");
  if (matrix.is_zero()) {
    maps_.erase(k);
    return;
  }
  maps_[k] = relabeled(matrix, rows, cols);
}

SparseMat NormedComplex::differential(int k) const {
  auto it = maps_.find(k);
  if (it != maps_.end()) return it->second;
  return SparseMat(basis(target_degree(k)), basis(k));
}

SparseMat NormedComplex::into(int k) const {
  return differential(direction_ == Direction::Chain ? k + 1 : k - 1);
}

bool operator==(const NormedComplex& lhs, const NormedComplex& rhs) {
  if (lhs.name_ != rhs.name_ || lhs.direction_ != rhs.direction_ || lhs.flavor_ != rhs.flavor_) return false;
  if (lhs.empty() || rhs.empty()) return lhs.empty() == rhs.empty();
  // Missing degrees and missing maps count as empty and zero.
  const int lo = std::min(lhs.min_degree(), rhs.min_degree()), hi = std::max(lhs.max_degree(), rhs.max_degree());
  for (int k = lo; k <= hi; ++k)
    if (lhs.basis(k) != rhs.basis(k) || !(lhs.differential(k) == rhs.differential(k))) return false;
  return true;
}

void validate_complex(const NormedComplex& C) {
  if (C.empty()) return;
  for (int k = C.min_degree(); k <= C.max_degree(); ++k) {
    const SparseMat first = C.differential(k);
    const SparseMat second = C.differential(C.target_degree(k));
    const SparseMat composite = second * first;
    if (auto nz = composite.first_nonzero()) {
      const auto& [r, c, v] = *nz;
      throw NonComplexError(k, composite.row_labels()[r], composite.col_labels()[c], to_string(v));
    }
  }
}

FillResult fill_norm(const NormedComplex& C, int k, const SparseVec& b) {
  for (const auto& [label, value] : b)
    if (!C.contains(k, label)) throw InputError("label '" + label + "' is not in degree " + std::to_string(k));
  return solve_min_norm(C.into(k), b, C.fill_norm_kind());
}

Rational homology_seminorm(const NormedComplex& C, int k, const SparseVec& z) {
  for (const auto& [label, value] : z)
    if (!C.contains(k, label)) throw InputError("label '" + label + "' is not in degree " + std::to_string(k));
  if (!C.out_of(k).apply(z).is_zero()) throw NotACycleError("chain in degree " + std::to_string(k) + " is not a cycle");
  // [I | D](u, c) = z with only u penalized, so u = z − Dc.
  const SparseMat D = C.into(k);
  const auto& rows = C.basis(k);
  std::vector<std::string> cols;
  for (std::size_t i = 0; i < rows.size(); ++i) cols.push_back("u" + std::to_string(i));
  for (int j = 0; j < D.cols(); ++j) cols.push_back("c" + std::to_string(j));
  SparseMat M(rows, cols);
  std::vector<char> penalized(cols.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    M.set(static_cast<int>(i), static_cast<int>(i), 1);
    penalized[i] = 1;
  }
  const int offset = static_cast<int>(rows.size());
  for (int j = 0; j < D.cols(); ++j)
    for (const auto& e : D.column(j)) M.set(e.row, offset + j, e.value);
  const FillResult r = solve_min_norm(M, z, C.fill_norm_kind(), penalized);
  if (!r.optimal()) throw InternalError("seminorm problem is always feasible");
  return r.objective;
}

int homology_dimension(const NormedComplex& C, int k) {
  return C.dimension(k) - rank(C.out_of(k)) - rank(C.into(k));
}

int image_dimension(const NormedComplex& C, int k) { return rank(C.into(k)); }

namespace {

constexpr std::uint64_t kMaxSubsets = 500000;

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t out = 1;
  for (int i = 1; i <= k; ++i) {
    out = out * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    if (out > (1ULL << 50)) return out;
  }
  return out;
}

template <class Visit>
void for_each_subset(int n, int size, Visit&& visit) {
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  if (size > n) return;
  while (true) {
    visit(idx);
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Scales to unit norm with the first nonzero coordinate positive.
std::vector<Rational> normalize(std::vector<Rational> b, NormFlavor flavor) {
  Rational norm = 0;
  for (const auto& v : b) norm = flavor == NormFlavor::L1 ? norm + abs_value(v) : std::max(norm, abs_value(v));
  auto lead = std::find_if(b.begin(), b.end(), [](const Rational& v) { return v != 0; });
  if (*lead < 0) norm = -norm;
  for (auto& v : b) v /= norm;
  return b;
}

std::vector<Rational> times(const DenseMatrix& B, const std::vector<Rational>& x) {
  std::vector<Rational> out(B.size());
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += B[i][j] * x[j];
  return out;
}

std::set<std::vector<Rational>> unit_ball_vertices(const DenseMatrix& B, int m, int r, NormFlavor flavor) {
  std::set<std::vector<Rational>> found;
  if (flavor == NormFlavor::L1) {
    // Minimal-support vectors of im B: fix r − 1 coordinates to zero.
    for_each_subset(m, r - 1, [&](const std::vector<int>& zeros) {
      DenseMatrix sub;
      for (int i : zeros) sub.push_back(B[i]);
      const auto kernel = kernel_basis(sub, r);
      if (kernel.size() != 1) return;
      found.insert(normalize(times(B, kernel[0]), flavor));
    });
    return found;
  }
  // Saturate r coordinates at ±1 and keep the points inside the cube.
  for_each_subset(m, r, [&](const std::vector<int>& tight) {
    DenseMatrix sub;
    for (int i : tight) sub.push_back(B[i]);
    if (row_reduce(sub, r).rank() != r) return;
    for (std::uint64_t signs = 0; signs < (1ULL << (r - 1)); ++signs) {
      std::vector<Rational> s(r, Rational(1));
      for (int t = 1; t < r; ++t)
        if (signs & (1ULL << (t - 1))) s[t] = -1;
      auto x = solve_square(sub, s);
      if (!x) return;
      std::vector<Rational> b = times(B, *x);
      if (std::all_of(b.begin(), b.end(), [](const Rational& v) { return abs_value(v) <= 1; }))
        found.insert(normalize(std::move(b), flavor));
    }
  });
  return found;
}

std::uint64_t exact_workload(int m, int r, NormFlavor flavor) {
  return flavor == NormFlavor::L1 ? binomial(m, r - 1) : binomial(m, r);
}

void record(ConstantEstimate& est, Witness w) {
  const Rational ratio = w.ratio();
  est.witnesses.push_back(std::move(w));
  if (!est.best || ratio > est.value) {
    est.value = ratio;
    est.best = est.witnesses.size() - 1;
  }
}

ConstantEstimate exact_constant(const NormedComplex& C, const SparseMat& D) {
  ConstantEstimate est;
  est.mode = EstimateMode::ExactOnFiniteComplex;
  est.value = 0;
  const std::vector<int> independent = independent_columns(D);
  const int r = static_cast<int>(independent.size());
  if (r == 0) return est;
  if (r > kExactImageDimensionCap)
    throw InputError("exact mode needs image dimension at most " + std::to_string(kExactImageDimensionCap) +
                     ", got " + std::to_string(r));
  const int m = D.rows();
  if (exact_workload(m, r, C.flavor()) > kMaxSubsets)
    throw InputError("exact vertex enumeration too large for this complex; use sampled mode");
  DenseMatrix B(m, std::vector<Rational>(r));
  for (int t = 0; t < r; ++t)
    for (const auto& e : D.column(independent[t])) B[e.row][t] = e.value;

  for (const auto& vertex : unit_ball_vertices(B, m, r, C.flavor())) {
    const SparseVec b = from_dense(vertex, D.row_labels());
    const FillResult fill = solve_min_norm(D, b, C.fill_norm_kind());
    if (!fill.optimal()) throw InternalError("vertex of the image is not fillable");
    record(est, Witness{b, C.norm(b), fill.objective});
  }
  return est;
}

ConstantEstimate sampled_constant(const NormedComplex& C, const SparseMat& D, const UbcOptions& options) {
  ConstantEstimate est;
  est.mode = EstimateMode::SampledLowerBound;
  est.value = 0;
  const int n = D.cols();
  if (n == 0) return est;
  const int support = std::min(options.support, n);
  if (support < 1) throw InputError("sample support must be positive");
  for (int trial = 0; trial < options.samples; ++trial) {
    XorShift64Star rng = stream_for(options.seed, static_cast<std::uint64_t>(trial));
    std::vector<int> pool(n);
    for (int j = 0; j < n; ++j) pool[j] = j;
    SparseVec c;
    for (int s = 0; s < support; ++s) {
      const int pick = s + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - s)));
      std::swap(pool[s], pool[pick]);
      c.set(D.col_labels()[pool[s]], Rational(rng.nonzero_coefficient(3)));
    }
    const SparseVec b = D.apply(c);
    if (b.is_zero()) continue;
    const FillResult fill = solve_min_norm(D, b, C.fill_norm_kind());
    if (!fill.optimal()) throw InternalError("boundary of a sampled chain is not fillable");
    record(est, Witness{b, C.norm(b), fill.objective});
  }
  if (!est.best) est.value = 0;
  return est;
}

}  // namespace

ConstantEstimate ubc_constant(const NormedComplex& C, int k, const UbcOptions& options) {
  const SparseMat D = C.into(k);
  switch (options.mode) {
    case UbcMode::Exact:
      return exact_constant(C, D);
    case UbcMode::Sampled:
      return sampled_constant(C, D, options);
    case UbcMode::Auto: {
      const int r = rank(D);
      if (r <= kExactImageDimensionCap && exact_workload(D.rows(), r, C.flavor()) <= kMaxSubsets)
        return exact_constant(C, D);
      return sampled_constant(C, D, options);
    }
  }
  throw InternalError("unknown UBC mode");
}

ConstantEstimate uubc_constant(const std::vector<NormedComplex>& family, int k, const UbcOptions& options) {
  if (family.empty()) throw EmptyFamilyError();
  ConstantEstimate out;
  out.value = 0;
  for (const auto& C : family) {
    ConstantEstimate est = ubc_constant(C, k, options);
    if (est.mode == EstimateMode::SampledLowerBound) out.mode = EstimateMode::SampledLowerBound;
    if (est.best) record(out, est.witnesses[*est.best]);
  }
  return out;
}

Rational inherited_ubc_constant(const Rational& norm_f, const Rational& norm_g, const Rational& K,
                                const Rational& norm_h) {
  if (norm_f < 0 || norm_g < 0 || K < 0 || norm_h < 0) throw InputError("norms and constants must be nonnegative");
  return norm_f * norm_g * K + norm_h;
}

NormedComplex bounded_product(const std::vector<NormedComplex>& family, int k_max) {
  if (family.empty()) throw EmptyFamilyError();
  const Direction direction = family.front().direction();
  int lo = k_max;
  for (const auto& C : family) {
    if (C.direction() != direction) throw InputError("bounded product needs members of one direction");
    if (C.flavor() != NormFlavor::Linf) throw InputError("bounded product members must carry the sup norm");
    if (!C.empty()) lo = std::min(lo, C.min_degree());
  }
  auto prefixed = [](std::size_t i, const std::string& label) { return "p" + std::to_string(i) + "_" + label; };
  NormedComplex out("product", direction, NormFlavor::Linf);
  for (int k = lo; k <= k_max; ++k) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < family.size(); ++i)
      for (const auto& l : family[i].basis(k)) labels.push_back(prefixed(i, l));
    out.set_basis(k, labels);
  }
  for (int k = lo; k <= k_max; ++k) {
    const int t = out.target_degree(k);
    if (t < lo || t > k_max) continue;
    SparseMat M(out.basis(t), out.basis(k));
    for (std::size_t i = 0; i < family.size(); ++i) {
      const SparseMat d = family[i].differential(k);
      for (int j = 0; j < d.cols(); ++j) {
        const int col = *M.col_index(prefixed(i, d.col_labels()[j]));
        for (const auto& e : d.column(j)) M.set(*M.row_index(prefixed(i, d.row_labels()[e.row])), col, e.value);
      }
    }
    out.set_differential(k, M);
  }
  return out;
}

NormedComplex dual_complex(const NormedComplex& C) {
  const bool to_cochain = C.direction() == Direction::Chain;
  NormedComplex out(C.name() + "_dual", to_cochain ? Direction::Cochain : Direction::Chain,
                    to_cochain ? NormFlavor::Linf : NormFlavor::L1);
  if (C.empty()) return out;
  for (int k = C.min_degree(); k <= C.max_degree(); ++k) out.set_basis(k, C.basis(k));
  for (const auto& [k, d] : C.differentials()) out.set_differential(C.target_degree(k), d.transpose());
  return out;
}

SparseMat CochainMap::component(int k) const {
  auto it = components.find(k);
  if (it != components.end()) return it->second;
  return SparseMat(target->basis(k + shift), source->basis(k));
}

Rational CochainMap::measured_norm(int k) const {
  return operator_norm(component(k), source->flavor() == NormFlavor::L1 ? OperatorNormKind::L1toL1
                                                                        : OperatorNormKind::LinfToLinf);
}

bool CochainMap::commutes() const {
  if (source->direction() != target->direction()) return false;
  if (source->empty()) return true;
  for (int k = source->min_degree(); k <= source->max_degree(); ++k) {
    const int t = source->target_degree(k);
    if (t < source->min_degree() || t > source->max_degree()) continue;
    if (target->differential(k) * component(k) != component(t) * source->differential(k)) return false;
  }
  return true;
}

bool CochainMap::within_declared_bounds() const {
  for (const auto& [k, bound] : declared_norm_bound)
    if (measured_norm(k) > bound) return false;
  return true;
}

}  // namespace ubckit
