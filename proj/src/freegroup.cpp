#include "ubckit/freegroup.hpp"

#include "ubckit/errors.hpp"
#include "ubckit/lp.hpp"
#include "ubckit/rng.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_map>

namespace ubckit {

Word::Word(std::vector<int> letters) {
  for (int x : letters) {
    if (x < 0) throw InputError("negative letter code");
    if (!letters_.empty() && (letters_.back() ^ 1) == x)
      letters_.pop_back();
    else
      letters_.push_back(x);
  }
}

Word Word::parse(const std::string& text) {
  if (text == "1") return Word();
  if (text.empty()) throw InputError("empty word");
  std::vector<int> letters;
  for (char ch : text) {
    if (ch >= 'a' && ch <= 'z')
      letters.push_back(2 * (ch - 'a'));
    else if (ch >= 'A' && ch <= 'Z')
      letters.push_back(2 * (ch - 'A') + 1);
    else
      throw InputError("bad letter '" + std::string(1, ch) + "' in word '" + text + "'");
  }
  Word w(letters);
  if (w.length() != static_cast<int>(letters.size())) throw InputError("word '" + text + "' is not freely reduced");
  return w;
}

std::string Word::str() const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int x : letters_) out += static_cast<char>((x % 2 == 0 ? 'a' : 'A') + x / 2);
  return out;
}

Word Word::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& x : out) x ^= 1;
  return Word(out);
}

Word operator*(const Word& lhs, const Word& rhs) {
  std::vector<int> all = lhs.letters_;
  all.insert(all.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(all);
}

bool operator<(const Word& lhs, const Word& rhs) {
  if (lhs.length() != rhs.length()) return lhs.length() < rhs.length();
  return lhs.letters_ < rhs.letters_;
}

std::vector<Word> ball(int rank, int radius) {
  if (rank < 1 || rank > 26) throw InputError("rank must be between 1 and 26");
  if (radius < 0) throw InputError("radius must be nonnegative");
  std::vector<Word> out{Word()};
  std::vector<Word> layer{Word()};
  for (int len = 1; len <= radius; ++len) {
    std::vector<Word> next;
    for (const auto& w : layer)
      for (int x = 0; x < 2 * rank; ++x) {
        if (!w.is_identity() && (w.letters().back() ^ 1) == x) continue;
        std::vector<int> letters = w.letters();
        letters.push_back(x);
        next.emplace_back(letters);
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

std::string bar_label(const BarTuple& tuple) {
  if (tuple.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += '|';
    out += tuple[i].str();
  }
  return out;
}

namespace {

void extend(const std::vector<Word>& letters, int degree, int radius, BarTuple& tuple,
            std::vector<Word>& suffixes, std::vector<BarTuple>& out) {
  if (static_cast<int>(tuple.size()) == degree) {
    out.push_back(tuple);
    return;
  }
  for (const auto& g : letters) {
    std::vector<Word> next;
    bool ok = true;
    for (const auto& s : suffixes) {
      Word p = s * g;
      if (p.length() > radius) {
        ok = false;
        break;
      }
      next.push_back(std::move(p));
    }
    if (!ok) continue;
    next.push_back(g);
    tuple.push_back(g);
    extend(letters, degree, radius, tuple, next, out);
    tuple.pop_back();
  }
}

}  // namespace

std::vector<BarTuple> bar_basis(int rank, int degree, int radius) {
  if (degree < 0) throw InputError("negative bar degree");
  std::vector<Word> letters = ball(rank, radius);
  letters.erase(letters.begin());
  std::vector<BarTuple> out;
  BarTuple tuple;
  std::vector<Word> suffixes;
  extend(letters, degree, radius, tuple, suffixes, out);
  return out;
}

std::vector<std::pair<BarTuple, int>> bar_faces(const BarTuple& tuple) {
  std::vector<std::pair<BarTuple, int>> out;
  const int k = static_cast<int>(tuple.size());
  if (k == 0) return out;
  auto keep = [&](BarTuple face, int sign) {
    if (std::none_of(face.begin(), face.end(), [](const Word& w) { return w.is_identity(); }))
      out.emplace_back(std::move(face), sign);
  };
  keep(BarTuple(tuple.begin() + 1, tuple.end()), 1);
  for (int i = 1; i < k; ++i) {
    BarTuple face(tuple.begin(), tuple.begin() + (i - 1));
    face.push_back(tuple[i - 1] * tuple[i]);
    face.insert(face.end(), tuple.begin() + i + 1, tuple.end());
    keep(std::move(face), i % 2 == 0 ? 1 : -1);
  }
  keep(BarTuple(tuple.begin(), tuple.end() - 1), k % 2 == 0 ? 1 : -1);
  return out;
}

namespace {

SparseMat bar_boundary_matrix(const std::vector<BarTuple>& source, const std::vector<BarTuple>& target) {
  std::vector<std::string> rows, cols;
  for (const auto& t : target) rows.push_back(bar_label(t));
  for (const auto& t : source) cols.push_back(bar_label(t));
  SparseMat M(rows, cols);
  for (std::size_t j = 0; j < source.size(); ++j)
    for (const auto& [face, sign] : bar_faces(source[j])) {
      const std::string label = bar_label(face);
      const auto r = M.row_index(label);
      if (!r) throw ClosureError(label);
      M.add(*r, static_cast<int>(j), sign);
    }
  return M;
}

}  // namespace

NormedComplex bar_complex(int rank, int k_max, int radius) {
  if (k_max < 1) throw InputError("bar complex needs k_max >= 1");
  NormedComplex C("bar_F" + std::to_string(rank) + "_L" + std::to_string(radius), Direction::Chain, NormFlavor::L1);
  std::vector<std::vector<BarTuple>> bases;
  for (int k = 0; k <= k_max; ++k) {
    bases.push_back(bar_basis(rank, k, radius));
    std::vector<std::string> labels;
    for (const auto& t : bases.back()) labels.push_back(bar_label(t));
    C.set_basis(k, labels);
  }
  for (int k = 1; k <= k_max; ++k) C.set_differential(k, bar_boundary_matrix(bases[k], bases[k - 1]));
  validate_complex(C);
  return C;
}

std::vector<ExperimentRecord> f2_experiment(const ExperimentConfig& config) {
  if (config.k < 2) throw InputError("f2 experiment needs k >= 2");
  if (config.l_cycle < 1) throw InputError("L_cycle must be at least 1");
  if (config.l_fill < config.l_cycle) throw InputError("L_fill must be at least L_cycle");
  if (config.trials < 0) throw InputError("trial count must be nonnegative");
  if (config.support < 1) throw InputError("support must be positive");
  if (config.threads < 1) throw InputError("thread count must be positive");

  const SparseMat D = bar_boundary_matrix(bar_basis(config.rank, config.k, config.l_fill),
                                          bar_basis(config.rank, config.k - 1, config.l_fill));
  std::vector<std::string> cycle_basis;
  for (const auto& t : bar_basis(config.rank, config.k, config.l_cycle)) cycle_basis.push_back(bar_label(t));
  const int n = static_cast<int>(cycle_basis.size());
  const int support = std::min(config.support, n);

  std::vector<ExperimentRecord> records(config.trials);
  auto run_trial = [&](int trial) {
    ExperimentRecord rec;
    rec.seed = config.seed;
    rec.trial = trial;
    rec.k = config.k;
    rec.l_cycle = config.l_cycle;
    rec.l_fill = config.l_fill;
    XorShift64Star rng = stream_for(config.seed, static_cast<std::uint64_t>(trial));
    std::vector<int> pool(n);
    for (int j = 0; j < n; ++j) pool[j] = j;
    SparseVec c;
    for (int s = 0; s < support; ++s) {
      const int pick = s + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - s)));
      std::swap(pool[s], pool[pick]);
      c.set(cycle_basis[pool[s]], Rational(rng.nonzero_coefficient(3)));
    }
    const SparseVec b = D.apply(c);
    rec.boundary_norm = b.l1_norm();
    const FillResult fill = solve_min_l1(D, b);
    rec.certificate_ok = verify_fill(D, b, fill, FillNorm::L1);
    rec.status = fill.status;
    if (fill.optimal()) {
      rec.fill_norm = fill.objective;
      rec.ratio = rec.boundary_norm == 0 ? Rational(0) : fill.objective / rec.boundary_norm;
    }
    rec.boundary = b;
    rec.filler = fill.solution;
    rec.certificate = fill.dual_certificate;
    if (!rec.certificate_ok) throw InternalError("experiment certificate failed to verify");
    records[trial] = std::move(rec);
  };

  if (config.threads == 1) {
    for (int t = 0; t < config.trials; ++t) run_trial(t);
    return records;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(config.threads);
  std::vector<std::thread> workers;
  for (int w = 0; w < config.threads; ++w)
    workers.emplace_back([&, w] {
      try {
        for (int t = next++; t < config.trials; t = next++) run_trial(t);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& w : workers) w.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return records;
}

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  out << kExperimentCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.seed << ',' << r.trial << ',' << r.k << ',' << r.l_cycle << ',' << r.l_fill << ','
        << to_string(r.boundary_norm) << ',' << (r.fill_norm ? to_string(*r.fill_norm) : "") << ','
        << (r.ratio ? to_string(*r.ratio) : "") << ',' << (r.status == FillStatus::Optimal ? "Optimal" : "Infeasible")
        << '\n';
  }
}

}  // namespace ubckit
