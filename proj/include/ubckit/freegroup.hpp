#pragma once

#include "ubckit/complex.hpp"
#include "ubckit/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ubckit {

/// Freely reduced word in a free group. Letter 2i is the generator a_i and
/// 2i+1 its inverse; comparing codes gives the order a < A < b < B < ...
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters);

  /// Parses "1" (identity) or letters a..z / A..Z (inverses upper case).
  static Word parse(const std::string& text);

  const std::vector<int>& letters() const { return letters_; }
  int length() const { return static_cast<int>(letters_.size()); }
  bool is_identity() const { return letters_.empty(); }
  std::string str() const;

  Word inverse() const;
  friend Word operator*(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  /// Shortlex.
  friend bool operator<(const Word& lhs, const Word& rhs);

 private:
  std::vector<int> letters_;
};

/// Every reduced word of length ≤ L over r generators, in shortlex order.
std::vector<Word> ball(int rank, int radius);

using BarTuple = std::vector<Word>;

/// Label of a bar tuple: words joined by '|', "1" for the empty tuple.
std::string bar_label(const BarTuple& tuple);

/// A face of a bar basis element left the truncated basis.
class ClosureError : public std::runtime_error {
 public:
  explicit ClosureError(const std::string& tuple)
      : std::runtime_error("bar face " + tuple + " lies outside the truncated basis"), tuple_(tuple) {}
  const std::string& tuple() const { return tuple_; }

 private:
  std::string tuple_;
};

/// Degree-k basis at radius L: k-tuples of nonidentity words in which every
/// contiguous product g_i⋯g_j has length ≤ L. Listed lexicographically by
/// shortlex entries.
std::vector<BarTuple> bar_basis(int rank, int degree, int radius);

/// Normalized inhomogeneous bar boundary of one tuple; faces containing the
/// identity are dropped.
std::vector<std::pair<BarTuple, int>> bar_faces(const BarTuple& tuple);

/// Truncated normalized bar complex C_*(F_r) in degrees 0..k_max, ℓ¹ norm,
/// no augmentation.
NormedComplex bar_complex(int rank, int k_max, int radius);

struct ExperimentConfig {
  std::uint64_t seed = 0;
  int rank = 2;
  int k = 2;
  int l_cycle = 2;
  int l_fill = 3;
  int trials = 50;
  int support = 8;
  int threads = 1;
};

struct ExperimentRecord {
  std::uint64_t seed = 0;
  int trial = 0;
  int k = 0;
  int l_cycle = 0;
  int l_fill = 0;
  Rational boundary_norm;
  FillStatus status = FillStatus::Optimal;
  std::optional<Rational> fill_norm;
  std::optional<Rational> ratio;
  bool certificate_ok = false;
  /// Kept in memory for re-verification; not part of the CSV.
  SparseVec boundary;
  SparseVec filler;
  SparseVec certificate;
};

/// Pseudorandom fillings in the truncated bar complex. Trial t draws from
/// stream_for(seed, t): `support` distinct degree-k tuples of the L_cycle
/// basis with coefficients in {−3..−1, 1..3}. Records come back in trial
/// order whatever the thread count.
std::vector<ExperimentRecord> f2_experiment(const ExperimentConfig& config);

inline constexpr const char* kExperimentCsvHeader = "seed,trial,k,L_cycle,L_fill,boundary_norm,fill_norm,ratio,status";

void write_experiment_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

}  // namespace ubckit
