#pragma once

#include "ubckit/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace ubckit {

/// A finitely supported vector indexed by basis labels. Zero coefficients
/// are never stored.
class SparseVec {
 public:
  using Storage = std::map<std::string, Rational>;

  SparseVec() = default;
  SparseVec(std::initializer_list<std::pair<const std::string, Rational>> init);

  Rational get(const std::string& label) const;
  void set(const std::string& label, const Rational& value);
  void add(const std::string& label, const Rational& value);

  bool is_zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const Storage& entries() const { return entries_; }
  Storage::const_iterator begin() const { return entries_.begin(); }
  Storage::const_iterator end() const { return entries_.end(); }

  Rational l1_norm() const;
  Rational linf_norm() const;

  SparseVec scaled(const Rational& factor) const;
  SparseVec& operator+=(const SparseVec& other);
  SparseVec& operator-=(const SparseVec& other);
  friend SparseVec operator+(SparseVec lhs, const SparseVec& rhs) { return lhs += rhs; }
  friend SparseVec operator-(SparseVec lhs, const SparseVec& rhs) { return lhs -= rhs; }
  friend bool operator==(const SparseVec&, const SparseVec&) = default;

 private:
  Storage entries_;
};

struct MatrixEntry {
  int row;
  Rational value;
};

/// Sparse rational matrix with labeled rows and columns, stored by column.
/// Row and column labels are unique; entries are never zero.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(std::vector<std::string> row_labels, std::vector<std::string> col_labels);

  static SparseMat identity(const std::vector<std::string>& labels);

  int rows() const { return static_cast<int>(row_labels_.size()); }
  int cols() const { return static_cast<int>(col_labels_.size()); }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  std::optional<int> row_index(const std::string& label) const;
  std::optional<int> col_index(const std::string& label) const;

  Rational at(int row, int col) const;
  void set(int row, int col, const Rational& value);
  void add(int row, int col, const Rational& value);
  void set(const std::string& row, const std::string& col, const Rational& value);

  std::span<const MatrixEntry> column(int col) const { return columns_[col]; }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  /// First nonzero entry in column-major order, as (row, col, value).
  std::optional<std::tuple<int, int, Rational>> first_nonzero() const;

  SparseVec apply(const SparseVec& x) const;
  std::vector<Rational> apply(std::span<const Rational> x) const;
  /// y ↦ Mᵀy for a dense vector indexed like the rows.
  std::vector<Rational> apply_transpose(std::span<const Rational> y) const;

  SparseMat transpose() const;

  /// Dense row-major copy; used by the exact elimination routines.
  std::vector<std::vector<Rational>> dense() const;

  friend SparseMat operator*(const SparseMat& lhs, const SparseMat& rhs);
  friend SparseMat operator+(const SparseMat& lhs, const SparseMat& rhs);
  friend SparseMat operator-(const SparseMat& lhs, const SparseMat& rhs);
  SparseMat scaled(const Rational& factor) const;
  friend bool operator==(const SparseMat& lhs, const SparseMat& rhs);

 private:
  void rebuild_index();

  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::unordered_map<std::string, int> row_index_;
  std::unordered_map<std::string, int> col_index_;
  std::vector<std::vector<MatrixEntry>> columns_;
};

/// Dense index-based vector for a label list.
std::vector<Rational> to_dense(const SparseVec& v, const std::vector<std::string>& labels);
SparseVec from_dense(std::span<const Rational> values, const std::vector<std::string>& labels);

}  // namespace ubckit
