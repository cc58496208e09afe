#include "ubckit/sparse.hpp"

#include "ubckit/errors.hpp"

#include <algorithm>

namespace ubckit {

SparseVec::SparseVec(std::initializer_list<std::pair<const std::string, Rational>> init) {
  for (const auto& [label, value] : init) add(label, value);
}

Rational SparseVec::get(const std::string& label) const {
  auto it = entries_.find(label);
  return it == entries_.end() ? Rational(0) : it->second;
}

void SparseVec::set(const std::string& label, const Rational& value) {
  if (value == 0)
    entries_.erase(label);
  else
    entries_[label] = value;
}

void SparseVec::add(const std::string& label, const Rational& value) {
  if (value == 0) return;
  auto [it, inserted] = entries_.try_emplace(label, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

Rational SparseVec::l1_norm() const {
  Rational sum = 0;
  for (const auto& [label, value] : entries_) sum += abs_value(value);
  return sum;
}

Rational SparseVec::linf_norm() const {
  Rational best = 0;
  for (const auto& [label, value] : entries_) best = std::max(best, abs_value(value));
  return best;
}

SparseVec SparseVec::scaled(const Rational& factor) const {
  SparseVec out;
  if (factor == 0) return out;
  for (const auto& [label, value] : entries_) out.entries_.emplace(label, value * factor);
  return out;
}

SparseVec& SparseVec::operator+=(const SparseVec& other) {
  for (const auto& [label, value] : other.entries_) add(label, value);
  return *this;
}

SparseVec& SparseVec::operator-=(const SparseVec& other) {
  for (const auto& [label, value] : other.entries_) add(label, -value);
  return *this;
}

SparseMat::SparseMat(std::vector<std::string> row_labels, std::vector<std::string> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)), columns_(col_labels_.size()) {
  rebuild_index();
}

void SparseMat::rebuild_index() {
  row_index_.clear();
  col_index_.clear();
  row_index_.reserve(row_labels_.size());
  col_index_.reserve(col_labels_.size());
  for (int i = 0; i < rows(); ++i)
    if (!row_index_.emplace(row_labels_[i], i).second)
      throw InputError("duplicate row label '" + row_labels_[i] + "'");
  for (int j = 0; j < cols(); ++j)
    if (!col_index_.emplace(col_labels_[j], j).second)
      throw InputError("duplicate column label '" + col_labels_[j] + "'");
}

SparseMat SparseMat::identity(const std::vector<std::string>& labels) {
  SparseMat out(labels, labels);
  for (int i = 0; i < out.rows(); ++i) out.columns_[i].push_back({i, Rational(1)});
  return out;
}

std::optional<int> SparseMat::row_index(const std::string& label) const {
  auto it = row_index_.find(label);
  if (it == row_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> SparseMat::col_index(const std::string& label) const {
  auto it = col_index_.find(label);
  if (it == col_index_.end()) return std::nullopt;
  return it->second;
}

namespace {

auto find_row(std::vector<MatrixEntry>& column, int row) {
  return std::lower_bound(column.begin(), column.end(), row,
                          [](const MatrixEntry& e, int r) { return e.row < r; });
}

}  // namespace

Rational SparseMat::at(int row, int col) const {
  const auto& column = columns_.at(col);
  auto it = std::lower_bound(column.begin(), column.end(), row,
                             [](const MatrixEntry& e, int r) { return e.row < r; });
  if (it != column.end() && it->row == row) return it->value;
  return 0;
}

void SparseMat::set(int row, int col, const Rational& value) {
  if (row < 0 || row >= rows() || col < 0 || col >= cols()) throw InputError("matrix index out of range");
  auto& column = columns_[col];
  auto it = find_row(column, row);
  if (it != column.end() && it->row == row) {
    if (value == 0)
      column.erase(it);
    else
      it->value = value;
  } else if (value != 0) {
    column.insert(it, MatrixEntry{row, value});
  }
}

void SparseMat::add(int row, int col, const Rational& value) {
  if (value == 0) return;
  if (row < 0 || row >= rows() || col < 0 || col >= cols()) throw InputError("matrix index out of range");
  auto& column = columns_[col];
  auto it = find_row(column, row);
  if (it != column.end() && it->row == row) {
    it->value += value;
    if (it->value == 0) column.erase(it);
  } else {
    column.insert(it, MatrixEntry{row, value});
  }
}

void SparseMat::set(const std::string& row, const std::string& col, const Rational& value) {
  auto r = row_index(row);
  auto c = col_index(col);
  if (!r) throw InputError("unknown row label '" + row + "'");
  if (!c) throw InputError("unknown column label '" + col + "'");
  set(*r, *c, value);
}

std::size_t SparseMat::nonzeros() const {
  std::size_t n = 0;
  for (const auto& column : columns_) n += column.size();
  return n;
}

std::optional<std::tuple<int, int, Rational>> SparseMat::first_nonzero() const {
  for (int j = 0; j < cols(); ++j)
    if (!columns_[j].empty()) return std::make_tuple(columns_[j].front().row, j, columns_[j].front().value);
  return std::nullopt;
}

SparseVec SparseMat::apply(const SparseVec& x) const {
  std::vector<Rational> acc(rows());
  for (const auto& [label, value] : x) {
    auto j = col_index(label);
    if (!j) throw InputError("vector label '" + label + "' is not a column of the matrix");
    for (const auto& e : columns_[*j]) acc[e.row] += e.value * value;
  }
  return from_dense(acc, row_labels_);
}

std::vector<Rational> SparseMat::apply(std::span<const Rational> x) const {
  std::vector<Rational> acc(rows());
  for (int j = 0; j < cols(); ++j) {
    if (x[j] == 0) continue;
    for (const auto& e : columns_[j]) acc[e.row] += e.value * x[j];
  }
  return acc;
}

std::vector<Rational> SparseMat::apply_transpose(std::span<const Rational> y) const {
  std::vector<Rational> out(cols());
  for (int j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j])
      if (y[e.row] != 0) out[j] += e.value * y[e.row];
  return out;
}

SparseMat SparseMat::transpose() const {
  SparseMat out(col_labels_, row_labels_);
  for (int j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) out.columns_[e.row].push_back({j, e.value});
  return out;
}

std::vector<std::vector<Rational>> SparseMat::dense() const {
  std::vector<std::vector<Rational>> out(rows(), std::vector<Rational>(cols()));
  for (int j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) out[e.row][j] = e.value;
  return out;
}

SparseMat operator*(const SparseMat& lhs, const SparseMat& rhs) {
  if (lhs.col_labels_ != rhs.row_labels_)
    throw InputError("matrix product: inner label lists differ");
  SparseMat out(lhs.row_labels_, rhs.col_labels_);
  std::vector<Rational> acc(lhs.rows());
  std::vector<int> touched;
  std::vector<char> mark(lhs.rows(), 0);
  for (int j = 0; j < rhs.cols(); ++j) {
    touched.clear();
    for (const auto& r : rhs.columns_[j])
      for (const auto& l : lhs.columns_[r.row]) {
        if (!mark[l.row]) {
          mark[l.row] = 1;
          touched.push_back(l.row);
        }
        acc[l.row] += l.value * r.value;
      }
    std::sort(touched.begin(), touched.end());
    for (int i : touched) {
      if (acc[i] != 0) out.columns_[j].push_back({i, acc[i]});
      acc[i] = 0;
      mark[i] = 0;
    }
  }
  return out;
}

namespace {

SparseMat combine(const SparseMat& lhs, const SparseMat& rhs, const Rational& sign) {
  if (lhs.row_labels() != rhs.row_labels() || lhs.col_labels() != rhs.col_labels())
    throw InputError("matrix sum: label lists differ");
  SparseMat out = lhs;
  for (int j = 0; j < rhs.cols(); ++j)
    for (const auto& e : rhs.column(j)) out.add(e.row, j, sign * e.value);
  return out;
}

}  // namespace

SparseMat operator+(const SparseMat& lhs, const SparseMat& rhs) { return combine(lhs, rhs, 1); }
SparseMat operator-(const SparseMat& lhs, const SparseMat& rhs) { return combine(lhs, rhs, -1); }

SparseMat SparseMat::scaled(const Rational& factor) const {
  SparseMat out(row_labels_, col_labels_);
  if (factor == 0) return out;
  for (int j = 0; j < cols(); ++j)
    for (const auto& e : columns_[j]) out.columns_[j].push_back({e.row, e.value * factor});
  return out;
}

bool operator==(const SparseMat& lhs, const SparseMat& rhs) {
  if (lhs.row_labels_ != rhs.row_labels_ || lhs.col_labels_ != rhs.col_labels_) return false;
  for (int j = 0; j < lhs.cols(); ++j) {
    const auto& a = lhs.columns_[j];
    const auto& b = rhs.columns_[j];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].row != b[k].row || a[k].value != b[k].value) return false;
  }
  return true;
}

std::vector<Rational> to_dense(const SparseVec& v, const std::vector<std::string>& labels) {
  std::unordered_map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) index.emplace(labels[i], i);
  std::vector<Rational> out(labels.size());
  for (const auto& [label, value] : v) {
    auto it = index.find(label);
    if (it == index.end()) throw InputError("label '" + label + "' is not in the basis");
    out[it->second] = value;
  }
  return out;
}

SparseVec from_dense(std::span<const Rational> values, const std::vector<std::string>& labels) {
  SparseVec out;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) out.set(labels[i], values[i]);
  return out;
}

}  // namespace ubckit
