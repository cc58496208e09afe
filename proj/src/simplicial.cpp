#include "ubckit/simplicial.hpp"

#include "ubckit/errors.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace ubckit {

void check_vertex_label(const std::string& label) {
  if (label.empty()) throw InputError("empty vertex label");
  for (char ch : label)
    if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_' && ch != '-')
      throw InputError("vertex label '" + label + "' may only use [A-Za-z0-9_-]");
}

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     const std::vector<std::vector<std::string>>& facets)
    : vertices_(std::move(vertices)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    check_vertex_label(vertices_[i]);
    if (!index_.emplace(vertices_[i], static_cast<int>(i)).second)
      throw InputError("duplicate vertex '" + vertices_[i] + "'");
    simplices_.insert(Simplex{static_cast<int>(i)});
  }
  for (const auto& facet : facets) {
    if (facet.empty()) throw InputError("empty simplex");
    Simplex s;
    for (const auto& v : facet) {
      auto idx = vertex_index(v);
      if (!idx) throw InputError("simplex uses undeclared vertex '" + v + "'");
      s.push_back(*idx);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("simplex repeats a vertex");
    add_closed(s);
  }
}

void SimplicialComplex::add_closed(const Simplex& s) {
  if (!simplices_.insert(s).second) return;
  if (s.size() == 1) return;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex face = s;
    face.erase(face.begin() + static_cast<long>(i));
    add_closed(face);
  }
}

std::optional<int> SimplicialComplex::vertex_index(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& s : simplices_) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::simplices_of_dimension(int d) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
  return out;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::facets() const {
  std::set<Simplex> covered;
  for (const auto& s : simplices_) {
    if (s.size() == 1) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(i));
      covered.insert(face);
    }
  }
  std::vector<Simplex> out;
  for (const auto& s : simplices_)
    if (!covered.count(s)) out.push_back(s);
  return out;
}

std::string SimplicialComplex::label(const Simplex& s) const {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += '.';
    out += vertices_.at(s[i]);
  }
  return out;
}

SimplicialComplex::Simplex SimplicialComplex::parse_label(const std::string& label) const {
  Simplex s;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = label.find('.', start);
    const std::string part = label.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
    auto idx = vertex_index(part);
    if (!idx) throw InputError("'" + label + "' is not a simplex label");
    s.push_back(*idx);
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  if (!std::is_sorted(s.begin(), s.end()) || !contains(s))
    throw InputError("'" + label + "' is not a simplex of the complex");
  return s;
}

std::set<SimplicialComplex::Simplex> SimplicialComplex::induced(const std::set<int>& vertex_subset) const {
  std::set<Simplex> out;
  for (const auto& s : simplices_)
    if (std::all_of(s.begin(), s.end(), [&](int v) { return vertex_subset.count(v) > 0; })) out.insert(s);
  return out;
}

SparseVec simplex_boundary(const SimplicialComplex& X, const SimplicialComplex::Simplex& s) {
  SparseVec out;
  if (s.size() <= 1) return out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    SimplicialComplex::Simplex face = s;
    face.erase(face.begin() + static_cast<long>(i));
    out.add(X.label(face), i % 2 == 0 ? Rational(1) : Rational(-1));
  }
  return out;
}

NormedComplex SimplicialComplex::chain_complex(const std::string& name) const {
  NormedComplex C(name, Direction::Chain, NormFlavor::L1);
  const int dim = dimension();
  for (int d = 0; d <= dim; ++d) {
    std::vector<std::string> labels;
    for (const auto& s : simplices_of_dimension(d)) labels.push_back(label(s));
    C.set_basis(d, labels);
  }
  for (int d = 1; d <= dim; ++d) {
    SparseMat M(C.basis(d - 1), C.basis(d));
    for (const auto& s : simplices_of_dimension(d))
      for (const auto& [face, sign] : simplex_boundary(*this, s)) M.set(face, label(s), sign);
    C.set_differential(d, M);
  }
  return C;
}

namespace {

std::string end_label(const std::string& v, int end) { return v + (end == 0 ? "_0" : "_1"); }

}  // namespace

SimplicialComplex cylinder(const SimplicialComplex& X) {
  std::vector<std::string> vertices;
  for (const auto& v : X.vertices()) {
    vertices.push_back(end_label(v, 0));
    vertices.push_back(end_label(v, 1));
  }
  std::vector<std::vector<std::string>> facets;
  for (const auto& s : X.facets()) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::vector<std::string> top;
      for (std::size_t a = 0; a <= i; ++a) top.push_back(end_label(X.vertices()[s[a]], 0));
      for (std::size_t a = i; a < s.size(); ++a) top.push_back(end_label(X.vertices()[s[a]], 1));
      facets.push_back(std::move(top));
    }
  }
  return SimplicialComplex(std::move(vertices), facets);
}

SparseVec end_inclusion(const SimplicialComplex& X, const SparseVec& c, int end) {
  SparseVec out;
  for (const auto& [label, value] : c) {
    const auto s = X.parse_label(label);
    std::string image;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (i) image += '.';
      image += end_label(X.vertices()[s[i]], end);
    }
    out.add(image, value);
  }
  return out;
}

SparseVec prism_chain(const SparseVec& c, int n, const SimplicialComplex& X) {
  if (n < 1) throw InputError("prism degree must be at least 1");
  SparseVec out;
  for (const auto& [label, value] : c) {
    const auto s = X.parse_label(label);
    if (static_cast<int>(s.size()) != n)
      throw InputError("prism expects a chain of degree " + std::to_string(n - 1) + ", got '" + label + "'");
    for (int i = 0; i < n; ++i) {
      std::string top;
      for (int a = 0; a <= i; ++a) top += (a ? "." : "") + end_label(X.vertices()[s[a]], 0);
      for (int a = i; a < n; ++a) top += "." + end_label(X.vertices()[s[a]], 1);
      out.add(top, i % 2 == 0 ? value : Rational(-value));
    }
  }
  return out;
}

PrismResult prism(const SparseVec& c, int n, const SimplicialComplex& X) {
  SparseVec chain = prism_chain(c, n, X);
  SimplicialComplex product = cylinder(X);
  NormedComplex target = product.chain_complex("cylinder");
  return PrismResult{std::move(chain), std::move(product), std::move(target)};
}

}  // namespace ubckit
