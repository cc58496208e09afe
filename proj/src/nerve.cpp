#include "ubckit/nerve.hpp"

#include "ubckit/errors.hpp"

#include <boost/pending/disjoint_sets.hpp>

#include <algorithm>
#include <map>

namespace ubckit {

std::vector<std::set<int>> component_sets(const SimplicialComplex& X, const std::set<int>& subset) {
  const int n = static_cast<int>(X.vertices().size());
  for (int v : subset)
    if (v < 0 || v >= n) throw InputError("vertex index out of range");
  boost::disjoint_sets_with_storage<> uf(static_cast<std::size_t>(n));
  for (int v : subset) uf.make_set(v);
  for (const auto& s : X.simplices())
    if (s.size() == 2 && subset.count(s[0]) && subset.count(s[1])) uf.union_set(s[0], s[1]);
  std::map<int, std::set<int>> groups;
  for (int v : subset) groups[static_cast<int>(uf.find_set(v))].insert(v);
  std::vector<std::set<int>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  auto min_label = [&](const std::set<int>& c) {
    std::string best;
    for (int v : c)
      if (best.empty() || X.vertices()[v] < best) best = X.vertices()[v];
    return best;
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return min_label(a) < min_label(b); });
  return out;
}

std::vector<std::vector<std::string>> components(const SimplicialComplex& X, const std::vector<std::string>& subset) {
  std::set<int> idx;
  for (const auto& v : subset) {
    auto i = X.vertex_index(v);
    if (!i) throw InputError("unknown vertex '" + v + "'");
    idx.insert(*i);
  }
  std::vector<std::vector<std::string>> out;
  for (const auto& c : component_sets(X, idx)) {
    std::vector<std::string> labels;
    for (int v : c) labels.push_back(X.vertices()[v]);
    std::sort(labels.begin(), labels.end());
    out.push_back(std::move(labels));
  }
  return out;
}

CoverData::CoverData(SimplicialComplex ambient, const std::vector<std::string>& subspace,
                     const std::vector<std::pair<std::string, std::vector<std::string>>>& members)
    : ambient_(std::move(ambient)) {
  auto resolve = [&](const std::string& v) {
    auto i = ambient_.vertex_index(v);
    if (!i) throw InputError("unknown vertex '" + v + "'");
    return *i;
  };
  for (const auto& v : subspace) subspace_.insert(resolve(v));
  for (const auto& [name, verts] : members) {
    check_vertex_label(name);
    CoverMember m{name, {}};
    for (const auto& v : verts) m.vertices.insert(resolve(v));
    if (m.vertices.empty()) throw InputError("cover member '" + name + "' is empty");
    if (component_sets(ambient_, m.vertices).size() != 1)
      throw InputError("cover member '" + name + "' is not connected");
    members_.push_back(std::move(m));
  }
  std::sort(members_.begin(), members_.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  for (std::size_t i = 1; i < members_.size(); ++i)
    if (members_[i].name == members_[i - 1].name) throw InputError("duplicate cover member '" + members_[i].name + "'");
  for (const auto& s : ambient_.simplices()) {
    const bool covered = std::any_of(members_.begin(), members_.end(), [&](const CoverMember& m) {
      return std::all_of(s.begin(), s.end(), [&](int v) { return m.vertices.count(v) > 0; });
    });
    if (!covered) throw InputError("simplex " + ambient_.label(s) + " is not contained in any cover member");
  }
}

std::set<int> CoverData::intersection(const std::vector<int>& member_indices) const {
  if (member_indices.empty()) {
    std::set<int> all;
    for (int v = 0; v < static_cast<int>(ambient_.vertices().size()); ++v) all.insert(v);
    return all;
  }
  std::set<int> out = members_.at(member_indices[0]).vertices;
  for (std::size_t i = 1; i < member_indices.size(); ++i) {
    std::set<int> next;
    const auto& other = members_.at(member_indices[i]).vertices;
    std::set_intersection(out.begin(), out.end(), other.begin(), other.end(), std::inserter(next, next.end()));
    out = std::move(next);
  }
  return out;
}

std::vector<std::string> CoverData::vertex_labels(const std::set<int>& vertices) const {
  std::vector<std::string> out;
  for (int v : vertices) out.push_back(ambient_.vertices()[v]);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool meets(const std::set<int>& a, const std::set<int>& b) {
  return std::any_of(a.begin(), a.end(), [&](int v) { return b.count(v) > 0; });
}

// Every subfamily with nonempty common intersection, grown by increasing index.
template <class Visit>
void for_each_nerve_simplex(const CoverData& cover, Visit&& visit) {
  const int n = static_cast<int>(cover.members().size());
  std::vector<std::pair<std::vector<int>, std::set<int>>> frontier;
  for (int i = 0; i < n; ++i) frontier.push_back({{i}, cover.members()[i].vertices});
  while (!frontier.empty()) {
    std::vector<std::pair<std::vector<int>, std::set<int>>> next;
    for (const auto& [simplex, common] : frontier) {
      visit(simplex, common);
      for (int j = simplex.back() + 1; j < n; ++j) {
        std::set<int> both;
        const auto& other = cover.members()[j].vertices;
        std::set_intersection(common.begin(), common.end(), other.begin(), other.end(),
                              std::inserter(both, both.end()));
        if (both.empty()) continue;
        auto grown = simplex;
        grown.push_back(j);
        next.push_back({std::move(grown), std::move(both)});
      }
    }
    frontier = std::move(next);
  }
}

std::vector<std::string> member_names(const CoverData& cover, const std::vector<int>& indices) {
  std::vector<std::string> out;
  for (int i : indices) out.push_back(cover.members()[i].name);
  return out;
}

}  // namespace

int NervePair::relative_dimension() const {
  int d = -1;
  for (const auto& s : nerve.simplices())
    if (!relative.count(s)) d = std::max(d, static_cast<int>(s.size()) - 1);
  return d;
}

NervePair nerve_pair(const CoverData& cover) {
  std::vector<std::string> names;
  for (const auto& m : cover.members()) names.push_back(m.name);
  std::vector<std::vector<std::string>> facets;
  NervePair out;
  for_each_nerve_simplex(cover, [&](const std::vector<int>& s, const std::set<int>& common) {
    facets.push_back(member_names(cover, s));
    const int size = static_cast<int>(s.size());
    out.mult = std::max(out.mult, size);
    if (meets(common, cover.subspace()))
      out.relative.insert(s);
    else
      out.mult_A = std::max(out.mult_A, size);
  });
  out.nerve = SimplicialComplex(names, facets);
  return out;
}

RelativeCoverReport check_relative_cover(const CoverData& cover, bool rc2_user_asserted) {
  RelativeCoverReport report;
  report.rc2_user_asserted = rc2_user_asserted;
  const SimplicialComplex& X = cover.ambient();
  const std::set<int>& A = cover.subspace();
  for (std::size_t i = 0; i < cover.members().size(); ++i) {
    std::set<int> trace;
    for (int v : cover.members()[i].vertices)
      if (A.count(v)) trace.insert(v);
    if (trace.empty()) continue;
    const auto parts = component_sets(X, trace);
    if (parts.size() > 1) {
      report.rc1 = false;
      report.witnesses.push_back({"rc1", {cover.members()[i].name}, cover.vertex_labels(parts[1])});
    }
  }
  for_each_nerve_simplex(cover, [&](const std::vector<int>& s, const std::set<int>& common) {
    const auto parts = component_sets(X, common);
    if (parts.size() > 1) {
      if (report.convex) report.witnesses.push_back({"convex", member_names(cover, s), cover.vertex_labels(parts[1])});
      report.convex = false;
    }
    if (!meets(common, A)) return;
    for (const auto& part : parts)
      if (!meets(part, A)) {
        if (report.weakly_convex)
          report.witnesses.push_back({"weakly_convex", member_names(cover, s), cover.vertex_labels(part)});
        report.weakly_convex = false;
        break;
      }
  });
  return report;
}

int collar_multiplicity_bound(int mult, int mult_boundary) {
  if (mult < 0 || mult_boundary < 0) throw InputError("multiplicities must be nonnegative");
  return std::max(mult, mult_boundary + 1);
}

}  // namespace ubckit
