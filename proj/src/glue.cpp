#include "ubckit/glue.hpp"

#include "ubckit/errors.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ubckit {

namespace {

void check_nonnegative(const Rational& K, int n) {
  if (K < 0) throw InputError("constant K must be nonnegative");
  if (n < 1) throw InputError("dimension n must be at least 1");
}

using Face = std::pair<std::string, std::string>;

// Glue face ↦ (canonical face, sign).
std::map<Face, std::pair<Face, int>> face_map(const GlueingInstance& instance) {
  std::map<Face, std::pair<Face, int>> out;
  for (const auto& id : instance.identifications) {
    const Face a{id.piece_a, id.label_a}, b{id.piece_b, id.label_b};
    out[a] = {a, 1};
    out[b] = {a, -1};
  }
  return out;
}

}  // namespace

Rational glue_upper_bound(const Rational& K, int n, const std::vector<Rational>& volumes) {
  check_nonnegative(K, n);
  Rational sum = 0;
  for (const auto& v : volumes) {
    if (v < 0) throw InputError("volumes must be nonnegative");
    sum += v;
  }
  return (1 + K * (n + 1)) * sum;
}

Rational interior_bound(const Rational& K, int n, const Rational& relative_volume) {
  check_nonnegative(K, n);
  if (relative_volume < 0) throw InputError("relative volume must be nonnegative");
  return (K * (n + 1) + 1) * relative_volume;
}

const GluePiece& GlueingInstance::piece(const std::string& name) const {
  for (const auto& p : pieces)
    if (p.name == name) return p;
  throw InputError("unknown piece '" + name + "'");
}

std::string glued_label(const std::string& piece, const std::string& label) { return piece + ":" + label; }

void validate_instance(const GlueingInstance& instance) {
  const int n = instance.degree;
  if (n < 1) throw InputError("glueing degree must be at least 1");
  std::set<std::string> names;
  for (const auto& p : instance.pieces) {
    if (p.name.empty() || p.name.find(':') != std::string::npos) throw InputError("bad piece name '" + p.name + "'");
    if (!names.insert(p.name).second) throw InputError("duplicate piece '" + p.name + "'");
    const NormedComplex& C = p.complex;
    if (C.direction() != Direction::Chain || C.flavor() != NormFlavor::L1)
      throw InputError("piece '" + p.name + "' must be an l1 chain complex");
    if (C.empty() || C.max_degree() != n)
      throw InputError("piece '" + p.name + "' must have top degree " + std::to_string(n));
    validate_complex(C);
    for (const auto& [label, v] : p.cycle)
      if (!C.contains(n, label)) throw InputError("cycle label '" + label + "' not in degree " + std::to_string(n));
    for (const auto& f : p.glue_faces) {
      if (!C.contains(n - 1, f)) throw InputError("glue face '" + f + "' not in degree " + std::to_string(n - 1));
      if (p.free_faces.count(f)) throw InputError("face '" + f + "' is both glued and free");
    }
    for (const auto& f : p.free_faces)
      if (!C.contains(n - 1, f)) throw InputError("free face '" + f + "' not in degree " + std::to_string(n - 1));
    for (const auto& [label, v] : C.out_of(n).apply(p.cycle))
      if (!p.glue_faces.count(label) && !p.free_faces.count(label))
        throw InputError("cycle of piece '" + p.name + "' has boundary on '" + label + "'");
  }
  std::set<Face> used;
  for (const auto& id : instance.identifications) {
    const Face a{id.piece_a, id.label_a}, b{id.piece_b, id.label_b};
    if (a == b) throw InputError("face " + glued_label(a.first, a.second) + " identified with itself");
    for (const auto& f : {a, b}) {
      if (!instance.piece(f.first).glue_faces.count(f.second))
        throw InputError(glued_label(f.first, f.second) + " is not a glue face");
      if (!used.insert(f).second) throw InputError(glued_label(f.first, f.second) + " identified twice");
    }
  }
  for (const auto& p : instance.pieces)
    for (const auto& f : p.glue_faces)
      if (!used.count({p.name, f})) throw InputError(glued_label(p.name, f) + " is never identified");
}

NormedComplex glue_locus(const GlueingInstance& instance) {
  const int n = instance.degree;
  NormedComplex N("glue_locus", Direction::Chain, NormFlavor::L1);
  N.set_basis(n, {});
  // Faces below the canonical glue faces, found through each piece's own
  // differentials.
  std::map<int, std::set<Face>> cells;
  for (const auto& id : instance.identifications) cells[n - 1].insert({id.piece_a, id.label_a});
  int lowest = n;
  for (const auto& p : instance.pieces) lowest = std::min(lowest, p.complex.min_degree());
  for (int k = n - 1; k > lowest; --k)
    for (const auto& [piece, label] : cells[k]) {
      const SparseMat D = instance.piece(piece).complex.out_of(k);
      const int col = *D.col_index(label);
      for (const auto& e : D.column(col)) cells[k - 1].insert({piece, D.row_labels()[e.row]});
    }
  for (const auto& [k, set] : cells) {
    std::vector<std::string> labels;
    for (const auto& [piece, label] : set) labels.push_back(glued_label(piece, label));
    N.set_basis(k, labels);
  }
  for (const auto& [k, set] : cells) {
    if (!cells.count(k - 1)) continue;
    SparseMat M(N.basis(k - 1), N.basis(k));
    for (const auto& [piece, label] : set) {
      const SparseMat D = instance.piece(piece).complex.out_of(k);
      const int col = *D.col_index(label);
      for (const auto& e : D.column(col))
        M.set(glued_label(piece, D.row_labels()[e.row]), glued_label(piece, label), e.value);
    }
    N.set_differential(k, M);
  }
  validate_complex(N);
  return N;
}

bool GlueResult::within(const Rational& K, int n) const { return filler_norm <= K * (n + 1) * sum_cycle_norms; }

GlueResult glue_cycle(const GlueingInstance& instance, const Rational& K_declared) {
  if (K_declared < 0) throw InputError("declared constant must be nonnegative");
  validate_instance(instance);
  const int n = instance.degree;
  const auto faces = face_map(instance);
  GlueResult out;

  Rational boundary_sum = 0;
  SparseVec dz;
  for (const auto& p : instance.pieces) {
    out.sum_cycle_norms += p.cycle.l1_norm();
    for (const auto& [label, v] : p.cycle) out.z.add(glued_label(p.name, label), v);
    const SparseVec d = p.complex.out_of(n).apply(p.cycle);
    boundary_sum += d.l1_norm();
    for (const auto& [label, v] : d) {
      auto it = faces.find({p.name, label});
      if (it == faces.end()) {
        dz.add(glued_label(p.name, label), v);
      } else {
        const auto& [canon, sign] = it->second;
        out.b.add(glued_label(canon.first, canon.second), v * sign);
      }
    }
  }
  out.b_norm = out.b.l1_norm();
  out.boundary_chain_ok = out.b_norm <= boundary_sum && boundary_sum <= Rational(n + 1) * out.sum_cycle_norms;

  if (instance.identifications.empty()) {
    out.status = FillStatus::Optimal;
    out.certificate_ok = true;
  } else {
    const NormedComplex N = glue_locus(instance);
    const FillResult fill = fill_norm(N, n - 1, out.b);
    out.certificate_ok = verify_fill(N.into(n - 1), out.b, fill, FillNorm::L1);
    out.status = fill.status;
    if (fill.optimal())
      out.filler = fill.solution;
    else
      out.farkas = fill.dual_certificate;
  }
  out.filler_norm = out.filler.l1_norm();
  out.k_measured = out.b_norm == 0 ? Rational(0) : out.filler_norm / out.b_norm;
  // The filler lives in the top degree of N, whose cells carry glued labels.
  out.z -= out.filler;

  // ∂z in the glued complex: glue faces cancel through b − ∂c.
  SparseVec glued_boundary = dz;
  if (out.optimal()) {
    SparseVec residual = out.b;
    if (!out.filler.is_zero()) residual -= glue_locus(instance).out_of(n).apply(out.filler);
    glued_boundary += residual;
  } else {
    glued_boundary += out.b;
  }
  out.relative_cycle = out.optimal();
  for (const auto& [label, v] : glued_boundary) {
    const auto colon = label.find(':');
    const std::string piece = label.substr(0, colon), face = label.substr(colon + 1);
    if (!instance.piece(piece).free_faces.count(face)) out.relative_cycle = false;
  }
  out.measured_bound_ok = out.optimal() && out.within(out.k_measured, n);
  out.declared_bound_ok = out.optimal() && out.filler_norm <= K_declared * out.b_norm;
  return out;
}

}  // namespace ubckit
