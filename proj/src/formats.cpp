#include "ubckit/formats.hpp"

#include "ubckit/errors.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace ubckit {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::istringstream words(raw);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    out.push_back({number, std::move(tokens)});
  }
  return out;
}

Rational rational_at(const Line& line, const std::string& token) {
  try {
    const Rational r = parse_rational(token);
    if (r == 0) throw ParseError(line.number, "zero coefficient");
    return r;
  } catch (const ParseError&) {
    throw;
  } catch (const InputError& e) {
    throw ParseError(line.number, e.what());
  }
}

int degree_token(const Line& line, const std::string& token) {
  // "k:" with an integer k.
  if (token.size() < 2 || token.back() != ':') throw ParseError(line.number, "expected '<degree>:'");
  const std::string digits = token.substr(0, token.size() - 1);
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(digits, &used);
  } catch (const std::exception&) {
    throw ParseError(line.number, "bad degree '" + digits + "'");
  }
  if (used != digits.size() || std::to_string(k) != digits) throw ParseError(line.number, "bad degree '" + digits + "'");
  return k;
}

// Accumulates the lines of one complex block.
class ComplexReader {
 public:
  explicit ComplexReader(const Line& header) {
    if (header.tokens.size() != 4) throw ParseError(header.number, "expected 'complex <name> <direction> <flavor>'");
    name_ = header.tokens[1];
    if (header.tokens[2] == "chain")
      direction_ = Direction::Chain;
    else if (header.tokens[2] == "cochain")
      direction_ = Direction::Cochain;
    else
      throw ParseError(header.number, "unknown direction '" + header.tokens[2] + "'");
    if (header.tokens[3] == "l1")
      flavor_ = NormFlavor::L1;
    else if (header.tokens[3] == "linf")
      flavor_ = NormFlavor::Linf;
    else
      throw ParseError(header.number, "unknown norm flavor '" + header.tokens[3] + "'");
  }

  const std::string& name() const { return name_; }

  /// Consumes `degree` and `map` lines; false for anything else.
  bool accept(const Line& line) {
    const auto& t = line.tokens;
    if (t[0] == "degree") {
      if (t.size() < 2) throw ParseError(line.number, "expected 'degree k: labels'");
      const int k = degree_token(line, t[1]);
      if (bases_.count(k)) throw ParseError(line.number, "degree " + std::to_string(k) + " declared twice");
      std::vector<std::string> labels(t.begin() + 2, t.end());
      std::set<std::string> unique(labels.begin(), labels.end());
      if (unique.size() != labels.size()) throw ParseError(line.number, "duplicate label");
      bases_[k] = {line.number, std::move(unique)};
      return true;
    }
    if (t[0] == "map") {
      if (t.size() != 5) throw ParseError(line.number, "expected 'map k: row col value'");
      const int k = degree_token(line, t[1]);
      const auto key = std::make_tuple(k, t[2], t[3]);
      if (entries_.count(key)) throw ParseError(line.number, "duplicate map entry");
      entries_[key] = {line.number, rational_at(line, t[4])};
      return true;
    }
    return false;
  }

  NormedComplex finish() const {
    NormedComplex C(name_, direction_, flavor_);
    for (const auto& [k, basis] : bases_) C.set_basis(k, {basis.second.begin(), basis.second.end()});
    std::map<int, SparseMat> maps;
    for (const auto& [key, entry] : entries_) {
      const auto& [k, row, col] = key;
      const int target = C.target_degree(k);
      if (!bases_.count(k) || !bases_.at(k).second.count(col))
        throw ParseError(entry.first, "column '" + col + "' is not in degree " + std::to_string(k));
      if (!bases_.count(target) || !bases_.at(target).second.count(row))
        throw ParseError(entry.first, "row '" + row + "' is not in degree " + std::to_string(target));
      auto it = maps.find(k);
      if (it == maps.end()) it = maps.emplace(k, SparseMat(C.basis(target), C.basis(k))).first;
      it->second.set(row, col, entry.second);
    }
    for (const auto& [k, m] : maps) C.set_differential(k, m);
    return C;
  }

 private:
  std::string name_;
  Direction direction_ = Direction::Chain;
  NormFlavor flavor_ = NormFlavor::L1;
  std::map<int, std::pair<int, std::set<std::string>>> bases_;
  std::map<std::tuple<int, std::string, std::string>, std::pair<int, Rational>> entries_;
};

void append_complex(std::ostringstream& out, const NormedComplex& C, const std::string& name) {
  out << "complex " << name << ' ' << to_string(C.direction()) << ' ' << to_string(C.flavor()) << '\n';
  if (C.empty()) return;
  for (int k = C.min_degree(); k <= C.max_degree(); ++k) {
    out << "degree " << k << ':';
    for (const auto& l : C.basis(k)) out << ' ' << l;
    out << '\n';
  }
  for (const auto& [k, m] : C.differentials()) {
    std::vector<std::tuple<std::string, std::string, Rational>> entries;
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& e : m.column(j)) entries.emplace_back(m.row_labels()[e.row], m.col_labels()[j], e.value);
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b)); });
    for (const auto& [row, col, v] : entries) out << "map " << k << ": " << row << ' ' << col << ' ' << to_string(v) << '\n';
  }
}

void append_labels(std::ostringstream& out, const std::string& head, const std::vector<std::string>& labels) {
  out << head;
  for (const auto& l : labels) out << ' ' << l;
  out << '\n';
}

std::string member_name(const Line& line) {
  if (line.tokens.size() < 2 || line.tokens[1].size() < 2 || line.tokens[1].back() != ':')
    throw ParseError(line.number, "expected 'member <name>: vertices'");
  return line.tokens[1].substr(0, line.tokens[1].size() - 1);
}

std::pair<std::string, std::string> piece_face(const Line& line, const std::string& token) {
  const auto colon = token.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
    throw ParseError(line.number, "expected '<piece>:<label>', got '" + token + "'");
  return {token.substr(0, colon), token.substr(colon + 1)};
}

}  // namespace

NormedComplex parse_complex(const std::string& text) {
  const auto lines = tokenize(text);
  // The header may sit anywhere; everything else is order-free.
  std::optional<ComplexReader> reader;
  for (const auto& line : lines)
    if (line.tokens[0] == "complex") {
      if (reader) throw ParseError(line.number, "second 'complex' header");
      reader.emplace(line);
    }
  if (!reader) throw ParseError(lines.empty() ? 1 : lines.front().number, "missing 'complex' header");
  for (const auto& line : lines)
    if (line.tokens[0] != "complex" && !reader->accept(line))
      throw ParseError(line.number, "unexpected '" + line.tokens[0] + "'");
  return reader->finish();
}

std::string write_complex(const NormedComplex& C) {
  std::ostringstream out;
  append_complex(out, C, C.name());
  return out.str();
}

SparseVec parse_chain(const std::string& text) {
  SparseVec v;
  for (const auto& line : tokenize(text)) {
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<label> <value>'");
    if (v.get(line.tokens[0]) != 0) throw ParseError(line.number, "duplicate label '" + line.tokens[0] + "'");
    v.set(line.tokens[0], rational_at(line, line.tokens[1]));
  }
  return v;
}

std::string write_chain(const SparseVec& v) {
  std::ostringstream out;
  for (const auto& [label, value] : v) out << label << ' ' << to_string(value) << '\n';
  return out.str();
}

CoverData parse_cover(const std::string& text) {
  std::set<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  std::vector<std::pair<std::string, std::vector<std::string>>> members;
  std::set<std::string> names;
  std::optional<std::vector<std::string>> subspace;
  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "simplex") {
      if (t.size() < 2) throw ParseError(line.number, "empty simplex");
      std::vector<std::string> facet(t.begin() + 1, t.end());
      for (const auto& v : facet) {
        try {
          check_vertex_label(v);
        } catch (const InputError& e) {
          throw ParseError(line.number, e.what());
        }
        vertices.insert(v);
      }
      facets.push_back(std::move(facet));
    } else if (t[0] == "member") {
      const std::string name = member_name(line);
      if (!names.insert(name).second) throw ParseError(line.number, "duplicate member '" + name + "'");
      members.push_back({name, {t.begin() + 2, t.end()}});
    } else if (t[0] == "subspace:") {
      if (subspace) throw ParseError(line.number, "subspace declared twice");
      subspace = std::vector<std::string>(t.begin() + 1, t.end());
    } else {
      throw ParseError(line.number, "unexpected '" + t[0] + "'");
    }
  }
  SimplicialComplex X({vertices.begin(), vertices.end()}, facets);
  return CoverData(std::move(X), subspace.value_or(std::vector<std::string>{}), members);
}

std::string write_cover(const CoverData& cover) {
  const SimplicialComplex& X = cover.ambient();
  std::vector<std::string> simplex_lines;
  for (const auto& f : X.facets()) {
    std::string line = "simplex";
    for (int v : f) line += " " + X.vertices()[v];
    simplex_lines.push_back(line);
  }
  std::sort(simplex_lines.begin(), simplex_lines.end());
  std::ostringstream out;
  for (const auto& l : simplex_lines) out << l << '\n';
  for (const auto& m : cover.members()) append_labels(out, "member " + m.name + ":", cover.vertex_labels(m.vertices));
  append_labels(out, "subspace:", cover.vertex_labels(cover.subspace()));
  return out.str();
}

GlueingInstance parse_instance(const std::string& text) {
  struct Block {
    ComplexReader reader;
    SparseVec cycle;
    std::optional<std::set<std::string>> glue, free;
  };
  std::vector<Block> blocks;
  std::vector<Identification> ids;
  for (const auto& line : tokenize(text)) {
    const auto& t = line.tokens;
    if (t[0] == "complex") {
      blocks.push_back({ComplexReader(line), {}, {}, {}});
      continue;
    }
    if (t[0] == "identify") {
      if (t.size() != 3) throw ParseError(line.number, "expected 'identify <piece>:<label> <piece>:<label>'");
      const auto a = piece_face(line, t[1]), b = piece_face(line, t[2]);
      ids.push_back({a.first, a.second, b.first, b.second});
      continue;
    }
    if (blocks.empty()) throw ParseError(line.number, "'" + t[0] + "' before any complex");
    Block& block = blocks.back();
    if (block.reader.accept(line)) continue;
    if (t[0] == "cycle") {
      if (t.size() != 3) throw ParseError(line.number, "expected 'cycle <label> <value>'");
      if (block.cycle.get(t[1]) != 0) throw ParseError(line.number, "duplicate cycle label '" + t[1] + "'");
      block.cycle.set(t[1], rational_at(line, t[2]));
    } else if (t[0] == "glue:" || t[0] == "free:") {
      auto& target = t[0] == "glue:" ? block.glue : block.free;
      if (target) throw ParseError(line.number, t[0] + " declared twice");
      target = std::set<std::string>(t.begin() + 1, t.end());
    } else {
      throw ParseError(line.number, "unexpected '" + t[0] + "'");
    }
  }
  if (blocks.empty()) throw ParseError(1, "no pieces");
  GlueingInstance inst;
  for (const auto& block : blocks) {
    GluePiece p;
    p.name = block.reader.name();
    p.complex = block.reader.finish();
    p.cycle = block.cycle;
    p.glue_faces = block.glue.value_or(std::set<std::string>{});
    p.free_faces = block.free.value_or(std::set<std::string>{});
    inst.pieces.push_back(std::move(p));
  }
  std::sort(inst.pieces.begin(), inst.pieces.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
  inst.degree = inst.pieces.front().complex.max_degree();
  inst.identifications = std::move(ids);
  std::sort(inst.identifications.begin(), inst.identifications.end(), [](const auto& a, const auto& b) {
    return std::tie(a.piece_a, a.label_a, a.piece_b, a.label_b) < std::tie(b.piece_a, b.label_a, b.piece_b, b.label_b);
  });
  validate_instance(inst);
  return inst;
}

std::string write_instance(const GlueingInstance& instance) {
  std::vector<const GluePiece*> pieces;
  for (const auto& p : instance.pieces) pieces.push_back(&p);
  std::sort(pieces.begin(), pieces.end(), [](const auto* a, const auto* b) { return a->name < b->name; });
  std::ostringstream out;
  for (const auto* p : pieces) {
    append_complex(out, p->complex, p->name);
    for (const auto& [label, v] : p->cycle) out << "cycle " << label << ' ' << to_string(v) << '\n';
    append_labels(out, "glue:", {p->glue_faces.begin(), p->glue_faces.end()});
    append_labels(out, "free:", {p->free_faces.begin(), p->free_faces.end()});
  }
  std::vector<std::string> lines;
  for (const auto& id : instance.identifications)
    lines.push_back("identify " + glued_label(id.piece_a, id.label_a) + " " + glued_label(id.piece_b, id.label_b));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw InputError("write failed for '" + path.string() + "'");
}

}  // namespace ubckit
