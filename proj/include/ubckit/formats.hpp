#pragma once

#include "ubckit/complex.hpp"
#include "ubckit/glue.hpp"
#include "ubckit/nerve.hpp"
#include "ubckit/sparse.hpp"

#include <filesystem>
#include <string>

namespace ubckit {

// Line-oriented text formats. Blank lines and lines starting with '#' are
// ignored; tokens are separated by whitespace. Malformed lines raise
// ParseError with the line number. Writers emit the canonical form: sorted,
// LF-terminated, rationals in lowest terms.

/// complex <name> <chain|cochain> <l1|linf>
/// degree k: label ...
/// map k: row col p/q          (entry of the differential leaving degree k)
NormedComplex parse_complex(const std::string& text);
std::string write_complex(const NormedComplex& C);

/// One `label p/q` line per nonzero coefficient.
SparseVec parse_chain(const std::string& text);
std::string write_chain(const SparseVec& v);

/// simplex v ...
/// member <name>: v ...
/// subspace: v ...
/// Vertices are ordered by label.
CoverData parse_cover(const std::string& text);
std::string write_cover(const CoverData& cover);

/// A sequence of complex blocks, one per piece, each followed by its
///   cycle <label> p/q
///   glue: label ...
///   free: label ...
/// lines, plus `identify <pieceA>:<label> <pieceB>:<label>` lines anywhere.
/// The piece is named after its complex; the glueing degree is the top
/// degree of the first piece.
GlueingInstance parse_instance(const std::string& text);
std::string write_instance(const GlueingInstance& instance);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace ubckit
