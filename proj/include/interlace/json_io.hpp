#pragma once

#include "interlace/iep.hpp"
#include "interlace/tridiag.hpp"

#include <iosfwd>
#include <string>
#include <variant>

namespace interlace {

using MatrixDocument = std::variant<SymmetricTridiagonal, GeneralTridiagonal>;

// Matrix document:
//   {"kind": "symmetric_tridiagonal", "order": n, "diag": [...], "offdiag": [...]}
//   {"kind": "general_tridiagonal", "order": n, "diag": [...],
//    "superdiag": [...], "subdiag": [...]}
// Reals are written with 17 significant digits, binary64 round-trip safe.
std::string to_json(const SymmetricTridiagonal& T);
std::string to_json(const GeneralTridiagonal& T);
MatrixDocument matrix_from_json(const std::string& text);

// Spectra document: {"lambda": [...], "mu": [...]}
std::string to_json(const SpectrumPair& p);
SpectrumPair spectra_from_json(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace interlace
