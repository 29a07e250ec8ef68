#pragma once

#include <string>

#include "laddermat/ladder.hpp"
#include "laddermat/matrix.hpp"

namespace laddermat {

// {"rows": m, "cols": n, "entries": [["num","den"], ...]} row-major, with
// numerators and denominators as decimal strings (arbitrary precision).
std::string matrix_to_json(const RationalMatrix& X);
RationalMatrix matrix_from_json(const std::string& text);

// Canonical form {"m":..,"n":..,"upper":[[a,b],..],"lower":[[c,d],..]}; a
// {"cells":[[i,j],..]} form is also accepted and decomposed to corners
// (m, n inferred from the largest cell when absent).
std::string ladder_to_json(const Ladder& L);
Ladder ladder_from_json(const std::string& text);

// One matrix row per line, cells integer or p/q, comma separated.
std::string matrix_to_csv(const RationalMatrix& X);
RationalMatrix matrix_from_csv(const std::string& text);

// Path-based loading dispatches on the extension: .json or .csv for
// matrices, .json for ladders. Parse errors name the offending position;
// validation errors name the violated invariant.
RationalMatrix load_matrix(const std::string& path);
void save_matrix(const std::string& path, const RationalMatrix& X);
Ladder load_ladder(const std::string& path);
void save_ladder(const std::string& path, const Ladder& L);

}  // namespace laddermat
