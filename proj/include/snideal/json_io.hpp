// snideal: symmetric normed ideals, matrix cross norms, verification campaigns
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "snideal/mcn.hpp"
#include "snideal/report.hpp"

namespace snideal {

// Wire formats. CMatrix: {"rows": n, "cols": m, "data": [[re, im], ...]}
// with row-major data. MatrixTuple: {"m": m, "n": n, "matrices": [...]}.

ojson cmatrix_to_json(const CMatrix& a);
CMatrix cmatrix_from_json(const ojson& j, const std::string& where = "matrix");

ojson tuple_to_json(const MatrixTuple& t);
MatrixTuple tuple_from_json(const ojson& j, const std::string& where = "tuple");

ojson spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const ojson& j, const std::string& where = "spectrum");

ojson estimate_to_json(const NormEstimate& e, bool include_witnesses = true);

/// Reads a whole JSON document from a file with location diagnostics.
ojson load_json_file(const std::string& path);

/// Atomic write: temp file in the same directory, then rename.
void write_text_atomic(const std::string& path, const std::string& text);

} // namespace snideal
