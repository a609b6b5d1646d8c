#pragma once

// Matrix input formats and certificate output.
//
// Text:  "n d" then d rows of d integers, whitespace separated. Entries are
//        reduced mod n, so negatives are fine.
// JSON:  {"modulus": n, "rows": [[...], ...]}
//
// Certificates serialize as
//   {"modulus", "dim", "t1", "t2", "nil", "nil_index_bound", "verified"}
// in that order, matrices as row-major arrays of integers.

#include <string>
#include <string_view>

#include <json.hpp>

#include "zhou/decompose.hpp"
#include "zhou/matz.hpp"

namespace zhou::io {

/// Detects JSON by a leading '{'. Throws ParseError on malformed input and
/// UnsupportedModulus when n < 2.
MatZ parse_matrix(std::string_view text);
MatZ parse_matrix_text(std::string_view text);
MatZ parse_matrix_json(std::string_view text);

/// Text format, replayable through parse_matrix.
std::string format_matrix_text(const MatZ& a);

nlohmann::ordered_json matrix_json(const MatZ& a);
nlohmann::ordered_json certificate_json(const Decomposition& d, bool verified);
std::string certificate_text(const Decomposition& d, bool verified);

/// Rebuilds the decomposition from a certificate. Throws ParseError.
Decomposition parse_certificate(std::string_view json_text);

}  // namespace zhou::io
