#pragma once

// JSON-Lines report format.  One record per line with keys, in this order:
//   statement p m q n k modulus_exp residue valuation required pass micros
// Absent parameters are null.  residue is a decimal string.  valuation and
// required are integers, or the strings "≥e" (vanished in Z/p^e) and "∞"
// (exact zero).  pass is null for observational records; micros is null
// unless timing was requested.

#include <iosfwd>
#include <span>
#include <string>

#include "supercong/congruences.hpp"

namespace supercong {

std::string to_json_line(const CongruenceRecord& rec);

/// Inverse of to_json_line.  Throws std::invalid_argument on malformed input.
CongruenceRecord parse_json_line(const std::string& line);

/// Writes one line per record.  Without `timing` the micros field is null so
/// that reports are reproducible byte for byte.
void write_report(std::span<const CongruenceRecord> records, std::ostream& out, bool timing);

/// Lossy comma-separated view with a header row.
void write_csv(std::span<const CongruenceRecord> records, std::ostream& out, bool timing);

}  // namespace supercong
