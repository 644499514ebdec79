#pragma once

#include <iosfwd>
#include <string>

#include "bsw/betti_table.hpp"

namespace bsw {

// Text format: one `i j value` per line, `#` starts a comment, blank lines
// ignored, entries in any order. `value` is an integer or `num/den`.
// A duplicate (i, j) is a ParseError. Zero values are accepted and dropped.
BettiTable read_betti_table(std::istream& in);
BettiTable read_betti_table_file(const std::string& path);

/// Writes entries sorted by (i, j), preceded by a comment header.
void write_betti_table(std::ostream& out, const BettiTable& table);
void write_betti_table_file(const std::string& path, const BettiTable& table);

/// Grid layout with columns indexed by i and rows by j - i, `.` for zero.
std::string display_betti_table(const BettiTable& table);

}  // namespace bsw
