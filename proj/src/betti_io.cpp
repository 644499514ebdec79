#include "bsw/betti_io.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <vector>

#include "bsw/errors.hpp"

namespace bsw {

namespace {

int parse_index(const std::string& token, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": bad index '" + token + "'");
  }
  return value;
}

}  // namespace

BettiTable read_betti_table(std::istream& in) {
  BettiTable table;
  std::set<BettiIndex> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      throw ParseError("line " + std::to_string(line_no) + ": expected `i j value`");
    }
    const int i = parse_index(tokens[0], line_no);
    const int j = parse_index(tokens[1], line_no);
    if (i < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": negative homological index");
    }
    if (!seen.insert({i, j}).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate entry (" +
                       std::to_string(i) + "," + std::to_string(j) + ")");
    }
    Rational value;
    try {
      value = parse_rational(tokens[2]);
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
    }
    table.set(i, j, value);
  }
  return table;
}

BettiTable read_betti_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  return read_betti_table(in);
}

void write_betti_table(std::ostream& out, const BettiTable& table) {
  out << "# i j value\n";
  for (const auto& [idx, value] : table) {
    out << idx.i << ' ' << idx.j << ' ' << to_string(value) << '\n';
  }
}

void write_betti_table_file(const std::string& path, const BettiTable& table) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  write_betti_table(out, table);
}

std::string display_betti_table(const BettiTable& table) {
  if (table.empty()) return "(zero table)\n";
  const int max_i = *table.projective_span();
  int min_row = std::numeric_limits<int>::max();
  int max_row = std::numeric_limits<int>::min();
  for (const auto& [idx, value] : table) {
    min_row = std::min(min_row, idx.j - idx.i);
    max_row = std::max(max_row, idx.j - idx.i);
  }

  std::vector<Rational> totals(static_cast<std::size_t>(max_i + 1));
  for (const auto& [idx, value] : table) totals[static_cast<std::size_t>(idx.i)] += value;

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> labels;
  {
    std::vector<std::string> header;
    for (int i = 0; i <= max_i; ++i) header.push_back(std::to_string(i));
    cells.push_back(header);
    labels.push_back("");
    std::vector<std::string> total_row;
    for (const auto& t : totals) total_row.push_back(to_string(t));
    cells.push_back(total_row);
    labels.push_back("total:");
  }
  for (int row = min_row; row <= max_row; ++row) {
    std::vector<std::string> line;
    for (int i = 0; i <= max_i; ++i) {
      const Rational v = table.at(i, i + row);
      line.push_back(v == 0 ? "." : to_string(v));
    }
    cells.push_back(line);
    labels.push_back(std::to_string(row) + ":");
  }

  std::size_t label_width = 0;
  for (const auto& l : labels) label_width = std::max(label_width, l.size());
  std::vector<std::size_t> width(static_cast<std::size_t>(max_i + 1), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }

  std::ostringstream out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    out << std::string(label_width - labels[r].size(), ' ') << labels[r];
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      out << ' ' << std::string(width[c] - cells[r][c].size(), ' ') << cells[r][c];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace bsw
