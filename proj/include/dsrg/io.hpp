#pragma once

// The .adj text format: line 1 is the decimal order n, followed by n lines of
// exactly n characters from {0,1}. LF endings, no trailing whitespace, and a
// zero diagonal.

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "dsrg/error.hpp"
#include "dsrg/matrix.hpp"

namespace dsrg {

inline constexpr std::size_t kMaxAdjOrder = 1 << 16;

/// Reads a matrix from .adj text. Errors name the 1-based line.
inline BinMatrix parse_adj(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(pos));
      break;
    }
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  auto fail = [](std::size_t line, const std::string& what) -> input_error {
    return input_error("line " + std::to_string(line) + ": " + what);
  };
  if (lines.empty()) throw fail(1, "missing order");
  for (std::size_t i = 0; i < lines.size(); ++i)
    if (!lines[i].empty() && lines[i].back() == '\r') throw fail(i + 1, "CR line ending");

  const std::string_view head = lines[0];
  std::size_t n = 0;
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (head.empty() || ec != std::errc{} || ptr != head.data() + head.size() || (head.size() > 1 && head[0] == '0'))
    throw fail(1, "order must be a decimal integer");
  if (n == 0 || n > kMaxAdjOrder) throw fail(1, "order out of range");
  if (lines.size() < n + 1) throw fail(lines.size() + 1, "expected " + std::to_string(n) + " matrix rows");
  for (std::size_t i = n + 1; i < lines.size(); ++i)
    if (!lines[i].empty()) throw fail(i + 1, "unexpected content after the matrix");

  BinMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string_view row = lines[i + 1];
    if (row.size() != n)
      throw fail(i + 2, "row has " + std::to_string(row.size()) + " characters, expected " + std::to_string(n));
    for (std::size_t j = 0; j < n; ++j) {
      if (row[j] == '1') a.set(i, j);
      else if (row[j] != '0') throw fail(i + 2, "invalid character at column " + std::to_string(j + 1));
    }
    if (row[i] != '0') throw fail(i + 2, "nonzero diagonal entry");
  }
  return a;
}

inline std::string format_adj(const BinMatrix& a) {
  std::string out = std::to_string(a.order()) + "\n";
  for (std::size_t i = 0; i < a.order(); ++i) out += a.row_string(i) + "\n";
  return out;
}

inline BinMatrix read_adj(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_adj(ss.str());
  } catch (const input_error& e) {
    throw input_error(path + ": " + e.what());
  }
}

inline void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw input_error("cannot write " + path);
  out << text;
  if (!out) throw input_error("write failed for " + path);
}

inline void write_adj(const std::string& path, const BinMatrix& a) { write_text(path, format_adj(a)); }

}  // namespace dsrg
