#pragma once

#include <charconv>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "semideriv/errors.hpp"
#include "semideriv/matrix.hpp"

namespace semideriv {

// Text format, one matrix per file:
//
//   utm n=3 semiring=maxplus
//   0 5 -inf
//   . 1 2
//   . . 0
//
// Row i holds i-1 `.` placeholders followed by a_ii ... a_in.

struct MatrixHeader {
  std::size_t n = 0;
  std::string semiring;
};

namespace detail {

inline std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> tokens;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  return tokens;
}

inline bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    if (end == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

inline MatrixHeader parse_header_line(std::string_view line) {
  const auto tokens = split_ws(line);
  if (tokens.size() != 3 || tokens[0] != "utm" || tokens[1].rfind("n=", 0) != 0 ||
      tokens[2].rfind("semiring=", 0) != 0) {
    throw ParseError("expected header 'utm n=<n> semiring=<name>', got '" + std::string(line) + "'");
  }
  MatrixHeader header;
  const std::string_view dim = std::string_view(tokens[1]).substr(2);
  auto [end, ec] = std::from_chars(dim.data(), dim.data() + dim.size(), header.n);
  if (dim.empty() || ec != std::errc{} || end != dim.data() + dim.size() || header.n == 0) {
    throw ParseError("invalid dimension '" + tokens[1] + "'");
  }
  header.semiring = tokens[2].substr(9);
  return header;
}

}  // namespace detail

/// Reads only the header line, so callers can pick the semiring type.
inline MatrixHeader parse_matrix_header(std::string_view text) {
  for (const auto& line : detail::split_lines(text)) {
    if (!detail::is_blank(line)) return detail::parse_header_line(line);
  }
  throw ParseError("empty matrix text");
}

/// Strict parse. Throws ParseError on malformed text and DomainError when the
/// header names a semiring other than S.
template <Semiring S>
UpperTriangular<S> parse_matrix(std::string_view text) {
  const auto lines = detail::split_lines(text);
  std::size_t cursor = 0;
  while (cursor < lines.size() && detail::is_blank(lines[cursor])) ++cursor;
  if (cursor == lines.size()) throw ParseError("empty matrix text");
  const MatrixHeader header = detail::parse_header_line(lines[cursor++]);
  if (header.semiring != S::name) {
    throw DomainError("matrix is over '" + header.semiring + "', expected '" + std::string(S::name) + "'");
  }
  UpperTriangular<S> m(header.n);
  for (std::size_t i = 1; i <= header.n; ++i, ++cursor) {
    if (cursor >= lines.size()) throw ParseError("missing row " + std::to_string(i));
    const auto tokens = detail::split_ws(lines[cursor]);
    if (tokens.size() != header.n) {
      throw ParseError("row " + std::to_string(i) + ": expected " + std::to_string(header.n) + " tokens, got " +
                       std::to_string(tokens.size()));
    }
    for (std::size_t j = 1; j <= header.n; ++j) {
      const std::string& tok = tokens[j - 1];
      if (j < i) {
        if (tok != ".") {
          throw ParseError("row " + std::to_string(i) + ": sub-diagonal token '" + tok + "' must be '.'");
        }
        continue;
      }
      try {
        m.set(i, j, S::parse(tok));
      } catch (const ParseError& e) {
        throw ParseError("row " + std::to_string(i) + ", column " + std::to_string(j) + ": " + e.what());
      }
    }
  }
  for (; cursor < lines.size(); ++cursor) {
    if (!detail::is_blank(lines[cursor])) throw ParseError("unexpected text after row " + std::to_string(header.n));
  }
  return m;
}

template <Semiring S>
std::string format_matrix(const UpperTriangular<S>& m) {
  const std::size_t n = m.size();
  std::string out = "utm n=" + std::to_string(n) + " semiring=" + std::string(S::name) + "\n";
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      if (j > 1) out += ' ';
      out += j < i ? std::string(".") : S::format(m(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace semideriv
