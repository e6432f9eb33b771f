#include "evoder/parse.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace evoder {

namespace {

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    const std::size_t start = pos;
    while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos > start) tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

// Non-blank lines that are not comments.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    const auto first = line.find_first_not_of(" \t\r\f\v");
    if (first != std::string_view::npos && line[first] != '#') lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace

RationalMatrix parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(ParseErrorKind::MalformedHeader, "missing dimension header");

  const auto header = split_whitespace(lines.front());
  int n = 0;
  const auto tok = header.front();
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), n);
  if (ec == std::errc::result_out_of_range && tok.find_first_not_of("0123456789") == std::string_view::npos) {
    throw ParseError(ParseErrorKind::DimensionTooLarge, "dimension " + std::string(tok) + " is out of range");
  }
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || n < 1) {
    throw ParseError(ParseErrorKind::MalformedHeader, "header must be a positive integer, got " + quoted(tok));
  }
  if (header.size() != 1) {
    throw ParseError(ParseErrorKind::MalformedHeader, "header line must contain only the dimension");
  }
  if (n > kMaxDimension) {
    throw ParseError(ParseErrorKind::DimensionTooLarge,
                     "dimension " + std::to_string(n) + " exceeds the limit of " + std::to_string(kMaxDimension));
  }

  const int rows_found = static_cast<int>(lines.size()) - 1;
  if (rows_found != n) {
    throw ParseError(ParseErrorKind::ShapeMismatch,
                     "expected " + std::to_string(n) + " rows, found " + std::to_string(rows_found));
  }

  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    const auto tokens = split_whitespace(lines[static_cast<std::size_t>(i) + 1]);
    for (int k = 0; k < static_cast<int>(tokens.size()) && k < n; ++k) {
      auto value = Rational::parse(tokens[static_cast<std::size_t>(k)]);
      if (!value) {
        throw ParseError(ParseErrorKind::MalformedRational,
                         "row " + std::to_string(i + 1) + " entry " + std::to_string(k + 1) + ": " +
                             quoted(tokens[static_cast<std::size_t>(k)]) + " is not a rational",
                         i + 1, k + 1);
      }
      m(i, k) = std::move(*value);
    }
    if (static_cast<int>(tokens.size()) != n) {
      throw ParseError(ParseErrorKind::ShapeMismatch,
                       "row " + std::to_string(i + 1) + " has " + std::to_string(tokens.size()) +
                           " entries, expected " + std::to_string(n),
                       i + 1);
    }
  }
  return m;
}

EvolutionAlgebra parse_algebra(std::string_view text) { return EvolutionAlgebra(parse_matrix(text)); }

std::string format_matrix(const RationalMatrix& m) {
  std::string out = std::to_string(m.size()) + "\n";
  for (int i = 0; i < m.size(); ++i) {
    for (int k = 0; k < m.size(); ++k) {
      if (k > 0) out += ' ';
      out += m(i, k).str();
    }
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("IoError", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace evoder
