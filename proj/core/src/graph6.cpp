#include "sparsehalf/graph6.hpp"

#include "sparsehalf/errors.hpp"

namespace sparsehalf {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sixbits(char ch) {
  if (ch < 63 || ch > 126) throw ParseError(std::string("invalid graph6 character '") + ch + "'");
  return ch - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line, std::size_t cap) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 record");

  std::size_t pos = 0;
  std::size_t n = 0;
  if (line[0] != 126) {
    n = static_cast<std::size_t>(sixbits(line[0]));
    pos = 1;
  } else if (line.size() >= 2 && line[1] != 126) {
    if (line.size() < 4) throw ParseError("truncated graph6 size prefix");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sixbits(line[i]));
    if (n < 63) throw ParseError("non-canonical graph6 size prefix");
    pos = 4;
  } else {
    if (line.size() < 8) throw ParseError("truncated graph6 size prefix");
    for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | static_cast<std::size_t>(sixbits(line[i]));
    if (n < 258048) throw ParseError("non-canonical graph6 size prefix");
    pos = 8;
  }
  if (n > cap)
    throw ParseError("graph6 record has " + std::to_string(n) + " vertices, above cap " +
                     std::to_string(cap));

  const std::size_t pairs = n * (n - (n ? 1 : 0)) / 2;
  const std::size_t chars = (pairs + 5) / 6;
  if (line.size() - pos != chars)
    throw ParseError("graph6 body has " + std::to_string(line.size() - pos) + " characters, expected " +
                     std::to_string(chars));

  std::vector<BitRow> rows(n, BitRow(n));
  std::size_t bit = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++bit) {
      int c = sixbits(line[pos + bit / 6]);
      if ((c >> (5 - bit % 6)) & 1) {
        rows[i].set(j);
        rows[j].set(i);
      }
    }
  }
  for (; bit < chars * 6; ++bit) {
    int c = sixbits(line[pos + bit / 6]);
    if ((c >> (5 - bit % 6)) & 1) throw ParseError("nonzero graph6 padding bits");
  }
  return Graph::from_rows(std::move(rows));
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6(std::istream& in, std::size_t cap) {
  std::vector<Graph> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    try {
      out.push_back(parse_graph6(line, cap));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

}  // namespace sparsehalf
