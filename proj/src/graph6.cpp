#include "unigraph/graph6.hpp"

#include <algorithm>
#include <cstdint>

#include "unigraph/errors.hpp"

namespace unigraph {
namespace {

constexpr char kBias = 63;
constexpr char kMaxChar = 126;
constexpr std::string_view kHeader = ">>graph6<<";

int sixbits(std::string_view text, std::size_t pos, std::size_t base) {
  if (pos >= text.size()) throw Graph6Error("truncated graph6 record", base + pos);
  const char c = text[pos];
  if (c < kBias || c > kMaxChar) {
    throw Graph6Error("character outside 63..126", base + pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    text.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 record", base);

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != kMaxChar) {
    n = sixbits(text, 0, base);
    pos = 1;
  } else if (text.size() > 1 && text[1] == kMaxChar) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sixbits(text, i, base);
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sixbits(text, i, base);
    pos = 4;
  }
  if (n > (std::int64_t{1} << 20)) throw Graph6Error("vertex count too large", base);

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
  // A stray character is a better diagnosis than the length mismatch it causes.
  for (std::size_t i = pos; i < text.size(); ++i) sixbits(text, i, base);
  if (text.size() != pos + body) {
    throw Graph6Error("expected " + std::to_string(pos + body) + " bytes, found " +
                          std::to_string(text.size()),
                      base + std::min(text.size(), pos + body));
  }

  Graph g(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int chunk = sixbits(text, at, base);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + body - 1;
    const int chunk = sixbits(text, last, base);
    const int pad = static_cast<int>(6 - bits % 6);
    if ((chunk & ((1 << pad) - 1)) != 0) throw Graph6Error("nonzero padding bits", base + last);
  }
  return g;
}

std::string emit_graph6(const Graph& g) {
  const std::int64_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(kMaxChar);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  } else {
    out.push_back(kMaxChar);
    out.push_back(kMaxChar);
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace unigraph
