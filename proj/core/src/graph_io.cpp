#include "circflow/graph_io.hpp"

#include <charconv>
#include <cstdint>

#include "circflow/rational.hpp"

namespace circflow {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == '\n' || s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

bool parse_int(std::string_view tok, long& out) {
  if (tok.empty()) return false;
  auto res = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return res.ec == std::errc{} && res.ptr == tok.data() + tok.size();
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> toks;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) toks.push_back(s.substr(i, j - i));
    i = j;
  }
  return toks;
}

}  // namespace

Multigraph parse_multigraph(std::string_view text) {
  int line_no = 0;
  bool have_header = false;
  long n = 0;
  std::vector<std::pair<int, int>> edges;

  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                         : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    std::string_view line = strip(raw);
    if (line.empty() || line.front() == '#') continue;

    auto toks = split_ws(line);
    if (!have_header) {
      if (toks.size() != 2 || toks[0] != "mg")
        throw ParseError("expected header \"mg <n>\"", line_no);
      if (!parse_int(toks[1], n) || n < 0)
        throw ParseError("bad vertex count in header", line_no);
      have_header = true;
      continue;
    }

    if (toks.size() != 2) throw ParseError("expected edge line \"<u> <v>\"", line_no);
    long u, v;
    if (!parse_int(toks[0], u) || !parse_int(toks[1], v))
      throw ParseError("non-integer token on edge line", line_no);
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw ParseError("vertex id out of range", line_no);
    if (u == v) throw ParseError("loop rejected (u = v)", line_no);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }

  if (!have_header) throw ParseError("missing \"mg <n>\" header", line_no);
  return Multigraph(static_cast<int>(n), edges);
}

std::string serialize(const Multigraph& g) {
  std::string out = "mg " + std::to_string(g.vertex_count()) + "\n";
  for (const auto& e : g.edges())
    out += std::to_string(e.tail) + " " + std::to_string(e.head) + "\n";
  return out;
}

Multigraph parse_graph6(std::string_view line) {
  std::string_view s = strip(line);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw ParseError("empty graph6 line");

  for (char c : s)
    if (c < 63 || c > 126) throw ParseError("graph6 character out of range");

  // Order: one byte n+63 for n <= 62, or 126 followed by three bytes.
  size_t idx = 0;
  long n;
  if (s[0] != 126) {
    n = s[0] - 63;
    idx = 1;
  } else {
    if (s.size() >= 2 && s[1] == 126)
      throw ParseError("graph6 order above supported bound (n > 258047)");
    if (s.size() < 4) throw ParseError("truncated graph6 order field");
    n = (static_cast<long>(s[1] - 63) << 12) | (static_cast<long>(s[2] - 63) << 6) |
        static_cast<long>(s[3] - 63);
    idx = 4;
  }
  if (n > 100000) throw ParseError("graph6 order above supported bound");

  const long bits = n * (n - 1) / 2;
  const long need = (bits + 5) / 6;
  if (static_cast<long>(s.size()) - static_cast<long>(idx) != need)
    throw ParseError("graph6 payload length mismatch");

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = s[idx + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return Multigraph(static_cast<int>(n), edges);
}

std::vector<Multigraph> parse_graph6_file(std::string_view text) {
  std::vector<Multigraph> graphs;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? text.size() - pos
                                                                         : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    std::string_view line = strip(raw);
    if (line.empty() || line.front() == '#') continue;
    graphs.push_back(parse_graph6(line));
  }
  return graphs;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = strip(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");
  size_t slash = s.find('/');
  long num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(s, num)) throw std::invalid_argument("Rational::parse: bad integer");
  } else {
    if (!parse_int(s.substr(0, slash), num) || !parse_int(s.substr(slash + 1), den))
      throw std::invalid_argument("Rational::parse: bad fraction");
  }
  return Rational(num, den);
}

}  // namespace circflow
