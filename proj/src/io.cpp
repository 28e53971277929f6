#include "hampack/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "hampack/errors.hpp"

namespace hampack {

namespace {

struct Token {
  std::string_view text;
  int column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

long long to_int(const Token& t, int line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
    throw ParseError("expected an integer, got '" + std::string(t.text) + "'", line, t.column);
  }
  return v;
}

// Shared reader for both formats. `tag` is empty for edge lines, "a" for arcs.
template <class Sink>
void read_pairs(std::istream& in, std::string_view tag, Sink&& sink, int& n_out) {
  std::string raw;
  int line_no = 0;
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  long long seen = 0;
  int last_line = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text.front() == '#') continue;
    last_line = line_no;
    if (!have_header) {
      if (tokens[0].text != "p") {
        throw ParseError("expected header 'p <n> <m>'", line_no, tokens[0].column);
      }
      if (tokens.size() != 3) throw ParseError("header needs exactly two integers", line_no, 1);
      n = to_int(tokens[1], line_no);
      m = to_int(tokens[2], line_no);
      if (n < 0 || n > kMaxVertices) {
        if (n > kMaxVertices) {
          throw CapacityError("vertex count " + std::to_string(n) + " exceeds the limit of " +
                              std::to_string(kMaxVertices));
        }
        throw ParseError("vertex count must be non-negative", line_no, tokens[1].column);
      }
      if (m < 0) throw ParseError("edge count must be non-negative", line_no, tokens[2].column);
      have_header = true;
      n_out = static_cast<int>(n);
      sink.start(static_cast<int>(n));
      continue;
    }
    std::size_t first = 0;
    if (!tag.empty()) {
      if (tokens[0].text != tag) {
        throw ParseError("expected '" + std::string(tag) + " <u> <v>'", line_no, tokens[0].column);
      }
      first = 1;
    }
    if (tokens.size() != first + 2) {
      throw ParseError("expected exactly two endpoints", line_no, tokens[0].column);
    }
    long long u = to_int(tokens[first], line_no);
    long long v = to_int(tokens[first + 1], line_no);
    if (u < 0 || u >= n) throw ParseError("endpoint out of range", line_no, tokens[first].column);
    if (v < 0 || v >= n) throw ParseError("endpoint out of range", line_no, tokens[first + 1].column);
    if (u == v) throw ParseError("loop", line_no, tokens[first].column);
    if (seen == m) throw ParseError("more edges than the header declares", line_no, 1);
    sink.pair(static_cast<int>(u), static_cast<int>(v), line_no, tokens[first].column);
    ++seen;
  }
  if (!have_header) throw ParseError("missing header 'p <n> <m>'", line_no + 1, 1);
  if (seen != m) {
    throw ParseError("header declares " + std::to_string(m) + " edges but " +
                         std::to_string(seen) + " were given",
                     last_line, 1);
  }
}

struct GraphSink {
  Graph g;
  void start(int n) { g = Graph(n); }
  void pair(int u, int v, int line, int col) {
    if (u > v) throw ParseError("edge endpoints must satisfy u < v", line, col);
    if (g.has_edge(u, v)) throw ParseError("duplicate edge", line, col);
    g.add_edge(u, v);
  }
};

struct DiGraphSink {
  DiGraph d;
  void start(int n) { d = DiGraph(n); }
  void pair(int u, int v, int line, int col) {
    if (d.has_arc(u, v)) throw ParseError("duplicate arc", line, col);
    d.add_arc(u, v);
  }
};

}  // namespace

Graph read_edge_list(std::istream& in) {
  GraphSink sink;
  int n = 0;
  read_pairs(in, "", sink, n);
  return std::move(sink.g);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "p " << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

void save_edge_list(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_edge_list(out, g);
}

DiGraph read_arc_list(std::istream& in) {
  DiGraphSink sink;
  int n = 0;
  read_pairs(in, "a", sink, n);
  return std::move(sink.d);
}

DiGraph parse_arc_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_arc_list(in);
}

void write_arc_list(std::ostream& out, const DiGraph& d) {
  out << "p " << d.order() << ' ' << d.arc_count() << '\n';
  for (auto [u, v] : d.arcs()) out << "a " << u << ' ' << v << '\n';
}

std::string format_arc_list(const DiGraph& d) {
  std::ostringstream out;
  write_arc_list(out, d);
  return out.str();
}

}  // namespace hampack
