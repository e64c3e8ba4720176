#include "rhg/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rhg {

namespace {

[[noreturn]] void parse_fail(std::uint64_t line, const std::string& what) {
  throw std::runtime_error("parse error at line " + std::to_string(line) +
                           ": " + what);
}

struct Header {
  std::uint32_t r, n;
  std::uint64_t m;
};

Header read_header(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) parse_fail(1, "missing header");
  std::istringstream hs(line);
  Header h{};
  if (!(hs >> h.r >> h.n >> h.m)) parse_fail(1, "expected 'r n m'");
  std::string extra;
  if (hs >> extra) parse_fail(1, "trailing tokens in header");
  return h;
}

}  // namespace

void write_hypergraph(std::ostream& out, const Hypergraph& h) {
  out << h.r() << ' ' << h.n() << ' ' << h.m() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (i) out << ' ';
      out << e[i];
    }
    out << '\n';
  }
}

Hypergraph read_hypergraph(std::istream& in) {
  Header hd = read_header(in);
  std::vector<Edge> edges;
  edges.reserve(hd.m);
  std::string line;
  for (std::uint64_t i = 0; i < hd.m; ++i) {
    if (!std::getline(in, line)) parse_fail(i + 2, "missing edge line");
    std::istringstream es(line);
    Edge e;
    Vertex v;
    while (es >> v) e.push_back(v);
    if (!es.eof()) parse_fail(i + 2, "bad vertex token");
    if (e.size() != hd.r) parse_fail(i + 2, "edge arity != r");
    edges.push_back(std::move(e));
  }
  return Hypergraph(hd.n, hd.r, std::move(edges));
}

void write_oriented(std::ostream& out, const OrientedHypergraph& h) {
  out << h.r() << ' ' << h.n() << ' ' << h.m() << '\n';
  for (const OrientedEdge& e : h.edges()) {
    out << e.tail << " |";
    for (Vertex v : e.heads) out << ' ' << v;
    out << '\n';
  }
}

OrientedHypergraph read_oriented(std::istream& in) {
  Header hd = read_header(in);
  std::vector<OrientedEdge> edges;
  edges.reserve(hd.m);
  std::string line;
  for (std::uint64_t i = 0; i < hd.m; ++i) {
    if (!std::getline(in, line)) parse_fail(i + 2, "missing edge line");
    std::istringstream es(line);
    OrientedEdge e;
    std::string bar;
    if (!(es >> e.tail >> bar) || bar != "|")
      parse_fail(i + 2, "expected 'tail | heads'");
    Vertex v;
    while (es >> v) e.heads.push_back(v);
    if (!es.eof()) parse_fail(i + 2, "bad head token");
    if (e.heads.size() + 1 != hd.r) parse_fail(i + 2, "edge arity != r");
    edges.push_back(std::move(e));
  }
  return OrientedHypergraph(hd.n, hd.r, std::move(edges));
}

std::string to_text(const Hypergraph& h) {
  std::ostringstream os;
  write_hypergraph(os, h);
  return os.str();
}

std::string to_text(const OrientedHypergraph& h) {
  std::ostringstream os;
  write_oriented(os, h);
  return os.str();
}

namespace {

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  return f;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  return f;
}

}  // namespace

void save_hypergraph(const std::string& path, const Hypergraph& h) {
  auto f = open_out(path);
  write_hypergraph(f, h);
}

Hypergraph load_hypergraph(const std::string& path) {
  auto f = open_in(path);
  return read_hypergraph(f);
}

void save_oriented(const std::string& path, const OrientedHypergraph& h) {
  auto f = open_out(path);
  write_oriented(f, h);
}

OrientedHypergraph load_oriented(const std::string& path) {
  auto f = open_in(path);
  return read_oriented(f);
}

bool file_is_oriented(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  std::getline(f, line);  // header
  if (!std::getline(f, line)) return false;
  return line.find('|') != std::string::npos;
}

}  // namespace rhg
