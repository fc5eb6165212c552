#include "srtrace/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "srtrace/builders.hpp"
#include "srtrace/errors.hpp"

namespace srtrace {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

int parse_int(const std::string& token, int line_no) {
  int value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) fail(line_no, "not an integer: '" + token + "'");
  return value;
}

}  // namespace

SimplicialComplex parse_facet_file(std::istream& in) {
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<std::vector<int>> facets;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream tokens(line);
    if (n < 0) {
      std::string keyword, count, extra;
      tokens >> keyword >> count;
      if (keyword != "n" || count.empty() || (tokens >> extra)) fail(line_no, "expected header 'n <count>'");
      n = parse_int(count, line_no);
      if (n < 0 || n > kMaxVertices) fail(line_no, "vertex count out of range 0..64");
      continue;
    }
    if (line == "{}") {
      facets.emplace_back();
      continue;
    }
    std::vector<int> facet;
    std::string token;
    while (tokens >> token) {
      const int v = parse_int(token, line_no);
      if (v < 1 || v > n) fail(line_no, "vertex " + token + " outside 1.." + std::to_string(n));
      facet.push_back(v);
    }
    facets.push_back(std::move(facet));
  }
  if (n < 0) throw ParseError("missing header 'n <count>'");
  return SimplicialComplex::from_facets(n, facets);
}

SimplicialComplex load_facet_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return parse_facet_file(in);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

std::string format_facet_file(const SimplicialComplex& k) {
  std::string out = "n " + std::to_string(k.ground_size()) + "\n";
  for (const auto& facet : k.facet_lists()) {
    if (facet.empty()) {
      out += "{}\n";
      continue;
    }
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(facet[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<CorpusEntry> corpus_entries() {
  return {
      {"rp2_6", "6-vertex real projective plane"},
      {"torus7", "7-vertex torus"},
      {"nat", "two cones over torus7 glued along it; normal pseudomanifold, not a manifold"},
      {"path:k", "path with k edges"},
      {"cycle:k", "cycle on k vertices (k >= 3)"},
      {"points:k", "k isolated vertices"},
      {"sphere:k", "boundary of the (k+1)-simplex, a k-sphere"},
      {"simplex:k", "solid k-simplex"},
  };
}

std::vector<std::string> corpus_sample() {
  return {"rp2_6",    "torus7",   "nat",      "path:2",   "path:3",   "path:4",   "path:5",
          "points:3", "points:4", "points:5", "cycle:4",  "cycle:6",  "cycle:8",  "sphere:1",
          "sphere:2", "sphere:3", "simplex:2"};
}

SimplicialComplex corpus_complex(const std::string& name) {
  if (name == "rp2_6") return rp2_6();
  if (name == "torus7") return torus7();
  if (name == "nat") return nat_example();

  const auto colon = name.find(':');
  if (colon == std::string::npos) throw ParseError("unknown corpus entry '" + name + "'");
  const std::string family = name.substr(0, colon);
  const std::string arg = name.substr(colon + 1);
  int k = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), k);
  if (ec != std::errc() || ptr != arg.data() + arg.size() || arg.empty()) {
    throw ParseError("bad parameter in corpus entry '" + name + "'");
  }
  auto check = [&](int lo, int hi) {
    if (k < lo || k > hi) {
      throw ParseError("parameter of '" + family + "' must lie in " + std::to_string(lo) + ".." +
                       std::to_string(hi));
    }
  };
  if (family == "path") {
    check(1, kMaxVertices - 1);
    return path(k);
  }
  if (family == "cycle") {
    check(3, kMaxVertices);
    return cycle(k);
  }
  if (family == "points") {
    check(1, kMaxVertices);
    return isolated_points(k);
  }
  if (family == "sphere") {
    check(0, kMaxVertices - 3);
    return simplex_boundary(k + 1);
  }
  if (family == "simplex") {
    check(0, kMaxVertices - 2);
    return solid_simplex(k);
  }
  throw ParseError("unknown corpus family '" + family + "'");
}

}  // namespace srtrace
