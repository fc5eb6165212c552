#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "srtrace/complex.hpp"

namespace srtrace {

/// Facet file: first nonblank line "n <count>", then one facet per nonblank
/// line as space-separated labels in 1..count. Lines starting with '#' are
/// skipped. A file with no facet lines is the void complex; a line holding
/// only "{}" is the empty facet. Throws ParseError with a line number.
SimplicialComplex parse_facet_file(std::istream& in);
SimplicialComplex load_facet_file(const std::filesystem::path& path);

/// Inverse of parse_facet_file.
std::string format_facet_file(const SimplicialComplex& k);

struct CorpusEntry {
  std::string name;
  std::string description;
};

/// Registered names; parametric families are listed with a ":k" suffix.
std::vector<CorpusEntry> corpus_entries();

/// Fixed-size members used by test suites (parametric families instantiated).
std::vector<std::string> corpus_sample();

/// Resolves "rp2_6", "torus7", "nat", "path:k", "cycle:k", "points:k",
/// "sphere:k", "simplex:k". Throws ParseError for unknown names or bad k.
SimplicialComplex corpus_complex(const std::string& name);

}  // namespace srtrace
