// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "srtrace/builders.hpp"
#include "srtrace/classifier.hpp"
#include "srtrace/homology.hpp"
#include "srtrace/io.hpp"
#include "srtrace/oracle.hpp"
#include "srtrace/sweep.hpp"

using namespace srtrace;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec GF2 = FieldSpec::prime(2);
const FieldSpec GF3 = FieldSpec::prime(3);

// Collects the first few mismatches of a criterion.
struct Log {
  std::vector<std::string> failures;
  std::string info;

  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_s;  // 0 = no runtime bound
  std::function<void(Log&)> body;
};

std::string dims_str(const TraceComponents& t) {
  return "(" + std::to_string(t.tr0) + "," + std::to_string(t.tr1) + "," + std::to_string(t.tr2) + ")";
}

void rp2_trace(Log& log) {
  for (const auto& f : {GF3, Q}) {
    const auto k = rp2_6();
    log.expect(trace_class(k, f) == TraceClass::TrMaxSquared, "classifier over " + f.to_string());
    const auto t = trace_components(k, f);
    log.expect(t.tr0 == 0 && t.tr1 == 0 && t.tr2 == 21, "oracle dims " + dims_str(t) + " over " + f.to_string());
    log.expect(t.r2 == 21, "dim R2 = " + std::to_string(t.r2));
    log.expect(static_cast<int>(monomial_basis(k, 2).size()) == 21, "monomial count in degree 2");
  }
  log.info = "dims (0,0,21) over gf:3 and q";
}

void rp2_char2(Log& log) {
  const auto k = rp2_6();
  log.expect(!is_cohen_macaulay(k, GF2), "Reisner accepted rp2_6 over gf:2");
  log.expect(is_k_orientable(k, GF2), "not gf:2-orientable");
  const auto gens = grabe_module_generators(k, GF2);
  log.expect(gens.multiplicity == std::map<Face, int>{{Face{}, 1}}, "Gräbe generators not a single one at {}");
  log.info = "not CM, orientable, one generator at {}";
}

void long_paths_and_points(Log& log) {
  std::vector<std::pair<std::string, SimplicialComplex>> ks;
  for (int m = 3; m <= 5; ++m) ks.emplace_back("path:" + std::to_string(m), path(m));
  for (int m = 3; m <= 5; ++m) ks.emplace_back("points:" + std::to_string(m), isolated_points(m));
  for (const auto& [name, k] : ks) {
    for (const auto& f : {GF2, GF3, Q}) {
      const auto start = std::chrono::steady_clock::now();
      log.expect(trace_class(k, f) == TraceClass::TrMaximal, name + " classifier over " + f.to_string());
      const auto t = trace_components(k, f);
      log.expect(t.tr0 == 0 && t.tr1 == t.r1, name + " oracle " + dims_str(t) + " over " + f.to_string());
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      log.expect(s < 5.0, name + " took " + std::to_string(s) + " s");
    }
  }
  log.info = "6 complexes x 3 fields, each < 5 s";
}

void spheres(Log& log) {
  std::vector<std::pair<std::string, SimplicialComplex>> ks;
  for (int m = 4; m <= 8; ++m) ks.emplace_back("cycle:" + std::to_string(m), cycle(m));
  for (int k = 2; k <= 4; ++k) ks.emplace_back("bd:" + std::to_string(k), simplex_boundary(k));
  for (const auto& [name, k] : ks) {
    for (const auto& f : {GF2, GF3, Q}) {
      log.expect(trace_class(k, f) == TraceClass::TrUnit, name + " classifier over " + f.to_string());
      const auto t = trace_components(k, f);
      log.expect(t.verdict == TraceVerdict::Unit, name + " oracle " + dims_str(t) + " over " + f.to_string());
    }
  }
  log.info = "8 spheres x 3 fields";
}

void nat(Log& log) {
  const auto k = nat_example();
  log.expect(is_strongly_connected(k), "not strongly connected");
  log.expect(is_normal(k), "not normal");
  log.expect(is_pseudomanifold(k), "not a pseudomanifold");
  for (const auto& f : {Q, GF2, GF3}) {
    log.expect(!is_homology_manifold(k, f), "homology manifold over " + f.to_string());
    log.expect(!is_gorenstein_on_punctured_spectrum(k, f), "punctured-Gorenstein over " + f.to_string());
    log.expect(!is_gorenstein_on_punctured_spectrum(k, f, true), "all-faces check over " + f.to_string());
  }
  log.info = "normal pseudomanifold, no manifold, not punctured-Gorenstein";
}

void sweep5(Log& log) {
  SweepConfig config;
  config.max_n = 5;
  const auto s = run_sweep(config);
  for (std::size_t i = 0; i < s.violations.size() && i < 5; ++i) log.failures.push_back(s.violations[i]);
  if (s.violations.size() > 5) log.failures.push_back("... " + std::to_string(s.violations.size()) + " total");
  // The enumerator's own count, minus the void complex.
  log.expect(s.total == 7580, "complex count " + std::to_string(s.total));
  for (const char* name : {"oracle_agrees_with_classifier", "punctured_gorenstein_level", "nearly_implies_punctured",
                           "gorenstein_implies_nearly", "punctured_gorenstein_trichotomy",
                           "normal_pseudomanifold_char2_generator", "punctured_gorenstein_vertex_shortcut"}) {
    const auto it = s.exercised.find(name);
    log.expect(it != s.exercised.end() && it->second > 0, std::string("check never exercised: ") + name);
  }
  std::ostringstream info;
  info << s.total << " complexes x 3 fields, " << s.exercised.at("oracle_agrees_with_classifier")
       << " oracle comparisons, " << s.violations.size() << " violations";
  log.info = info.str();
}

void orientability(Log& log) {
  std::vector<SimplicialComplex> ks{torus7(), rp2_6()};
  for (int n = 1; n <= 5; ++n) {
    ComplexStream stream(n);
    while (auto k = stream.next()) {
      if (!k->is_void() && is_pseudomanifold(*k)) ks.push_back(*k);
    }
  }
  for (const auto& k : ks) {
    const auto top = [&](const FieldSpec& f) { return reduced_betti(k, f).back(); };
    const bool walk = orientable_sign_walk(k).has_value();
    const std::string id = k.canonical_encoding();
    log.expect(walk == (top(Q) == 1), id + ": sign walk vs q");
    log.expect((top(Q) == 1) == (top(GF3) == 1), id + ": q vs gf:3");
    log.expect(top(GF2) == 1, id + ": gf:2 top Betti");
  }
  log.info = std::to_string(ks.size()) + " pseudomanifolds";
}

void rp2_level(Log& log) {
  const auto k = rp2_6();
  log.expect(is_level(k, Q), "not level");
  log.expect(cm_type(k, Q) == 6, "type " + std::to_string(cm_type(k, Q)));
  log.info = "level, type 6";
}

void oracle_consistency(Log& log) {
  std::mt19937 rng(20240);
  int runs = 0;
  for (const auto& name : corpus_sample()) {
    const auto k = corpus_complex(name);
    for (const auto& f : {GF2, GF3, Q}) {
      if (!is_cohen_macaulay(k, f)) continue;
      OracleOptions scheduled, localized;
      localized.strategy = NzdStrategy::FacetLocalized;
      const auto base = trace_components(k, f, scheduled);
      const auto other = trace_components(k, f, localized);
      const auto same = [](const TraceComponents& a, const TraceComponents& b) {
        return a.tr0 == b.tr0 && a.tr1 == b.tr1 && a.tr2 == b.tr2;
      };
      log.expect(same(base, other), name + " over " + f.to_string() + ": nzd choice changes dims " +
                                        dims_str(base) + " vs " + dims_str(other));
      for (int t = 0; t < 20; ++t) {
        std::vector<int> perm(static_cast<std::size_t>(k.ground_size()));
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto r = trace_components(relabel(k, perm), f, scheduled);
        log.expect(same(base, r), name + " over " + f.to_string() + ": relabeling changes dims");
        ++runs;
      }
    }
  }
  log.info = std::to_string(runs) + " relabeled runs, two nzd strategies";
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "rp2_6 over gf:3 and q is TrMaxSquared with trace dims (0,0,21)", 10, rp2_trace},
      {2, "rp2_6 over gf:2: not CM, orientable, single generator at {}", 5, rp2_char2},
      {3, "long paths and >= 3 points are TrMaximal, tr1 = R1", 0, long_paths_and_points},
      {4, "cycles 4..8 and simplex boundaries 2..4 are TrUnit in both engines", 0, spheres},
      {5, "nat_example predicates", 0, nat},
      {6, "exhaustive sweep n <= 5 over gf:2, gf:3, q", 600, sweep5},
      {7, "orientability cross-validation", 0, orientability},
      {8, "rp2_6 over q is level of type 6", 0, rp2_level},
      {9, "oracle independent of nzd choice and relabeling", 0, oracle_consistency},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Log log;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && s >= c.limit_s) log.failures.push_back("runtime over limit");
    const bool ok = log.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s [%d] %s: %s (%.2f s", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                ok ? log.info.c_str() : log.failures.front().c_str(), s);
    if (c.limit_s > 0) std::printf(", limit %.0f s", c.limit_s);
    std::printf(", exact)\n");
    for (std::size_t i = 1; i < log.failures.size() && i < 10; ++i) std::printf("    %s\n", log.failures[i].c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
