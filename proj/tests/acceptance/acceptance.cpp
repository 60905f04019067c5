// Acceptance suite. `nsd_acceptance N` checks criterion N and prints one
// PASS/FAIL line followed by details of any failing instance. Without an
// argument every criterion runs in turn.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "naive_oracle.hpp"
#include "nsd/experiments.hpp"
#include "nsd/families.hpp"
#include "nsd/io.hpp"
#include "nsd/solver.hpp"
#include "nsd/weighters.hpp"

namespace {

using namespace nsd;

struct Outcome {
  std::size_t checked = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void fail(const std::string& what) { failures.push_back(what); }
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (!ok) fail(what);
  }
};

template <typename... Args>
std::string str(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

std::string value_text(const ChiResult& r, Weight max_k) {
  switch (r.status) {
    case ChiResult::Status::exact: return std::to_string(r.value);
    case ChiResult::Status::exceeds_max_k: return ">" + std::to_string(max_k);
    case ChiResult::Status::budget_exhausted: return "budget";
  }
  return "?";
}

ChiResult chi(const Hypergraph& h, SigmaMode mode, Weight max_k = 3) {
  SearchConfig cfg;
  cfg.mode = mode;
  cfg.max_k = max_k;
  return exact_chi(h, cfg);
}

bool chi_equals(const ChiResult& r, Weight v) {
  return r.status == ChiResult::Status::exact && r.value == v;
}

/// Builds the constructive weighting and checks it independently of the
/// weighter's own self-check. Empty string on success.
std::string check_construction(const FamilySpec& spec, SigmaMode mode, Weight bound) {
  try {
    const WeighOutcome out = weigh(spec, mode);
    if (!verify(out.instance.hypergraph, out.weighting, mode).proper) {
      return "construction not proper";
    }
    if (out.weighting.largest_used() > bound) {
      return str("construction uses weight ", out.weighting.largest_used(), " > ", bound);
    }
    return "";
  } catch (const std::exception& e) {
    return str("construction failed: ", e.what());
  }
}

// Closed forms restated from the characterizations, kept separate from
// predict() so a wrong prediction cannot confirm itself.

Weight expected_path(std::size_t r, std::size_t t, std::size_t l) {
  if (2 * t == r) return 2;
  if (2 * t > r && r % (r - t) == 0 && l + 1 >= 2 * r / (r - t)) return 2;
  return 1;
}

Weight expected_cycle(std::size_t r, std::size_t t, std::size_t l) {
  if (2 * t == r) return l % 4 == 0 ? 2 : 3;
  if (2 * t > r && r % (r - t) == 0) return 2;
  return 1;
}

Weight expected_theta_half(std::vector<std::size_t> lengths) {
  std::sort(lengths.begin(), lengths.end());
  const bool one_then_ones = lengths[0] == 1 &&
                             std::all_of(lengths.begin() + 1, lengths.end(),
                                         [](std::size_t l) { return l % 4 == 1; });
  if (one_then_ones) return 3;
  if (std::all_of(lengths.begin(), lengths.end(), [](std::size_t l) { return l == 2; })) return 1;
  return 2;
}

Outcome criterion_cycles() {
  Outcome o;
  struct Shape {
    std::size_t r, t, lo, hi;
  };
  for (Shape s : {Shape{2, 1, 3, 12}, Shape{4, 2, 3, 8}, Shape{6, 3, 3, 8}}) {
    for (std::size_t l = s.lo; l <= s.hi; ++l) {
      const Hypergraph h = tight_cycle(s.r, s.t, l);
      const ChiResult r = chi(h, SigmaMode::edge_only);
      const Weight want = expected_cycle(s.r, s.t, l);
      o.expect(chi_equals(r, want), str("cycle r=", s.r, " t=", s.t, " l=", l, ": exact ",
                                        value_text(r, 3), ", expected ", want));
    }
  }
  return o;
}

Outcome criterion_paths() {
  Outcome o;
  for (std::size_t r = 2; r <= 6; ++r) {
    for (std::size_t t = 1; t < r; ++t) {
      for (std::size_t l = 3; l <= 8; ++l) {
        const std::string name = str("path r=", r, " t=", t, " l=", l);
        const Weight want = expected_path(r, t, l);
        const ChiResult got = chi(tight_path(r, t, l), SigmaMode::edge_only);
        o.expect(chi_equals(got, want),
                 str(name, ": exact ", value_text(got, 3), ", expected ", want));
        const std::string built = check_construction(TightPathSpec{r, t, l},
                                                     SigmaMode::edge_only, want);
        o.expect(built.empty(), name + ": " + built);
      }
    }
  }
  return o;
}

Outcome criterion_theta() {
  Outcome o;
  std::vector<std::vector<std::size_t>> triples;
  for (std::size_t a = 1; a <= 10; ++a) {
    for (std::size_t b = a; a + b <= 11; ++b) {
      for (std::size_t c = b; a + b + c <= 12; ++c) triples.push_back({a, b, c});
    }
  }
  std::size_t unbuildable = 0;
  for (const auto& lengths : triples) {
    const std::string name = str("theta l=", lengths[0], ",", lengths[1], ",", lengths[2]);
    const ThetaSpec spec{4, 2, lengths};
    FamilyInstance inst;
    try {
      inst = generate(spec);
    } catch (const std::invalid_argument&) {
      // Two single-edge branches would be the same edge.
      ++unbuildable;
      continue;
    }
    const Weight want = expected_theta_half(lengths);
    const ChiResult got = chi(inst.hypergraph, SigmaMode::edge_only);
    o.expect(chi_equals(got, want),
             str(name, ": exact ", value_text(got, 3), ", expected ", want));
    const std::string built = check_construction(spec, SigmaMode::edge_only, want);
    o.expect(built.empty(), name + ": " + built);
  }
  o.notes.push_back(str(triples.size() - unbuildable, " triples checked; ", unbuildable,
                        " skipped because two length-1 branches would repeat an edge"));
  return o;
}

Outcome criterion_planes() {
  Outcome o;
  struct Item {
    bool projective;
    std::size_t q;
  };
  for (Item it : {Item{false, 2}, Item{false, 3}, Item{false, 5}, Item{true, 2}, Item{true, 3}}) {
    const std::string name = str(it.projective ? "projective" : "affine", " q=", it.q);
    const PlaneStructure pl = it.projective ? projective_plane(it.q) : affine_plane(it.q);
    const FamilySpec spec = it.projective ? FamilySpec{ProjectivePlaneSpec{it.q}}
                                          : FamilySpec{AffinePlaneSpec{it.q}};
    const std::string built = check_construction(spec, SigmaMode::edge_only, 2);
    o.expect(built.empty(), name + ": " + built);
    if (it.projective) {
      o.expect(is_regular(pl.hypergraph).has_value(), name + ": not regular");
    } else {
      o.expect(!testing::naive_feasible(pl.hypergraph, SigmaMode::edge_only, 1),
               name + ": all-ones weighting is proper");
    }
    if (it.q == 2) {
      const auto value = testing::naive_chi(pl.hypergraph, SigmaMode::edge_only, 3);
      o.expect(value == 2, str(name, ": full enumeration gives ",
                               value ? std::to_string(*value) : std::string(">3"),
                               ", expected 2"));
    }
  }
  return o;
}

Outcome criterion_knrt() {
  Outcome o;
  for (std::size_t n : {9, 10, 11}) {
    for (std::size_t t : {1, 2}) {
      const std::string name = str("n=", n, " r=3 t=", t);
      const PartitionedHypergraph g = complete_npartite_uniform(n, 3, t);
      const PartitionPlan plan = plan_knrt(g, 3, t);
      std::string degs;
      for (std::size_t d : plan.observed_degree) degs += (degs.empty() ? "" : ",") + std::to_string(d);
      o.expect(plan.observed_degree == plan.formula_degree && plan.uniform_within_classes,
               name + ": class degrees differ from the closed form");
      o.expect(plan.strictly_increasing(),
               name + ": class degrees not strictly increasing (" + degs + ")");
      try {
        const Weighting w = weight_knrt(g, 3, t);
        o.expect(verify(g.hypergraph, w, SigmaMode::edge_only).proper && w.largest_used() <= 2,
                 name + ": weighting not proper");
      } catch (const std::exception& e) {
        o.expect(false, name + ": construction failed: " + e.what());
      }
      o.expect(is_regular(g.hypergraph).has_value(), name + ": not regular");
    }
  }
  return o;
}

Outcome criterion_knr() {
  Outcome o;
  for (std::size_t n = 4; n <= 8; ++n) {
    const Hypergraph h = complete_uniform(n, 3);
    const Weighting w = weight_knr_total(n, 3);
    for (SigmaMode mode : {SigmaMode::total, SigmaMode::full_total}) {
      o.expect(verify(h, w, mode).proper && w.largest_used() <= 2,
               str("n=", n, " mode ", to_string(mode), ": weighting not proper"));
      if (n <= 5) {
        const auto value = testing::naive_chi(h, mode, 2);
        o.expect(value == 2, str("n=", n, " mode ", to_string(mode), ": enumeration gives ",
                                 value ? std::to_string(*value) : std::string(">2")));
      }
    }
  }
  return o;
}

bool hypothesis(const std::vector<std::size_t>& sizes) {
  const auto big = std::count_if(sizes.begin(), sizes.end(), [](std::size_t s) { return s > 1; });
  return static_cast<std::size_t>(big) >= (sizes.size() - 1) / 2;
}

Outcome criterion_multipartite() {
  Outcome o;
  testing::Gen gen(20240601);
  std::size_t oracle_rows = 0, distinct_rows = 0;
  for (int sample = 0; sample < 30;) {
    auto sizes = gen.part_sizes(6, 4);
    const std::size_t total = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
    // K_2 has no proper weighting at all.
    if (total > 12 || total < 3 || !hypothesis(sizes)) continue;
    ++sample;
    std::string name = "parts";
    for (std::size_t s : sizes) name += " " + std::to_string(s);
    const std::string built = check_construction(MultipartiteSpec{sizes}, SigmaMode::edge_only, 2);
    o.expect(built.empty(), name + ": " + built);
    const Hypergraph h = complete_multipartite(sizes).hypergraph;
    if (h.edge_count() > 14) continue;
    ++oracle_rows;
    const std::set<std::size_t> unique(sizes.begin(), sizes.end());
    if (unique.size() == sizes.size()) ++distinct_rows;
    const ChiResult got = chi(h, SigmaMode::edge_only);
    o.expect(chi_equals(got, 2), str(name, ": exact ", value_text(got, 3), ", expected 2"));
  }
  o.notes.push_back(str(oracle_rows, " samples within the oracle cap, ", distinct_rows,
                        " with pairwise distinct part sizes"));
  return o;
}

Outcome criterion_three_partite() {
  Outcome o;
  std::size_t with_equal = 0;
  for (std::size_t a = 1; a <= 8; ++a) {
    for (std::size_t b = a; a + b <= 9; ++b) {
      for (std::size_t c = b; a + b + c <= 10; ++c) {
        if (c == 1) continue;
        const bool distinct = a != b && b != c;
        if (distinct) continue;
        ++with_equal;
        const std::string name = str("parts ", a, " ", b, " ", c);
        const auto g = complete_multipartite({a, b, c});
        try {
          const Weighting w = weight_complete_3partite_ven(g);
          o.expect(verify(g.hypergraph, w, SigmaMode::full_total).proper &&
                       w.largest_used() <= 2,
                   name + ": weighting not proper");
        } catch (const std::exception& e) {
          o.expect(false, name + ": construction failed: " + e.what());
        }
        const ChiResult got = chi(g.hypergraph, SigmaMode::full_total);
        o.expect(chi_equals(got, 2), str(name, ": exact ", value_text(got, 3), ", expected 2"));
      }
    }
  }
  // All-distinct triples complete the piecewise statement.
  for (const std::vector<std::size_t>& sizes :
       std::vector<std::vector<std::size_t>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
                                             {1, 2, 7}, {1, 3, 5}, {2, 3, 5}}) {
    const auto g = complete_multipartite(sizes);
    const ChiResult got = chi(g.hypergraph, SigmaMode::full_total);
    o.expect(chi_equals(got, 1), str("parts ", sizes[0], " ", sizes[1], " ", sizes[2],
                                     ": exact ", value_text(got, 3), ", expected 1"));
  }
  o.notes.push_back(str(with_equal, " triples with a repeated size"));
  return o;
}

Outcome criterion_random() {
  Outcome o;
  SearchConfig cfg;
  cfg.node_budget = 5'000'000;
  const RandomReport four = random_trial_batch(12, 4, 0.5, 200, 7, cfg);
  o.expect(four.fraction_chi_le.at(1) >= 0.9,
           str("r=4: fraction with chi^e = 1 is ", four.fraction_chi_le.at(1), " < 0.9"));
  const RandomReport three = random_trial_batch(10, 3, 0.5, 100, 7, cfg);
  o.expect(three.nice_fraction_chi_le.at(2) == 1.0,
           str("r=3: fraction of nice samples with chi^e <= 2 is ",
               three.nice_fraction_chi_le.at(2), " (", three.budget_exhausted,
               " budget-exhausted)"));
  o.notes.push_back(str("r=4 frac(chi<=1)=", four.fraction_chi_le.at(1),
                        ", r=3 nice frac(chi<=2)=", three.nice_fraction_chi_le.at(2),
                        ", r=3 frac(chi<=1)=", three.fraction_chi_le.at(1)));
  return o;
}

Outcome criterion_oracle() {
  Outcome o;
  testing::Gen gen(424242);
  for (int i = 0; i < 50; ++i) {
    const Hypergraph h = gen.small_hypergraph(8, 10, 4);
    const std::string name = str("sample ", i, " (", h.vertex_count(), " vertices, ",
                                 h.edge_count(), " edges)");
    const ChiResult got = chi(h, SigmaMode::edge_only);
    const auto naive = testing::naive_chi(h, SigmaMode::edge_only, 3);
    const bool same = naive ? chi_equals(got, *naive)
                            : got.status == ChiResult::Status::exceeds_max_k;
    o.expect(same, str(name, ": pruned ", value_text(got, 3), ", naive ",
                       naive ? std::to_string(*naive) : std::string(">3")));
    if (got.witness) {
      o.expect(verify(h, *got.witness, SigmaMode::edge_only).proper,
               name + ": witness fails verification");
    }
  }
  return o;
}

Outcome criterion_blowup() {
  Outcome o;
  testing::Gen gen(31337);
  for (int i = 0; i < 10; ++i) {
    const Hypergraph base = gen.nice_bipartite_graph(5, 10);
    const std::size_t r = gen.range(3, 6);
    const std::size_t odd = gen.range(1, r - 1);
    const auto sizes = bipartite_blowup_sizes(base, r, odd);
    const PartitionedHypergraph blown = blowup_transform(base, sizes);
    const std::string name = str("base ", i, " (", base.edge_count(), " edges, r=", r, ")");
    const ChiResult a = chi(base, SigmaMode::edge_only);
    const ChiResult b = chi(blown.hypergraph, SigmaMode::edge_only);
    o.expect(a.status == ChiResult::Status::exact && b.status == a.status && a.value == b.value,
             str(name, ": base ", value_text(a, 3), ", blow-up ", value_text(b, 3)));
    const auto classes = twin_classes(blown.hypergraph);
    for (const auto& part : blown.parts) {
      if (part.size() < 2) continue;
      std::vector<VertexId> sorted(part.begin(), part.end());
      std::sort(sorted.begin(), sorted.end());
      o.expect(std::find(classes.begin(), classes.end(), sorted) != classes.end(),
               name + ": a blown-up class is not a twin class");
    }
  }
  return o;
}

struct Criterion {
  const char* title;
  std::function<Outcome()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"tight cycles match the characterization", criterion_cycles},
      {"tight paths match the characterization", criterion_paths},
      {"theta hypergraphs r=4 t=2", criterion_theta},
      {"affine and projective planes", criterion_planes},
      {"complete n-partite 3-uniform hypergraphs", criterion_knrt},
      {"complete 3-uniform hypergraphs, total modes", criterion_knr},
      {"complete multipartite graphs, edge weights", criterion_multipartite},
      {"complete 3-partite graphs, full total sums", criterion_three_partite},
      {"random hypergraph trends", criterion_random},
      {"pruned search equals full enumeration", criterion_oracle},
      {"blow-up invariance and twins", criterion_blowup},
  };
  return all;
}

bool run(std::size_t id) {
  const Criterion& c = criteria()[id - 1];
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.fail(str("unexpected exception: ", e.what()));
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool pass = o.failures.empty();
  std::printf("%s criterion %zu: %s (%zu checks, %zu failed, %.1fs)\n", pass ? "PASS" : "FAIL",
              id, c.title, o.checked, o.failures.size(), secs);
  for (const auto& note : o.notes) std::printf("  note: %s\n", note.c_str());
  for (const auto& f : o.failures) std::printf("  failed: %s\n", f.c_str());
  std::fflush(stdout);
  return pass;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t count = criteria().size();
  if (argc > 2) {
    std::fprintf(stderr, "usage: %s [criterion 1..%zu]\n", argv[0], count);
    return 2;
  }
  if (argc == 2) {
    std::size_t id = 0;
    const std::string arg = argv[1];
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), id);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || id < 1 || id > count) {
      std::fprintf(stderr, "criterion must be 1..%zu\n", count);
      return 2;
    }
    return run(id) ? 0 : 1;
  }
  bool all = true;
  for (std::size_t id = 1; id <= count; ++id) all = run(id) && all;
  return all ? 0 : 1;
}
