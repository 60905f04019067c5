#include "nsd/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <random>
#include <thread>

namespace nsd {

namespace {

/// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <typename Body>
void parallel_for(std::size_t count, std::size_t jobs, Body&& body) {
  jobs = std::max<std::size_t>(1, std::min(jobs, count));
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> threads;
  for (std::size_t j = 0; j < jobs; ++j) {
    threads.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) body(i);
    });
  }
  for (auto& t : threads) t.join();
}

TableRow make_row(const FamilySpec& spec, SigmaMode mode, std::size_t cap,
                  const SearchConfig& search) {
  TableRow row;
  row.spec = spec;
  row.mode = mode;
  std::optional<Hypergraph> h;
  try {
    h = generate(spec).hypergraph;
    row.edge_count = h->edge_count();
  } catch (const std::exception& e) {
    row.status = std::string("generate: ") + e.what();
    return row;
  }

  row.predicted = predict(spec, mode);
  if (row.predicted) {
    try {
      WeighOutcome out = weigh(spec, mode);
      row.constructive_ok = out.weighting.largest_used() <= row.predicted->value;
      if (!row.constructive_ok) row.status = "weight: exceeds predicted value";
    } catch (const std::exception& e) {
      row.status = std::string("weigh: ") + e.what();
    }
  }

  if (row.edge_count > 0 && row.edge_count <= cap) {
    SearchConfig cfg = search;
    cfg.mode = mode;
    try {
      row.exact = exact_chi(*h, cfg);
    } catch (const std::exception& e) {
      if (row.status.empty()) row.status = std::string("exact: ") + e.what();
    }
  }
  if (row.predicted && row.exact && row.exact->status == ChiResult::Status::exact) {
    row.agreement =
        row.exact->value == row.predicted->value ? Agreement::agree : Agreement::disagree;
  } else if (row.predicted && row.exact &&
             row.exact->status == ChiResult::Status::exceeds_max_k &&
             row.predicted->value <= search.max_k) {
    row.agreement = Agreement::disagree;
  }
  return row;
}

}  // namespace

std::string_view to_string(Agreement a) {
  switch (a) {
    case Agreement::agree: return "agree";
    case Agreement::disagree: return "disagree";
    case Agreement::skipped: return "skipped";
  }
  return "?";
}

std::vector<TableRow> family_table(const std::vector<FamilySpec>& grid, SigmaMode mode,
                                   std::size_t oracle_edge_cap, const SearchConfig& search,
                                   std::size_t jobs) {
  std::vector<TableRow> rows(grid.size());
  parallel_for(grid.size(), jobs, [&](std::size_t i) {
    rows[i] = make_row(grid[i], mode, oracle_edge_cap, search);
  });
  return rows;
}

RandomReport random_trial_batch(std::size_t n, std::size_t r, double p, std::size_t trials,
                                std::uint64_t seed, const SearchConfig& search,
                                std::size_t jobs) {
  RandomReport report;
  report.n = n;
  report.r = r;
  report.p = p;
  report.trials = trials;
  report.seed = seed;

  std::mt19937_64 master(seed);
  std::vector<std::uint64_t> seeds(trials);
  for (auto& s : seeds) s = master();

  struct Trial {
    std::size_t edges = 0;
    bool nice = true;
    Weight chi = 0;  // 0: empty, -1: budget, 3: more than 2
  };
  std::vector<Trial> results(trials);
  SearchConfig cfg = search;
  cfg.mode = SigmaMode::edge_only;

  parallel_for(trials, jobs, [&](std::size_t i) {
    const Hypergraph h = random_hypergraph(n, r, p, seeds[i]);
    Trial& t = results[i];
    t.edges = h.edge_count();
    t.nice = is_nice(h);
    if (t.edges == 0) return;
    if (every_edge_has_degree_distinct_pair(h)) {
      t.chi = 1;
      return;
    }
    const FeasibilityResult two = feasible_with_k(h, 2, cfg);
    switch (two.outcome) {
      case SearchOutcome::found: t.chi = 2; break;
      case SearchOutcome::infeasible: t.chi = 3; break;
      case SearchOutcome::budget_exhausted: t.chi = -1; break;
    }
  });

  std::size_t nonempty = 0, nice = 0, total_edges = 0;
  std::map<Weight, std::size_t> le, nice_le;
  for (const Trial& t : results) {
    total_edges += t.edges;
    if (t.edges == 0) {
      ++report.empty_instances;
      continue;
    }
    ++nonempty;
    if (!t.nice) ++report.isolated_edge_instances;
    if (t.nice) ++nice;
    if (t.chi == -1) ++report.budget_exhausted;
    for (Weight k : {Weight{1}, Weight{2}}) {
      if (t.chi >= 1 && t.chi <= k) {
        ++le[k];
        if (t.nice) ++nice_le[k];
      }
    }
  }
  report.mean_edges = trials ? static_cast<double>(total_edges) / static_cast<double>(trials) : 0;
  for (Weight k : {Weight{1}, Weight{2}}) {
    report.fraction_chi_le[k] =
        nonempty ? static_cast<double>(le[k]) / static_cast<double>(nonempty) : 0.0;
    report.nice_fraction_chi_le[k] =
        nice ? static_cast<double>(nice_le[k]) / static_cast<double>(nice) : 0.0;
  }
  return report;
}

}  // namespace nsd
