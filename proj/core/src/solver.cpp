#include "nsd/solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace nsd {

namespace {

/// Read-only description of the search space: variable order and the edges
/// whose colors become fully determined after each assignment.
struct Problem {
  const Hypergraph* h = nullptr;
  SigmaMode mode = SigmaMode::edge_only;
  std::size_t edge_vars = 0;
  std::size_t var_count = 0;
  std::vector<std::vector<VertexId>> affects;   // per variable
  std::vector<std::size_t> order;               // variables that need branching
  std::vector<std::vector<EdgeIndex>> checks;   // per position in `order`
};

Problem build_problem(const Hypergraph& h, SigmaMode mode) {
  Problem pb;
  pb.h = &h;
  pb.mode = mode;
  pb.edge_vars = h.edge_count();
  const bool vertex_vars = requires_vertex_weights(mode);
  pb.var_count = pb.edge_vars + (vertex_vars ? h.vertex_count() : 0);

  std::vector<std::vector<VertexId>> nbhd(h.vertex_count());
  if (mode == SigmaMode::full_total) {
    for (VertexId v = 0; v < h.vertex_count(); ++v) nbhd[v] = neighborhood(h, v);
  }

  pb.affects.resize(pb.var_count);
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    pb.affects[e].assign(h.edge(e).begin(), h.edge(e).end());
  }
  if (vertex_vars) {
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
      auto& a = pb.affects[pb.edge_vars + v];
      a.push_back(v);
      a.insert(a.end(), nbhd[v].begin(), nbhd[v].end());
    }
  }

  // Variables influencing the color of each vertex.
  std::vector<std::vector<std::size_t>> influence(h.vertex_count());
  for (std::size_t var = 0; var < pb.var_count; ++var) {
    for (VertexId v : pb.affects[var]) influence[v].push_back(var);
  }
  std::vector<std::vector<std::size_t>> scope(h.edge_count());
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    for (VertexId v : h.edge(e)) {
      scope[e].insert(scope[e].end(), influence[v].begin(), influence[v].end());
    }
    std::sort(scope[e].begin(), scope[e].end());
    scope[e].erase(std::unique(scope[e].begin(), scope[e].end()), scope[e].end());
  }

  // Greedy: repeatedly finish the edge with the fewest unassigned variables.
  std::vector<bool> placed(pb.var_count, false);
  std::vector<bool> done(h.edge_count(), false);
  std::vector<std::size_t> position(pb.var_count, 0);
  for (std::size_t round = 0; round < h.edge_count(); ++round) {
    std::size_t best = h.edge_count();
    std::size_t best_missing = 0;
    for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
      if (done[e]) continue;
      const auto missing = static_cast<std::size_t>(std::count_if(
          scope[e].begin(), scope[e].end(), [&](std::size_t v) { return !placed[v]; }));
      if (best == h.edge_count() || missing < best_missing) {
        best = e;
        best_missing = missing;
      }
    }
    done[best] = true;
    for (std::size_t var : scope[best]) {
      if (!placed[var]) {
        placed[var] = true;
        position[var] = pb.order.size();
        pb.order.push_back(var);
      }
    }
  }

  pb.checks.resize(pb.order.size());
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    std::size_t last = 0;
    for (std::size_t var : scope[e]) last = std::max(last, position[var]);
    pb.checks[last].push_back(e);
  }
  return pb;
}

enum class Step { found, exhausted, stopped };

struct Shared {
  std::atomic<bool> found{false};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t budget = 0;
  std::mutex mutex;
  std::vector<Weight> witness;
};

class Worker {
 public:
  Worker(const Problem& pb, Weight k, Shared& shared)
      : pb_(pb), k_(k), shared_(shared), weights_(pb.var_count, 1),
        colors_(pb.h->vertex_count(), 0) {
    // Unbranched variables keep weight 1 and contribute to colors up front.
    std::vector<bool> branched(pb.var_count, false);
    for (std::size_t var : pb.order) branched[var] = true;
    for (std::size_t var = 0; var < pb.var_count; ++var) {
      if (!branched[var]) add(var, 1);
    }
  }

  /// Applies a fixed prefix of assignments; false if it already violates.
  bool apply_prefix(const std::vector<Weight>& prefix) {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      const std::size_t var = pb_.order[i];
      weights_[var] = prefix[i];
      add(var, prefix[i]);
      if (!count_node()) return false;
      if (!checks_pass(i)) return false;
    }
    return true;
  }

  Step run(std::size_t depth) {
    if (depth == pb_.order.size()) {
      std::lock_guard lock(shared_.mutex);
      if (!shared_.found.exchange(true)) shared_.witness = weights_;
      return Step::found;
    }
    const std::size_t var = pb_.order[depth];
    for (Weight w = 1; w <= k_; ++w) {
      if (shared_.found.load(std::memory_order_relaxed)) return Step::stopped;
      weights_[var] = w;
      add(var, w);
      if (!count_node()) {
        add(var, -w);
        return Step::stopped;
      }
      if (checks_pass(depth)) {
        const Step s = run(depth + 1);
        if (s != Step::exhausted) {
          add(var, -w);
          return s;
        }
      }
      add(var, -w);
    }
    weights_[var] = 1;
    return Step::exhausted;
  }

  void flush() {
    shared_.nodes.fetch_add(local_nodes_, std::memory_order_relaxed);
    local_nodes_ = 0;
  }

 private:
  void add(std::size_t var, Weight w) {
    for (VertexId v : pb_.affects[var]) colors_[v] += w;
  }

  bool count_node() {
    if (++local_nodes_ >= 4096) flush();
    if (shared_.nodes.load(std::memory_order_relaxed) + local_nodes_ > shared_.budget) {
      shared_.out_of_budget = true;
      return false;
    }
    return !shared_.out_of_budget.load(std::memory_order_relaxed);
  }

  bool checks_pass(std::size_t depth) const {
    for (EdgeIndex e : pb_.checks[depth]) {
      const auto verts = pb_.h->edge(e);
      const Color c = colors_[verts.front()];
      bool mono = true;
      for (VertexId v : verts) {
        if (colors_[v] != c) {
          mono = false;
          break;
        }
      }
      if (mono) return false;
    }
    return true;
  }

  const Problem& pb_;
  Weight k_;
  Shared& shared_;
  std::vector<Weight> weights_;
  std::vector<Color> colors_;
  std::uint64_t local_nodes_ = 0;
};

Weighting to_weighting(const Problem& pb, const std::vector<Weight>& vars, Weight k) {
  std::vector<Weight> edges(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(pb.edge_vars));
  std::optional<std::vector<Weight>> vertices;
  if (requires_vertex_weights(pb.mode)) {
    vertices.emplace(vars.begin() + static_cast<std::ptrdiff_t>(pb.edge_vars), vars.end());
  }
  return Weighting(std::move(edges), std::move(vertices), k);
}

FeasibilityResult search(const Problem& pb, Weight k, const SearchConfig& config) {
  Shared shared;
  shared.budget = config.node_budget;
  const std::size_t width = std::max<std::size_t>(config.parallel_width, 1);

  Step result = Step::exhausted;
  if (width == 1) {
    Worker worker(pb, k, shared);
    result = worker.run(0);
    worker.flush();
  } else {
    // Split on a prefix deep enough to give every worker several subtrees.
    std::size_t depth = 0;
    std::size_t prefixes = 1;
    while (depth < pb.order.size() && prefixes < 4 * width) {
      ++depth;
      prefixes *= static_cast<std::size_t>(k);
    }
    std::atomic<std::size_t> next{0};
    std::atomic<bool> stopped{false};
    auto job = [&]() {
      while (true) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= prefixes || shared.found || shared.out_of_budget) break;
        std::vector<Weight> prefix(depth);
        std::size_t rest = idx;
        for (std::size_t i = depth; i-- > 0;) {
          prefix[i] = static_cast<Weight>(rest % static_cast<std::size_t>(k)) + 1;
          rest /= static_cast<std::size_t>(k);
        }
        Worker worker(pb, k, shared);
        if (worker.apply_prefix(prefix)) {
          if (worker.run(depth) == Step::stopped && !shared.found) stopped = true;
        } else if (shared.out_of_budget) {
          stopped = true;
        }
        worker.flush();
      }
    };
    std::vector<std::thread> threads;
    for (std::size_t i = 0; i < width; ++i) threads.emplace_back(job);
    for (auto& th : threads) th.join();
    if (shared.found) {
      result = Step::found;
    } else if (stopped || shared.out_of_budget) {
      result = Step::stopped;
    }
  }

  FeasibilityResult out;
  out.nodes = shared.nodes.load();
  if (result == Step::found || shared.found) {
    out.outcome = SearchOutcome::found;
    out.witness = to_weighting(pb, shared.witness, k);
  } else if (result == Step::stopped || shared.out_of_budget) {
    out.outcome = SearchOutcome::budget_exhausted;
  } else {
    out.outcome = SearchOutcome::infeasible;
  }
  return out;
}

void check_inputs(const Hypergraph& h, const SearchConfig& config) {
  if (h.edge_count() == 0) throw std::invalid_argument("hypergraph has no edges");
  if (config.max_k < 1) throw std::invalid_argument("max_k must be at least 1");
  if (config.node_budget == 0) throw std::invalid_argument("node budget must be positive");
}

}  // namespace

FeasibilityResult feasible_with_k(const Hypergraph& h, Weight k, const SearchConfig& config) {
  check_inputs(h, config);
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  return search(build_problem(h, config.mode), k, config);
}

ChiResult exact_chi(const Hypergraph& h, const SearchConfig& config) {
  check_inputs(h, config);
  ChiResult result;

  Weighting ones = Weighting::constant(h, config.mode);
  const bool one_works = config.mode == SigmaMode::edge_only
                             ? every_edge_has_degree_distinct_pair(h)
                             : is_proper(h, sigma(h, ones, config.mode));
  if (one_works) {
    result.value = 1;
    result.witness = std::move(ones);
    return result;
  }
  result.infeasible_through = 1;

  const Problem pb = build_problem(h, config.mode);
  SearchConfig remaining = config;
  for (Weight k = 2; k <= config.max_k; ++k) {
    remaining.node_budget = config.node_budget - std::min(config.node_budget - 1, result.nodes);
    FeasibilityResult step = search(pb, k, remaining);
    result.nodes += step.nodes;
    switch (step.outcome) {
      case SearchOutcome::found:
        result.value = k;
        result.witness = std::move(step.witness);
        return result;
      case SearchOutcome::budget_exhausted:
        result.status = ChiResult::Status::budget_exhausted;
        return result;
      case SearchOutcome::infeasible:
        result.infeasible_through = k;
        break;
    }
  }
  result.status = ChiResult::Status::exceeds_max_k;
  return result;
}

VerifyReport verify(const Hypergraph& h, const Weighting& w, SigmaMode mode) {
  VerifyReport report;
  report.colors = sigma(h, w, mode);
  for (EdgeIndex e : monochromatic_edges(h, report.colors)) {
    report.violations.push_back({e, report.colors[h.edge(e).front()]});
  }
  report.proper = report.violations.empty();
  return report;
}

}  // namespace nsd
