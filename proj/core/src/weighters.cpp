#include "nsd/weighters.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace nsd {

namespace {

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

std::vector<std::size_t> part_index_of(const PartitionedHypergraph& g) {
  std::vector<std::size_t> part(g.hypergraph.vertex_count(), 0);
  for (std::size_t i = 0; i < g.parts.size(); ++i) {
    for (VertexId v : g.parts[i]) part[v] = i;
  }
  return part;
}

std::vector<std::size_t> sizes_of(const PartitionedHypergraph& g) {
  std::vector<std::size_t> sizes;
  for (const auto& p : g.parts) sizes.push_back(p.size());
  return sizes;
}

Weighting from_heavy(const Hypergraph& h, const std::vector<EdgeIndex>& heavy,
                     std::optional<std::vector<Weight>> vertices = std::nullopt) {
  std::vector<Weight> w(h.edge_count(), 1);
  for (EdgeIndex e : heavy) w[e] = 2;
  return Weighting(std::move(w), std::move(vertices), 2);
}

EdgeIndex edge_between(const Hypergraph& h, VertexId u, VertexId v) {
  auto e = h.find_edge({u, v});
  if (!e) throw std::logic_error("expected edge is missing from the host graph");
  return *e;
}

bool all_distinct(std::vector<std::size_t> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

}  // namespace

SelfCheckFailure::SelfCheckFailure(const std::string& what, std::vector<EdgeIndex> violations)
    : std::logic_error(what), violations_(std::move(violations)) {}

void self_check(const Hypergraph& h, const Weighting& w, SigmaMode mode, std::string_view what) {
  const ColorVector colors = sigma(h, w, mode);
  auto bad = monochromatic_edges(h, colors);
  if (!bad.empty()) {
    std::string msg = std::string(what) + ": weighting is not proper under mode " +
                      std::string(to_string(mode)) + "; " + std::to_string(bad.size()) +
                      " monochromatic edge(s), first is edge " + std::to_string(bad.front()) +
                      " {";
    const auto verts = h.edge(bad.front());
    for (std::size_t i = 0; i < verts.size(); ++i) {
      msg += (i ? "," : "") + std::to_string(verts[i]);
    }
    msg += "} with color " + std::to_string(colors[verts.front()]);
    throw SelfCheckFailure(msg, std::move(bad));
  }
}

// --- complete multipartite graphs -------------------------------------------

std::vector<EdgeIndex> BlowupPlan::heavy_edges() const {
  std::vector<EdgeIndex> out = blown_up_edges;
  out.insert(out.end(), extra_edges.begin(), extra_edges.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view to_string(BlowupPlan::Case c) {
  switch (c) {
    case BlowupPlan::Case::larger_x: return "m_k>n_k";
    case BlowupPlan::Case::fixed_vertex: return "n_k=m_k<m_{k-1}";
    case BlowupPlan::Case::matching: return "n_k=m_k=m_{k-1}>1";
    case BlowupPlan::Case::two_equal_parts: return "two equal parts";
    case BlowupPlan::Case::star_to_pair: return "three parts (a,t,t), a>t>=2";
    case BlowupPlan::Case::pendant_pair: return "three parts (a,1,1)";
    case BlowupPlan::Case::three_equal_parts: return "three equal parts";
  }
  return "?";
}

bool multipartite_hypothesis(const std::vector<std::size_t>& part_sizes) {
  const std::size_t n = part_sizes.size();
  if (n < 2) return false;
  const std::size_t total = std::accumulate(part_sizes.begin(), part_sizes.end(), std::size_t{0});
  if (total <= 2) return false;
  const auto big = static_cast<std::size_t>(
      std::count_if(part_sizes.begin(), part_sizes.end(), [](std::size_t s) { return s > 1; }));
  return big >= (n - 1) / 2;
}

BlowupPlan plan_complete_multipartite(const PartitionedHypergraph& g) {
  const Hypergraph& h = g.hypergraph;
  const std::vector<std::size_t> sizes = sizes_of(g);
  if (sizes.size() < 2) throw std::invalid_argument("need at least two parts");

  std::vector<std::size_t> order(sizes.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sizes[a] > sizes[b]; });

  BlowupPlan plan;
  std::vector<std::size_t> rest = order;
  if (order.size() % 2 == 1) {
    plan.removed_part = order.front();
    rest.erase(rest.begin());
  }
  const std::size_t k = rest.size() / 2;
  for (std::size_t i = 0; i < k; ++i) plan.x_parts.push_back(rest[i]);
  for (std::size_t i = 1; i <= k; ++i) plan.y_parts.push_back(rest[2 * k - i]);

  auto m = [&](std::size_t i) { return sizes[plan.x_parts[i - 1]]; };
  auto nn = [&](std::size_t i) { return sizes[plan.y_parts[i - 1]]; };
  auto first_vertex = [&](std::size_t part) { return g.parts[part].front(); };

  if (k == 1 && m(1) == nn(1)) {
    const std::size_t x = plan.x_parts[0];
    const std::size_t y = plan.y_parts[0];
    if (!plan.removed_part) {
      if (sizes[x] < 2) throw UncoveredConfiguration("two parts of size 1 (K_2)");
      plan.case_tag = BlowupPlan::Case::two_equal_parts;
      plan.z = first_vertex(x);
      for (EdgeIndex e : h.incident_edges(*plan.z)) plan.extra_edges.push_back(e);
      return plan;
    }
    const std::size_t big = *plan.removed_part;
    const std::size_t a = sizes[big];
    const std::size_t t = sizes[x];
    if (a == t) {
      if (t < 2) throw UncoveredConfiguration("three parts of size 1 (K_3)");
      plan.case_tag = BlowupPlan::Case::three_equal_parts;
      for (VertexId u : g.parts[x]) {
        for (VertexId v : g.parts[y]) plan.extra_edges.push_back(edge_between(h, u, v));
      }
      for (std::size_t i = 0; i < t; ++i) {
        plan.extra_edges.push_back(edge_between(h, g.parts[x][i], g.parts[big][i]));
      }
    } else if (t == 1) {
      plan.case_tag = BlowupPlan::Case::pendant_pair;
      const VertexId c = g.parts[x][0];
      const VertexId d = g.parts[y][0];
      plan.z = c;
      plan.extra_edges.push_back(edge_between(h, c, d));
      for (VertexId v : g.parts[big]) plan.extra_edges.push_back(edge_between(h, c, v));
    } else {
      plan.case_tag = BlowupPlan::Case::star_to_pair;
      plan.z = first_vertex(x);
      for (VertexId v : g.parts[y]) plan.extra_edges.push_back(edge_between(h, *plan.z, v));
    }
    std::sort(plan.extra_edges.begin(), plan.extra_edges.end());
    return plan;
  }

  // Role of each part in B: +i for X_i, -i for Y_i, 0 otherwise.
  std::vector<long> role(sizes.size(), 0);
  for (std::size_t i = 1; i <= k; ++i) {
    role[plan.x_parts[i - 1]] = static_cast<long>(i);
    role[plan.y_parts[i - 1]] = -static_cast<long>(i);
  }
  const std::vector<std::size_t> part = part_index_of(g);
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    long a = role[part[h.edge(e)[0]]];
    long b = role[part[h.edge(e)[1]]];
    if (a == 0 || b == 0) continue;
    if (a < b) std::swap(a, b);
    const bool x_to_y = a > 0 && b < 0 && -b <= a;
    const bool y_to_y = a < 0 && b < 0;
    if (x_to_y || y_to_y) plan.blown_up_edges.push_back(e);
  }

  if (m(k) > nn(k)) {
    plan.case_tag = BlowupPlan::Case::larger_x;
  } else if (k >= 2 && m(k - 1) > m(k)) {
    plan.case_tag = BlowupPlan::Case::fixed_vertex;
    plan.z = first_vertex(plan.x_parts[k - 2]);
    for (VertexId v : g.parts[plan.x_parts[k - 1]]) {
      plan.extra_edges.push_back(edge_between(h, *plan.z, v));
    }
  } else if (k >= 2 && m(k - 1) == m(k) && m(k) > 1) {
    plan.case_tag = BlowupPlan::Case::matching;
    const auto& xk = g.parts[plan.x_parts[k - 1]];
    const auto& xk1 = g.parts[plan.x_parts[k - 2]];
    for (std::size_t i = 0; i < xk.size(); ++i) {
      plan.extra_edges.push_back(edge_between(h, xk[i], xk1[i]));
    }
  } else {
    std::string text;
    for (std::size_t s : sizes) text += (text.empty() ? "" : ",") + std::to_string(s);
    throw UncoveredConfiguration("no construction covers part sizes (" + text + ")");
  }
  std::sort(plan.extra_edges.begin(), plan.extra_edges.end());
  return plan;
}

Weighting weight_complete_multipartite(const PartitionedHypergraph& g) {
  if (!multipartite_hypothesis(sizes_of(g))) {
    throw std::invalid_argument(
        "complete multipartite weighting needs at least floor((n-1)/2) parts of size > 1 and "
        "more than two vertices");
  }
  const BlowupPlan plan = plan_complete_multipartite(g);
  Weighting w = from_heavy(g.hypergraph, plan.heavy_edges());
  self_check(g.hypergraph, w, SigmaMode::edge_only,
             "complete multipartite (" + std::string(to_string(plan.case_tag)) + ")");
  return w;
}

// --- complete 3-partite graphs, full total ----------------------------------

Weighting weight_complete_3partite_ven(const PartitionedHypergraph& g) {
  const Hypergraph& h = g.hypergraph;
  const std::vector<std::size_t> s = sizes_of(g);
  if (s.size() != 3) throw std::invalid_argument("expected exactly three parts");
  std::vector<Weight> ones(h.vertex_count(), 1);

  if (s[0] != s[1] && s[1] != s[2] && s[0] != s[2]) {
    Weighting w = Weighting::constant(h, SigmaMode::full_total);
    self_check(h, w, SigmaMode::full_total, "3-partite full total (distinct sizes)");
    return w;
  }
  if (s[0] == s[1] && s[1] == s[2]) {
    if (s[0] == 1) throw std::invalid_argument("K_3 is excluded");
    Weighting edges = weight_complete_multipartite(g);
    Weighting w(edges.edge_weights(), ones, 2);
    self_check(h, w, SigmaMode::full_total, "3-partite full total (equal sizes)");
    return w;
  }

  std::size_t v1 = 0, v2 = 1, v3 = 2;
  if (s[0] == s[2]) {
    v2 = 2;
    v3 = 1;
  } else if (s[1] == s[2]) {
    v1 = 1;
    v2 = 2;
    v3 = 0;
  }
  const std::size_t t = s[v1];
  const std::vector<std::size_t> part = part_index_of(g);
  auto between = [&](EdgeIndex e, std::size_t a, std::size_t b) {
    const std::size_t pu = part[h.edge(e)[0]];
    const std::size_t pv = part[h.edge(e)[1]];
    return (pu == a && pv == b) || (pu == b && pv == a);
  };

  std::vector<Weight> edge_w(h.edge_count(), 1);
  std::vector<Weight> vertex_w = ones;
  const bool second_case = 3 * s[v3] == 2 * t;
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    if (second_case) {
      edge_w[e] = between(e, v1, v2) ? 2 : 1;
    } else {
      edge_w[e] = between(e, v2, v3) ? 1 : 2;
    }
  }
  if (second_case) {
    for (VertexId v : g.parts[v1]) vertex_w[v] = 2;
  }
  Weighting w(std::move(edge_w), std::move(vertex_w), 2);
  self_check(h, w, SigmaMode::full_total,
             second_case ? "3-partite full total (|V3|=2t/3)" : "3-partite full total");
  return w;
}

// --- complete uniform hypergraphs -------------------------------------------

bool PartitionPlan::strictly_increasing() const {
  if (!uniform_within_classes) return false;
  for (std::size_t j = 1; j < observed_degree.size(); ++j) {
    if (observed_degree[j] <= observed_degree[j - 1]) return false;
  }
  return true;
}

namespace {

void fill_observed(PartitionPlan& plan, const Hypergraph& h,
                   const std::vector<std::size_t>& class_of_vertex) {
  std::vector<std::size_t> deg(h.vertex_count(), 0);
  for (EdgeIndex e : plan.selected_edges) {
    for (VertexId v : h.edge(e)) ++deg[v];
  }
  const std::size_t classes = plan.p + 1;
  plan.observed_degree.assign(classes, 0);
  std::vector<bool> seen(classes, false);
  plan.uniform_within_classes = true;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const std::size_t c = class_of_vertex[v];
    if (!seen[c]) {
      seen[c] = true;
      plan.observed_degree[c] = deg[v];
    } else if (plan.observed_degree[c] != deg[v]) {
      plan.uniform_within_classes = false;
    }
  }
}

}  // namespace

PartitionPlan plan_knrt(const PartitionedHypergraph& g, std::size_t r, std::size_t t) {
  const Hypergraph& h = g.hypergraph;
  const std::size_t n = g.parts.size();
  if (r < 3 || r > n) throw std::invalid_argument("need 3 <= r <= n");
  if (t < 1) throw std::invalid_argument("part size must be at least 1");

  PartitionPlan plan;
  plan.p = n / (r - 1);
  plan.q = n % (r - 1);
  plan.p_even = plan.p % 2 == 0;
  const std::size_t k = plan.p_even ? plan.p / 2 : (plan.p - 1) / 2;

  plan.class_of_unit.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    plan.class_of_unit[i] = i < plan.q ? 0 : 1 + (i - plan.q) / (r - 1);
  }
  const std::vector<std::size_t> part = part_index_of(g);
  std::vector<std::size_t> class_of_vertex(h.vertex_count());
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    class_of_vertex[v] = plan.class_of_unit[part[v]];
  }

  const std::size_t j_max = plan.p_even ? k : k + 1;
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    std::vector<std::size_t> cls;
    for (VertexId v : h.edge(e)) cls.push_back(class_of_vertex[v]);
    std::sort(cls.begin(), cls.end());
    // r-1 vertices in one class s (necessarily covering all its parts) and
    // one vertex x in another class.
    std::size_t s = 0, c = 0;
    if (cls.front() == cls[r - 2] && cls.back() != cls.front()) {
      s = cls.front();
      c = cls.back();
    } else if (cls[1] == cls.back() && cls.front() != cls.back()) {
      s = cls.back();
      c = cls.front();
    } else {
      continue;
    }
    if (s == 0 || c <= k || c > k + j_max) continue;
    const std::size_t j = c - k;
    const std::size_t lo = plan.p_even ? k - j + 1 : k + 2 - j;
    if (s >= lo && s <= plan.p && s != c) plan.selected_edges.push_back(e);
  }

  const std::size_t unit = ipow(t, r - 1);
  plan.formula_degree.assign(plan.p + 1, 0);
  for (std::size_t j = 1; j <= k; ++j) plan.formula_degree[j] = (r - 1) * j * unit;
  for (std::size_t jp = 1; jp <= j_max; ++jp) {
    plan.formula_degree[k + jp] =
        (plan.p_even ? k * r - r + jp : k * r + jp - 1) * unit;
  }
  fill_observed(plan, h, class_of_vertex);
  return plan;
}

Weighting weight_knrt(const PartitionedHypergraph& g, std::size_t r, std::size_t t,
                      SigmaMode mode) {
  const std::size_t n = g.parts.size();
  if (r < 3) throw std::invalid_argument("uniformity must be at least 3");
  if (n <= 2 * (r - 1) * (r - 1)) {
    throw std::invalid_argument("need n > 2(r-1)^2; got n=" + std::to_string(n) +
                                ", r=" + std::to_string(r));
  }
  const PartitionPlan plan = plan_knrt(g, r, t);
  std::optional<std::vector<Weight>> vertices;
  if (requires_vertex_weights(mode)) vertices.emplace(g.hypergraph.vertex_count(), 1);
  Weighting w = from_heavy(g.hypergraph, plan.selected_edges, std::move(vertices));
  self_check(g.hypergraph, w, mode,
             "complete n-partite r-uniform (n=" + std::to_string(n) + ", r=" +
                 std::to_string(r) + ", t=" + std::to_string(t) + ")");
  return w;
}

PartitionPlan plan_knr(const Hypergraph& knr, std::size_t n, std::size_t r) {
  if (r < 3) throw std::invalid_argument("uniformity must be at least 3");
  if (n < r + 1) throw std::invalid_argument("need n >= r+1");
  if (knr.vertex_count() != n) throw std::invalid_argument("hypergraph order differs from n");

  PartitionPlan plan;
  plan.p = n / (r - 1);
  plan.q = n % (r - 1);
  plan.p_even = plan.p % 2 == 0;
  plan.class_of_unit.resize(n);
  std::vector<std::vector<VertexId>> members(plan.p + 1);
  for (VertexId v = 0; v < n; ++v) {
    plan.class_of_unit[v] = v < plan.q ? 0 : 1 + (v - plan.q) / (r - 1);
    members[plan.class_of_unit[v]].push_back(v);
  }

  auto add = [&](std::size_t cls, VertexId extra) {
    std::vector<VertexId> e = members[cls];
    e.push_back(extra);
    auto idx = knr.find_edge(e);
    if (!idx) throw std::logic_error("selected set is not an edge");
    plan.selected_edges.push_back(*idx);
  };

  plan.formula_degree.assign(plan.p + 1, 0);
  if (plan.p == 1) {
    for (VertexId x : members[0]) add(1, x);
    plan.formula_degree[0] = 1;
    plan.formula_degree[1] = plan.q;
  } else {
    for (std::size_t i = 1; i < plan.p; ++i) {
      for (std::size_t j = i + 1; j <= plan.p; ++j) {
        for (VertexId x : members[j]) add(i, x);
      }
    }
    for (std::size_t i = 1; i <= plan.p; ++i) {
      plan.formula_degree[i] = (i - 1) + (r - 1) * (plan.p - i);
    }
  }
  std::sort(plan.selected_edges.begin(), plan.selected_edges.end());
  fill_observed(plan, knr, plan.class_of_unit);
  return plan;
}

Weighting weight_knr_total(std::size_t n, std::size_t r) {
  if (r < 3) throw std::invalid_argument("uniformity must be at least 3");
  if (n <= r) throw std::invalid_argument("need n >= r+1; got n=" + std::to_string(n));
  const Hypergraph h = complete_uniform(n, r);
  const PartitionPlan plan = plan_knr(h, n, r);
  Weighting w = from_heavy(h, plan.selected_edges, std::vector<Weight>(n, 1));
  const std::string what = "complete r-uniform (n=" + std::to_string(n) + ", r=" +
                           std::to_string(r) + ")";
  self_check(h, w, SigmaMode::edge_only, what);
  self_check(h, w, SigmaMode::total, what);
  self_check(h, w, SigmaMode::full_total, what);
  return w;
}

// --- patterns, paths, cycles, theta -----------------------------------------

PatternSpec PatternSpec::named(std::string_view digits) {
  if (digits != "1122" && digits != "1221" && digits != "2112" && digits != "2211") {
    throw std::invalid_argument("unknown pattern " + std::string(digits));
  }
  PatternSpec spec;
  for (char c : digits) spec.period.push_back(c - '0');
  return spec;
}

PatternSpec PatternSpec::blocks(std::size_t k) {
  if (k == 0) throw std::invalid_argument("block length must be positive");
  PatternSpec spec;
  spec.period.assign(k, 1);
  spec.period.insert(spec.period.end(), k, 2);
  return spec;
}

std::vector<Weight> PatternSpec::expand(std::size_t count) const {
  if (period.empty()) throw std::invalid_argument("empty pattern");
  std::vector<Weight> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = period[i % period.size()];
  return out;
}

namespace {

bool divides_tight(std::size_t r, std::size_t t) { return 2 * t > r && r % (r - t) == 0; }

}  // namespace

Weighting weight_tight_path(const TightPathSpec& spec, const Prediction& prediction) {
  const Hypergraph h = tight_path(spec.r, spec.t, spec.length);
  std::vector<Weight> w(h.edge_count(), 1);
  if (prediction.value != 1) {
    if (2 * spec.t == spec.r) {
      w = PatternSpec::named("1122").expand(spec.length);
    } else if (divides_tight(spec.r, spec.t)) {
      w = PatternSpec::blocks(spec.r / (spec.r - spec.t)).expand(spec.length);
    } else {
      throw std::logic_error("prediction does not match any path construction");
    }
  }
  Weighting out(std::move(w), std::nullopt, prediction.value);
  self_check(h, out, SigmaMode::edge_only, "tight path");
  return out;
}

Weighting weight_tight_cycle(const TightCycleSpec& spec, const Prediction& prediction) {
  const Hypergraph h = tight_cycle(spec.r, spec.t, spec.length);
  const std::size_t len = spec.length;
  std::vector<Weight> w(len, 1);
  if (prediction.value != 1) {
    if (2 * spec.t == spec.r) {
      w = PatternSpec::named("1122").expand(len);
      if (len % 4 != 0) {
        w[len - 1] = 3;
        if (len % 4 != 1) w[len - 2] = 3;
      }
    } else if (divides_tight(spec.r, spec.t)) {
      const std::size_t k = spec.r / (spec.r - spec.t);
      if (len <= 2 * k) {
        w[0] = w[1] = 2;
      } else {
        const std::size_t n = h.vertex_count();
        const std::size_t steps = (n - 1 - spec.r) / spec.t;
        for (std::size_t m = 0; m <= steps; ++m) w[m * (k - 1)] = 2;
      }
    } else {
      throw std::logic_error("prediction does not match any cycle construction");
    }
  }
  Weighting out(std::move(w), std::nullopt, prediction.value);
  self_check(h, out, SigmaMode::edge_only, "tight cycle");
  return out;
}

Weighting weight_theta(const ThetaStructure& theta, const Prediction& prediction) {
  const Hypergraph& h = theta.hypergraph;
  const std::size_t r = theta.r;
  const std::size_t t = theta.t;
  const std::size_t s = theta.lengths.size();
  std::vector<Weight> w(h.edge_count(), 1);

  std::vector<std::size_t> order(s);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return theta.lengths[a] < theta.lengths[b];
  });
  auto apply = [&](std::size_t branch, std::string_view pattern) {
    const auto& edges = theta.branch_edges[branch];
    const auto weights = PatternSpec::named(pattern).expand(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) w[edges[i]] = weights[i];
  };

  if (prediction.value == 1) {
    // all ones
  } else if (2 * t == r) {
    const std::size_t first = order[0];
    if (theta.lengths[first] == 1) {
      w[theta.branch_edges[first][0]] = 2;
      for (std::size_t i = 1; i < s; ++i) {
        const std::size_t b = order[i];
        const std::size_t res = theta.lengths[b] % 4;
        if (prediction.value == 3 || res <= 1) {
          apply(b, "1122");
        } else {
          apply(b, "1221");
        }
      }
      if (prediction.value == 3) w[theta.branch_edges[order[1]][0]] = 3;
    } else {
      std::vector<std::size_t> res(s);
      for (std::size_t b = 0; b < s; ++b) {
        res[b] = theta.lengths[b] % 4;
        apply(b, res[b] == 0 ? "2112" : res[b] == 3 ? "1122" : "2211");
      }
      if (s == 3) {
        const auto threes = std::count(res.begin(), res.end(), std::size_t{3});
        for (std::size_t b = 0; b < s; ++b) {
          if (threes == 2 && (res[b] == 1 || res[b] == 2)) apply(b, "2112");
        }
      }
    }
  } else if (divides_tight(r, t)) {
    const std::size_t k = r / (r - t);
    const auto& p1 = theta.branch_edges[order[0]];
    for (std::size_t i = 1; i < s; ++i) {
      const std::size_t b = order[i];
      if (theta.lengths[b] <= 2 * (k - 1)) continue;
      std::vector<EdgeIndex> cycle(p1.begin(), p1.end());
      const auto& pj = theta.branch_edges[b];
      cycle.insert(cycle.end(), pj.rbegin(), pj.rend());

      std::set<VertexId> all;
      for (EdgeIndex e : cycle) all.insert(h.edge(e).begin(), h.edge(e).end());
      std::set<VertexId> covered;
      for (std::size_t pos = 0; pos < cycle.size(); pos += k - 1) {
        std::set<VertexId> next = covered;
        next.insert(h.edge(cycle[pos]).begin(), h.edge(cycle[pos]).end());
        if (next.size() == all.size()) break;
        covered = std::move(next);
        w[cycle[pos]] = 2;
      }
    }
  } else {
    throw std::logic_error("prediction does not match any theta construction");
  }
  Weighting out(std::move(w), std::nullopt, prediction.value);
  self_check(h, out, SigmaMode::edge_only, "theta");
  return out;
}

// --- planes -----------------------------------------------------------------

Weighting weight_plane(const PlaneStructure& plane) {
  const Hypergraph& h = plane.hypergraph;
  const std::size_t q = plane.order;
  std::vector<VertexId> anchor;
  for (VertexId v : h.edge(plane.anchor_line)) {
    if (v < q * q) anchor.push_back(v);
  }
  std::vector<Weight> w(h.edge_count(), 1);
  for (std::size_t i = 1; i + 1 <= q; ++i) {
    const VertexId x = anchor[i - 1];
    bool found = false;
    for (EdgeIndex line : plane.parallel_classes[i - 1]) {
      const auto pts = h.edge(line);
      if (std::find(pts.begin(), pts.end(), x) != pts.end()) {
        w[line] = 2;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("parallel class does not cover the anchor point");
  }
  Weighting out(std::move(w), std::nullopt, 2);
  self_check(h, out, SigmaMode::edge_only,
             std::string(plane.projective ? "projective" : "affine") + " plane of order " +
                 std::to_string(q));
  return out;
}

// --- prediction -------------------------------------------------------------

namespace {

std::optional<Prediction> make(Weight v, SigmaMode mode, std::string label) {
  return Prediction{v, mode, std::move(label)};
}

std::optional<Prediction> predict_multipartite(const MultipartiteSpec& s, SigmaMode mode) {
  const auto& sz = s.part_sizes;
  if (mode == SigmaMode::edge_only) {
    if (!multipartite_hypothesis(sz)) return std::nullopt;
    if (all_distinct(sz)) return make(1, mode, "multipartite:distinct part sizes");
    return make(2, mode, "multipartite:repeated part size");
  }
  if (mode == SigmaMode::full_total && sz.size() == 3) {
    if (sz[0] == 1 && sz[1] == 1 && sz[2] == 1) return std::nullopt;
    if (all_distinct(sz)) return make(1, mode, "3-partite:distinct part sizes");
    if (sz[0] == sz[1] && sz[1] == sz[2]) return make(2, mode, "3-partite:equal parts");
    const std::size_t t = sz[0] == sz[1] || sz[0] == sz[2] ? sz[0] : sz[1];
    const std::size_t odd = sz[0] == sz[1] ? sz[2] : sz[0] == sz[2] ? sz[1] : sz[0];
    if (3 * odd == 2 * t) return make(2, mode, "3-partite:two equal,|V3|=2t/3");
    return make(2, mode, "3-partite:two equal,|V3|!=2t/3");
  }
  return std::nullopt;
}

std::optional<Prediction> predict_path(const TightPathSpec& s, SigmaMode mode) {
  if (mode != SigmaMode::edge_only || s.t < 1 || s.t >= s.r || s.length <= 2) return std::nullopt;
  if (2 * s.t == s.r) return make(2, mode, "path:t=r/2");
  if (divides_tight(s.r, s.t)) {
    const std::size_t k = s.r / (s.r - s.t);
    if (s.length >= 2 * k - 1) return make(2, mode, "path:t>r/2,(r-t)|r,l>=2k-1");
    return make(1, mode, "path:t>r/2,(r-t)|r,l<2k-1");
  }
  if (2 * s.t < s.r) return make(1, mode, "path:t<r/2");
  return make(1, mode, "path:t>r/2,(r-t)!|r");
}

std::optional<Prediction> predict_cycle(const TightCycleSpec& s, SigmaMode mode) {
  if (mode != SigmaMode::edge_only || s.t < 1 || s.t >= s.r || s.length <= 2) return std::nullopt;
  if (2 * s.t == s.r) {
    if (s.length % 4 == 0) return make(2, mode, "cycle:t=r/2,l=0 mod 4");
    return make(3, mode, "cycle:t=r/2,l!=0 mod 4");
  }
  if (divides_tight(s.r, s.t)) return make(2, mode, "cycle:t>r/2,(r-t)|r");
  if (2 * s.t < s.r) return make(1, mode, "cycle:t<r/2");
  return make(1, mode, "cycle:t>r/2,(r-t)!|r");
}

std::optional<Prediction> predict_theta(const ThetaSpec& s, SigmaMode mode) {
  if (mode != SigmaMode::edge_only || s.r < 3 || s.lengths.size() < 3 || s.t < 1 ||
      s.t >= s.r) {
    return std::nullopt;
  }
  std::vector<std::size_t> len = s.lengths;
  std::sort(len.begin(), len.end());
  if (2 * s.t < s.r) return make(1, mode, "theta:t<r/2");
  if (2 * s.t > s.r) {
    if (s.r % (s.r - s.t) == 0) {
      const std::size_t k = s.r / (s.r - s.t);
      if (len.back() > 2 * (k - 1)) return make(2, mode, "theta:t>r/2,(r-t)|r,some l>2(k-1)");
      return make(1, mode, "theta:t>r/2,(r-t)|r,all l<=2(k-1)");
    }
    return make(1, mode, "theta:t>r/2,(r-t)!|r");
  }
  if (len[0] == 1 && std::all_of(len.begin() + 1, len.end(),
                                 [](std::size_t l) { return l % 4 == 1; })) {
    return make(3, mode, "theta:t=r/2,l_1=1,others=1 mod 4");
  }
  if (std::all_of(len.begin(), len.end(), [](std::size_t l) { return l == 2; })) {
    return make(1, mode, "theta:t=r/2,all l=2");
  }
  return make(2, mode, len[0] == 1 ? "theta:t=r/2,l_1=1" : "theta:t=r/2,all l>=2");
}

}  // namespace

std::optional<Prediction> predict(const FamilySpec& spec, SigmaMode mode) {
  return std::visit(
      [mode](const auto& s) -> std::optional<Prediction> {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, MultipartiteSpec>) {
          return predict_multipartite(s, mode);
        } else if constexpr (std::is_same_v<T, KnrtSpec>) {
          if (s.r < 3 || s.r > s.n || s.t < 1 || s.n <= 2 * (s.r - 1) * (s.r - 1)) {
            return std::nullopt;
          }
          const bool even = (s.n / (s.r - 1)) % 2 == 0;
          return make(2, mode, even ? "knrt:p even" : "knrt:p odd");
        } else if constexpr (std::is_same_v<T, KnrSpec>) {
          if (s.r < 3 || s.n < s.r + 1) return std::nullopt;
          return make(2, mode, s.n / (s.r - 1) == 1 ? "knr:p=1" : "knr:p>=2");
        } else if constexpr (std::is_same_v<T, TightPathSpec>) {
          return predict_path(s, mode);
        } else if constexpr (std::is_same_v<T, TightCycleSpec>) {
          return predict_cycle(s, mode);
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          return predict_theta(s, mode);
        } else if constexpr (std::is_same_v<T, AffinePlaneSpec> ||
                             std::is_same_v<T, ProjectivePlaneSpec>) {
          if (mode != SigmaMode::edge_only || !is_prime(s.q)) return std::nullopt;
          return make(2, mode, std::is_same_v<T, AffinePlaneSpec> ? "plane:affine"
                                                                  : "plane:projective");
        } else {
          return std::nullopt;
        }
      },
      spec);
}

// --- dispatch ---------------------------------------------------------------

WeighOutcome weigh(const FamilySpec& spec, SigmaMode mode) {
  auto prediction = predict(spec, mode);
  if (!prediction) {
    throw NoPrediction("no known result covers this family under mode " +
                       std::string(to_string(mode)));
  }
  FamilyInstance inst = generate(spec);
  const Hypergraph& h = inst.hypergraph;

  auto ones = [&]() {
    Weighting w = Weighting::constant(h, mode);
    self_check(h, w, mode, prediction->theorem_case);
    return w;
  };

  Weighting w = std::visit(
      [&](const auto& s) -> Weighting {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, MultipartiteSpec>) {
          PartitionedHypergraph g{h, inst.parts};
          if (mode == SigmaMode::full_total) return weight_complete_3partite_ven(g);
          if (prediction->value == 1) return ones();
          return weight_complete_multipartite(g);
        } else if constexpr (std::is_same_v<T, KnrtSpec>) {
          return weight_knrt(PartitionedHypergraph{h, inst.parts}, s.r, s.t, mode);
        } else if constexpr (std::is_same_v<T, KnrSpec>) {
          Weighting total = weight_knr_total(s.n, s.r);
          if (mode == SigmaMode::edge_only) return Weighting(total.edge_weights(), std::nullopt, 2);
          return total;
        } else if constexpr (std::is_same_v<T, TightPathSpec>) {
          return weight_tight_path(s, *prediction);
        } else if constexpr (std::is_same_v<T, TightCycleSpec>) {
          return weight_tight_cycle(s, *prediction);
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          return weight_theta(*inst.theta, *prediction);
        } else if constexpr (std::is_same_v<T, AffinePlaneSpec> ||
                             std::is_same_v<T, ProjectivePlaneSpec>) {
          return weight_plane(*inst.plane);
        } else {
          throw NoPrediction("no construction for this family");
        }
      },
      spec);
  return {std::move(inst), std::move(*prediction), std::move(w)};
}

}  // namespace nsd
