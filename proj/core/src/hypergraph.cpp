#include "nsd/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace nsd {

namespace {

Color checked_add(Color a, Color b) {
  Color out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("induced color overflows 64-bit range");
  }
  return out;
}

}  // namespace

Hypergraph::Hypergraph(std::size_t vertex_count, std::vector<Edge> edges,
                       std::optional<std::size_t> uniformity)
    : vertex_count_(vertex_count), edges_(std::move(edges)), uniformity_(uniformity) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    std::sort(e.begin(), e.end());
    if (e.size() < 2) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has fewer than two vertices");
    }
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw std::invalid_argument("edge " + std::to_string(i) + " repeats a vertex");
    }
    if (e.back() >= vertex_count_) {
      throw std::invalid_argument("edge " + std::to_string(i) + " references vertex " +
                                  std::to_string(e.back()) + " >= n=" +
                                  std::to_string(vertex_count_));
    }
    if (uniformity_ && e.size() != *uniformity_) {
      throw std::invalid_argument("edge " + std::to_string(i) + " has size " +
                                  std::to_string(e.size()) + ", expected " +
                                  std::to_string(*uniformity_));
    }
  }

  std::vector<const Edge*> order;
  order.reserve(edges_.size());
  for (const Edge& e : edges_) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const Edge* a, const Edge* b) { return *a < *b; });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (*order[i - 1] == *order[i]) {
      throw std::invalid_argument("duplicate edge in hypergraph");
    }
  }

  if (!uniformity_ && !edges_.empty()) {
    const std::size_t r = edges_.front().size();
    if (std::all_of(edges_.begin(), edges_.end(), [r](const Edge& e) { return e.size() == r; })) {
      uniformity_ = r;
    }
  }

  incidence_.assign(vertex_count_, {});
  for (EdgeIndex i = 0; i < edges_.size(); ++i) {
    for (VertexId v : edges_[i]) incidence_[v].push_back(i);
  }
}

void Hypergraph::check_vertex(VertexId v) const {
  if (v >= vertex_count_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range (n=" +
                            std::to_string(vertex_count_) + ")");
  }
}

std::span<const VertexId> Hypergraph::edge(EdgeIndex e) const {
  if (e >= edges_.size()) throw std::out_of_range("edge index out of range");
  return edges_[e];
}

std::span<const EdgeIndex> Hypergraph::incident_edges(VertexId v) const {
  check_vertex(v);
  return incidence_[v];
}

std::optional<EdgeIndex> Hypergraph::find_edge(std::vector<VertexId> vertices) const {
  std::sort(vertices.begin(), vertices.end());
  if (vertices.empty() || vertices.back() >= vertex_count_) return std::nullopt;
  for (EdgeIndex e : incidence_[vertices.front()]) {
    if (edges_[e] == vertices) return e;
  }
  return std::nullopt;
}

bool requires_vertex_weights(SigmaMode mode) { return mode != SigmaMode::edge_only; }

std::string_view to_string(SigmaMode mode) {
  switch (mode) {
    case SigmaMode::edge_only: return "e";
    case SigmaMode::total: return "ve";
    case SigmaMode::full_total: return "ven";
  }
  return "?";
}

std::optional<SigmaMode> parse_sigma_mode(std::string_view text) {
  if (text == "e") return SigmaMode::edge_only;
  if (text == "ve") return SigmaMode::total;
  if (text == "ven") return SigmaMode::full_total;
  return std::nullopt;
}

Weighting::Weighting(std::vector<Weight> edge_weights,
                     std::optional<std::vector<Weight>> vertex_weights, Weight max_weight)
    : edge_weights_(std::move(edge_weights)),
      vertex_weights_(std::move(vertex_weights)),
      max_weight_(max_weight) {
  if (max_weight_ < 1) throw std::invalid_argument("max weight must be at least 1");
  auto in_range = [this](Weight w) { return w >= 1 && w <= max_weight_; };
  if (!std::all_of(edge_weights_.begin(), edge_weights_.end(), in_range)) {
    throw std::invalid_argument("edge weight outside 1.." + std::to_string(max_weight_));
  }
  if (vertex_weights_ &&
      !std::all_of(vertex_weights_->begin(), vertex_weights_->end(), in_range)) {
    throw std::invalid_argument("vertex weight outside 1.." + std::to_string(max_weight_));
  }
}

Weighting Weighting::constant(const Hypergraph& h, SigmaMode mode, Weight value) {
  std::optional<std::vector<Weight>> vertices;
  if (requires_vertex_weights(mode)) vertices.emplace(h.vertex_count(), value);
  return Weighting(std::vector<Weight>(h.edge_count(), value), std::move(vertices), value);
}

Weight Weighting::largest_used() const {
  Weight best = 0;
  for (Weight w : edge_weights_) best = std::max(best, w);
  if (vertex_weights_) {
    for (Weight w : *vertex_weights_) best = std::max(best, w);
  }
  return best;
}

void Weighting::check_shape(const Hypergraph& h, SigmaMode mode) const {
  if (edge_weights_.size() != h.edge_count()) {
    throw std::invalid_argument("weighting has " + std::to_string(edge_weights_.size()) +
                                " edge weights but hypergraph has " +
                                std::to_string(h.edge_count()) + " edges");
  }
  if (requires_vertex_weights(mode) && !vertex_weights_) {
    throw std::invalid_argument("mode " + std::string(to_string(mode)) +
                                " requires vertex weights");
  }
  if (vertex_weights_ && vertex_weights_->size() != h.vertex_count()) {
    throw std::invalid_argument("weighting has " + std::to_string(vertex_weights_->size()) +
                                " vertex weights but hypergraph has " +
                                std::to_string(h.vertex_count()) + " vertices");
  }
}

std::size_t degree(const Hypergraph& h, VertexId v) { return h.incident_edges(v).size(); }

std::vector<VertexId> neighborhood(const Hypergraph& h, VertexId v) {
  std::vector<VertexId> out;
  for (EdgeIndex e : h.incident_edges(v)) {
    for (VertexId u : h.edge(e)) {
      if (u != v) out.push_back(u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ColorVector sigma(const Hypergraph& h, const Weighting& w, SigmaMode mode) {
  w.check_shape(h, mode);
  ColorVector colors(h.vertex_count(), 0);
  const auto& ew = w.edge_weights();
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    for (VertexId v : h.edge(e)) colors[v] = checked_add(colors[v], ew[e]);
  }
  if (mode == SigmaMode::edge_only) return colors;

  const auto& vw = *w.vertex_weights();
  ColorVector out = colors;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    out[v] = checked_add(out[v], vw[v]);
    if (mode == SigmaMode::full_total) {
      for (VertexId u : neighborhood(h, v)) out[v] = checked_add(out[v], vw[u]);
    }
  }
  return out;
}

std::vector<EdgeIndex> monochromatic_edges(const Hypergraph& h, std::span<const Color> colors) {
  if (colors.size() != h.vertex_count()) {
    throw std::invalid_argument("color vector length " + std::to_string(colors.size()) +
                                " does not match n=" + std::to_string(h.vertex_count()));
  }
  std::vector<EdgeIndex> bad;
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const auto verts = h.edge(e);
    const Color first = colors[verts.front()];
    if (std::all_of(verts.begin(), verts.end(), [&](VertexId v) { return colors[v] == first; })) {
      bad.push_back(e);
    }
  }
  return bad;
}

bool is_proper(const Hypergraph& h, std::span<const Color> colors) {
  return monochromatic_edges(h, colors).empty();
}

bool is_nice(const Hypergraph& h) {
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const auto verts = h.edge(e);
    if (std::all_of(verts.begin(), verts.end(), [&](VertexId v) { return degree(h, v) == 1; })) {
      return false;
    }
  }
  return true;
}

bool every_edge_has_degree_distinct_pair(const Hypergraph& h) {
  for (EdgeIndex e = 0; e < h.edge_count(); ++e) {
    const auto verts = h.edge(e);
    const std::size_t d = degree(h, verts.front());
    if (std::all_of(verts.begin(), verts.end(), [&](VertexId v) { return degree(h, v) == d; })) {
      return false;
    }
  }
  return true;
}

std::vector<std::vector<VertexId>> twin_classes(const Hypergraph& h) {
  std::map<std::vector<EdgeIndex>, std::vector<VertexId>> by_incidence;
  for (VertexId v = 0; v < h.vertex_count(); ++v) {
    const auto inc = h.incident_edges(v);
    by_incidence[std::vector<EdgeIndex>(inc.begin(), inc.end())].push_back(v);
  }
  std::vector<std::vector<VertexId>> classes;
  for (auto& [_, members] : by_incidence) {
    if (members.size() >= 2) classes.push_back(std::move(members));
  }
  std::sort(classes.begin(), classes.end());
  return classes;
}

std::vector<std::pair<VertexId, VertexId>> detect_twins(const Hypergraph& h) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (const auto& cls : twin_classes(h)) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) pairs.emplace_back(cls[i], cls[j]);
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::optional<std::size_t> is_regular(const Hypergraph& h) {
  if (h.vertex_count() == 0) return std::nullopt;
  const std::size_t d = degree(h, 0);
  for (VertexId v = 1; v < h.vertex_count(); ++v) {
    if (degree(h, v) != d) return std::nullopt;
  }
  return d;
}

}  // namespace nsd
