#include "nsd/io.hpp"

#include <charconv>
#include <map>
#include <optional>
#include <regex>
#include <sstream>

namespace nsd {

ParseError::ParseError(std::size_t position, const std::string& message)
    : std::runtime_error(message), position_(position) {}

namespace {

std::string join(const std::vector<std::size_t>& values, char sep = ',') {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) return std::nullopt;
  return value;
}

/// Splits a file into (line number, non-comment, non-blank line) pairs.
std::vector<std::pair<std::size_t, std::string>> data_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

template <typename T>
T number_at(const std::string& tok, std::size_t line, const char* what) {
  auto v = parse_number<T>(tok);
  if (!v) throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
  return *v;
}

}  // namespace

// --- hypergraph files -------------------------------------------------------

std::string render_hypergraph(const Hypergraph& h, const std::vector<std::string>& comments) {
  std::ostringstream out;
  out << h.vertex_count() << ' ' << h.edge_count() << '\n';
  for (const Edge& e : h.edges()) {
    for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
    out << '\n';
  }
  for (const auto& c : comments) out << "# " << c << '\n';
  return out.str();
}

Hypergraph parse_hypergraph(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'n m' header");
  const auto header = tokens(lines[0].second);
  if (header.size() != 2) throw ParseError(lines[0].first, "header must be 'n m'");
  const auto n = number_at<std::size_t>(header[0], lines[0].first, "vertex count");
  const auto m = number_at<std::size_t>(header[1], lines[0].first, "edge count");
  if (lines.size() - 1 != m) {
    const std::size_t at = lines.size() > m + 1 ? lines[m + 1].first : lines.back().first + 1;
    throw ParseError(at, "header declares " + std::to_string(m) + " edges but file has " +
                             std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i <= m; ++i) {
    Edge e;
    for (const auto& tok : tokens(lines[i].second)) {
      e.push_back(number_at<VertexId>(tok, lines[i].first, "vertex id"));
    }
    if (!std::is_sorted(e.begin(), e.end()) ||
        std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw ParseError(lines[i].first, "edge vertices must be strictly increasing");
    }
    edges.push_back(std::move(e));
  }
  try {
    return Hypergraph(n, std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[0].first, e.what());
  }
}

// --- weighting files --------------------------------------------------------

std::string render_weighting(const Weighting& w, SigmaMode mode) {
  std::ostringstream out;
  out << to_string(mode) << ' ' << w.max_weight() << "\nE";
  for (Weight x : w.edge_weights()) out << ' ' << x;
  out << '\n';
  if (w.vertex_weights()) {
    out << 'V';
    for (Weight x : *w.vertex_weights()) out << ' ' << x;
    out << '\n';
  }
  return out.str();
}

WeightingFile parse_weighting(std::string_view text) {
  const auto lines = data_lines(text);
  if (lines.empty()) throw ParseError(1, "missing 'mode k' header");
  const auto header = tokens(lines[0].second);
  if (header.size() != 2) throw ParseError(lines[0].first, "header must be 'mode k'");
  auto mode = parse_sigma_mode(header[0]);
  if (!mode) throw ParseError(lines[0].first, "mode must be e, ve or ven");
  const auto k = number_at<Weight>(header[1], lines[0].first, "max weight");

  auto read_row = [&](std::size_t idx, char tag) {
    auto toks = tokens(lines[idx].second);
    if (toks.empty() || toks[0] != std::string(1, tag)) {
      throw ParseError(lines[idx].first, std::string("expected a line starting with ") + tag);
    }
    std::vector<Weight> out;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      out.push_back(number_at<Weight>(toks[i], lines[idx].first, "weight"));
    }
    return out;
  };
  if (lines.size() < 2) throw ParseError(lines[0].first + 1, "missing 'E' line");
  if (lines.size() > 3) throw ParseError(lines[3].first, "unexpected extra line");
  std::vector<Weight> edges = read_row(1, 'E');
  std::optional<std::vector<Weight>> vertices;
  if (lines.size() == 3) vertices = read_row(2, 'V');
  if (requires_vertex_weights(*mode) && !vertices) {
    throw ParseError(lines[1].first, "mode " + header[0] + " needs a 'V' line");
  }
  try {
    return {*mode, Weighting(std::move(edges), std::move(vertices), k)};
  } catch (const std::invalid_argument& e) {
    throw ParseError(lines[0].first, e.what());
  }
}

// --- family specs -----------------------------------------------------------

namespace {

struct Item {
  std::string key;  // empty for bare values
  std::vector<std::pair<std::string, std::size_t>> values;  // text, offset
};

class SpecParser {
 public:
  SpecParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

  FamilySpec parse() {
    const auto colon = text_.find(':');
    if (colon == std::string_view::npos) fail(text_.size(), "expected 'family:' prefix");
    const std::string family(text_.substr(0, colon));
    std::string_view params = text_.substr(colon + 1);
    const std::size_t params_at = colon + 1;

    if (family == "blowup") {
      const auto at = params.find('@');
      if (at == std::string_view::npos) fail(text_.size(), "blow-up needs '@<base spec>'");
      split(params.substr(0, at), params_at);
      return parse_blowup(params.substr(at + 1), params_at + at + 1);
    }
    split(params, params_at);
    if (family == "multipartite") return MultipartiteSpec{bare_numbers()};
    if (family == "knrt") {
      expect_keys({"n", "r", "t"});
      return KnrtSpec{get("n"), get("r"), get("t")};
    }
    if (family == "knr") {
      expect_keys({"n", "r"});
      return KnrSpec{get("n"), get("r")};
    }
    if (family == "path") {
      expect_keys({"r", "t", "l"});
      return TightPathSpec{get("r"), get("t"), get("l")};
    }
    if (family == "cycle") {
      expect_keys({"r", "t", "l"});
      return TightCycleSpec{get("r"), get("t"), get("l")};
    }
    if (family == "theta") {
      expect_keys({"r", "t", "l"});
      return ThetaSpec{get("r"), get("t"), get_list("l")};
    }
    if (family == "plane") return parse_plane();
    if (family == "random") {
      expect_keys({"n", "r", "p", "seed"});
      RandomSpec s;
      s.n = get("n");
      s.r = get("r");
      const auto& [ptext, pat] = single("p");
      auto p = parse_number<double>(ptext);
      if (!p) fail(pat, "expected a probability, got '" + ptext + "'");
      s.p = *p;
      const auto& [stext, sat] = single("seed");
      auto seed = parse_number<std::uint64_t>(stext);
      if (!seed) fail(sat, "expected a seed, got '" + stext + "'");
      s.seed = *seed;
      return s;
    }
    fail(0, "unknown family '" + family + "'");
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& message) const {
    throw ParseError(offset_ + at, message);
  }

  void split(std::string_view params, std::size_t base) {
    std::size_t pos = 0;
    while (pos <= params.size()) {
      const auto comma = params.find(',', pos);
      const std::size_t end = comma == std::string_view::npos ? params.size() : comma;
      const std::string_view tok = params.substr(pos, end - pos);
      const std::size_t at = base + pos;
      if (tok.empty()) {
        if (!params.empty()) fail(at, "empty parameter");
      } else if (const auto eq = tok.find('='); eq != std::string_view::npos) {
        const std::string key(tok.substr(0, eq));
        if (key.empty()) fail(at, "missing parameter name");
        if (find(key)) fail(at, "duplicate parameter '" + key + "'");
        items_.push_back({key, {{std::string(tok.substr(eq + 1)), at + eq + 1}}});
      } else if (!items_.empty() && !items_.back().key.empty() &&
                 parse_number<std::size_t>(tok)) {
        items_.back().values.emplace_back(std::string(tok), at);
      } else {
        if (items_.empty() || !items_.back().key.empty()) items_.push_back({"", {}});
        items_.back().values.emplace_back(std::string(tok), at);
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
  }

  const Item* find(const std::string& key) const {
    for (const auto& item : items_) {
      if (item.key == key) return &item;
    }
    return nullptr;
  }

  void expect_keys(std::initializer_list<const char*> keys) const {
    for (const auto& item : items_) {
      if (item.key.empty()) fail(item.values.front().second, "unexpected bare value");
      if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return item.key == k; })) {
        fail(item.values.front().second - item.key.size() - 1,
             "unknown parameter '" + item.key + "'");
      }
    }
    for (const char* k : keys) {
      if (!find(k)) fail(text_.size(), std::string("missing parameter '") + k + "'");
    }
  }

  const std::pair<std::string, std::size_t>& single(const std::string& key) const {
    const Item* item = find(key);
    if (item->values.size() != 1) fail(item->values[1].second, "'" + key + "' takes one value");
    return item->values.front();
  }

  std::size_t to_size(const std::pair<std::string, std::size_t>& v) const {
    auto n = parse_number<std::size_t>(v.first);
    if (!n) fail(v.second, "expected a non-negative integer, got '" + v.first + "'");
    return *n;
  }

  std::size_t get(const std::string& key) const { return to_size(single(key)); }

  std::vector<std::size_t> get_list(const std::string& key) const {
    std::vector<std::size_t> out;
    for (const auto& v : find(key)->values) out.push_back(to_size(v));
    return out;
  }

  std::vector<std::size_t> bare_numbers() const {
    std::vector<std::size_t> out;
    for (const auto& item : items_) {
      if (!item.key.empty()) fail(item.values.front().second, "expected bare part sizes");
      for (const auto& v : item.values) out.push_back(to_size(v));
    }
    if (out.empty()) fail(text_.size(), "missing part sizes");
    return out;
  }

  FamilySpec parse_plane() const {
    std::optional<bool> projective;
    std::optional<std::size_t> q;
    for (const auto& item : items_) {
      if (item.key == "q") {
        q = get("q");
      } else if (item.key.empty() && item.values.size() == 1 &&
                 (item.values[0].first == "affine" || item.values[0].first == "projective")) {
        projective = item.values[0].first == "projective";
      } else {
        fail(item.values.front().second, "expected 'affine', 'projective' or q=");
      }
    }
    if (!projective) fail(text_.size(), "plane needs 'affine' or 'projective'");
    if (!q) fail(text_.size(), "missing parameter 'q'");
    if (*projective) return ProjectivePlaneSpec{*q};
    return AffinePlaneSpec{*q};
  }

  FamilySpec parse_blowup(std::string_view base_text, std::size_t base_at) const {
    FamilySpec base_spec = SpecParser(base_text, offset_ + base_at).parse();
    Hypergraph base;
    try {
      base = generate(base_spec).hypergraph;
    } catch (const std::invalid_argument& e) {
      fail(base_at, std::string("base: ") + e.what());
    }
    BlowupSpec spec;
    spec.base = base;
    spec.base_label = to_string(base_spec);
    if (find("sizes")) {
      if (items_.size() != 1) fail(0, "blow-up takes either sizes= or r=,odd=");
      spec.sizes = get_list("sizes");
    } else {
      expect_keys({"r", "odd"});
      try {
        spec.sizes = bipartite_blowup_sizes(base, get("r"), get("odd"));
      } catch (const std::invalid_argument& e) {
        fail(0, e.what());
      }
    }
    return spec;
  }

  std::string_view text_;
  std::size_t offset_;
  std::vector<Item> items_;
};

}  // namespace

FamilySpec parse_family_spec(std::string_view text) { return SpecParser(text, 0).parse(); }

std::string to_string(const FamilySpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        auto rtl = [](const char* name, const auto& x) {
          return std::string(name) + ":r=" + std::to_string(x.r) + ",t=" + std::to_string(x.t);
        };
        if constexpr (std::is_same_v<T, MultipartiteSpec>) {
          return "multipartite:" + join(s.part_sizes);
        } else if constexpr (std::is_same_v<T, KnrtSpec>) {
          return "knrt:n=" + std::to_string(s.n) + ",r=" + std::to_string(s.r) +
                 ",t=" + std::to_string(s.t);
        } else if constexpr (std::is_same_v<T, KnrSpec>) {
          return "knr:n=" + std::to_string(s.n) + ",r=" + std::to_string(s.r);
        } else if constexpr (std::is_same_v<T, TightPathSpec>) {
          return rtl("path", s) + ",l=" + std::to_string(s.length);
        } else if constexpr (std::is_same_v<T, TightCycleSpec>) {
          return rtl("cycle", s) + ",l=" + std::to_string(s.length);
        } else if constexpr (std::is_same_v<T, ThetaSpec>) {
          return rtl("theta", s) + ",l=" + join(s.lengths);
        } else if constexpr (std::is_same_v<T, AffinePlaneSpec>) {
          return "plane:affine,q=" + std::to_string(s.q);
        } else if constexpr (std::is_same_v<T, ProjectivePlaneSpec>) {
          return "plane:projective,q=" + std::to_string(s.q);
        } else if constexpr (std::is_same_v<T, RandomSpec>) {
          std::ostringstream p;
          p.precision(17);
          p << s.p;
          return "random:n=" + std::to_string(s.n) + ",r=" + std::to_string(s.r) +
                 ",p=" + p.str() + ",seed=" + std::to_string(s.seed);
        } else {
          return "blowup:sizes=" + join(s.sizes) + "@" + s.base_label;
        }
      },
      spec);
}

std::vector<FamilySpec> expand_family_grid(std::string_view text) {
  static const std::regex range(R"((\d+)\.\.(\d+))");
  std::vector<FamilySpec> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto semi = text.find(';', start);
    const std::size_t end = semi == std::string_view::npos ? text.size() : semi;
    std::vector<std::string> pending{std::string(text.substr(start, end - start))};
    while (!pending.empty()) {
      std::string spec = std::move(pending.back());
      pending.pop_back();
      std::smatch m;
      if (std::regex_search(spec, m, range)) {
        const auto lo = std::stoull(m[1].str());
        const auto hi = std::stoull(m[2].str());
        if (lo > hi) {
          throw ParseError(start + static_cast<std::size_t>(m.position(0)),
                           "empty range " + m[0].str());
        }
        // Push in reverse so ranges expand in increasing order.
        for (auto v = hi + 1; v-- > lo;) {
          pending.push_back(m.prefix().str() + std::to_string(v) + m.suffix().str());
        }
      } else if (!spec.empty()) {
        try {
          out.push_back(parse_family_spec(spec));
        } catch (const ParseError& e) {
          throw ParseError(start + e.position(), e.what());
        }
      }
    }
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return out;
}

std::vector<std::string> describe(const FamilySpec& spec, const FamilyInstance& inst) {
  std::vector<std::string> lines{"family " + to_string(spec)};
  for (std::size_t i = 0; i < inst.parts.size(); ++i) {
    std::vector<std::size_t> members(inst.parts[i].begin(), inst.parts[i].end());
    lines.push_back("part " + std::to_string(i) + ": " + join(members, ' '));
  }
  if (inst.plane) {
    const auto& pl = *inst.plane;
    for (std::size_t i = 0; i < pl.parallel_classes.size(); ++i) {
      lines.push_back("parallel class " + std::to_string(i) + ": lines " +
                      join(pl.parallel_classes[i], ' '));
    }
    lines.push_back("distinguished line: " + std::to_string(pl.distinguished_line));
    if (pl.projective) lines.push_back("infinity points: " + join(pl.infinity_points, ' '));
  }
  if (inst.theta) {
    for (std::size_t i = 0; i < inst.theta->branch_edges.size(); ++i) {
      lines.push_back("branch " + std::to_string(i) + ": edges " +
                      join(inst.theta->branch_edges[i], ' '));
    }
  }
  return lines;
}

}  // namespace nsd
