#include "commands.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "nsd/experiments.hpp"
#include "nsd/io.hpp"
#include "nsd/solver.hpp"
#include "nsd/weighters.hpp"

namespace nsd::cli {

namespace {

/// Failure that maps directly to an exit code.
struct CommandError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CommandError{usage, "cannot read " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out || !(out << content)) throw CommandError{usage, "cannot write " + path};
}

SigmaMode mode_of(const std::string& text) {
  auto mode = parse_sigma_mode(text);
  if (!mode) throw CommandError{usage, "mode must be e, ve or ven, got '" + text + "'"};
  return *mode;
}

Hypergraph load_hypergraph(const std::string& path) {
  try {
    return parse_hypergraph(read_file(path));
  } catch (const ParseError& e) {
    throw CommandError{usage, path + ":" + std::to_string(e.position()) + ": " + e.what()};
  }
}

FamilySpec spec_of(const std::string& text) {
  try {
    return parse_family_spec(text);
  } catch (const ParseError& e) {
    throw CommandError{usage, "spec position " + std::to_string(e.position()) + ": " + e.what()};
  }
}

SearchConfig config_of(const SearchOptions& opts, SigmaMode mode) {
  SearchConfig cfg;
  cfg.max_k = opts.max_k;
  cfg.mode = mode;
  cfg.node_budget = opts.budget;
  cfg.parallel_width = opts.jobs > 1 ? opts.jobs : 0;
  return cfg;
}

/// Runs `body`, translating errors into messages and exit codes.
template <typename Body>
int guarded(Streams io, Body&& body) {
  try {
    return body();
  } catch (const CommandError& e) {
    io.err << "error: " << e.message << '\n';
    return e.code;
  } catch (const ParseError& e) {
    io.err << "error: position " << e.position() << ": " << e.what() << '\n';
    return usage;
  } catch (const NoPrediction& e) {
    io.err << "error: no prediction: " << e.what() << '\n';
    return usage;
  } catch (const SelfCheckFailure& e) {
    io.err << "error: self-check failed: " << e.what() << '\n';
    return improper;
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return usage;
  }
}

std::string join_edges(const Hypergraph& h, EdgeIndex e) {
  std::string out;
  for (VertexId v : h.edge(e)) out += (out.empty() ? "" : " ") + std::to_string(v);
  return out;
}

}  // namespace

int cmd_gen(const std::string& spec_text, const std::optional<std::string>& out_path,
            Streams io) {
  return guarded(io, [&] {
    const FamilySpec spec = spec_of(spec_text);
    const FamilyInstance inst = generate(spec);
    const std::string text = render_hypergraph(inst.hypergraph, describe(spec, inst));
    if (out_path) {
      write_file(*out_path, text);
    } else {
      io.out << text;
    }
    return ok;
  });
}

int cmd_weigh(const std::string& spec_text, const std::string& mode_text,
              const std::optional<std::string>& out_path, Streams io) {
  return guarded(io, [&] {
    const SigmaMode mode = mode_of(mode_text);
    const FamilySpec spec = spec_of(spec_text);
    const WeighOutcome res = weigh(spec, mode);
    const std::string text = render_weighting(res.weighting, mode);
    const std::string report = "predicted=" + std::to_string(res.prediction.value) +
                               " case=\"" + res.prediction.theorem_case +
                               "\" self-check=passed";
    if (out_path) {
      write_file(*out_path, text);
      io.out << report << '\n';
    } else {
      io.out << text << "# " << report << '\n';
    }
    return ok;
  });
}

int cmd_verify(const std::string& hypergraph_path, const std::string& weighting_path,
               Streams io) {
  return guarded(io, [&] {
    const Hypergraph h = load_hypergraph(hypergraph_path);
    WeightingFile wf;
    try {
      wf = parse_weighting(read_file(weighting_path));
    } catch (const ParseError& e) {
      throw CommandError{usage, weighting_path + ":" + std::to_string(e.position()) + ": " +
                                    e.what()};
    }
    VerifyReport report;
    try {
      report = verify(h, wf.weighting, wf.mode);
    } catch (const std::invalid_argument& e) {
      throw CommandError{usage, std::string("shape mismatch: ") + e.what()};
    }
    if (report.proper) {
      io.out << "proper\n";
      return ok;
    }
    io.out << "improper: " << report.violations.size() << " monochromatic edge(s)\n";
    for (const Violation& v : report.violations) {
      io.out << "edge " << v.edge << " {" << join_edges(h, v.edge) << "} color " << v.color
             << '\n';
    }
    return improper;
  });
}

int cmd_exact(const std::string& hypergraph_path, const std::string& mode_text,
              const SearchOptions& search, const std::optional<std::string>& witness_path,
              Streams io) {
  return guarded(io, [&] {
    const SigmaMode mode = mode_of(mode_text);
    const Hypergraph h = load_hypergraph(hypergraph_path);
    const ChiResult res = exact_chi(h, config_of(search, mode));
    switch (res.status) {
      case ChiResult::Status::exact:
        io.out << res.value << '\n';
        if (witness_path) write_file(*witness_path, render_weighting(*res.witness, mode));
        return ok;
      case ChiResult::Status::exceeds_max_k:
        io.out << "> " << search.max_k << '\n';
        return improper;
      case ChiResult::Status::budget_exhausted:
        io.out << "budget exhausted after " << res.nodes << " nodes; infeasible through k="
               << res.infeasible_through << '\n';
        return budget;
    }
    return usage;
  });
}

int cmd_table(const std::string& grid, const std::string& mode_text,
              std::size_t oracle_edge_cap, const SearchOptions& search, Streams io) {
  return guarded(io, [&] {
    const SigmaMode mode = mode_of(mode_text);
    const std::vector<FamilySpec> specs = expand_family_grid(grid);
    const SearchConfig cfg = config_of(search, mode);
    SearchConfig row_cfg = cfg;
    row_cfg.parallel_width = 0;
    const auto rows = family_table(specs, mode, oracle_edge_cap, row_cfg, search.jobs);

    io.out << "spec\tmode\tedges\tpredicted\tcase\tconstructive\texact\tagreement\tstatus\n";
    bool clean = true;
    for (const TableRow& row : rows) {
      std::string exact = "-";
      if (row.exact) {
        switch (row.exact->status) {
          case ChiResult::Status::exact: exact = std::to_string(row.exact->value); break;
          case ChiResult::Status::exceeds_max_k: exact = ">" + std::to_string(cfg.max_k); break;
          case ChiResult::Status::budget_exhausted: exact = "budget"; break;
        }
      }
      io.out << to_string(row.spec) << '\t' << to_string(mode) << '\t' << row.edge_count << '\t'
             << (row.predicted ? std::to_string(row.predicted->value) : "-") << '\t'
             << (row.predicted ? row.predicted->theorem_case : "-") << '\t'
             << (row.predicted ? (row.constructive_ok ? "ok" : "failed") : "-") << '\t' << exact
             << '\t' << to_string(row.agreement) << '\t'
             << (row.status.empty() ? "ok" : row.status) << '\n';
      if (row.agreement == Agreement::disagree || (row.predicted && !row.constructive_ok)) {
        clean = false;
      }
    }
    return clean ? ok : improper;
  });
}

int cmd_random(const std::vector<std::string>& args, const SearchOptions& search, Streams io) {
  return guarded(io, [&] {
    std::map<std::string, std::string> kv;
    for (const std::string& a : args) {
      const auto eq = a.find('=');
      if (eq == std::string::npos) throw CommandError{usage, "expected key=value, got '" + a + "'"};
      kv[a.substr(0, eq)] = a.substr(eq + 1);
    }
    auto take = [&](const std::string& key) {
      auto it = kv.find(key);
      if (it == kv.end()) throw CommandError{usage, "missing " + key + "="};
      std::string v = it->second;
      kv.erase(it);
      return v;
    };
    auto integer = [&](const std::string& key) {
      const std::string v = take(key);
      std::uint64_t out = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
      if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw CommandError{usage, key + " must be a non-negative integer"};
      }
      return out;
    };
    const auto n = integer("n");
    const auto r = integer("r");
    const std::string p_text = take("p");
    double p = 0;
    auto [ptr, ec] = std::from_chars(p_text.data(), p_text.data() + p_text.size(), p);
    if (ec != std::errc() || ptr != p_text.data() + p_text.size()) {
      throw CommandError{usage, "p must be a number"};
    }
    const auto trials = integer("trials");
    const auto seed = integer("seed");
    if (!kv.empty()) throw CommandError{usage, "unknown argument " + kv.begin()->first + "="};

    SearchConfig cfg = config_of(search, SigmaMode::edge_only);
    cfg.parallel_width = 0;
    const RandomReport rep = random_trial_batch(n, r, p, trials, seed, cfg, search.jobs);
    io.out << "n\tr\tp\ttrials\tseed\tmean_edges\tempty\tisolated_edge\tbudget\t"
              "frac_chi_le_1\tfrac_chi_le_2\tnice_frac_chi_le_1\tnice_frac_chi_le_2\n";
    io.out << rep.n << '\t' << rep.r << '\t' << rep.p << '\t' << rep.trials << '\t' << rep.seed
           << '\t' << rep.mean_edges << '\t' << rep.empty_instances << '\t'
           << rep.isolated_edge_instances << '\t' << rep.budget_exhausted << '\t'
           << rep.fraction_chi_le.at(1) << '\t' << rep.fraction_chi_le.at(2) << '\t'
           << rep.nice_fraction_chi_le.at(1) << '\t' << rep.nice_fraction_chi_le.at(2) << '\n';
    return rep.budget_exhausted ? budget : ok;
  });
}

int cmd_twins(const std::string& hypergraph_path, Streams io) {
  return guarded(io, [&] {
    const Hypergraph h = load_hypergraph(hypergraph_path);
    const auto classes = twin_classes(h);
    if (classes.empty()) {
      io.out << "twin-free\n";
      return ok;
    }
    io.out << classes.size() << " twin class(es)\n";
    for (const auto& cls : classes) {
      std::string line;
      for (VertexId v : cls) line += (line.empty() ? "" : " ") + std::to_string(v);
      io.out << line << '\n';
    }
    return improper;
  });
}

}  // namespace nsd::cli
