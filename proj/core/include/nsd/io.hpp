#ifndef NSD_IO_HPP
#define NSD_IO_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nsd/families.hpp"
#include "nsd/hypergraph.hpp"

namespace nsd {

/// Malformed input. `position` is a 1-based line number for files and a
/// 0-based character offset for spec strings.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// `n m`, then one edge per line. Each comment is written as a `# ` line
/// after the edges.
std::string render_hypergraph(const Hypergraph& h, const std::vector<std::string>& comments = {});
Hypergraph parse_hypergraph(std::string_view text);

struct WeightingFile {
  SigmaMode mode = SigmaMode::edge_only;
  Weighting weighting{{}, std::nullopt, 1};
};

/// `mode k`, `E w_1 .. w_m` and, when vertex weights exist, `V w_1 .. w_n`.
std::string render_weighting(const Weighting& w, SigmaMode mode);
WeightingFile parse_weighting(std::string_view text);

/**
 * Family spec grammar, one family per string:
 *
 *   multipartite:S1,S2,...        knrt:n=N,r=R,t=T       knr:n=N,r=R
 *   path:r=R,t=T,l=L              cycle:r=R,t=T,l=L
 *   theta:r=R,t=T,l=L1,L2,...     plane:affine,q=Q       plane:projective,q=Q
 *   random:n=N,r=R,p=P,seed=S
 *   blowup:sizes=S1,S2,...@BASE   blowup:r=R,odd=P@BASE
 *
 * BASE is another spec that must generate a graph. The second blow-up form
 * alternates class sizes P and R-P along BFS levels of a bipartite base.
 */
FamilySpec parse_family_spec(std::string_view text);

/// Canonical text; parse_family_spec(to_string(s)) == s.
std::string to_string(const FamilySpec& spec);

/// Expands every `a..b` range (inclusive) into the cartesian product of
/// specs, and splits on `;`. Specs that fail to parse raise ParseError.
std::vector<FamilySpec> expand_family_grid(std::string_view text);

/// Human-readable metadata lines (parts, classes, branches) for comments.
std::vector<std::string> describe(const FamilySpec& spec, const FamilyInstance& inst);

}  // namespace nsd

#endif  // NSD_IO_HPP
