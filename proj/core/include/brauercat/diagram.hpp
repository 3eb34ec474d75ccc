#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brauercat {

// Endpoints of an (m,s) diagram are numbered 1..m along the bottom row and
// m+1..m+s along the top row, both left to right.
struct Matching {
  int m = 0;
  int s = 0;
  // Each pair stored as (lesser, greater); list sorted by first element.
  std::vector<std::pair<int, int>> pairs;

  int total() const { return m + s; }
  bool is_top(int endpoint) const { return endpoint > m; }
  // 1-based position within the endpoint's own row.
  int row_position(int endpoint) const { return is_top(endpoint) ? endpoint - m : endpoint; }

  int partner(int endpoint) const;
  auto operator<=>(const Matching&) const = default;
};

enum class EndpointRole {
  VerticalBottom,
  VerticalTop,
  CupLeft,
  CupRight,
  CapLeft,
  CapRight,
};

// Builds the canonical sorted form; rejects endpoint sets that are not a
// fixed-point-free pairing of {1..m+s}.
Matching canonicalize(const std::vector<std::pair<int, int>>& raw_pairs, int m, int s);

EndpointRole role(const Matching& matching, int endpoint);

// True when this endpoint may carry dots in a normally ordered diagram:
// tops of vertical strands, right ends of cups, left ends of caps.
bool dots_allowed(const Matching& matching, int endpoint);

// Home endpoint of the strand through `endpoint` (where its dots live).
int dot_home(const Matching& matching, int endpoint);

using BubbleMonomial = std::map<int, int>;  // even k -> exponent of Delta_k

// A normally ordered dotted diagram: the basis element of the affine and
// cyclotomic Brauer categories. Dot counts are indexed by row position.
struct NormalDiagram {
  Matching matching;
  std::vector<int> top_dots;     // length s
  std::vector<int> bottom_dots;  // length m
  BubbleMonomial bubbles;

  int degree() const;
  auto operator<=>(const NormalDiagram&) const = default;
};

NormalDiagram make_diagram(Matching matching, std::vector<int> top_dots = {},
                           std::vector<int> bottom_dots = {}, BubbleMonomial bubbles = {});

// Checks the normal-order invariants (dots only at home endpoints, bubble
// indices even, vectors sized to the matching).
void validate_diagram(const NormalDiagram& d);

bool equivalent(const NormalDiagram& a, const NormalDiagram& b);

// `pairs=[(1,2)] top=[0,1] bot=[] bub {0:1}` with empty components omitted.
std::string to_string(const NormalDiagram& d);
std::string to_string(const Matching& matching);

// All bubble-free matchings of m bottom and s top endpoints, ordered
// lexicographically on the canonical pair list. Empty when m+s is odd.
std::vector<Matching> enumerate_matchings(int m, int s);

// Normally ordered basis diagrams. With dot_bound = a: every strand carries
// 0..a-1 dots at its home endpoint (the Hom-basis of the level-a cyclotomic
// quotient when with_bubbles is false). Without dot_bound a degree cutoff is
// required and the enumeration lists all diagrams of total degree <= cutoff.
std::vector<NormalDiagram> enumerate_nd_basis(int m, int s, std::optional<int> dot_bound,
                                              bool with_bubbles,
                                              std::optional<int> degree_cutoff = std::nullopt);

// One layer of a generator word, applied to the top row of a morphism.
struct Slice {
  enum class Kind { Cup, Cap, Cross, Dot } kind;
  int pos = 1;  // 1-based leftmost position the generator occupies
  auto operator<=>(const Slice&) const = default;
};

// Bottom-to-top list of slices together with the width before each slice.
struct GeneratorWord {
  int input_width = 0;
  std::vector<Slice> slices;

  int output_width() const;
  void append(Slice slice);
};

// Throws if positions run out of bounds or widths do not chain.
void validate_word(const GeneratorWord& word);

// Decomposes a matching into caps, then a crossing block, then cups, such
// that replaying the word on the identity reproduces the matching.
GeneratorWord slice_matching(const Matching& matching);

// Same contract, different slicing (caps outermost-first, cups re-ordered);
// used to exercise slicing independence.
GeneratorWord slice_matching_alt(const Matching& matching);

// The word of a full basis diagram: bottom dots, the matching word, top dots.
GeneratorWord diagram_word(const NormalDiagram& d);

}  // namespace brauercat
