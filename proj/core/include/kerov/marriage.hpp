#pragma once

#include <cstdint>
#include <vector>

#include "kerov/permutation.hpp"

namespace kerov {

// Bipartite graph on the cycles of a factorization: whites are cycles of s1,
// blacks are cycles of s2, an edge joins cycles with intersecting supports.
// Supports at most 64 points / 64 cycles per side (plenty at desk scale).
struct IntersectionGraph {
  int white_count = 0;
  std::vector<std::uint64_t> black_whites;  // per black: bitmask of whites

  int black_count() const { return static_cast<int>(black_whites.size()); }

  static IntersectionGraph from_adjacency(
      int white_count, const std::vector<std::vector<int>>& black_to_whites);
};

IntersectionGraph build_intersection_graph(const Permutation& s1,
                                           const Permutation& s2);
IntersectionGraph build_intersection_graph(const std::vector<Cycle>& whites,
                                           const std::vector<Cycle>& blacks,
                                           int degree);

// Color per black vertex, values >= 2; in Kerov counting the colors sum to
// the total number of cycles on both sides.
using Coloring = std::vector<int>;

// Strict neighborhood bound: every nontrivial black subset A has strictly
// more than sum_{j in A} (q(j)-1) white neighbors. Direct subset enumeration.
bool marriage_condition(const IntersectionGraph& g, const Coloring& q);

// Double-marriage form of the same condition: an arrangement exists (every
// white married to an adjacent black, black j receiving exactly q(j)-1
// husbands), and for every nontrivial A two arrangements with different
// husband sets exist.
bool double_marriage_condition(const IntersectionGraph& g, const Coloring& q);

// Transportation form: the system (row sums 1 per white, column sums q(j)-1
// per black) has a strictly positive solution. Checked as 0/1 feasibility
// plus, for each edge, feasibility with that edge forced.
bool q_admissible(const IntersectionGraph& g, const Coloring& q);

// A bridge whose removal leaves a black vertex on both sides: such pairs
// (s1, s2) contribute for no coloring and can be skipped wholesale.
bool has_disconnecting_edge(const IntersectionGraph& g);

bool is_connected(const IntersectionGraph& g);

}  // namespace kerov
