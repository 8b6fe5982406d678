// Copyright 2026 The fewlists Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <vector>

#include "fewlists/decomposition.hpp"

namespace fewlists {

struct NoAdmissibleMatching : std::runtime_error {
  NoAdmissibleMatching(int block_id)
      : std::runtime_error("no admissible matching in derived component of block " +
                           std::to_string(block_id)),
        block(block_id) {}
  int block;
};

// One directed cycle of the oriented 2-factor: arcs (vertex, edge) where the
// edge leaves the vertex toward the next entry.
struct OrientedCycle {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
};

struct MatchingChoice {
  std::vector<EdgeId> matching;    // sorted derived edge ids
  std::vector<EdgeId> two_factor;  // complement, sorted
  std::vector<char> in_matching;   // indexed by derived edge
  std::vector<OrientedCycle> cycles;
  int nontrivial_in_matching = 0;

  // Arc (tail, head) of a 2-factor edge under the chosen orientation.
  std::pair<VertexId, VertexId> arc(EdgeId e) const;

 private:
  friend MatchingChoice find_matching(const Decomposition&);
  friend MatchingChoice& orient_two_factor(const Decomposition&, MatchingChoice&);
  std::vector<std::pair<VertexId, VertexId>> arcs_;  // indexed by derived edge
};

// Perfect matching of the derived graph through every base edge, with a
// bipartite complement, maximizing the number of matched nontrivial threads.
// Ties go to the lexicographically smallest edge set.  Throws
// NoAdmissibleMatching when some component admits none.
MatchingChoice find_matching(const Decomposition& dec);

// Canonical cyclic orientation of the complement: each cycle starts at its
// minimum vertex and steps toward the smaller admissible neighbour.
MatchingChoice& orient_two_factor(const Decomposition& dec, MatchingChoice& mc);

// Test oracle: all perfect matchings of one derived component that contain
// `forced` (pass kNoEdge for none), as sorted edge id sets.
std::vector<std::vector<EdgeId>> enumerate_perfect_matchings(const Multigraph& g,
                                                             const std::vector<VertexId>& vertices,
                                                             EdgeId forced);

// Cycles of the complement of a matching, even/odd check helper.
bool complement_is_bipartite(const Multigraph& g, const std::vector<VertexId>& vertices,
                             const std::vector<EdgeId>& matching);

}  // namespace fewlists
