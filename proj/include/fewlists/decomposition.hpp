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

#include <optional>
#include <vector>

#include "fewlists/multigraph.hpp"
#include "fewlists/thread_piece.hpp"

namespace fewlists {

enum class BlockKind { kVertex, kCycle, kProper };

// A block here is a connected component of G minus its cut-edges, not the
// usual 2-connected block.
struct Block {
  BlockKind kind = BlockKind::kVertex;
  std::vector<VertexId> vertices;
  bool is_root = false;
};

struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// Blocks, block tree, extended blocks, derived graph and the partition of the
// edge set into general threads.  Immutable once built except for the
// head/class finalization done by assign_heads.
struct Decomposition {
  const Multigraph* graph = nullptr;

  std::vector<EdgeId> bridges;          // sorted
  std::vector<char> is_bridge;          // indexed by edge
  std::vector<Block> blocks;
  std::vector<int> block_of_vertex;
  int root = -1;

  // Block tree with bridges as tree edges.
  std::vector<int> parent_block;                  // -1 for root
  std::vector<std::optional<EdgeId>> to_root_bridge;  // e_H, nullopt for root
  std::vector<std::vector<EdgeId>> outgoing_bridges;  // B(H), sorted

  // Derived graph: one component per proper block, degree-2 vertices
  // suppressed.  Fresh vertex ids map back to degree-3 vertices of G.
  Multigraph derived;
  std::vector<VertexId> derived_to_graph;
  std::vector<int> derived_vertex_of;   // G vertex -> derived id or -1
  std::vector<int> derived_component;   // derived vertex -> proper block id

  std::vector<ThreadPiece> threads;
  std::vector<int> thread_of_edge;          // G edge -> thread index
  std::vector<int> thread_of_derived_edge;  // derived edge -> thread index
  std::vector<EdgeId> base_edges;           // derived edges whose thread is injured

  // Base flags (v_H, e_H) over all nonroot blocks H, sorted.
  std::vector<Flag> base_flags() const;
  std::vector<int> dodd_threads() const;  // indices of class kDOdd, sorted
};

// Requires a connected loopless cubic graph.  The root defaults to the proper
// block containing the lowest-numbered degree-3 vertex of G - B(G).
Decomposition decompose(const Multigraph& g, std::optional<int> root_choice = std::nullopt);

struct ClosedThreadParity {
  int thread;
  int cycle_length;
  int order;
};
std::vector<ClosedThreadParity> classify_parities(const Decomposition& dec);

// Internal consistency checks (partitions, base edge counts, cubic derived
// graph).  Throws InvariantViolation on failure.
void check_decomposition(const Decomposition& dec);

}  // namespace fewlists
