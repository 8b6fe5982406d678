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
#include <string>
#include <vector>

#include "fewlists/multigraph.hpp"

namespace fewlists {

enum class ThreadShape { kOpen, kClosed, kInjured };

// The eight classes a general thread can end up in.  The matching-dependent
// ones stay kUnassigned until the matching has been chosen.
enum class ThreadClass {
  kUnassigned,
  kVertexBlock,      // injured order-1 piece coming from a vertex block
  kClosedOdd,        // closed, odd order
  kClosedEven,       // closed, even order
  kMatchedTrivial,   // trivial, derived edge in M
  kMatchedLong,      // nontrivial, derived edge in M
  kDOdd,             // odd order, derived edge in the 2-factor
  kDEven,            // even order >= 2, derived edge in the 2-factor
  kDTrivial,         // trivial, derived edge in the 2-factor
};

std::string to_string(ThreadClass klass);

// One general thread: an open, closed or injured piece of the host graph.
// Spine edges run head to tail as e_0..e_m; internal vertices are v_1..v_m
// with foot edge f_k attached at v_k (kNoEdge at the injured position).
// A closed piece identifies v_0 with v_{m+1}: head and tail are the two
// flags at that vertex.
struct ThreadPiece {
  ThreadShape shape = ThreadShape::kOpen;
  int order = 0;  // m
  std::vector<EdgeId> spine;
  std::vector<VertexId> internals;
  std::vector<EdgeId> feet;  // aligned with internals
  Flag head;
  Flag tail;
  ThreadClass klass = ThreadClass::kUnassigned;
  std::optional<EdgeId> derived_edge;
  int block = -1;

  bool trivial() const { return shape == ThreadShape::kOpen && order == 0; }
  bool injured() const { return shape == ThreadShape::kInjured; }
  int foot_count() const;

  // All edges of the piece: spine then present feet.
  std::vector<EdgeId> edges() const;
  // Foot flags (w_k, f_k) at the far endpoint of each present foot.
  std::vector<Flag> foot_flags(const Multigraph& g) const;

  // Exchanges head and tail, reversing spine, internals and feet.
  void reverse();

  // Cut-edge attachment count: order for open/injured pieces, order + 1 for
  // closed pieces, 3 for vertex-block pieces.
  int slot_count() const;
};

// Standalone thread graphs used by the enumeration lemmas.  Vertices are
// numbered v_0..v_{m+1} then w_1..w_m; edges are e_0..e_m then f_1..f_m.
struct StandaloneThread {
  Multigraph graph;
  ThreadPiece piece;
};

StandaloneThread make_open_thread(int order);
StandaloneThread make_closed_thread(int order);
// Injured thread with foot `missing` deleted (1-based, 1 <= missing <= order).
StandaloneThread make_injured_thread(int order, int missing);

}  // namespace fewlists
