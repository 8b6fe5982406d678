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

#include "fewlists/thread_piece.hpp"

#include <algorithm>

namespace fewlists {

std::string to_string(ThreadClass klass) {
  switch (klass) {
    case ThreadClass::kUnassigned: return "unassigned";
    case ThreadClass::kVertexBlock: return "vertex_block";
    case ThreadClass::kClosedOdd: return "closed_odd";
    case ThreadClass::kClosedEven: return "closed_even";
    case ThreadClass::kMatchedTrivial: return "matched_trivial";
    case ThreadClass::kMatchedLong: return "matched_long";
    case ThreadClass::kDOdd: return "d_odd";
    case ThreadClass::kDEven: return "d_even";
    case ThreadClass::kDTrivial: return "d_trivial";
  }
  return "?";
}

int ThreadPiece::foot_count() const {
  return static_cast<int>(std::count_if(feet.begin(), feet.end(),
                                        [](EdgeId f) { return f != kNoEdge; }));
}

std::vector<EdgeId> ThreadPiece::edges() const {
  std::vector<EdgeId> out = spine;
  for (EdgeId f : feet)
    if (f != kNoEdge) out.push_back(f);
  return out;
}

std::vector<Flag> ThreadPiece::foot_flags(const Multigraph& g) const {
  std::vector<Flag> out;
  for (size_t k = 0; k < feet.size(); ++k)
    if (feet[k] != kNoEdge) out.push_back({g.other_end(feet[k], internals[k]), feet[k]});
  return out;
}

void ThreadPiece::reverse() {
  std::swap(head, tail);
  std::reverse(spine.begin(), spine.end());
  std::reverse(internals.begin(), internals.end());
  std::reverse(feet.begin(), feet.end());
}

int ThreadPiece::slot_count() const {
  if (klass == ThreadClass::kVertexBlock) return 3;
  return shape == ThreadShape::kClosed ? order + 1 : order;
}

StandaloneThread make_open_thread(int order) {
  const int m = order;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int k = 0; k <= m; ++k) edges.emplace_back(k, k + 1);        // e_k
  for (int k = 1; k <= m; ++k) edges.emplace_back(k, m + 1 + k);    // f_k
  Multigraph g(2 * m + 2, std::move(edges));

  ThreadPiece piece;
  piece.shape = ThreadShape::kOpen;
  piece.order = m;
  for (int k = 0; k <= m; ++k) piece.spine.push_back(k);
  for (int k = 1; k <= m; ++k) {
    piece.internals.push_back(k);
    piece.feet.push_back(m + k);
  }
  piece.head = {0, 0};
  piece.tail = {m + 1, m};
  return {std::move(g), std::move(piece)};
}

StandaloneThread make_closed_thread(int order) {
  const int m = order;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int k = 0; k <= m; ++k) edges.emplace_back(k, (k + 1) % (m + 1));  // e_k
  for (int k = 1; k <= m; ++k) edges.emplace_back(k, m + k);              // f_k
  Multigraph g(2 * m + 1, std::move(edges));

  ThreadPiece piece;
  piece.shape = ThreadShape::kClosed;
  piece.order = m;
  for (int k = 0; k <= m; ++k) piece.spine.push_back(k);
  for (int k = 1; k <= m; ++k) {
    piece.internals.push_back(k);
    piece.feet.push_back(m + k);
  }
  piece.head = {0, 0};
  piece.tail = {0, m};
  return {std::move(g), std::move(piece)};
}

StandaloneThread make_injured_thread(int order, int missing) {
  const int m = order;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int k = 0; k <= m; ++k) edges.emplace_back(k, k + 1);
  std::vector<EdgeId> feet;
  int next_vertex = m + 2;
  for (int k = 1; k <= m; ++k) {
    if (k == missing) {
      feet.push_back(kNoEdge);
    } else {
      feet.push_back(static_cast<EdgeId>(edges.size()));
      edges.emplace_back(k, next_vertex++);
    }
  }
  Multigraph g(next_vertex, std::move(edges));

  ThreadPiece piece;
  piece.shape = ThreadShape::kInjured;
  piece.order = m;
  for (int k = 0; k <= m; ++k) piece.spine.push_back(k);
  for (int k = 1; k <= m; ++k) piece.internals.push_back(k);
  piece.feet = std::move(feet);
  piece.head = {0, 0};
  piece.tail = {m + 1, m};
  return {std::move(g), std::move(piece)};
}

}  // namespace fewlists
