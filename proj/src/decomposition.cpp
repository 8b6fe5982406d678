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

#include "fewlists/decomposition.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fewlists {

namespace {

int in_block_degree(const Multigraph& g, const Decomposition& dec, VertexId v) {
  int d = 0;
  for (EdgeId e : g.incident_edges(v))
    if (!dec.is_bridge[e]) ++d;
  return d;
}

// The unique bridge at a degree-2-in-block vertex of a cubic graph.
EdgeId bridge_at(const Multigraph& g, const Decomposition& dec, VertexId v) {
  for (EdgeId e : g.incident_edges(v))
    if (dec.is_bridge[e]) return e;
  throw InvariantViolation("expected a bridge at vertex " + std::to_string(v));
}

void canonicalize_open(ThreadPiece& piece) {
  if (piece.tail < piece.head) piece.reverse();
}

}  // namespace

std::vector<Flag> Decomposition::base_flags() const {
  std::vector<Flag> out;
  for (int h = 0; h < static_cast<int>(blocks.size()); ++h) {
    if (!to_root_bridge[h]) continue;
    EdgeId e = *to_root_bridge[h];
    VertexId u = graph->endpoints(e).first;
    out.push_back({block_of_vertex[u] == h ? u : graph->endpoints(e).second, e});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Decomposition::dodd_threads() const {
  std::vector<int> out;
  for (int t = 0; t < static_cast<int>(threads.size()); ++t)
    if (threads[t].klass == ThreadClass::kDOdd) out.push_back(t);
  return out;
}

Decomposition decompose(const Multigraph& g, std::optional<int> root_choice) {
  if (!g.is_cubic()) throw std::invalid_argument("decompose: graph is not cubic");
  if (!g.is_connected()) throw std::invalid_argument("decompose: graph is not connected");

  Decomposition dec;
  dec.graph = &g;
  dec.bridges = g.find_bridges();
  dec.is_bridge.assign(g.edge_count(), 0);
  for (EdgeId e : dec.bridges) dec.is_bridge[e] = 1;

  // Blocks: components of G - B(G), discovered in vertex id order.
  dec.block_of_vertex.assign(g.vertex_count(), -1);
  for (VertexId start = 0; start < g.vertex_count(); ++start) {
    if (dec.block_of_vertex[start] != -1) continue;
    int id = static_cast<int>(dec.blocks.size());
    Block block;
    block.vertices.push_back(start);
    dec.block_of_vertex[start] = id;
    for (size_t head = 0; head < block.vertices.size(); ++head) {
      for (EdgeId e : g.incident_edges(block.vertices[head])) {
        if (dec.is_bridge[e]) continue;
        VertexId w = g.other_end(e, block.vertices[head]);
        if (dec.block_of_vertex[w] == -1) {
          dec.block_of_vertex[w] = id;
          block.vertices.push_back(w);
        }
      }
    }
    std::sort(block.vertices.begin(), block.vertices.end());
    dec.blocks.push_back(std::move(block));
  }

  for (Block& block : dec.blocks) {
    if (block.vertices.size() == 1) {
      block.kind = BlockKind::kVertex;
      continue;
    }
    bool all_two = true;
    for (VertexId v : block.vertices)
      if (in_block_degree(g, dec, v) != 2) all_two = false;
    block.kind = all_two ? BlockKind::kCycle : BlockKind::kProper;
  }

  if (root_choice) {
    if (*root_choice < 0 || *root_choice >= static_cast<int>(dec.blocks.size()) ||
        dec.blocks[*root_choice].kind != BlockKind::kProper)
      throw std::invalid_argument("decompose: root_choice is not a proper block");
    dec.root = *root_choice;
  } else {
    for (VertexId v = 0; v < g.vertex_count() && dec.root == -1; ++v)
      if (in_block_degree(g, dec, v) == 3) dec.root = dec.block_of_vertex[v];
    if (dec.root == -1) throw std::invalid_argument("decompose: no proper block");
  }
  dec.blocks[dec.root].is_root = true;

  // Block tree rooted at the designated proper block; every bridge is a tree
  // edge, and e_H is the bridge toward the root.
  const int block_count = static_cast<int>(dec.blocks.size());
  dec.parent_block.assign(block_count, -1);
  dec.to_root_bridge.assign(block_count, std::nullopt);
  dec.outgoing_bridges.assign(block_count, {});
  {
    std::vector<char> seen(block_count, 0);
    std::vector<int> queue{dec.root};
    seen[dec.root] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
      int h = queue[head];
      for (VertexId v : dec.blocks[h].vertices) {
        for (EdgeId e : g.incident_edges(v)) {
          if (!dec.is_bridge[e]) continue;
          int other = dec.block_of_vertex[g.other_end(e, v)];
          if (seen[other]) continue;
          seen[other] = 1;
          dec.parent_block[other] = h;
          dec.to_root_bridge[other] = e;
          queue.push_back(other);
        }
      }
    }
    if (static_cast<int>(queue.size()) != block_count)
      throw InvariantViolation("block tree is not connected");
  }
  for (int h = 0; h < block_count; ++h) {
    for (VertexId v : dec.blocks[h].vertices)
      for (EdgeId e : g.incident_edges(v))
        if (dec.is_bridge[e] && (!dec.to_root_bridge[h] || e != *dec.to_root_bridge[h]))
          dec.outgoing_bridges[h].push_back(e);
    std::sort(dec.outgoing_bridges[h].begin(), dec.outgoing_bridges[h].end());
  }

  // Threads.  Proper blocks are walked branch vertex to branch vertex; cycle
  // blocks become one closed piece; vertex blocks one injured order-1 piece.
  std::vector<char> edge_used(g.edge_count(), 0);
  auto foot_of = [&](int block_id, VertexId v) -> EdgeId {
    EdgeId b = bridge_at(g, dec, v);
    if (dec.to_root_bridge[block_id] && b == *dec.to_root_bridge[block_id]) return kNoEdge;
    return b;
  };

  std::vector<ThreadPiece> proper_threads;
  for (int h = 0; h < block_count; ++h) {
    const Block& block = dec.blocks[h];
    if (block.kind != BlockKind::kProper) continue;
    for (VertexId b : block.vertices) {
      if (in_block_degree(g, dec, b) != 3) continue;
      for (EdgeId e0 : g.incident_edges(b)) {
        if (dec.is_bridge[e0] || edge_used[e0]) continue;
        ThreadPiece piece;
        piece.block = h;
        piece.spine.push_back(e0);
        edge_used[e0] = 1;
        EdgeId cur = e0;
        VertexId v = g.other_end(e0, b);
        while (in_block_degree(g, dec, v) == 2) {
          piece.internals.push_back(v);
          piece.feet.push_back(foot_of(h, v));
          EdgeId next = kNoEdge;
          for (EdgeId cand : g.incident_edges(v))
            if (!dec.is_bridge[cand] && cand != cur) next = cand;
          piece.spine.push_back(next);
          edge_used[next] = 1;
          cur = next;
          v = g.other_end(next, v);
        }
        piece.order = static_cast<int>(piece.internals.size());
        piece.shape = std::count(piece.feet.begin(), piece.feet.end(), kNoEdge) > 0
                          ? ThreadShape::kInjured
                          : ThreadShape::kOpen;
        piece.head = {b, piece.spine.front()};
        piece.tail = {v, piece.spine.back()};
        canonicalize_open(piece);
        proper_threads.push_back(std::move(piece));
      }
    }
  }
  std::sort(proper_threads.begin(), proper_threads.end(),
            [](const ThreadPiece& a, const ThreadPiece& b) {
              return *std::min_element(a.spine.begin(), a.spine.end()) <
                     *std::min_element(b.spine.begin(), b.spine.end());
            });

  // Derived graph over branch vertices, in vertex id order per block.
  dec.derived_vertex_of.assign(g.vertex_count(), -1);
  std::vector<std::pair<VertexId, VertexId>> derived_edges;
  for (int h = 0; h < block_count; ++h) {
    if (dec.blocks[h].kind != BlockKind::kProper) continue;
    for (VertexId v : dec.blocks[h].vertices) {
      if (in_block_degree(g, dec, v) != 3) continue;
      dec.derived_vertex_of[v] = static_cast<int>(dec.derived_to_graph.size());
      dec.derived_to_graph.push_back(v);
      dec.derived_component.push_back(h);
    }
  }
  for (ThreadPiece& piece : proper_threads) {
    piece.derived_edge = static_cast<EdgeId>(derived_edges.size());
    derived_edges.emplace_back(dec.derived_vertex_of[piece.head.vertex],
                               dec.derived_vertex_of[piece.tail.vertex]);
    if (piece.injured()) dec.base_edges.push_back(*piece.derived_edge);
    dec.threads.push_back(std::move(piece));
  }
  dec.derived = Multigraph(static_cast<int>(dec.derived_to_graph.size()),
                           std::move(derived_edges));

  for (int h = 0; h < block_count; ++h) {
    const Block& block = dec.blocks[h];
    if (block.kind == BlockKind::kVertex) {
      VertexId v = block.vertices.front();
      if (dec.outgoing_bridges[h].size() != 2)
        throw InvariantViolation("vertex block without two outgoing bridges");
      ThreadPiece piece;
      piece.block = h;
      piece.shape = ThreadShape::kInjured;
      piece.klass = ThreadClass::kVertexBlock;
      piece.order = 1;
      piece.spine = dec.outgoing_bridges[h];
      piece.internals = {v};
      piece.feet = {kNoEdge};
      piece.head = {g.other_end(piece.spine[0], v), piece.spine[0]};
      piece.tail = {g.other_end(piece.spine[1], v), piece.spine[1]};
      canonicalize_open(piece);
      dec.threads.push_back(std::move(piece));
    } else if (block.kind == BlockKind::kCycle) {
      if (!dec.to_root_bridge[h])
        throw InvariantViolation("cycle block cannot be the root");
      EdgeId to_root = *dec.to_root_bridge[h];
      VertexId v0 = g.endpoints(to_root).first;
      if (dec.block_of_vertex[v0] != h) v0 = g.endpoints(to_root).second;
      ThreadPiece piece;
      piece.block = h;
      piece.shape = ThreadShape::kClosed;
      EdgeId first = kNoEdge;
      for (EdgeId e : g.incident_edges(v0))
        if (!dec.is_bridge[e] && first == kNoEdge) first = e;
      piece.spine.push_back(first);
      EdgeId cur = first;
      VertexId v = g.other_end(first, v0);
      while (v != v0) {
        piece.internals.push_back(v);
        piece.feet.push_back(foot_of(h, v));
        EdgeId next = kNoEdge;
        for (EdgeId cand : g.incident_edges(v))
          if (!dec.is_bridge[cand] && cand != cur) next = cand;
        piece.spine.push_back(next);
        cur = next;
        v = g.other_end(next, v);
      }
      piece.order = static_cast<int>(piece.internals.size());
      piece.klass = piece.order % 2 == 1 ? ThreadClass::kClosedOdd : ThreadClass::kClosedEven;
      piece.head = {v0, piece.spine.front()};
      piece.tail = {v0, piece.spine.back()};
      dec.threads.push_back(std::move(piece));
    }
  }

  dec.thread_of_edge.assign(g.edge_count(), -1);
  dec.thread_of_derived_edge.assign(dec.derived.edge_count(), -1);
  for (int t = 0; t < static_cast<int>(dec.threads.size()); ++t) {
    for (EdgeId e : dec.threads[t].edges()) {
      if (dec.thread_of_edge[e] != -1)
        throw InvariantViolation("edge in two threads");
      dec.thread_of_edge[e] = t;
    }
    if (dec.threads[t].derived_edge)
      dec.thread_of_derived_edge[*dec.threads[t].derived_edge] = t;
  }
  std::sort(dec.base_edges.begin(), dec.base_edges.end());

  check_decomposition(dec);
  return dec;
}

std::vector<ClosedThreadParity> classify_parities(const Decomposition& dec) {
  std::vector<ClosedThreadParity> out;
  for (int t = 0; t < static_cast<int>(dec.threads.size()); ++t) {
    const ThreadPiece& piece = dec.threads[t];
    if (piece.shape == ThreadShape::kClosed)
      out.push_back({t, static_cast<int>(piece.spine.size()), piece.order});
  }
  return out;
}

void check_decomposition(const Decomposition& dec) {
  const Multigraph& g = *dec.graph;

  // Threads partition E(G).
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (dec.thread_of_edge[e] == -1)
      throw InvariantViolation("edge missing from the thread partition");

  // Extended blocks partition E(G): each edge lies in exactly one block or
  // exactly one B(H).
  std::vector<int> owner(g.edge_count(), -1);
  for (int h = 0; h < static_cast<int>(dec.blocks.size()); ++h)
    for (EdgeId e : dec.outgoing_bridges[h]) {
      if (owner[e] != -1) throw InvariantViolation("bridge in two extended blocks");
      owner[e] = h;
    }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (dec.is_bridge[e]) {
      if (owner[e] == -1) throw InvariantViolation("bridge outside all extended blocks");
    } else if (dec.block_of_vertex[g.endpoints(e).first] !=
               dec.block_of_vertex[g.endpoints(e).second]) {
      throw InvariantViolation("block edge spans two blocks");
    }
  }

  if (!dec.derived.is_cubic())
    throw InvariantViolation("derived graph is not cubic");

  // One base edge per nonroot derived component, none in the root component.
  std::vector<int> base_count(dec.blocks.size(), 0);
  for (EdgeId e : dec.base_edges)
    ++base_count[dec.derived_component[dec.derived.endpoints(e).first]];
  for (int h = 0; h < static_cast<int>(dec.blocks.size()); ++h) {
    if (dec.blocks[h].kind != BlockKind::kProper) continue;
    int expected = h == dec.root ? 0 : 1;
    if (base_count[h] != expected)
      throw InvariantViolation("wrong base edge count in component");
  }

  // Proper blocks are subdivisions of 2-connected cubic graphs: degrees in
  // {2,3}, at least one branch vertex, and the block subgraph has no bridge.
  for (int h = 0; h < static_cast<int>(dec.blocks.size()); ++h) {
    const Block& block = dec.blocks[h];
    if (block.kind != BlockKind::kProper) continue;
    std::vector<VertexId> local(g.vertex_count(), -1);
    for (size_t i = 0; i < block.vertices.size(); ++i)
      local[block.vertices[i]] = static_cast<VertexId>(i);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (dec.is_bridge[e]) continue;
      const auto& [u, v] = g.endpoints(e);
      if (dec.block_of_vertex[u] == h) edges.emplace_back(local[u], local[v]);
    }
    Multigraph sub(static_cast<int>(block.vertices.size()), std::move(edges));
    bool branch = false;
    for (VertexId v = 0; v < sub.vertex_count(); ++v) {
      if (sub.degree(v) == 3) branch = true;
      else if (sub.degree(v) != 2)
        throw InvariantViolation("proper block vertex of bad degree");
    }
    if (!branch || !sub.find_bridges().empty())
      throw InvariantViolation("proper block is not 2-edge-connected cubic subdivision");
  }
}

}  // namespace fewlists
