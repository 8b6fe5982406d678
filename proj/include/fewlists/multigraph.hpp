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

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fewlists {

using VertexId = int;
using EdgeId = int;

inline constexpr EdgeId kNoEdge = -1;

// An incident (vertex, edge) pair.  Parallel edges are told apart by edge
// index, so a flag is unambiguous even in a multigraph.
struct Flag {
  VertexId vertex = -1;
  EdgeId edge = kNoEdge;

  friend auto operator<=>(const Flag&, const Flag&) = default;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_number)
      : std::runtime_error(what), line(line_number) {}
  int line;
};

// Loopless multigraph with a fixed edge ordering.  The edge order is the
// construction order and is never changed afterwards; all sign computations
// downstream reference it.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges);

  // Plain text format: optional header "n m", one edge "u v" per line,
  // '#' starts a comment.  Loops and malformed tokens are rejected with the
  // offending line number.
  static Multigraph parse_edge_list(const std::string& text);
  std::string serialize_edge_list() const;

  // sparse6, optionally prefixed by ">>sparse6<<".  Multigraphs are fine;
  // loops are rejected.
  static Multigraph parse_sparse6(const std::string& text);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::pair<VertexId, VertexId>& endpoints(EdgeId e) const { return edges_[e]; }
  VertexId other_end(EdgeId e, VertexId v) const {
    const auto& [a, b] = edges_[e];
    return a == v ? b : a;
  }
  bool is_endpoint(EdgeId e, VertexId v) const {
    return edges_[e].first == v || edges_[e].second == v;
  }

  // Incident edge ids in increasing order; parallel edges appear once each.
  const std::vector<EdgeId>& incident_edges(VertexId v) const { return incidence_[v]; }
  int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }
  std::vector<int> degrees() const;

  bool is_cubic() const;
  bool is_connected() const;
  std::vector<std::vector<VertexId>> components() const;

  // Cut-edges, in increasing edge order.  A parallel edge is never a bridge.
  std::vector<EdgeId> find_bridges() const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<std::pair<VertexId, VertexId>> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

}  // namespace fewlists
