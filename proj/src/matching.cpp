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

#include "fewlists/matching.hpp"

#include <algorithm>

namespace fewlists {

std::pair<VertexId, VertexId> MatchingChoice::arc(EdgeId e) const { return arcs_[e]; }

namespace {

void all_matchings_rec(const Multigraph& g, std::vector<char>& used,
                       const std::vector<VertexId>& order, size_t next,
                       std::vector<EdgeId>& current,
                       std::vector<std::vector<EdgeId>>& out) {
  while (next < order.size() && used[order[next]]) ++next;
  if (next == order.size()) {
    std::vector<EdgeId> m = current;
    std::sort(m.begin(), m.end());
    out.push_back(std::move(m));
    return;
  }
  VertexId v = order[next];
  for (EdgeId e : g.incident_edges(v)) {
    VertexId w = g.other_end(e, v);
    if (used[w]) continue;
    used[v] = used[w] = 1;
    current.push_back(e);
    all_matchings_rec(g, used, order, next + 1, current, out);
    current.pop_back();
    used[v] = used[w] = 0;
  }
}

}  // namespace

std::vector<std::vector<EdgeId>> enumerate_perfect_matchings(const Multigraph& g,
                                                             const std::vector<VertexId>& vertices,
                                                             EdgeId forced) {
  std::vector<char> used(g.vertex_count(), 0);
  std::vector<EdgeId> current;
  if (forced != kNoEdge) {
    const auto& [u, v] = g.endpoints(forced);
    used[u] = used[v] = 1;
    current.push_back(forced);
  }
  std::vector<std::vector<EdgeId>> out;
  all_matchings_rec(g, used, vertices, 0, current, out);
  std::sort(out.begin(), out.end());
  return out;
}

bool complement_is_bipartite(const Multigraph& g, const std::vector<VertexId>& vertices,
                             const std::vector<EdgeId>& matching) {
  std::vector<char> matched(g.edge_count(), 0);
  for (EdgeId e : matching) matched[e] = 1;
  std::vector<char> seen(g.edge_count(), 0);
  for (VertexId start : vertices) {
    for (EdgeId e0 : g.incident_edges(start)) {
      if (matched[e0] || seen[e0]) continue;
      // Walk the cycle through e0.
      int length = 0;
      VertexId v = start;
      EdgeId cur = e0;
      do {
        seen[cur] = 1;
        ++length;
        v = g.other_end(cur, v);
        EdgeId next = kNoEdge;
        for (EdgeId cand : g.incident_edges(v))
          if (!matched[cand] && cand != cur) next = cand;
        cur = next;
      } while (!(v == start && cur == e0) && !seen[cur]);
      if (length % 2 != 0) return false;
    }
  }
  return true;
}

MatchingChoice find_matching(const Decomposition& dec) {
  const Multigraph& gbar = dec.derived;
  MatchingChoice mc;
  mc.in_matching.assign(gbar.edge_count(), 0);

  for (int h = 0; h < static_cast<int>(dec.blocks.size()); ++h) {
    if (dec.blocks[h].kind != BlockKind::kProper) continue;
    std::vector<VertexId> vertices;
    for (int v = 0; v < gbar.vertex_count(); ++v)
      if (dec.derived_component[v] == h) vertices.push_back(v);

    EdgeId forced = kNoEdge;
    for (EdgeId e : dec.base_edges)
      if (dec.derived_component[gbar.endpoints(e).first] == h) forced = e;

    // Components are independent, so a per-component maximum is globally
    // optimal; derived components are small enough for plain enumeration.
    std::vector<EdgeId> best;
    int best_score = -1;
    for (const std::vector<EdgeId>& m : enumerate_perfect_matchings(gbar, vertices, forced)) {
      if (!complement_is_bipartite(gbar, vertices, m)) continue;
      int score = 0;
      for (EdgeId e : m)
        if (!dec.threads[dec.thread_of_derived_edge[e]].trivial()) ++score;
      if (score > best_score) {
        best_score = score;
        best = m;
      }
    }
    if (best_score < 0) throw NoAdmissibleMatching(h);
    for (EdgeId e : best) mc.in_matching[e] = 1;
    mc.nontrivial_in_matching += best_score;
  }

  for (EdgeId e = 0; e < gbar.edge_count(); ++e)
    (mc.in_matching[e] ? mc.matching : mc.two_factor).push_back(e);
  return mc;
}

MatchingChoice& orient_two_factor(const Decomposition& dec, MatchingChoice& mc) {
  const Multigraph& gbar = dec.derived;
  mc.cycles.clear();
  mc.arcs_.assign(gbar.edge_count(), {-1, -1});
  std::vector<char> seen(gbar.edge_count(), 0);

  for (VertexId start = 0; start < gbar.vertex_count(); ++start) {
    // Pick the unvisited 2-factor edge toward the smallest (neighbour, edge).
    EdgeId first = kNoEdge;
    for (EdgeId e : gbar.incident_edges(start)) {
      if (mc.in_matching[e] || seen[e]) continue;
      if (first == kNoEdge ||
          std::pair(gbar.other_end(e, start), e) < std::pair(gbar.other_end(first, start), first))
        first = e;
    }
    if (first == kNoEdge) continue;

    OrientedCycle cycle;
    VertexId v = start;
    EdgeId cur = first;
    do {
      seen[cur] = 1;
      cycle.vertices.push_back(v);
      cycle.edges.push_back(cur);
      mc.arcs_[cur] = {v, gbar.other_end(cur, v)};
      v = gbar.other_end(cur, v);
      EdgeId next = kNoEdge;
      for (EdgeId cand : gbar.incident_edges(v))
        if (!mc.in_matching[cand] && cand != cur) next = cand;
      cur = next;
    } while (v != start);
    mc.cycles.push_back(std::move(cycle));
  }
  return mc;
}

}  // namespace fewlists
