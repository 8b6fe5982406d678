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

#include "fewlists/multigraph.hpp"

#include <algorithm>
#include <sstream>

namespace fewlists {

Multigraph::Multigraph(int vertex_count, std::vector<std::pair<VertexId, VertexId>> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (size_t i = 0; i < edges_.size(); ++i) {
    const auto& [u, v] = edges_[i];
    if (u == v) throw ParseError("loop edge " + std::to_string(u), static_cast<int>(i + 1));
    if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_)
      throw ParseError("vertex id out of range", static_cast<int>(i + 1));
  }
  incidence_.assign(vertex_count_, {});
  for (size_t i = 0; i < edges_.size(); ++i) {
    incidence_[edges_[i].first].push_back(static_cast<EdgeId>(i));
    incidence_[edges_[i].second].push_back(static_cast<EdgeId>(i));
  }
}

namespace {

struct Line {
  int number;
  std::string text;
};

std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back({number, line});
  }
  return out;
}

std::pair<long, long> parse_int_pair(const Line& line) {
  std::istringstream in(line.text);
  long a = 0, b = 0;
  std::string rest;
  if (!(in >> a >> b)) throw ParseError("expected two integers", line.number);
  if (in >> rest) throw ParseError("trailing token '" + rest + "'", line.number);
  if (a < 0 || b < 0) throw ParseError("negative value", line.number);
  return {a, b};
}

}  // namespace

Multigraph Multigraph::parse_edge_list(const std::string& text) {
  std::vector<Line> lines = content_lines(text);
  std::vector<std::pair<long, long>> pairs;
  pairs.reserve(lines.size());
  for (const Line& line : lines) pairs.push_back(parse_int_pair(line));

  // A first line "n m" is taken as a header when it is consistent with the
  // rest of the file: m matching edge lines, all vertex ids below n.
  size_t first_edge = 0;
  long vertex_count = 0;
  if (!pairs.empty()) {
    const auto [n, m] = pairs.front();
    bool header = static_cast<long>(pairs.size()) - 1 == m;
    for (size_t i = 1; header && i < pairs.size(); ++i)
      header = pairs[i].first < n && pairs[i].second < n;
    if (header) {
      first_edge = 1;
      vertex_count = n;
    }
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (size_t i = first_edge; i < pairs.size(); ++i) {
    const auto [u, v] = pairs[i];
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u), lines[i].number);
    vertex_count = std::max(vertex_count, std::max(u, v) + 1);
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  return Multigraph(static_cast<int>(vertex_count), std::move(edges));
}

std::string Multigraph::serialize_edge_list() const {
  std::ostringstream out;
  out << vertex_count_ << ' ' << edges_.size() << '\n';
  for (const auto& [u, v] : edges_) out << u << ' ' << v << '\n';
  return out.str();
}

Multigraph Multigraph::parse_sparse6(const std::string& text) {
  std::string s = text;
  if (auto nl = s.find_first_of("\r\n"); nl != std::string::npos) s.erase(nl);
  const std::string prefix = ">>sparse6<<";
  if (s.rfind(prefix, 0) == 0) s.erase(0, prefix.size());
  if (s.empty() || s[0] != ':') throw ParseError("not a sparse6 string", 1);
  s.erase(0, 1);

  std::vector<int> data;
  data.reserve(s.size());
  for (char c : s) {
    if (c < 63 || c > 126) throw ParseError("invalid sparse6 character", 1);
    data.push_back(c - 63);
  }
  size_t pos = 0;
  auto need = [&](size_t k) {
    if (pos + k > data.size()) throw ParseError("truncated sparse6 string", 1);
  };
  long n = 0;
  need(1);
  if (data[pos] < 63) {
    n = data[pos++];
  } else {
    ++pos;
    need(3);
    n = (static_cast<long>(data[pos]) << 12) | (data[pos + 1] << 6) | data[pos + 2];
    pos += 3;
  }
  int k = 0;
  while ((1L << k) < n) ++k;  // bits needed for values in [0, n-1]

  size_t bit = 0;
  const size_t total_bits = (data.size() - pos) * 6;
  auto read_bits = [&](int count) -> long {
    long value = 0;
    for (int i = 0; i < count; ++i, ++bit)
      value = (value << 1) | ((data[pos + bit / 6] >> (5 - bit % 6)) & 1);
    return value;
  };

  std::vector<std::pair<VertexId, VertexId>> edges;
  long v = 0;
  while (bit + 1 + k <= total_bits) {
    long b = read_bits(1);
    long x = read_bits(k);
    if (b == 1) ++v;
    if (v >= n) break;  // padding
    if (x > v) {
      v = x;
    } else {
      if (x == v) throw ParseError("sparse6 loop", 1);
      edges.emplace_back(static_cast<VertexId>(x), static_cast<VertexId>(v));
    }
  }
  return Multigraph(static_cast<int>(n), std::move(edges));
}

std::vector<int> Multigraph::degrees() const {
  std::vector<int> out(vertex_count_);
  for (VertexId v = 0; v < vertex_count_; ++v) out[v] = degree(v);
  return out;
}

bool Multigraph::is_cubic() const {
  for (VertexId v = 0; v < vertex_count_; ++v)
    if (degree(v) != 3) return false;
  return true;
}

std::vector<std::vector<VertexId>> Multigraph::components() const {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(vertex_count_, 0);
  for (VertexId start = 0; start < vertex_count_; ++start) {
    if (seen[start]) continue;
    std::vector<VertexId> comp{start};
    seen[start] = 1;
    for (size_t head = 0; head < comp.size(); ++head) {
      for (EdgeId e : incidence_[comp[head]]) {
        VertexId w = other_end(e, comp[head]);
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool Multigraph::is_connected() const { return components().size() <= 1; }

std::vector<EdgeId> Multigraph::find_bridges() const {
  std::vector<EdgeId> bridges;
  std::vector<int> entry(vertex_count_, -1), low(vertex_count_, 0);
  int timer = 0;

  // Iterative DFS; the tree edge back to the parent is skipped by edge id,
  // so a parallel copy still counts as a back edge.
  struct Frame {
    VertexId v;
    EdgeId via;
    size_t next = 0;
  };
  for (VertexId root = 0; root < vertex_count_; ++root) {
    if (entry[root] != -1) continue;
    std::vector<Frame> stack{{root, kNoEdge}};
    entry[root] = low[root] = timer++;
    while (!stack.empty()) {
      Frame& frame = stack.back();
      const auto& inc = incidence_[frame.v];
      if (frame.next < inc.size()) {
        EdgeId e = inc[frame.next++];
        if (e == frame.via) continue;
        VertexId w = other_end(e, frame.v);
        if (entry[w] == -1) {
          entry[w] = low[w] = timer++;
          stack.push_back({w, e});
        } else {
          low[frame.v] = std::min(low[frame.v], entry[w]);
        }
      } else {
        Frame done = frame;
        stack.pop_back();
        if (!stack.empty()) {
          VertexId parent = stack.back().v;
          low[parent] = std::min(low[parent], low[done.v]);
          if (low[done.v] > entry[parent]) bridges.push_back(done.via);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace fewlists
