// Copyright 2026 The swapbound Authors
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

#include "swapbound/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "swapbound/errors.hpp"

namespace swapbound {

Graph::Graph(std::size_t n) : n_(n), adj_(n), matrix_(n * n, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw ValidationError("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.v >= n) {
      throw ValidationError("edge (" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + ") out of range for " +
                            std::to_string(n) + " vertices");
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[e.u * n_ + e.v] = 1;
    matrix_[e.v * n_ + e.u] = 1;
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph::Graph(std::size_t n,
             std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        for (auto [a, b] : edges) {
          if (a == b) throw ValidationError("self-loop on vertex " +
                                            std::to_string(a));
          list.emplace_back(a, b);
        }
        return list;
      }()) {}

Graph Graph::without_edge(const Edge& e) const {
  if (!has_edge(e.u, e.v)) {
    throw ValidationError("edge (" + std::to_string(e.u) + "," +
                          std::to_string(e.v) + ") is not in the graph");
  }
  std::vector<Edge> rest;
  rest.reserve(edges_.size() - 1);
  for (const Edge& f : edges_) {
    if (f != e) rest.push_back(f);
  }
  return Graph(n_, rest);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  if (n >= 3) edges.emplace_back(n - 1, 0);
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges);
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.num_vertices();
  return g.num_edges() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.num_vertices(), kUnreached);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    Vertex v = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[v] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<bool> seen(g.num_vertices(), false);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> component;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      component.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

std::size_t graph_diameter(const Graph& g) {
  std::size_t diameter = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    for (std::size_t d : bfs_distances(g, s)) {
      if (d == std::numeric_limits<std::size_t>::max()) {
        throw ValidationError("diameter undefined: graph is disconnected");
      }
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<bool> used(g.num_vertices(), false);
  for (Vertex v : vertices) {
    if (v >= g.num_vertices()) {
      throw ValidationError("vertex " + std::to_string(v) + " out of range");
    }
    if (used[v]) {
      throw ValidationError("duplicate vertex " + std::to_string(v) +
                            " in induced subgraph request");
    }
    used[v] = true;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (g.has_edge(vertices[i], vertices[j])) edges.emplace_back(i, j);
  return Graph(vertices.size(), edges);
}

Graph relabel(const Graph& g, std::span<const Vertex> image) {
  if (image.size() != g.num_vertices()) {
    throw ValidationError("relabeling size does not match vertex count");
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) edges.emplace_back(image[e.u], image[e.v]);
  return Graph(g.num_vertices(), edges);
}

}  // namespace swapbound
