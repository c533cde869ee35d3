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

#include "swapbound/assignment.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <string>

#include "swapbound/errors.hpp"

namespace swapbound {

namespace {

// ---- canonical form ------------------------------------------------------

// 1-WL colour refinement seeded with degrees. Colours are ranks of sorted
// signatures, so the final colouring is isomorphism-invariant.
std::vector<std::size_t> refine_colors(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t distinct = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v) {
      color[v] = static_cast<std::size_t>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
          sorted.begin());
    }
    if (sorted.size() == distinct) break;
    distinct = sorted.size();
  }
  return color;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g)
      : g_(g),
        n_(g.num_vertices()),
        color_(refine_colors(g)),
        order_(n_),
        used_(n_, 0),
        current_(n_ * (n_ > 0 ? n_ - 1 : 0) / 2, 0) {
    std::vector<std::size_t> sorted = color_;
    std::sort(sorted.begin(), sorted.end());
    cell_of_position_ = std::move(sorted);
  }

  CanonicalKey run() {
    search(0, false);
    CanonicalKey key;
    key.n = n_;
    key.bits.assign((best_.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < best_.size(); ++i) {
      if (best_[i]) key.bits[i / 64] |= std::uint64_t{1} << (63 - i % 64);
    }
    return key;
  }

 private:
  void search(std::size_t t, bool prefix_less) {
    if (t == n_) {
      if (!have_best_ || prefix_less) {
        best_ = current_;
        have_best_ = true;
        ++best_version_;
      }
      return;
    }
    const std::size_t base = t * (t > 0 ? t - 1 : 0) / 2;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || color_[v] != cell_of_position_[t]) continue;
      bool less = prefix_less;
      bool greater = false;
      for (std::size_t s = 0; s < t; ++s) {
        const std::uint8_t bit = g_.has_edge(order_[s], v) ? 1 : 0;
        current_[base + s] = bit;
        if (have_best_ && !less) {
          if (bit < best_[base + s]) {
            less = true;
          } else if (bit > best_[base + s]) {
            greater = true;
            break;
          }
        }
      }
      if (greater) continue;
      used_[v] = 1;
      order_[t] = v;
      const std::size_t version = best_version_;
      search(t + 1, less);
      used_[v] = 0;
      // A new best found below shares our prefix, so later siblings must be
      // compared from an equal prefix.
      if (best_version_ != version) prefix_less = false;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::size_t> color_;
  std::vector<std::size_t> cell_of_position_;
  std::vector<Vertex> order_;
  std::vector<char> used_;
  std::vector<std::uint8_t> current_;
  std::vector<std::uint8_t> best_;
  bool have_best_ = false;
  std::size_t best_version_ = 0;
};

// ---- connected subset enumeration ----------------------------------------

class SubsetEnumerator {
 public:
  SubsetEnumerator(const Graph& g, std::size_t k,
                   const EnumerationOptions& options, EnumerationResult& out)
      : g_(g), k_(k), options_(options), out_(out), blocked_(g.num_vertices(), 0) {}

  void run() {
    for (Vertex root = 0; root < g_.num_vertices() && !stop_; ++root) {
      root_ = root;
      add(root);
      std::vector<Vertex> ext;
      for (Vertex u : g_.neighbors(root))
        if (u > root) ext.push_back(u);
      extend(std::move(ext));
      remove(root);
    }
    out_.classes.reserve(by_key_.size());
    for (auto& [key, cls] : by_key_) out_.classes.push_back(std::move(cls));
    std::sort(out_.classes.begin(), out_.classes.end(),
              [](const SubgraphClass& a, const SubgraphClass& b) {
                return a.representative_nodes < b.representative_nodes;
              });
    out_.complete = !stop_;
  }

 private:
  void add(Vertex w) {
    sub_.push_back(w);
    ++blocked_[w];
    for (Vertex x : g_.neighbors(w)) ++blocked_[x];
  }

  void remove(Vertex w) {
    sub_.pop_back();
    --blocked_[w];
    for (Vertex x : g_.neighbors(w)) --blocked_[x];
  }

  void extend(std::vector<Vertex> ext) {
    if (stop_) return;
    if (sub_.size() == k_) {
      record();
      return;
    }
    while (!ext.empty() && !stop_) {
      const Vertex w = ext.back();
      ext.pop_back();
      std::vector<Vertex> next = ext;
      for (Vertex u : g_.neighbors(w))
        if (u > root_ && blocked_[u] == 0) next.push_back(u);
      add(w);
      extend(std::move(next));
      remove(w);
    }
  }

  void record() {
    if (++out_.subsets_seen > options_.max_subsets) {
      stop_ = true;
      return;
    }
    std::vector<Vertex> nodes = sub_;
    std::sort(nodes.begin(), nodes.end());
    CanonicalKey key = canonical_key(induced_subgraph(g_, nodes));
    auto it = by_key_.find(key);
    if (it == by_key_.end()) {
      if (by_key_.size() >= options_.max_classes) {
        stop_ = true;
        return;
      }
      SubgraphClass cls;
      cls.canonical = key;
      cls.representative_nodes = nodes;
      it = by_key_.emplace(std::move(key), std::move(cls)).first;
    } else if (nodes < it->second.representative_nodes) {
      it->second.representative_nodes = nodes;
    }
    ++it->second.all_embeddings_count;
    if (options_.keep_members) it->second.members.push_back(std::move(nodes));
  }

  const Graph& g_;
  std::size_t k_;
  const EnumerationOptions& options_;
  EnumerationResult& out_;
  std::vector<std::size_t> blocked_;
  std::vector<Vertex> sub_;
  Vertex root_ = 0;
  bool stop_ = false;
  std::map<CanonicalKey, SubgraphClass> by_key_;
};

// ---- embedding search ----------------------------------------------------

class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& pattern, const Graph& host,
                  const Vf2Options& options)
      : pattern_(pattern),
        host_(host),
        options_(options),
        order_(pattern.num_vertices()),
        map_(pattern.num_vertices(), 0),
        used_(host.num_vertices(), 0) {
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) {
      return pattern_.degree(a) > pattern_.degree(b);
    });
  }

  std::optional<std::vector<Vertex>> run() {
    if (pattern_.num_vertices() > host_.num_vertices()) return std::nullopt;
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  bool search(std::size_t depth) {
    if (depth == order_.size()) {
      if (!options_.connected_image) return true;
      std::vector<Vertex> image = map_;
      return is_connected(induced_subgraph(host_, image));
    }
    const Vertex p = order_[depth];
    for (Vertex h = 0; h < host_.num_vertices(); ++h) {
      if (used_[h] || host_.degree(h) < pattern_.degree(p)) continue;
      if (!consistent(depth, p, h)) continue;
      map_[p] = h;
      used_[h] = 1;
      if (search(depth + 1)) return true;
      used_[h] = 0;
    }
    return false;
  }

  bool consistent(std::size_t depth, Vertex p, Vertex h) const {
    for (std::size_t i = 0; i < depth; ++i) {
      const Vertex q = order_[i];
      const bool pattern_edge = pattern_.has_edge(p, q);
      const bool host_edge = host_.has_edge(h, map_[q]);
      if (pattern_edge && !host_edge) return false;
      if (options_.induced && !pattern_edge && host_edge) return false;
    }
    return true;
  }

  const Graph& pattern_;
  const Graph& host_;
  const Vf2Options& options_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
};

// ---- graph edit distance -------------------------------------------------

class GedSearch {
 public:
  GedSearch(const Graph& g, const Graph& h)
      : g_(g), h_(h), n_(g.num_vertices()), map_(n_), used_(n_, 0) {}

  GedResult run() {
    std::vector<Vertex> identity(n_);
    std::iota(identity.begin(), identity.end(), Vertex{0});
    best_ = edit_cost(g_, h_, identity);
    best_map_ = identity;
    if (best_ > 0) search(0, 0);
    return {best_, PermutationMap(best_map_)};
  }

 private:
  void search(std::size_t t, std::size_t cost) {
    if (t == n_) {
      if (cost < best_) {
        best_ = cost;
        best_map_ = map_;
      }
      return;
    }
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::size_t added = 0;
      for (Vertex i = 0; i < t; ++i) {
        if (g_.has_edge(i, t) != h_.has_edge(map_[i], v)) ++added;
      }
      const std::size_t next = cost + added;
      if (next >= best_) continue;
      map_[t] = v;
      used_[v] = 1;
      if (next + lower_bound(t + 1) < best_) search(t + 1, next);
      used_[v] = 0;
    }
  }

  // Admissible bound on the cost of pairs touching unmapped vertices, given
  // g vertices [0, t) are mapped.
  std::size_t lower_bound(std::size_t t) const {
    if (t == n_) return 0;
    std::vector<Vertex> free_h;
    for (Vertex v = 0; v < n_; ++v)
      if (!used_[v]) free_h.push_back(v);

    // Pairs between an unmapped and a mapped vertex: each unmapped g vertex
    // pays at least its cheapest possible image. Pairs among unmapped
    // vertices: at least the edge-count difference.
    std::size_t cross = 0;
    for (Vertex u = t; u < n_; ++u) {
      std::size_t cheapest = std::numeric_limits<std::size_t>::max();
      for (Vertex v : free_h) {
        std::size_t c = 0;
        for (Vertex i = 0; i < t; ++i)
          if (g_.has_edge(u, i) != h_.has_edge(v, map_[i])) ++c;
        cheapest = std::min(cheapest, c);
      }
      cross += cheapest;
    }
    std::size_t inner_g = 0;
    for (Vertex a = t; a < n_; ++a)
      for (Vertex b = a + 1; b < n_; ++b) inner_g += g_.has_edge(a, b);
    std::size_t inner_h = 0;
    for (std::size_t a = 0; a < free_h.size(); ++a)
      for (std::size_t b = a + 1; b < free_h.size(); ++b)
        inner_h += h_.has_edge(free_h[a], free_h[b]);
    const std::size_t split =
        cross + (inner_g > inner_h ? inner_g - inner_h : inner_h - inner_g);

    // Degree sequences: every unmatched pair is seen by at most two
    // unmapped endpoints.
    std::vector<std::size_t> dg, dh;
    for (Vertex u = t; u < n_; ++u) dg.push_back(g_.degree(u));
    for (Vertex v : free_h) dh.push_back(h_.degree(v));
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    std::size_t spread = 0;
    for (std::size_t i = 0; i < dg.size(); ++i)
      spread += dg[i] > dh[i] ? dg[i] - dh[i] : dh[i] - dg[i];
    const std::size_t degree_bound = (spread + 1) / 2;

    return std::max(split, degree_bound);
  }

  const Graph& g_;
  const Graph& h_;
  std::size_t n_;
  std::vector<Vertex> map_;
  std::vector<char> used_;
  std::size_t best_ = 0;
  std::vector<Vertex> best_map_;
};

std::size_t induced_edge_count(const Graph& g, const std::vector<Vertex>& nodes) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      count += g.has_edge(nodes[i], nodes[j]);
  return count;
}

// Places the IG onto `nodes` with the edit-distance-optimal bijection.
AssignmentResult place_by_ged(const InteractionGraph& ig, const Graph& cg,
                              std::vector<Vertex> nodes, AssignmentPath path) {
  const Graph region = induced_subgraph(cg, nodes);
  // Every bijection costs the same against a complete graph.
  GedResult ged = is_complete(ig.graph)
                      ? GedResult{edit_cost(ig.graph, region,
                                            PermutationMap::identity(nodes.size()).image()),
                                  PermutationMap::identity(nodes.size())}
                      : graph_edit_distance(ig.graph, region);
  AssignmentResult result;
  result.assignment = Assignment(cg, std::move(nodes), ged.best_bijection.image());
  result.ged = ged.distance;
  result.path = path;
  return result;
}

}  // namespace

CanonicalKey canonical_key(const Graph& g) { return CanonicalSearch(g).run(); }

EnumerationResult enumerate_connected_subgraph_classes(
    const Graph& cg, std::size_t k, const EnumerationOptions& options) {
  if (k == 0 || k > cg.num_vertices()) {
    throw ValidationError("subgraph size " + std::to_string(k) +
                          " outside [1, " + std::to_string(cg.num_vertices()) +
                          "]");
  }
  EnumerationResult out;
  SubsetEnumerator(cg, k, options, out).run();
  return out;
}

std::optional<std::vector<Vertex>> vf2_embed(const Graph& pattern,
                                             const Graph& host,
                                             const Vf2Options& options) {
  return EmbeddingSearch(pattern, host, options).run();
}

std::size_t edit_cost(const Graph& g, const Graph& h,
                      const std::vector<Vertex>& g_to_h) {
  std::size_t cost = 0;
  for (Vertex a = 0; a < g.num_vertices(); ++a)
    for (Vertex b = a + 1; b < g.num_vertices(); ++b)
      if (g.has_edge(a, b) != h.has_edge(g_to_h[a], g_to_h[b])) ++cost;
  return cost;
}

GedResult graph_edit_distance(const Graph& g, const Graph& h) {
  if (g.num_vertices() != h.num_vertices()) {
    throw ValidationError("graph edit distance needs equal vertex counts (" +
                          std::to_string(g.num_vertices()) + " vs " +
                          std::to_string(h.num_vertices()) + ")");
  }
  return GedSearch(g, h).run();
}

std::vector<Vertex> most_connected_subgraph(const Graph& cg, std::size_t k) {
  const std::size_t n = cg.num_vertices();
  if (k == 0 || k > n) {
    throw ValidationError("subgraph size " + std::to_string(k) +
                          " outside [1, " + std::to_string(n) + "]");
  }
  Vertex seed = 0;
  for (Vertex v = 1; v < n; ++v)
    if (cg.degree(v) > cg.degree(seed)) seed = v;

  std::vector<char> inside(n, 0);
  std::vector<Vertex> nodes{seed};
  inside[seed] = 1;
  while (nodes.size() < k) {
    Vertex pick = n;
    std::size_t pick_links = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (inside[v]) continue;
      std::size_t links = 0;
      for (Vertex w : cg.neighbors(v)) links += inside[w];
      if (links > 0 && (pick == n || links > pick_links)) {
        pick = v;
        pick_links = links;
      }
    }
    nodes.push_back(pick);
    inside[pick] = 1;
  }
  std::sort(nodes.begin(), nodes.end());

  std::size_t edges = induced_edge_count(cg, nodes);
  bool improved = true;
  while (improved) {
    improved = false;
    std::vector<Vertex> best_nodes;
    std::size_t best_edges = edges;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (Vertex y = 0; y < n; ++y) {
        if (inside[y]) continue;
        std::vector<Vertex> trial = nodes;
        trial[i] = y;
        std::sort(trial.begin(), trial.end());
        const std::size_t trial_edges = induced_edge_count(cg, trial);
        if (trial_edges > best_edges &&
            is_connected(induced_subgraph(cg, trial))) {
          best_edges = trial_edges;
          best_nodes = std::move(trial);
        }
      }
    }
    if (!best_nodes.empty()) {
      for (Vertex v : nodes) inside[v] = 0;
      nodes = std::move(best_nodes);
      for (Vertex v : nodes) inside[v] = 1;
      edges = best_edges;
      improved = true;
    }
  }
  return nodes;
}

std::string to_string(AssignmentPath path) {
  switch (path) {
    case AssignmentPath::kIsomorphism:
      return "isomorphism";
    case AssignmentPath::kSimilarity:
      return "similarity";
    case AssignmentPath::kCompleteShortcut:
      return "complete-shortcut";
    case AssignmentPath::kBudgetShortcut:
      return "budget-shortcut";
  }
  return "unknown";
}

AssignmentResult assign_qubits(const InteractionGraph& ig, const Graph& cg,
                               const AssignmentOptions& options) {
  const std::size_t k = ig.graph.num_vertices();
  if (k == 0) throw ValidationError("interaction graph has no qubits");
  if (k > cg.num_vertices()) {
    throw ValidationError("circuit needs " + std::to_string(k) +
                          " qubits but the device has " +
                          std::to_string(cg.num_vertices()));
  }

  // Exact placement, preferring an induced match so the region carries no
  // spare couplings.
  for (bool induced : {true, false}) {
    Vf2Options vf2;
    vf2.induced = induced;
    vf2.connected_image = true;
    if (auto embedding = vf2_embed(ig.graph, cg, vf2)) {
      std::vector<Vertex> nodes = *embedding;
      std::sort(nodes.begin(), nodes.end());
      std::vector<Vertex> slots(k);
      for (Vertex q = 0; q < k; ++q) {
        slots[q] = static_cast<Vertex>(
            std::lower_bound(nodes.begin(), nodes.end(), (*embedding)[q]) -
            nodes.begin());
      }
      AssignmentResult result;
      result.assignment = Assignment(cg, std::move(nodes), std::move(slots));
      result.ged = 0;
      result.path = AssignmentPath::kIsomorphism;
      return result;
    }
  }

  if (options.force_shortcut || is_complete(ig.graph)) {
    return place_by_ged(ig, cg, most_connected_subgraph(cg, k),
                        AssignmentPath::kCompleteShortcut);
  }

  EnumerationResult classes =
      enumerate_connected_subgraph_classes(cg, k, options.enumeration);
  if (!classes.complete) {
    AssignmentResult result =
        place_by_ged(ig, cg, most_connected_subgraph(cg, k),
                     AssignmentPath::kBudgetShortcut);
    result.classes_considered = classes.classes.size();
    return result;
  }

  const SubgraphClass* best = nullptr;
  std::size_t best_ged = 0;
  std::size_t best_edges = 0;
  for (const SubgraphClass& cls : classes.classes) {
    const Graph region = induced_subgraph(cg, cls.representative_nodes);
    const std::size_t d = graph_edit_distance(ig.graph, region).distance;
    if (best == nullptr || d < best_ged ||
        (d == best_ged && region.num_edges() > best_edges)) {
      best = &cls;
      best_ged = d;
      best_edges = region.num_edges();
    }
  }
  AssignmentResult result = place_by_ged(ig, cg, best->representative_nodes,
                                         AssignmentPath::kSimilarity);
  result.classes_considered = classes.classes.size();
  return result;
}

std::size_t max_swap_bound(const InteractionGraph& ig, const Assignment& a) {
  const std::size_t diameter = graph_diameter(a.subgraph());
  if (diameter <= 1) return 0;
  return ig.gate_count() * (diameter - 1);
}

}  // namespace swapbound
