#include "fpg/subgroup_graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <tuple>

namespace fpg {

bool letter_less(const Letter& a, const Letter& b) {
  if (a.first != b.first) return a.first < b.first;
  return a.second > b.second;
}

Generator SubgroupGraph::input_symbol(std::size_t i) {
  return Generator("y" + std::to_string(i));
}

namespace {

struct Edge {
  std::size_t src;
  std::size_t dst;
  Generator gen;
  Word tag;
  bool alive = true;
};

struct Half {
  std::size_t edge;
  int sign;
};

struct Folder {
  std::vector<Edge> edges;
  std::vector<bool> vertex_alive;

  std::size_t add_vertex() {
    vertex_alive.push_back(true);
    return vertex_alive.size() - 1;
  }

  void add_edge(std::size_t from, std::size_t to, const Generator& g, int sign,
                Word tag) {
    if (sign > 0) {
      edges.push_back({from, to, g, std::move(tag)});
    } else {
      edges.push_back({to, from, g, invert(tag)});
    }
  }

  std::size_t target(const Half& h) const {
    const Edge& e = edges[h.edge];
    return h.sign > 0 ? e.dst : e.src;
  }

  Word tag(const Half& h) const {
    const Edge& e = edges[h.edge];
    return h.sign > 0 ? e.tag : invert(e.tag);
  }

  // Lowest (vertex, letter) carrying two half-edges, if any.
  std::optional<std::pair<Half, Half>> find_fold() const {
    using Key = std::tuple<std::size_t, Generator, int>;
    auto key_less = [](const Key& a, const Key& b) {
      if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
      return letter_less({std::get<1>(a), std::get<2>(a)},
                         {std::get<1>(b), std::get<2>(b)});
    };
    std::map<Key, Half, decltype(key_less)> seen(key_less);
    std::optional<std::pair<Key, std::pair<Half, Half>>> best;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const Edge& e = edges[i];
      if (!e.alive) continue;
      for (int sign : {1, -1}) {
        Key k{sign > 0 ? e.src : e.dst, e.gen, sign};
        auto [it, inserted] = seen.emplace(k, Half{i, sign});
        if (inserted) continue;
        if (!best || key_less(k, best->first)) {
          best = {k, {it->second, Half{i, sign}}};
        }
      }
    }
    if (!best) return std::nullopt;
    return best->second;
  }

  void fold_all() {
    while (auto pair = find_fold()) {
      auto [h1, h2] = *pair;
      std::size_t v1 = target(h1);
      std::size_t v2 = target(h2);
      if (v1 == v2) {
        edges[h2.edge].alive = false;
        continue;
      }
      std::size_t keep = std::min(v1, v2);
      std::size_t drop = std::max(v1, v2);
      Word t_keep = v1 == keep ? tag(h1) : tag(h2);
      Word t_drop = v1 == keep ? tag(h2) : tag(h1);
      Word delta = invert(t_keep) * t_drop;
      Word delta_inv = invert(delta);
      for (Edge& e : edges) {
        if (!e.alive) continue;
        if (e.src == drop) {
          e.src = keep;
          e.tag = delta * e.tag;
        }
        if (e.dst == drop) {
          e.dst = keep;
          e.tag = e.tag * delta_inv;
        }
      }
      vertex_alive[drop] = false;
    }
  }

  void prune() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::size_t> degree(vertex_alive.size(), 0);
      for (const Edge& e : edges) {
        if (!e.alive) continue;
        degree[e.src] += 1;
        degree[e.dst] += 1;
      }
      for (std::size_t v = 1; v < vertex_alive.size(); ++v) {
        if (!vertex_alive[v] || degree[v] > 1) continue;
        vertex_alive[v] = false;
        changed = true;
        for (Edge& e : edges) {
          if (e.alive && (e.src == v || e.dst == v)) e.alive = false;
        }
      }
    }
  }
};

}  // namespace

SubgroupGraph SubgroupGraph::fold(const std::vector<Word>& gens) {
  Folder f;
  f.add_vertex();
  SubgroupGraph out;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    out.inputs_.push_back(gens[i]);
    auto ls = letters(gens[i]);
    if (ls.empty()) continue;
    std::size_t prev = kBase;
    for (std::size_t k = 0; k < ls.size(); ++k) {
      std::size_t next = k + 1 == ls.size() ? kBase : f.add_vertex();
      Word tag = k == 0 ? Word::letter(input_symbol(i)) : Word{};
      f.add_edge(prev, next, ls[k].first, ls[k].second, std::move(tag));
      prev = next;
    }
  }
  f.fold_all();
  f.prune();

  std::vector<std::size_t> renumber(f.vertex_alive.size());
  std::size_t count = 0;
  for (std::size_t v = 0; v < f.vertex_alive.size(); ++v) {
    if (f.vertex_alive[v]) renumber[v] = count++;
  }
  out.adjacency_.assign(count, Adjacency(letter_less));
  for (const Edge& e : f.edges) {
    if (!e.alive) continue;
    std::size_t s = renumber[e.src];
    std::size_t d = renumber[e.dst];
    out.adjacency_[s].emplace(Letter{e.gen, 1}, HalfEdge{d, e.tag});
    out.adjacency_[d].emplace(Letter{e.gen, -1}, HalfEdge{s, invert(e.tag)});
    out.edge_count_ += 1;
  }
  out.compute_geodesics();
  return out;
}

void SubgroupGraph::compute_geodesics() {
  geodesics_.assign(adjacency_.size(), Word{});
  std::vector<bool> seen(adjacency_.size(), false);
  std::deque<std::size_t> queue{kBase};
  seen[kBase] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& [letter, half] : adjacency_[v]) {
      if (seen[half.target]) continue;
      seen[half.target] = true;
      geodesics_[half.target] =
          geodesics_[v] * Word::letter(letter.first, letter.second);
      queue.push_back(half.target);
    }
  }
}

std::size_t SubgroupGraph::rank() const {
  return edge_count_ + 1 - adjacency_.size();
}

std::vector<Word> SubgroupGraph::basis() const {
  // Tree edges are those through which compute_geodesics first reached a
  // vertex; rerun the same search to recover them.
  std::vector<std::optional<std::pair<std::size_t, Letter>>> parent(
      adjacency_.size());
  std::vector<bool> seen(adjacency_.size(), false);
  std::deque<std::size_t> queue{kBase};
  seen[kBase] = true;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& [letter, half] : adjacency_[v]) {
      if (seen[half.target]) continue;
      seen[half.target] = true;
      parent[half.target] = std::pair{v, letter};
      queue.push_back(half.target);
    }
  }
  std::vector<Word> out;
  for (std::size_t u = 0; u < adjacency_.size(); ++u) {
    for (const auto& [letter, half] : adjacency_[u]) {
      if (letter.second < 0) continue;
      const std::size_t v = half.target;
      bool tree = (parent[v] && parent[v]->first == u &&
                   parent[v]->second == letter) ||
                  (parent[u] && parent[u]->first == v &&
                   parent[u]->second == Letter{letter.first, -1});
      if (tree) continue;
      out.push_back(geodesics_[u] * Word::letter(letter.first) *
                    invert(geodesics_[v]));
    }
  }
  return out;
}

SubgroupGraph::Reading SubgroupGraph::read(const Word& w) const {
  std::size_t v = kBase;
  std::vector<Syllable> consumed;
  const auto& syl = w.syllables();
  for (std::size_t i = 0; i < syl.size(); ++i) {
    const int sign = syl[i].exponent > 0 ? 1 : -1;
    const Letter letter{syl[i].gen, sign};
    BigInt done = 0;
    const BigInt total = abs(syl[i].exponent);
    while (done < total) {
      auto it = adjacency_[v].find(letter);
      if (it == adjacency_[v].end()) break;
      v = it->second.target;
      done += 1;
    }
    if (done > 0) consumed.push_back({syl[i].gen, done * sign});
    if (done < total) {
      std::vector<Syllable> rest{{syl[i].gen, (total - done) * sign}};
      rest.insert(rest.end(), syl.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                  syl.end());
      return {v, Word::reduce(consumed), Word::reduce(rest)};
    }
  }
  return {v, Word::reduce(consumed), Word{}};
}

bool SubgroupGraph::contains(const Word& w) const {
  auto r = read(w);
  return r.vertex == kBase && r.remainder.empty();
}

std::optional<Word> SubgroupGraph::express(const Word& w) const {
  std::size_t v = kBase;
  std::vector<Syllable> raw;
  for (const auto& [gen, sign] : letters(w)) {
    auto it = adjacency_[v].find(Letter{gen, sign});
    if (it == adjacency_[v].end()) return std::nullopt;
    const auto& tag = it->second.tag.syllables();
    raw.insert(raw.end(), tag.begin(), tag.end());
    v = it->second.target;
  }
  if (v != kBase) return std::nullopt;
  return Word::reduce(raw);
}

Word SubgroupGraph::coset_representative(const Word& w) const {
  auto r = read(w);
  return geodesics_[r.vertex] * r.remainder;
}

}  // namespace fpg
