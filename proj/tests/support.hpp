#pragma once

#include "fglab/stallings.hpp"
#include "fglab/word.hpp"

#include <random>
#include <vector>

namespace fglab::testing {

/// Uniform random letters (not necessarily reduced) of length <= max_len.
inline Word random_word(const Alphabet &ab, std::size_t max_len, std::mt19937_64 &rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<GenIndex> gen(0, static_cast<GenIndex>(ab.size() - 1));
  std::bernoulli_distribution pos(0.5);
  std::vector<Letter> ls(len(rng));
  for (auto &l : ls)
    l = {gen(rng), static_cast<std::int8_t>(pos(rng) ? 1 : -1)};
  return Word(ab, ls);
}

/// Random closed walk at the base of a finite-index graph: a random path of
/// `steps` letters, then back home along a BFS tree computed here.
inline Word random_subgroup_element(const SubgroupGraph &g, std::size_t max_len,
                                    std::mt19937_64 &rng) {
  const std::size_t n = g.vertex_count();
  const std::size_t rank = g.alphabet().size();
  // home[v]: letter leading one step closer to the base.
  std::vector<Letter> home(n);
  std::vector<bool> seen(n, false);
  std::vector<Vertex> queue{SubgroupGraph::base()};
  seen[0] = true;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (GenIndex gen = 0; gen < rank; ++gen)
      for (int s : {1, -1}) {
        Letter l{gen, static_cast<std::int8_t>(s)};
        Vertex w = g.step(queue[h], l);
        if (w != kNoVertex && !seen[w]) {
          seen[w] = true;
          home[w] = l.inverse();
          queue.push_back(w);
        }
      }
  std::size_t radius = 0;
  {
    std::vector<std::size_t> depth(n, 0);
    for (std::size_t h = 1; h < queue.size(); ++h) {
      Vertex v = queue[h];
      depth[v] = depth[g.step(v, home[v])] + 1;
      radius = std::max(radius, depth[v]);
    }
  }
  std::uniform_int_distribution<std::size_t> len(0, max_len > radius ? max_len - radius : 0);
  std::uniform_int_distribution<GenIndex> gen(0, static_cast<GenIndex>(rank - 1));
  std::bernoulli_distribution pos(0.5);
  std::vector<Letter> ls;
  Vertex cur = SubgroupGraph::base();
  for (std::size_t i = len(rng); i > 0;) {
    Letter l{gen(rng), static_cast<std::int8_t>(pos(rng) ? 1 : -1)};
    Vertex nxt = g.step(cur, l);
    if (nxt == kNoVertex)
      continue;
    ls.push_back(l);
    cur = nxt;
    --i;
  }
  while (cur != SubgroupGraph::base()) {
    ls.push_back(home[cur]);
    cur = g.step(cur, home[cur]);
  }
  return Word(g.alphabet(), ls);
}

} // namespace fglab::testing
