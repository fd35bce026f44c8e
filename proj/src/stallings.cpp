#include "fglab/stallings.hpp"

#include "fglab/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace fglab {

SubgroupGraph::SubgroupGraph(Alphabet alphabet, std::size_t vertex_count)
    : alphabet_(std::move(alphabet)), vertex_count_(vertex_count),
      out_(vertex_count * alphabet_.size(), kNoVertex),
      in_(vertex_count * alphabet_.size(), kNoVertex) {}

void SubgroupGraph::add_edge(Vertex u, GenIndex g, Vertex v) {
  if (u >= vertex_count_ || v >= vertex_count_ || g >= alphabet_.size())
    throw std::out_of_range("edge outside graph");
  auto &o = out_[slot(u, g)];
  auto &i = in_[slot(v, g)];
  if ((o != kNoVertex && o != v) || (i != kNoVertex && i != u))
    throw std::logic_error("edge would make the graph unfolded");
  o = v;
  i = u;
}

std::size_t SubgroupGraph::edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(out_.begin(), out_.end(), [](Vertex v) { return v != kNoVertex; }));
}

bool SubgroupGraph::is_complete() const {
  return std::none_of(out_.begin(), out_.end(), [](Vertex v) { return v == kNoVertex; });
}

namespace {

// Signed label keys: 2g for g, 2g+1 for g^-1. Scanning keys in ascending
// order gives the fixed label order g0, g0^-1, g1, g1^-1, ...
using LabelKey = std::uint32_t;

LabelKey key_of(Letter l) { return 2 * l.gen + (l.sign < 0 ? 1 : 0); }
Letter letter_of(LabelKey k) {
  return {k / 2, static_cast<std::int8_t>(k % 2 ? -1 : 1)};
}

// Union-find folding over a growing multigraph. Each representative keeps
// one target per signed label; a second edge with the same label queues the
// two targets for identification.
class Folder {
public:
  Vertex add_vertex() {
    parent_.push_back(static_cast<Vertex>(parent_.size()));
    size_.push_back(1);
    adj_.emplace_back();
    return parent_.back();
  }

  void add_edge(Vertex u, Letter l, Vertex v) {
    link(u, key_of(l), v);
    link(v, key_of(l.inverse()), u);
  }

  Vertex find(Vertex v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  void fold() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.back();
      pending_.pop_back();
      a = find(a);
      b = find(b);
      if (a == b)
        continue;
      if (size_[a] < size_[b])
        std::swap(a, b);
      parent_[b] = a;
      size_[a] += size_[b];
      auto moved = std::move(adj_[b]);
      adj_[b].clear();
      for (auto [k, t] : moved)
        link(a, k, t);
    }
  }

  std::size_t vertex_count() const { return parent_.size(); }
  const std::map<LabelKey, Vertex> &adjacency(Vertex root) const { return adj_[root]; }

private:
  void link(Vertex u, LabelKey k, Vertex v) {
    u = find(u);
    auto [it, inserted] = adj_[u].emplace(k, v);
    if (!inserted)
      pending_.emplace_back(it->second, v);
  }

  std::vector<Vertex> parent_;
  std::vector<std::size_t> size_;
  std::vector<std::map<LabelKey, Vertex>> adj_;
  std::vector<std::pair<Vertex, Vertex>> pending_;
};

// Renumbers the vertices reachable from `root` in BFS order scanning labels
// by ascending key. `adj(v)` yields the (key, target) map of vertex v.
template <class Adj>
std::vector<Vertex> bfs_numbering(std::size_t n, Vertex root, Adj &&adj,
                                  std::vector<Vertex> &order) {
  std::vector<Vertex> id(n, kNoVertex);
  order.clear();
  id[root] = 0;
  order.push_back(root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto [k, t] : adj(order[head])) {
      (void)k;
      if (id[t] == kNoVertex) {
        id[t] = static_cast<Vertex>(order.size());
        order.push_back(t);
      }
    }
  }
  return id;
}

std::vector<std::pair<LabelKey, Vertex>> graph_adjacency(const SubgroupGraph &g, Vertex v) {
  std::vector<std::pair<LabelKey, Vertex>> out;
  for (GenIndex gen = 0; gen < g.alphabet().size(); ++gen) {
    if (auto t = g.out(v, gen); t != kNoVertex)
      out.emplace_back(2 * gen, t);
    if (auto t = g.in(v, gen); t != kNoVertex)
      out.emplace_back(2 * gen + 1, t);
  }
  return out;
}

void require_same(const Alphabet &a, const Alphabet &b) {
  if (!(a == b))
    throw AlphabetMismatch("word and subgroup are over different alphabets");
}

} // namespace

SubgroupGraph build_graph(std::span<const Word> generators, const Alphabet &alphabet) {
  Folder f;
  const Vertex base = f.add_vertex();
  for (const auto &w : generators) {
    require_same(w.alphabet(), alphabet);
    if (w.is_identity())
      continue;
    Vertex cur = base;
    for (std::size_t i = 0; i < w.length(); ++i) {
      Vertex next = i + 1 == w.length() ? base : f.add_vertex();
      f.add_edge(cur, w[i], next);
      cur = next;
    }
    f.fold();
  }

  // Resolve to representatives and drop stale targets.
  const std::size_t n = f.vertex_count();
  std::vector<std::map<LabelKey, Vertex>> adj(n);
  std::vector<bool> alive(n, false);
  for (Vertex v = 0; v < n; ++v) {
    if (f.find(v) != v)
      continue;
    alive[v] = true;
    for (auto [k, t] : f.adjacency(v))
      adj[v].emplace(k, f.find(t));
  }

  // Prune hairs: non-base vertices of degree one.
  const Vertex root = f.find(base);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v)
    if (alive[v] && v != root && adj[v].size() == 1)
      stack.push_back(v);
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (!alive[v] || adj[v].size() != 1)
      continue;
    auto [k, t] = *adj[v].begin();
    alive[v] = false;
    adj[v].clear();
    adj[t].erase(k ^ 1U);
    if (t != root && adj[t].size() == 1)
      stack.push_back(t);
  }

  std::vector<Vertex> order;
  auto id = bfs_numbering(n, root, [&](Vertex v) -> const auto & { return adj[v]; }, order);
  SubgroupGraph g(alphabet, order.size());
  for (Vertex v : order)
    for (auto [k, t] : adj[v])
      if (k % 2 == 0)
        g.add_edge(id[v], k / 2, id[t]);
  return g;
}

std::optional<Vertex> walk(const SubgroupGraph &g, Vertex start, const Word &w) {
  require_same(g.alphabet(), w.alphabet());
  Vertex cur = start;
  for (const auto &l : w.letters()) {
    cur = g.step(cur, l);
    if (cur == kNoVertex)
      return std::nullopt;
  }
  return cur;
}

bool contains(const SubgroupGraph &g, const Word &w) {
  auto end = walk(g, SubgroupGraph::base(), w);
  return end && *end == SubgroupGraph::base();
}

SubgroupIndex index(const SubgroupGraph &g) {
  return g.is_complete() ? SubgroupIndex::finite(g.vertex_count())
                         : SubgroupIndex::infinite();
}

std::vector<std::int64_t> canonical_code(const SubgroupGraph &g, Vertex root) {
  std::vector<Vertex> order;
  auto id = bfs_numbering(
      g.vertex_count(), root, [&](Vertex v) { return graph_adjacency(g, v); }, order);
  const std::size_t rank = g.alphabet().size();
  std::vector<std::int64_t> code;
  code.reserve(1 + order.size() * rank);
  code.push_back(static_cast<std::int64_t>(order.size()));
  for (Vertex v : order)
    for (GenIndex gen = 0; gen < rank; ++gen) {
      Vertex t = g.out(v, gen);
      code.push_back(t == kNoVertex ? -1 : static_cast<std::int64_t>(id[t]));
    }
  return code;
}

bool is_normal(const SubgroupGraph &g) {
  if (!index(g).is_finite())
    throw DomainError("normality test needs a finite-index subgroup");
  const auto reference = canonical_code(g, SubgroupGraph::base());
  for (Vertex v = 1; v < g.vertex_count(); ++v)
    if (canonical_code(g, v) != reference)
      return false;
  return true;
}

SubgroupGraph kernel_graph(const Alphabet &alphabet, std::span<const std::int64_t> images,
                           std::int64_t d) {
  if (d < 2)
    throw std::invalid_argument("modulus must be at least 2");
  if (images.size() != alphabet.size())
    throw std::invalid_argument("map must assign a residue to every generator");
  std::vector<std::int64_t> residues;
  std::int64_t span_gcd = d;
  for (auto v : images) {
    residues.push_back(((v % d) + d) % d);
    span_gcd = std::gcd(span_gcd, residues.back());
  }
  if (span_gcd != 1)
    throw std::invalid_argument("map is not onto Z_" + std::to_string(d));

  SubgroupGraph g(alphabet, static_cast<std::size_t>(d));
  for (std::int64_t r = 0; r < d; ++r)
    for (GenIndex gen = 0; gen < alphabet.size(); ++gen)
      g.add_edge(static_cast<Vertex>(r), gen, static_cast<Vertex>((r + residues[gen]) % d));
  return g;
}

SubgroupGraph restrict_kernel(const Alphabet &alphabet, std::span<const std::int64_t> images,
                              std::int64_t d, std::span<const std::string> sub) {
  if (images.size() != alphabet.size())
    throw std::invalid_argument("map must assign a residue to every generator");
  std::vector<std::int64_t> restricted;
  for (const auto &name : sub) {
    auto g = alphabet.find(name);
    if (!g)
      throw ParseError("unknown generator '" + name + "'");
    restricted.push_back(images[*g]);
  }
  Alphabet sub_alphabet{std::vector<std::string>(sub.begin(), sub.end())};
  try {
    return kernel_graph(sub_alphabet, restricted, d);
  } catch (const std::invalid_argument &) {
    if (d >= 2)
      throw std::invalid_argument("restricted map is not onto Z_" + std::to_string(d));
    throw;
  }
}

bool Transversal::is_tree_edge(const SubgroupGraph &graph, Vertex u, GenIndex g) const {
  Vertex v = graph.out(u, g);
  if (v == kNoVertex || u == v)
    return false;
  const Letter fwd{g, 1};
  return (parent[v].parent == u && parent[v].letter == fwd) ||
         (parent[u].parent == v && parent[u].letter == fwd.inverse());
}

Transversal schreier_transversal(const SubgroupGraph &g, std::optional<GenIndex> preferred) {
  if (!index(g).is_finite())
    throw DomainError("Schreier transversal needs a finite-index subgroup");
  const std::size_t n = g.vertex_count();
  const std::size_t rank = g.alphabet().size();
  if (preferred && *preferred >= rank)
    throw std::out_of_range("preferred generator outside alphabet");

  Transversal t;
  t.preferred = preferred;
  t.parent.assign(n, TreeEdge{});
  std::vector<std::optional<Word>> reps(n);
  reps[SubgroupGraph::base()] = Word(g.alphabet());

  std::vector<LabelKey> labels;
  if (preferred)
    labels.push_back(2 * *preferred);
  for (LabelKey k = 0; k < 2 * rank; ++k)
    if (!preferred || k != 2 * *preferred)
      labels.push_back(k);

  auto visit = [&](Vertex from, Letter l, Vertex to) {
    t.parent[to] = {from, l};
    reps[to] = multiply(*reps[from], Word::generator(g.alphabet(), l.gen, l.sign));
    t.order.push_back(to);
  };
  auto pull_orbit = [&](Vertex v) {
    if (!preferred)
      return;
    for (Vertex u = v;;) {
      Vertex w = g.out(u, *preferred);
      if (w == kNoVertex || reps[w])
        break;
      visit(u, {*preferred, 1}, w);
      u = w;
    }
  };

  t.order.push_back(SubgroupGraph::base());
  pull_orbit(SubgroupGraph::base());
  for (std::size_t head = 0; head < t.order.size(); ++head) {
    Vertex u = t.order[head];
    for (LabelKey k : labels) {
      Letter l = letter_of(k);
      Vertex w = g.step(u, l);
      if (w == kNoVertex || reps[w])
        continue;
      visit(u, l, w);
      pull_orbit(w);
    }
  }

  t.representatives.reserve(n);
  for (auto &r : reps)
    t.representatives.push_back(std::move(*r));
  return t;
}

std::optional<std::size_t> SchreierBasis::find(std::string_view name) const {
  return letters.find(name);
}

SchreierBasis schreier_basis(const SubgroupGraph &g, const Transversal &t) {
  const std::size_t rank = g.alphabet().size();
  struct Candidate {
    Vertex u;
    GenIndex gen;
  };
  std::vector<Candidate> edges;
  for (Vertex u : t.order)
    for (GenIndex gen = 0; gen < rank; ++gen)
      if (g.out(u, gen) != kNoVertex && !t.is_tree_edge(g, u, gen))
        edges.push_back({u, gen});

  bool kernel_shape = t.preferred.has_value() && rank == 2;
  if (kernel_shape)
    for (Vertex v : t.order)
      if (v != SubgroupGraph::base() && !(t.parent[v].letter == Letter{*t.preferred, 1}))
        kernel_shape = false;

  std::vector<std::pair<std::string, Candidate>> named;
  if (kernel_shape) {
    auto closing = std::find_if(edges.begin(), edges.end(),
                                [&](const Candidate &c) { return c.gen == *t.preferred; });
    if (closing == edges.end())
      throw std::logic_error("preferred orbit is not closed");
    named.emplace_back("a", *closing);
    std::size_t k = 0;
    for (const auto &c : edges)
      if (c.gen != *t.preferred)
        named.emplace_back("b" + std::to_string(++k), c);
  } else {
    std::size_t k = 0;
    for (const auto &c : edges)
      named.emplace_back("s" + std::to_string(++k), c);
  }

  SchreierBasis b;
  b.ambient = g.alphabet();
  b.edge_letter.assign(g.vertex_count() * rank, -1);
  std::vector<std::string> names;
  for (auto &[name, c] : named) {
    Vertex v = g.out(c.u, c.gen);
    Word w = multiply(multiply(t.representatives[c.u], Word::generator(g.alphabet(), c.gen)),
                      inverse(t.representatives[v]));
    b.edge_letter[c.u * rank + c.gen] = static_cast<std::int64_t>(b.elements.size());
    b.elements.push_back({name, std::move(w), c.u, c.gen});
    names.push_back(name);
  }
  b.letters = Alphabet(std::move(names));
  return b;
}

Word rewrite(const SubgroupGraph &g, const Transversal &, const SchreierBasis &b,
             const Word &w) {
  require_same(g.alphabet(), w.alphabet());
  const std::size_t rank = g.alphabet().size();
  std::vector<Letter> out;
  Vertex cur = SubgroupGraph::base();
  for (const auto &l : w.letters()) {
    Vertex next = g.step(cur, l);
    if (next == kNoVertex)
      throw DomainError("word '" + to_string(w) + "' is not in the subgroup");
    Vertex source = l.sign > 0 ? cur : next;
    auto e = b.edge_letter[source * rank + l.gen];
    if (e >= 0)
      out.push_back({static_cast<GenIndex>(e), l.sign});
    cur = next;
  }
  if (cur != SubgroupGraph::base())
    throw DomainError("word '" + to_string(w) + "' is not in the subgroup");
  return Word(b.letters, out);
}

Word evaluate(const SchreierBasis &b, const Word &basis_word) {
  require_same(b.letters, basis_word.alphabet());
  std::vector<Letter> letters;
  for (const auto &l : basis_word.letters()) {
    const Word &s = b.elements[l.gen].word;
    if (l.sign > 0)
      letters.insert(letters.end(), s.letters().begin(), s.letters().end());
    else
      for (auto it = s.letters().rbegin(); it != s.letters().rend(); ++it)
        letters.push_back(it->inverse());
  }
  return Word(b.ambient, letters);
}

bool in_derived_subgroup(const SubgroupGraph &g, const Transversal &t, const SchreierBasis &b,
                         const Word &w) {
  auto sums = exponent_sums(rewrite(g, t, b, w));
  return std::all_of(sums.begin(), sums.end(), [](const BigInt &v) { return v == 0; });
}

std::string to_dot(const SubgroupGraph &g) {
  std::ostringstream os;
  os << "digraph subgroup {\n  0 [shape=doublecircle];\n";
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (GenIndex gen = 0; gen < g.alphabet().size(); ++gen)
      if (auto v = g.out(u, gen); v != kNoVertex)
        os << "  " << u << " -> " << v << " [label=\"" << g.alphabet().name(gen) << "\"];\n";
  os << "}\n";
  return os.str();
}

} // namespace fglab
