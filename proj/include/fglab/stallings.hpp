#pragma once

#include "fglab/word.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fglab {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Folded core graph of a finitely generated subgroup (Stallings automaton).
///
/// Vertex 0 is the base. Each (vertex, generator) has at most one outgoing
/// and at most one incoming edge; an edge u --g--> v is read backwards by
/// the letter g^-1.
class SubgroupGraph {
public:
  SubgroupGraph(Alphabet alphabet, std::size_t vertex_count);

  const Alphabet &alphabet() const { return alphabet_; }
  std::size_t vertex_count() const { return vertex_count_; }
  static constexpr Vertex base() { return 0; }

  /// Target of u --g-->, or kNoVertex.
  Vertex out(Vertex u, GenIndex g) const { return out_[slot(u, g)]; }
  /// Source of --g--> u, or kNoVertex.
  Vertex in(Vertex u, GenIndex g) const { return in_[slot(u, g)]; }
  /// Follows one letter in its own direction.
  Vertex step(Vertex u, Letter l) const {
    return l.sign > 0 ? out(u, l.gen) : in(u, l.gen);
  }

  /// Adds u --g--> v. Throws std::logic_error if it would break foldedness.
  void add_edge(Vertex u, GenIndex g, Vertex v);

  std::size_t edge_count() const;
  /// True when every vertex has every outgoing and incoming label.
  bool is_complete() const;

  friend bool operator==(const SubgroupGraph &, const SubgroupGraph &) = default;

private:
  std::size_t slot(Vertex u, GenIndex g) const {
    return static_cast<std::size_t>(u) * alphabet_.size() + g;
  }

  Alphabet alphabet_;
  std::size_t vertex_count_;
  std::vector<Vertex> out_;
  std::vector<Vertex> in_;
};

/// Finite index, or infinite when the graph is not a full cover of the rose.
class SubgroupIndex {
public:
  static SubgroupIndex finite(std::size_t n) { return SubgroupIndex(n); }
  static SubgroupIndex infinite() { return SubgroupIndex(std::nullopt); }

  bool is_finite() const { return value_.has_value(); }
  std::size_t value() const { return value_.value(); }
  std::string to_string() const {
    return value_ ? std::to_string(*value_) : "infinite";
  }
  friend bool operator==(const SubgroupIndex &, const SubgroupIndex &) = default;

private:
  explicit SubgroupIndex(std::optional<std::size_t> v) : value_(v) {}
  std::optional<std::size_t> value_;
};

/// Stallings construction: wedge of generator loops, folded and pruned, with
/// vertices renumbered in canonical BFS order from the base. Identity
/// generators are dropped; an empty list gives the trivial subgroup.
SubgroupGraph build_graph(std::span<const Word> generators, const Alphabet &alphabet);

/// End vertex of the path labelled w from `start`, if the path exists.
std::optional<Vertex> walk(const SubgroupGraph &g, Vertex start, const Word &w);

bool contains(const SubgroupGraph &g, const Word &w);

SubgroupIndex index(const SubgroupGraph &g);

/// Label-preserving canonical code of the graph rooted at `root`: vertices
/// are renumbered in order of discovery by a BFS that scans labels in the
/// order g0, g0^-1, g1, g1^-1, ... Two rooted graphs have the same code iff
/// they accept the same language.
std::vector<std::int64_t> canonical_code(const SubgroupGraph &g, Vertex root);

/// Requires finite index; throws DomainError otherwise.
bool is_normal(const SubgroupGraph &g);

/// Graph of ker(F -> Z_d), g |-> images[g] mod d. Vertex r is the residue r.
/// Throws std::invalid_argument for d < 2, a size mismatch, or a map that
/// is not onto Z_d.
SubgroupGraph kernel_graph(const Alphabet &alphabet, std::span<const std::int64_t> images,
                           std::int64_t d);

/// Kernel graph of f restricted to the free factor on `sub` (names taken
/// from `alphabet`, in the given order).
SubgroupGraph restrict_kernel(const Alphabet &alphabet, std::span<const std::int64_t> images,
                              std::int64_t d, std::span<const std::string> sub);

struct TreeEdge {
  Vertex parent = kNoVertex;
  Letter letter; // parent --letter--> child
};

/// Schreier transversal from a BFS spanning tree.
struct Transversal {
  std::vector<Word> representatives;  // indexed by vertex
  std::vector<TreeEdge> parent;       // indexed by vertex; base has none
  std::vector<Vertex> order;          // discovery order, base first
  std::optional<GenIndex> preferred;

  /// Is the positive edge u --g--> out(u, g) a tree edge?
  bool is_tree_edge(const SubgroupGraph &graph, Vertex u, GenIndex g) const;
};

/// Breadth-first spanning tree. With a preferred generator, every newly
/// discovered vertex immediately pulls in its forward orbit along that
/// generator, so a kernel graph with f(preferred) = 1 yields the
/// representatives 1, x, ..., x^(d-1). Requires finite index.
Transversal schreier_transversal(const SubgroupGraph &g,
                                 std::optional<GenIndex> preferred = std::nullopt);

struct BasisElement {
  std::string name;
  Word word;     // element of the ambient free group
  Vertex source; // non-tree edge source --gen--> target
  GenIndex gen;
};

/// Free basis of the subgroup, one element per non-tree edge u --g--> v,
/// namely rep(u) g rep(v)^-1.
///
/// Naming: when the transversal has a preferred generator x over a rank-2
/// alphabet and the x-orbit of the base covers the graph, the edge closing
/// that orbit is `a` and the edges of the other generator are b1..bd in
/// transversal order (this is the kernel-graph shape). Otherwise elements
/// are s1..sk, ordered by source vertex in transversal order, then by
/// generator index.
struct SchreierBasis {
  std::vector<BasisElement> elements;
  Alphabet letters; // names of the basis, in element order
  Alphabet ambient; // alphabet of the free group the words live in
  std::vector<std::int64_t> edge_letter; // [u * rank + g] -> element, -1 on tree edges

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> find(std::string_view name) const;
};

SchreierBasis schreier_basis(const SubgroupGraph &g, const Transversal &t);

/// Reidemeister-Schreier rewriting of a subgroup element into the basis.
/// Throws DomainError when w is not in the subgroup.
Word rewrite(const SubgroupGraph &g, const Transversal &t, const SchreierBasis &b,
             const Word &w);

/// Substitutes basis words back into the ambient free group.
Word evaluate(const SchreierBasis &b, const Word &basis_word);

/// Membership in [G, G] via vanishing exponent sums of the rewritten word.
bool in_derived_subgroup(const SubgroupGraph &g, const Transversal &t, const SchreierBasis &b,
                         const Word &w);

/// Graphviz rendering; the base is drawn as a double circle.
std::string to_dot(const SubgroupGraph &g);

} // namespace fglab
