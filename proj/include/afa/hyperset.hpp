#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "afa/errors.hpp"

namespace afa::hyperset {

// ---------------------------------------------------------------------------
// Atoms
// ---------------------------------------------------------------------------

// Urelements live in one of three disjoint namespaces: meaning labels,
// string tags, and the single end-of-expression marker "$".
enum class AtomSpace { meaning, tag, marker };

const char* to_string(AtomSpace ns);
std::optional<AtomSpace> atom_space_from(std::string_view s);

struct AtomLabel {
  AtomSpace ns{AtomSpace::meaning};
  std::string label;
  auto operator<=>(const AtomLabel&) const = default;
};

AtomLabel meaning_atom(std::string label);
AtomLabel tag_atom(std::string label);
AtomLabel dollar_marker();  // the unique marker atom "$"

std::string display(const AtomLabel& a);  // "meaning:P" etc.

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct EmptyLabel : Error {
  EmptyLabel() : Error("atom label must be nonempty") {}
};
struct BadMarkerLabel : Error {
  explicit BadMarkerLabel(const std::string& got)
      : Error("marker namespace contains only \"$\", got \"" + got + "\"") {}
};
struct AtomHasNoMembers : Error {
  AtomHasNoMembers() : Error("atom node has no members") {}
};
struct CyclicGraph : Error {
  CyclicGraph() : Error("graph is cyclic; no well-founded decoration exists") {}
};

// ---------------------------------------------------------------------------
// Graphs
// ---------------------------------------------------------------------------

using NodeId = std::uint32_t;
using Children = std::vector<NodeId>;  // sorted, duplicate-free
using Node = std::variant<AtomLabel, Children>;

// An accessible pointed graph: a frozen node arena plus a root. Set nodes
// hold their members as child edges; cycles are allowed. Immutable after
// construction and cheap to copy (the arena is shared).
class HGraph {
 public:
  HGraph() = delete;

  NodeId root() const { return root_; }
  bool is_atom(NodeId n) const { return std::holds_alternative<AtomLabel>((*nodes_)[n]); }
  const AtomLabel& atom_at(NodeId n) const { return std::get<AtomLabel>((*nodes_)[n]); }
  std::span<const NodeId> members_of(NodeId n) const {
    return std::get<Children>((*nodes_)[n]);
  }
  bool root_is_atom() const { return is_atom(root_); }

  // View of the same arena rooted at a different node.
  HGraph at(NodeId n) const { return HGraph(nodes_, n); }

  std::size_t arena_size() const { return nodes_->size(); }
  const void* arena_key() const { return nodes_.get(); }

  // Nodes reachable from the root, in BFS order (members in sorted order).
  std::vector<NodeId> reachable() const;

 private:
  friend class GraphBuilder;
  HGraph(std::shared_ptr<const std::vector<Node>> nodes, NodeId root)
      : nodes_(std::move(nodes)), root_(root) {}

  std::shared_ptr<const std::vector<Node>> nodes_;
  NodeId root_;
};

// Mutable arena used to assemble graphs. Atoms are interned per builder, so
// equal labels share a node. Cyclic structure is built through placeholders
// that are filled once.
class GraphBuilder {
 public:
  NodeId atom(const AtomLabel& a);          // throws EmptyLabel, BadMarkerLabel
  NodeId set(Children members);             // sorts and deduplicates
  NodeId placeholder();                     // set node to be filled later
  void fill(NodeId ph, Children members);   // one-shot definition
  NodeId kuratowski(NodeId x, NodeId y);    // {{x},{x,y}}

  // Copies the reachable part of a foreign graph into this arena, returning
  // the copy of its root. Repeated splices of the same source share nodes.
  NodeId splice(const HGraph& g);

  // Freeze. build() restricts to the part reachable from root and renumbers;
  // build_many() freezes the whole arena once and hands out one view per root.
  HGraph build(NodeId root) &&;
  std::vector<HGraph> build_many(const std::vector<NodeId>& roots) &&;

 private:
  NodeId splice_node(const HGraph& g, NodeId n);
  void check_filled() const;

  std::vector<Node> nodes_;
  std::vector<bool> unfilled_;
  std::map<AtomLabel, NodeId> interned_;
  std::map<std::pair<const void*, NodeId>, NodeId> spliced_;
};

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

HGraph new_atom(const AtomLabel& a);
HGraph empty_set();
HGraph set_of(std::span<const HGraph> elems);
HGraph set_of(std::initializer_list<HGraph> elems);
HGraph pair(const HGraph& x, const HGraph& y);  // Kuratowski {{x},{x,y}}
HGraph omega();                                 // the unique solution of X = {X}

// ---------------------------------------------------------------------------
// Observers
// ---------------------------------------------------------------------------

// One subgraph view per member of the root set; throws AtomHasNoMembers if
// the root is an atom.
std::vector<HGraph> members(const HGraph& h);

// Inverse of the Kuratowski coding, up to bisimulation. Works on the
// minimized graph; absent when the root is not a coded pair.
std::optional<std::pair<HGraph, HGraph>> decode_pair(const HGraph& h);

// Coinductive set equality: the roots are related by the greatest
// bisimulation on the disjoint union. Computed by partition refinement.
bool bisimilar(const HGraph& a, const HGraph& b);

// Independent greatest-fixpoint checker: starts from the full candidate
// relation and deletes violating pairs until stable. Quadratic; kept as a
// cross-check for bisimilar(), not as the production path.
bool bisimilar_naive(const HGraph& a, const HGraph& b);

// Quotient by the coarsest bisimulation. The result is bisimilar to the
// input and has no two distinct mutually bisimilar nodes.
HGraph minimize(const HGraph& h);

bool is_wellfounded(const HGraph& h);  // reachable subgraph is acyclic

// ---------------------------------------------------------------------------
// Well-founded decoration
// ---------------------------------------------------------------------------

// A hereditarily finite set as a ground term, compared extensionally.
// Set elements are kept sorted and pairwise distinct.
class NestedSetTerm {
 public:
  static NestedSetTerm atom(AtomLabel a);
  static NestedSetTerm set(std::vector<NestedSetTerm> elems);

  bool is_atom() const { return std::holds_alternative<AtomLabel>(v_); }
  const AtomLabel& atom_label() const { return std::get<AtomLabel>(v_); }
  const std::vector<NestedSetTerm>& elements() const {
    return std::get<std::vector<NestedSetTerm>>(v_);
  }

  bool operator==(const NestedSetTerm& o) const;
  std::strong_ordering operator<=>(const NestedSetTerm& o) const;

  std::string to_string() const;  // {meaning:P, {}} style, for diagnostics

 private:
  std::variant<AtomLabel, std::vector<NestedSetTerm>> v_;
};

// Mostowski collapse of an acyclic graph; throws CyclicGraph otherwise.
NestedSetTerm decorate(const HGraph& h);

// ---------------------------------------------------------------------------
// Persistence
// ---------------------------------------------------------------------------

// JSON graph document:
//   {"root": <int>, "nodes": [{"id": n, "kind": "atom", "ns": ..., "label": ...}
//                             | {"id": n, "kind": "set", "members": [..]}]}
// Output ids are a BFS numbering from the root; members sorted ascending.
std::string serialize_graph(const HGraph& h);
HGraph parse_graph(std::string_view text);  // throws ParseError

// DOT rendering: atoms as boxes labeled "namespace:label", set nodes as
// circles, membership as directed edges, root first.
std::string to_dot(const HGraph& h);

}  // namespace afa::hyperset
