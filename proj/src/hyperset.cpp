#include "afa/hyperset.hpp"

#include <algorithm>
#include <cstddef>
#include <deque>
#include <sstream>

#include "json_detail.hpp"

namespace afa::hyperset {

const char* to_string(AtomSpace ns) {
  switch (ns) {
    case AtomSpace::meaning: return "meaning";
    case AtomSpace::tag: return "tag";
    case AtomSpace::marker: return "marker";
  }
  return "?";
}

std::optional<AtomSpace> atom_space_from(std::string_view s) {
  if (s == "meaning") return AtomSpace::meaning;
  if (s == "tag") return AtomSpace::tag;
  if (s == "marker") return AtomSpace::marker;
  return std::nullopt;
}

AtomLabel meaning_atom(std::string label) { return {AtomSpace::meaning, std::move(label)}; }
AtomLabel tag_atom(std::string label) { return {AtomSpace::tag, std::move(label)}; }
AtomLabel dollar_marker() { return {AtomSpace::marker, "$"}; }

std::string display(const AtomLabel& a) {
  return std::string(to_string(a.ns)) + ":" + a.label;
}

// ---------------------------------------------------------------------------
// HGraph
// ---------------------------------------------------------------------------

std::vector<NodeId> HGraph::reachable() const {
  std::vector<NodeId> order;
  std::vector<bool> seen(nodes_->size(), false);
  std::deque<NodeId> queue{root_};
  seen[root_] = true;
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    order.push_back(n);
    if (!is_atom(n)) {
      for (NodeId c : members_of(n)) {
        if (!seen[c]) {
          seen[c] = true;
          queue.push_back(c);
        }
      }
    }
  }
  return order;
}

// ---------------------------------------------------------------------------
// GraphBuilder
// ---------------------------------------------------------------------------

NodeId GraphBuilder::atom(const AtomLabel& a) {
  if (a.label.empty()) throw EmptyLabel();
  if (a.ns == AtomSpace::marker && a.label != "$") throw BadMarkerLabel(a.label);
  auto it = interned_.find(a);
  if (it != interned_.end()) return it->second;
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.emplace_back(a);
  unfilled_.push_back(false);
  interned_.emplace(a, id);
  return id;
}

NodeId GraphBuilder::set(Children members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.emplace_back(std::move(members));
  unfilled_.push_back(false);
  return id;
}

NodeId GraphBuilder::placeholder() {
  NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.emplace_back(Children{});
  unfilled_.push_back(true);
  return id;
}

void GraphBuilder::fill(NodeId ph, Children members) {
  if (ph >= nodes_.size() || !unfilled_[ph])
    throw std::logic_error("fill() target is not an open placeholder");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  nodes_[ph] = std::move(members);
  unfilled_[ph] = false;
}

NodeId GraphBuilder::kuratowski(NodeId x, NodeId y) {
  NodeId s1 = set({x});
  NodeId s2 = set({x, y});
  return set({s1, s2});
}

NodeId GraphBuilder::splice(const HGraph& g) { return splice_node(g, g.root()); }

NodeId GraphBuilder::splice_node(const HGraph& g, NodeId n) {
  auto key = std::make_pair(g.arena_key(), n);
  auto it = spliced_.find(key);
  if (it != spliced_.end()) return it->second;
  if (g.is_atom(n)) {
    NodeId id = atom(g.atom_at(n));
    spliced_.emplace(key, id);
    return id;
  }
  NodeId ph = placeholder();
  spliced_.emplace(key, ph);  // before recursing, so cycles close correctly
  Children copied;
  for (NodeId c : g.members_of(n)) copied.push_back(splice_node(g, c));
  fill(ph, std::move(copied));
  return ph;
}

void GraphBuilder::check_filled() const {
  for (std::size_t i = 0; i < unfilled_.size(); ++i)
    if (unfilled_[i]) throw std::logic_error("graph built with unfilled placeholder");
}

HGraph GraphBuilder::build(NodeId root) && {
  check_filled();
  // Restrict to the reachable part and renumber in BFS order.
  std::vector<NodeId> remap(nodes_.size(), 0);
  std::vector<bool> seen(nodes_.size(), false);
  std::vector<NodeId> order;
  std::deque<NodeId> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    NodeId n = queue.front();
    queue.pop_front();
    remap[n] = static_cast<NodeId>(order.size());
    order.push_back(n);
    if (auto* ch = std::get_if<Children>(&nodes_[n])) {
      for (NodeId c : *ch) {
        if (!seen[c]) {
          seen[c] = true;
          queue.push_back(c);
        }
      }
    }
  }
  auto out = std::make_shared<std::vector<Node>>();
  out->reserve(order.size());
  for (NodeId n : order) {
    if (auto* ch = std::get_if<Children>(&nodes_[n])) {
      Children mapped;
      mapped.reserve(ch->size());
      for (NodeId c : *ch) mapped.push_back(remap[c]);
      std::sort(mapped.begin(), mapped.end());
      out->emplace_back(std::move(mapped));
    } else {
      out->emplace_back(std::get<AtomLabel>(nodes_[n]));
    }
  }
  return HGraph(std::move(out), remap[root]);
}

std::vector<HGraph> GraphBuilder::build_many(const std::vector<NodeId>& roots) && {
  check_filled();
  auto arena = std::make_shared<std::vector<Node>>(std::move(nodes_));
  std::vector<HGraph> out;
  out.reserve(roots.size());
  for (NodeId r : roots) out.push_back(HGraph(arena, r));
  return out;
}

// ---------------------------------------------------------------------------
// Constructors
// ---------------------------------------------------------------------------

HGraph new_atom(const AtomLabel& a) {
  GraphBuilder b;
  NodeId n = b.atom(a);
  return std::move(b).build(n);
}

HGraph empty_set() {
  GraphBuilder b;
  NodeId n = b.set({});
  return std::move(b).build(n);
}

HGraph set_of(std::span<const HGraph> elems) {
  GraphBuilder b;
  Children ch;
  ch.reserve(elems.size());
  for (const HGraph& e : elems) ch.push_back(b.splice(e));
  NodeId n = b.set(std::move(ch));
  return std::move(b).build(n);
}

HGraph set_of(std::initializer_list<HGraph> elems) {
  return set_of(std::span<const HGraph>(elems.begin(), elems.size()));
}

HGraph pair(const HGraph& x, const HGraph& y) {
  GraphBuilder b;
  NodeId cx = b.splice(x);
  NodeId cy = b.splice(y);
  NodeId n = b.kuratowski(cx, cy);
  return std::move(b).build(n);
}

HGraph omega() {
  GraphBuilder b;
  NodeId ph = b.placeholder();
  b.fill(ph, {ph});
  return std::move(b).build(ph);
}

// ---------------------------------------------------------------------------
// Observers
// ---------------------------------------------------------------------------

std::vector<HGraph> members(const HGraph& h) {
  if (h.root_is_atom()) throw AtomHasNoMembers();
  std::vector<HGraph> out;
  for (NodeId c : h.members_of(h.root())) out.push_back(h.at(c));
  return out;
}

// ---------------------------------------------------------------------------
// Bisimulation
// ---------------------------------------------------------------------------

namespace {

// Disjoint union of the reachable parts of up to two graphs, flattened into
// one index space. When both handles share an arena the arena enters once.
struct UnionSpace {
  std::vector<const AtomLabel*> atom;      // null for set nodes
  std::vector<std::vector<std::size_t>> children;
  std::size_t root_a = 0, root_b = 0;

  std::size_t size() const { return atom.size(); }
};

std::size_t append_graph(UnionSpace& u, const HGraph& g) {
  std::vector<NodeId> order = g.reachable();
  std::vector<std::size_t> remap(g.arena_size(), 0);
  std::size_t base = u.size();
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = base + i;
  for (NodeId n : order) {
    if (g.is_atom(n)) {
      u.atom.push_back(&g.atom_at(n));
      u.children.emplace_back();
    } else {
      u.atom.push_back(nullptr);
      std::vector<std::size_t> ch;
      for (NodeId c : g.members_of(n)) ch.push_back(remap[c]);
      u.children.push_back(std::move(ch));
    }
  }
  return remap[g.root()];
}

UnionSpace make_union(const HGraph& a, const HGraph& b) {
  UnionSpace u;
  if (a.arena_key() == b.arena_key()) {
    // One arena, two roots: append once, translate both roots.
    std::vector<NodeId> order_a = a.reachable();
    std::vector<NodeId> order_b = b.reachable();
    std::vector<NodeId> order;
    std::vector<bool> seen(a.arena_size(), false);
    for (NodeId n : order_a)
      if (!seen[n]) { seen[n] = true; order.push_back(n); }
    for (NodeId n : order_b)
      if (!seen[n]) { seen[n] = true; order.push_back(n); }
    std::vector<std::size_t> remap(a.arena_size(), 0);
    for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = i;
    for (NodeId n : order) {
      if (a.is_atom(n)) {
        u.atom.push_back(&a.atom_at(n));
        u.children.emplace_back();
      } else {
        u.atom.push_back(nullptr);
        std::vector<std::size_t> ch;
        for (NodeId c : a.members_of(n)) ch.push_back(remap[c]);
        u.children.push_back(std::move(ch));
      }
    }
    u.root_a = remap[a.root()];
    u.root_b = remap[b.root()];
  } else {
    u.root_a = append_graph(u, a);
    u.root_b = append_graph(u, b);
  }
  return u;
}

// Coarsest bisimulation by naive partition refinement: start with one block
// per atom label plus one block of all set nodes, then repeatedly split
// blocks by the set of member blocks until stable.
std::vector<int> refine(const UnionSpace& u) {
  std::size_t n = u.size();
  std::vector<int> block(n, 0);
  {
    std::map<AtomLabel, int> atom_block;
    int next = 1;  // block 0 is the set-node block
    for (std::size_t i = 0; i < n; ++i) {
      if (u.atom[i]) {
        auto [it, fresh] = atom_block.emplace(*u.atom[i], next);
        if (fresh) ++next;
        block[i] = it->second;
      }
    }
  }
  for (;;) {
    // Signature of a node: its block plus the set of blocks of its members.
    std::map<std::pair<int, std::vector<int>>, int> sig_to_block;
    std::vector<int> next_block(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> member_blocks;
      member_blocks.reserve(u.children[i].size());
      for (std::size_t c : u.children[i]) member_blocks.push_back(block[c]);
      std::sort(member_blocks.begin(), member_blocks.end());
      member_blocks.erase(std::unique(member_blocks.begin(), member_blocks.end()),
                          member_blocks.end());
      auto key = std::make_pair(block[i], std::move(member_blocks));
      auto [it, fresh] = sig_to_block.emplace(std::move(key),
                                              static_cast<int>(sig_to_block.size()));
      (void)fresh;
      next_block[i] = it->second;
    }
    bool stable = true;
    {
      // Stable iff the new labeling induces the same partition.
      std::map<int, int> old_of_new;
      for (std::size_t i = 0; i < n; ++i) {
        auto [it, fresh] = old_of_new.emplace(next_block[i], block[i]);
        if (!fresh && it->second != block[i]) { stable = false; break; }
      }
      if (stable) {
        std::map<int, int> new_of_old;
        for (std::size_t i = 0; i < n; ++i) {
          auto [it, fresh] = new_of_old.emplace(block[i], next_block[i]);
          if (!fresh && it->second != next_block[i]) { stable = false; break; }
        }
      }
    }
    block = std::move(next_block);
    if (stable) return block;
  }
}

}  // namespace

bool bisimilar(const HGraph& a, const HGraph& b) {
  UnionSpace u = make_union(a, b);
  std::vector<int> block = refine(u);
  return block[u.root_a] == block[u.root_b];
}

bool bisimilar_naive(const HGraph& a, const HGraph& b) {
  UnionSpace u = make_union(a, b);
  std::size_t n = u.size();
  // Start from the full candidate relation and delete violating pairs.
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (u.atom[i] && u.atom[j])
        rel[i][j] = (*u.atom[i] == *u.atom[j]) ? 1 : 0;
      else if (!u.atom[i] && !u.atom[j])
        rel[i][j] = 1;
    }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (!rel[i][j] || u.atom[i]) continue;
        bool ok = true;
        for (std::size_t ci : u.children[i]) {
          bool found = false;
          for (std::size_t cj : u.children[j])
            if (rel[ci][cj]) { found = true; break; }
          if (!found) { ok = false; break; }
        }
        if (ok) {
          for (std::size_t cj : u.children[j]) {
            bool found = false;
            for (std::size_t ci : u.children[i])
              if (rel[ci][cj]) { found = true; break; }
            if (!found) { ok = false; break; }
          }
        }
        if (!ok) {
          rel[i][j] = 0;
          changed = true;
        }
      }
    }
  }
  return rel[u.root_a][u.root_b];
}

HGraph minimize(const HGraph& h) {
  UnionSpace u = make_union(h, h);
  std::vector<int> block = refine(u);
  // One node per block reachable from the root's block.
  GraphBuilder b;
  std::map<int, NodeId> node_of_block;
  std::map<int, std::size_t> rep_of_block;  // representative union index
  for (std::size_t i = 0; i < u.size(); ++i) rep_of_block.emplace(block[i], i);
  // Create nodes in ascending block order for determinism.
  for (const auto& [blk, rep] : rep_of_block) {
    if (u.atom[rep])
      node_of_block[blk] = b.atom(*u.atom[rep]);
    else
      node_of_block[blk] = b.placeholder();
  }
  for (const auto& [blk, rep] : rep_of_block) {
    if (u.atom[rep]) continue;
    Children ch;
    for (std::size_t c : u.children[rep]) ch.push_back(node_of_block[block[c]]);
    b.fill(node_of_block[blk], std::move(ch));
  }
  return std::move(b).build(node_of_block[block[u.root_a]]);
}

bool is_wellfounded(const HGraph& h) {
  enum : char { white, gray, black };
  std::vector<char> color(h.arena_size(), white);
  // Iterative DFS with an explicit stack; a gray->gray edge is a cycle.
  std::vector<std::pair<NodeId, std::size_t>> stack;
  stack.emplace_back(h.root(), 0);
  color[h.root()] = gray;
  while (!stack.empty()) {
    auto& [n, idx] = stack.back();
    if (h.is_atom(n)) {
      color[n] = black;
      stack.pop_back();
      continue;
    }
    auto ch = h.members_of(n);
    if (idx == ch.size()) {
      color[n] = black;
      stack.pop_back();
      continue;
    }
    NodeId c = ch[idx++];
    if (color[c] == gray) return false;
    if (color[c] == white) {
      color[c] = gray;
      stack.emplace_back(c, 0);
    }
  }
  return true;
}

std::optional<std::pair<HGraph, HGraph>> decode_pair(const HGraph& h) {
  HGraph m = minimize(h);
  if (m.root_is_atom()) return std::nullopt;
  auto mem = m.members_of(m.root());
  // In the minimized graph node identity is bisimilarity, so the Kuratowski
  // shape can be read off by id comparisons.
  auto set_members = [&](NodeId n) -> std::optional<std::span<const NodeId>> {
    if (m.is_atom(n)) return std::nullopt;
    return m.members_of(n);
  };
  if (mem.size() == 1) {
    auto inner = set_members(mem[0]);
    if (!inner || inner->size() != 1) return std::nullopt;
    NodeId x = (*inner)[0];
    return std::make_pair(m.at(x), m.at(x));
  }
  if (mem.size() == 2) {
    auto first = set_members(mem[0]);
    auto second = set_members(mem[1]);
    if (!first || !second) return std::nullopt;
    auto classify = [&](std::span<const NodeId> s, std::span<const NodeId> d)
        -> std::optional<std::pair<NodeId, NodeId>> {
      if (s.size() != 1 || d.size() != 2) return std::nullopt;
      NodeId x = s[0];
      if (d[0] == x) return std::make_pair(x, d[1]);
      if (d[1] == x) return std::make_pair(x, d[0]);
      return std::nullopt;
    };
    auto r = classify(*first, *second);
    if (!r) r = classify(*second, *first);
    if (!r) return std::nullopt;
    return std::make_pair(m.at(r->first), m.at(r->second));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// NestedSetTerm / decoration
// ---------------------------------------------------------------------------

NestedSetTerm NestedSetTerm::atom(AtomLabel a) {
  NestedSetTerm t;
  t.v_ = std::move(a);
  return t;
}

NestedSetTerm NestedSetTerm::set(std::vector<NestedSetTerm> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  NestedSetTerm t;
  t.v_ = std::move(elems);
  return t;
}

bool NestedSetTerm::operator==(const NestedSetTerm& o) const {
  return (*this <=> o) == std::strong_ordering::equal;
}

std::strong_ordering NestedSetTerm::operator<=>(const NestedSetTerm& o) const {
  // Atoms sort before sets; atoms by label, sets lexicographically.
  if (is_atom() != o.is_atom()) return is_atom() ? std::strong_ordering::less
                                                 : std::strong_ordering::greater;
  if (is_atom()) return atom_label() <=> o.atom_label();
  const auto& a = elements();
  const auto& b = o.elements();
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    auto c = a[i] <=> b[i];
    if (c != std::strong_ordering::equal) return c;
  }
  return a.size() <=> b.size();
}

std::string NestedSetTerm::to_string() const {
  if (is_atom()) return display(atom_label());
  std::string out = "{";
  bool first = true;
  for (const auto& e : elements()) {
    if (!first) out += ", ";
    first = false;
    out += e.to_string();
  }
  return out + "}";
}

NestedSetTerm decorate(const HGraph& h) {
  if (!is_wellfounded(h)) throw CyclicGraph();
  std::map<NodeId, NestedSetTerm> memo;
  // Post-order over the acyclic reachable part.
  std::vector<std::pair<NodeId, bool>> stack{{h.root(), false}};
  while (!stack.empty()) {
    auto [n, expanded] = stack.back();
    stack.pop_back();
    if (memo.count(n)) continue;
    if (h.is_atom(n)) {
      memo.emplace(n, NestedSetTerm::atom(h.atom_at(n)));
      continue;
    }
    if (!expanded) {
      stack.emplace_back(n, true);
      for (NodeId c : h.members_of(n)) stack.emplace_back(c, false);
      continue;
    }
    std::vector<NestedSetTerm> elems;
    for (NodeId c : h.members_of(n)) elems.push_back(memo.at(c));
    memo.emplace(n, NestedSetTerm::set(std::move(elems)));
  }
  return memo.at(h.root());
}

// ---------------------------------------------------------------------------
// Persistence
// ---------------------------------------------------------------------------

namespace detail {

nlohmann::ordered_json graph_to_json(const HGraph& h) {
  std::vector<NodeId> order = h.reachable();
  std::vector<NodeId> remap(h.arena_size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<NodeId>(i);
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    nlohmann::ordered_json jn;
    jn["id"] = i;
    if (h.is_atom(n)) {
      jn["kind"] = "atom";
      jn["ns"] = to_string(h.atom_at(n).ns);
      jn["label"] = h.atom_at(n).label;
    } else {
      jn["kind"] = "set";
      std::vector<NodeId> mem;
      for (NodeId c : h.members_of(n)) mem.push_back(remap[c]);
      std::sort(mem.begin(), mem.end());
      jn["members"] = mem;
    }
    nodes.push_back(std::move(jn));
  }
  nlohmann::ordered_json doc;
  doc["root"] = remap[h.root()];
  doc["nodes"] = std::move(nodes);
  return doc;
}

HGraph graph_from_json(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("root") || !doc.contains("nodes"))
    throw ParseError("graph document needs \"root\" and \"nodes\"");
  if (!doc["nodes"].is_array()) throw ParseError("\"nodes\" must be an array");
  std::map<std::int64_t, const nlohmann::ordered_json*> by_id;
  for (const auto& jn : doc["nodes"]) {
    if (!jn.is_object() || !jn.contains("id") || !jn["id"].is_number_integer())
      throw ParseError("every node needs an integer \"id\"");
    std::int64_t id = jn["id"].get<std::int64_t>();
    if (id < 0) throw ParseError("node ids must be nonnegative");
    if (!by_id.emplace(id, &jn).second)
      throw ParseError("duplicate node id " + std::to_string(id));
  }
  GraphBuilder b;
  std::map<std::int64_t, NodeId> built;
  // First pass: allocate; second pass: connect members.
  for (const auto& [id, jn] : by_id) {
    const auto& kind = (*jn)["kind"];
    if (!(*jn).contains("kind") || !kind.is_string())
      throw ParseError("node " + std::to_string(id) + " needs a \"kind\"");
    if (kind == "atom") {
      if (!(*jn).contains("ns") || !(*jn).contains("label") ||
          !(*jn)["ns"].is_string() || !(*jn)["label"].is_string())
        throw ParseError("atom node " + std::to_string(id) + " needs \"ns\" and \"label\"");
      auto ns = atom_space_from((*jn)["ns"].get<std::string>());
      if (!ns) throw ParseError("unknown atom namespace \"" +
                                (*jn)["ns"].get<std::string>() + "\"");
      try {
        built[id] = b.atom({*ns, (*jn)["label"].get<std::string>()});
      } catch (const Error& e) {
        throw ParseError("node " + std::to_string(id) + ": " + e.what());
      }
    } else if (kind == "set") {
      if (!(*jn).contains("members") || !(*jn)["members"].is_array())
        throw ParseError("set node " + std::to_string(id) + " needs \"members\"");
      built[id] = b.placeholder();
    } else {
      throw ParseError("unknown node kind on node " + std::to_string(id));
    }
  }
  for (const auto& [id, jn] : by_id) {
    if ((*jn)["kind"] != "set") continue;
    Children ch;
    for (const auto& m : (*jn)["members"]) {
      if (!m.is_number_integer()) throw ParseError("members must be integer node ids");
      auto it = built.find(m.get<std::int64_t>());
      if (it == built.end())
        throw ParseError("member " + m.dump() + " of node " + std::to_string(id) +
                         " does not exist");
      ch.push_back(it->second);
    }
    b.fill(built[id], std::move(ch));
  }
  if (!doc["root"].is_number_integer()) throw ParseError("\"root\" must be an integer");
  auto rit = built.find(doc["root"].get<std::int64_t>());
  if (rit == built.end()) throw ParseError("root id does not name a node");
  return std::move(b).build(rit->second);
}

}  // namespace detail

std::string serialize_graph(const HGraph& h) { return detail::graph_to_json(h).dump(); }

HGraph parse_graph(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return detail::graph_from_json(doc);
}

std::string to_dot(const HGraph& h) {
  std::vector<NodeId> order = h.reachable();
  std::vector<NodeId> remap(h.arena_size(), 0);
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<NodeId>(i);
  std::ostringstream out;
  out << "digraph hyperset {\n";
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    if (h.is_atom(n)) {
      // Quotes in labels are escaped; namespaces contain none.
      std::string lbl = display(h.atom_at(n));
      std::string esc;
      for (char c : lbl) {
        if (c == '"' || c == '\\') esc += '\\';
        esc += c;
      }
      out << "  n" << i << " [shape=box, label=\"" << esc << "\"];\n";
    } else {
      out << "  n" << i << " [shape=circle, label=\"" << i << "\"];\n";
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    NodeId n = order[i];
    if (h.is_atom(n)) continue;
    for (NodeId c : h.members_of(n)) out << "  n" << i << " -> n" << remap[c] << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace afa::hyperset
