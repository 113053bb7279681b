#include "afa/eqsolver.hpp"

#include <algorithm>
#include <set>

#include "json_detail.hpp"

namespace afa::eqsolver {

using hyperset::GraphBuilder;
using hyperset::HGraph;
using hyperset::NodeId;

// ---------------------------------------------------------------------------
// Term
// ---------------------------------------------------------------------------

Term Term::var(VarName name) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::var;
  rep->name = std::move(name);
  return Term(std::move(rep));
}

Term Term::atom(hyperset::AtomLabel label) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::atom;
  rep->label = std::move(label);
  return Term(std::move(rep));
}

Term Term::set(std::vector<Term> elems) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::set;
  rep->kids = std::move(elems);
  return Term(std::move(rep));
}

Term Term::pair(Term first, Term second) {
  auto rep = std::make_shared<Rep>();
  rep->kind = Kind::pair;
  rep->kids.push_back(std::move(first));
  rep->kids.push_back(std::move(second));
  return Term(std::move(rep));
}

std::strong_ordering Term::operator<=>(const Term& o) const {
  if (kind() != o.kind()) return kind() <=> o.kind();
  switch (kind()) {
    case Kind::var: return var_name() <=> o.var_name();
    case Kind::atom: return atom_label() <=> o.atom_label();
    case Kind::set:
    case Kind::pair: {
      const auto& a = rep_->kids;
      const auto& b = o.rep_->kids;
      for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        auto c = a[i] <=> b[i];
        if (c != std::strong_ordering::equal) return c;
      }
      return a.size() <=> b.size();
    }
  }
  return std::strong_ordering::equal;
}

bool Term::operator==(const Term& o) const {
  return (*this <=> o) == std::strong_ordering::equal;
}

Term Term::normalized() const {
  switch (kind()) {
    case Kind::var:
    case Kind::atom:
      return *this;
    case Kind::set: {
      std::vector<Term> kids;
      kids.reserve(rep_->kids.size());
      for (const Term& k : rep_->kids) kids.push_back(k.normalized());
      std::sort(kids.begin(), kids.end());
      kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
      return Term::set(std::move(kids));
    }
    case Kind::pair:
      return Term::pair(first().normalized(), second().normalized());
  }
  return *this;
}

Term Term::rename(const std::map<VarName, VarName>& rho) const {
  switch (kind()) {
    case Kind::var: {
      auto it = rho.find(var_name());
      return it == rho.end() ? *this : Term::var(it->second);
    }
    case Kind::atom:
      return *this;
    case Kind::set: {
      std::vector<Term> kids;
      kids.reserve(rep_->kids.size());
      for (const Term& k : rep_->kids) kids.push_back(k.rename(rho));
      return Term::set(std::move(kids));
    }
    case Kind::pair:
      return Term::pair(first().rename(rho), second().rename(rho));
  }
  return *this;
}

void Term::collect_vars(std::vector<VarName>& out) const {
  switch (kind()) {
    case Kind::var:
      out.push_back(var_name());
      return;
    case Kind::atom:
      return;
    case Kind::set:
    case Kind::pair:
      for (const Term& k : rep_->kids) k.collect_vars(out);
      return;
  }
}

std::string Term::to_string() const {
  switch (kind()) {
    case Kind::var: return var_name();
    case Kind::atom: return hyperset::display(atom_label());
    case Kind::set: {
      std::string out = "{";
      bool sep = false;
      for (const Term& k : rep_->kids) {
        if (sep) out += ", ";
        sep = true;
        out += k.to_string();
      }
      return out + "}";
    }
    case Kind::pair:
      return "<" + first().to_string() + ", " + second().to_string() + ">";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Solving
// ---------------------------------------------------------------------------

void validate_closed(const EquationSystem& sys) {
  for (const auto& [name, t] : sys.equations) {
    std::vector<VarName> refs;
    t.collect_vars(refs);
    for (const VarName& r : refs)
      if (!sys.equations.count(r)) throw NotClosed(r);
  }
}

NodeId eval_term(const Term& t, const std::map<VarName, NodeId>& env,
                 GraphBuilder& builder) {
  switch (t.kind()) {
    case Term::Kind::var: {
      auto it = env.find(t.var_name());
      if (it == env.end()) throw UnboundVariable(t.var_name());
      return it->second;
    }
    case Term::Kind::atom:
      return builder.atom(t.atom_label());
    case Term::Kind::set: {
      hyperset::Children ch;
      ch.reserve(t.elements().size());
      for (const Term& k : t.elements()) ch.push_back(eval_term(k, env, builder));
      return builder.set(std::move(ch));
    }
    case Term::Kind::pair: {
      NodeId f = eval_term(t.first(), env, builder);
      NodeId s = eval_term(t.second(), env, builder);
      return builder.kuratowski(f, s);
    }
  }
  throw std::logic_error("unreachable term kind");
}

Solution solve(const EquationSystem& sys) {
  validate_closed(sys);
  GraphBuilder b;
  std::map<VarName, NodeId> node;

  // Set- and pair-valued variables own a node; atom-valued variables alias
  // the interned atom; bare variable references alias their target.
  for (const auto& [name, t] : sys.equations) {
    if (t.kind() == Term::Kind::set || t.kind() == Term::Kind::pair)
      node[name] = b.placeholder();
    else if (t.kind() == Term::Kind::atom)
      node[name] = b.atom(t.atom_label());
  }
  // Resolve alias chains, rejecting pure reference cycles: X = Y, Y = X is
  // satisfied by every set, so it has no unique solution.
  for (const auto& [name, t] : sys.equations) {
    if (t.kind() != Term::Kind::var || node.count(name)) continue;
    std::vector<VarName> chain;
    std::set<VarName> on_chain;
    VarName cur = name;
    while (!node.count(cur)) {
      if (!on_chain.insert(cur).second) throw AliasCycle(cur);
      chain.push_back(cur);
      cur = sys.equations.at(cur).var_name();
    }
    for (const VarName& v : chain) node[v] = node.at(cur);
  }
  for (const auto& [name, t] : sys.equations) {
    if (t.kind() == Term::Kind::set) {
      hyperset::Children ch;
      ch.reserve(t.elements().size());
      for (const Term& k : t.elements()) ch.push_back(eval_term(k, node, b));
      b.fill(node.at(name), std::move(ch));
    } else if (t.kind() == Term::Kind::pair) {
      NodeId f = eval_term(t.first(), node, b);
      NodeId s = eval_term(t.second(), node, b);
      NodeId s1 = b.set({f});
      NodeId s2 = b.set({f, s});
      b.fill(node.at(name), {s1, s2});
    }
  }

  std::vector<VarName> names;
  std::vector<NodeId> roots;
  for (const auto& [name, n] : node) {
    names.push_back(name);
    roots.push_back(n);
  }
  std::vector<HGraph> graphs = std::move(b).build_many(roots);
  Solution sol;
  for (std::size_t i = 0; i < names.size(); ++i)
    sol.assignment.emplace(names[i], graphs[i]);
  return sol;
}

bool check_solution(const EquationSystem& sys, const Solution& sol) {
  for (const auto& [name, t] : sys.equations) {
    if (!sol.assignment.count(name)) return false;
    GraphBuilder b;
    std::map<VarName, NodeId> env;
    std::vector<VarName> refs;
    t.collect_vars(refs);
    for (const VarName& r : refs) {
      auto it = sol.assignment.find(r);
      if (it == sol.assignment.end()) return false;
      env.emplace(r, b.splice(it->second));
    }
    NodeId root = eval_term(t, env, b);
    HGraph built = std::move(b).build(root);
    if (!bisimilar(built, sol.assignment.at(name))) return false;
  }
  return true;
}

EquationSystem rename_vars(const EquationSystem& sys,
                           const std::map<VarName, VarName>& rho) {
  std::set<VarName> images;
  for (const auto& [name, t] : sys.equations) {
    auto it = rho.find(name);
    if (it == rho.end()) throw NotBijective("\"" + name + "\" has no image");
    if (!images.insert(it->second).second)
      throw NotBijective("two variables map to \"" + it->second + "\"");
  }
  EquationSystem out;
  for (const auto& [name, t] : sys.equations)
    out.equations.emplace(rho.at(name), t.rename(rho));
  return out;
}

// ---------------------------------------------------------------------------
// Persistence
// ---------------------------------------------------------------------------

namespace detail {

nlohmann::ordered_json term_to_json(const Term& t) {
  nlohmann::ordered_json j;
  switch (t.kind()) {
    case Term::Kind::var:
      j["var"] = t.var_name();
      break;
    case Term::Kind::atom:
      j["atom"] = {{"ns", hyperset::to_string(t.atom_label().ns)},
                   {"label", t.atom_label().label}};
      break;
    case Term::Kind::set: {
      auto arr = nlohmann::ordered_json::array();
      for (const Term& k : t.elements()) arr.push_back(term_to_json(k));
      j["set"] = std::move(arr);
      break;
    }
    case Term::Kind::pair:
      j["pair"] = {term_to_json(t.first()), term_to_json(t.second())};
      break;
  }
  return j;
}

Term term_from_json(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || doc.size() != 1)
    throw ParseError("a term is an object with exactly one of var/atom/set/pair");
  if (doc.contains("var")) {
    if (!doc["var"].is_string() || doc["var"].get<std::string>().empty())
      throw ParseError("\"var\" must be a nonempty string");
    return Term::var(doc["var"].get<std::string>());
  }
  if (doc.contains("atom")) {
    const auto& a = doc["atom"];
    if (!a.is_object() || !a.contains("ns") || !a.contains("label") ||
        !a["ns"].is_string() || !a["label"].is_string())
      throw ParseError("\"atom\" needs string fields \"ns\" and \"label\"");
    auto ns = hyperset::atom_space_from(a["ns"].get<std::string>());
    if (!ns) throw ParseError("unknown atom namespace \"" + a["ns"].get<std::string>() + "\"");
    return Term::atom({*ns, a["label"].get<std::string>()});
  }
  if (doc.contains("set")) {
    if (!doc["set"].is_array()) throw ParseError("\"set\" must be an array of terms");
    std::vector<Term> kids;
    for (const auto& k : doc["set"]) kids.push_back(term_from_json(k));
    return Term::set(std::move(kids));
  }
  if (doc.contains("pair")) {
    if (!doc["pair"].is_array() || doc["pair"].size() != 2)
      throw ParseError("\"pair\" must be an array of two terms");
    return Term::pair(term_from_json(doc["pair"][0]), term_from_json(doc["pair"][1]));
  }
  throw ParseError("a term is one of var/atom/set/pair");
}

nlohmann::ordered_json system_to_json(const EquationSystem& sys) {
  nlohmann::ordered_json eqs = nlohmann::ordered_json::object();
  for (const auto& [name, t] : sys.equations) eqs[name] = term_to_json(t);
  nlohmann::ordered_json doc;
  doc["equations"] = std::move(eqs);
  return doc;
}

EquationSystem system_from_json(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("equations") || !doc["equations"].is_object())
    throw ParseError("system document needs an \"equations\" object");
  EquationSystem sys;
  for (const auto& [name, jt] : doc["equations"].items()) {
    if (name.empty()) throw ParseError("variable names must be nonempty");
    sys.equations.emplace(name, term_from_json(jt));
  }
  return sys;
}

}  // namespace detail

std::string serialize_system(const EquationSystem& sys) {
  return detail::system_to_json(sys).dump();
}

EquationSystem parse_system(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return detail::system_from_json(doc);
}

}  // namespace afa::eqsolver
