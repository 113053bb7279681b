#pragma once

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "afa/errors.hpp"
#include "afa/hyperset.hpp"

namespace afa::eqsolver {

using VarName = std::string;

struct UnboundVariable : Error {
  explicit UnboundVariable(const VarName& v) : Error("unbound variable \"" + v + "\"") {}
};
struct NotClosed : Error {
  explicit NotClosed(const VarName& v)
      : Error("system is not closed: \"" + v + "\" occurs unbound") {}
};
struct AliasCycle : Error {
  explicit AliasCycle(const VarName& v)
      : Error("cycle of bare variable bindings through \"" + v +
              "\" has no unique solution") {}
};
struct NotBijective : Error {
  explicit NotBijective(const std::string& why) : Error("renaming is not bijective: " + why) {}
};

// ---------------------------------------------------------------------------
// Terms
// ---------------------------------------------------------------------------

// Right-hand side of a set equation: an indeterminate, an atom, a finite set
// of terms, or an ordered pair (compiled to its Kuratowski coding).
class Term {
 public:
  enum class Kind { var, atom, set, pair };

  static Term var(VarName name);
  static Term atom(hyperset::AtomLabel label);
  static Term set(std::vector<Term> elems);
  static Term pair(Term first, Term second);

  Kind kind() const { return rep_->kind; }
  const VarName& var_name() const { return rep_->name; }
  const hyperset::AtomLabel& atom_label() const { return rep_->label; }
  const std::vector<Term>& elements() const { return rep_->kids; }  // set
  const Term& first() const { return rep_->kids[0]; }               // pair
  const Term& second() const { return rep_->kids[1]; }              // pair

  bool operator==(const Term& o) const;
  std::strong_ordering operator<=>(const Term& o) const;

  // Canonical form: set members sorted and deduplicated, recursively.
  Term normalized() const;
  // Renames indeterminates; names missing from the map are left alone.
  Term rename(const std::map<VarName, VarName>& rho) const;
  void collect_vars(std::vector<VarName>& out) const;

  std::string to_string() const;

 private:
  struct Rep {
    Kind kind;
    VarName name;                // var
    hyperset::AtomLabel label;   // atom
    std::vector<Term> kids;      // set members / pair components
  };
  explicit Term(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}
  std::shared_ptr<const Rep> rep_;
};

// ---------------------------------------------------------------------------
// Systems and solutions
// ---------------------------------------------------------------------------

// Finite closed system of equations X = T(X1..Xn), at most one binding per
// variable (enforced by the map), every referenced variable bound.
struct EquationSystem {
  std::map<VarName, Term> equations;
};

// Throws NotClosed naming the first unbound reference.
void validate_closed(const EquationSystem& sys);

struct Solution {
  std::map<VarName, hyperset::HGraph> assignment;  // one shared arena
};

// Compiles a term to a node: atoms interned, sets built over evaluated
// members, pairs Kuratowski-expanded, variables looked up in env.
hyperset::NodeId eval_term(const Term& t,
                           const std::map<VarName, hyperset::NodeId>& env,
                           hyperset::GraphBuilder& builder);

// The unique solution of a finite closed system: one node per variable,
// each aliased or filled from its compiled right-hand side. Structural and
// exact; no iteration is involved. Throws NotClosed or AliasCycle.
Solution solve(const EquationSystem& sys);

// True iff for every binding X = T, the graph of T evaluated under the
// assignment is bisimilar to the assigned value of X.
bool check_solution(const EquationSystem& sys, const Solution& sol);

// Systematic renaming of binders and references; rho must cover the bound
// variables injectively.
EquationSystem rename_vars(const EquationSystem& sys,
                           const std::map<VarName, VarName>& rho);

// JSON document: {"equations": {"<var>": <term>}} with
// <term> ::= {"var": s} | {"atom": {"ns": s, "label": s}}
//          | {"set": [<term>...]} | {"pair": [<term>, <term>]}
std::string serialize_system(const EquationSystem& sys);
EquationSystem parse_system(std::string_view text);

}  // namespace afa::eqsolver
