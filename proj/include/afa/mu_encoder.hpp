#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "afa/eqsolver.hpp"
#include "afa/errors.hpp"
#include "afa/hyperset.hpp"
#include "afa/langmodel.hpp"
#include "afa/report.hpp"

namespace afa::mu {

struct NotAFunction : Error {
  NotAFunction() : Error("graph has no member decodable as a pair") {}
};
struct NoMatch : Error {
  NoMatch() : Error("no argument entry is bisimilar to the given value") {}
};
struct Ambiguous : Error {
  Ambiguous() : Error("bisimilar argument entries carry non-bisimilar values") {}
};
struct NotInImage : Error {
  NotInImage() : Error("value is not bisimilar to any encoded meaning") {}
};
struct NotSynonyms : Error {
  NotSynonyms(const std::string& a, const std::string& b)
      : Error("\"" + a + "\" and \"" + b + "\" are not synonyms") {}
};
struct NotSymbols : Error {
  explicit NotSymbols(const std::string& s)
      : Error("\"" + s + "\" is not a single alphabet symbol of the language") {}
};
struct BrokenEncoding : Error {
  explicit BrokenEncoding(const std::string& why) : Error("broken encoding: " + why) {}
};

// Variable naming scheme of the equation system. String variables embed the
// symbol sequence joined by U+241F; the end-marker variable is "X:$" and the
// terminal variable of s is the variable of s followed by the marker.
extern const char* const kSymbolSep;  // U+241F as UTF-8
std::string string_var(const lang::Str& s);
std::string dollar_var();
std::string terminal_var(const lang::Str& s);

// The equations whose unique solution is the encoding map:
//   X_s  = { <X_$, m(s)> } ∪ { <X_t, X_{s·t}> : t in L, s·t in L }
//   X_$  = { <X_$, X_$> }
//   X_s$ = m(s)
eqsolver::EquationSystem build_equations(const lang::LanguageSpec& spec);

// A solved encoding: one minimized graph per language string plus the graph
// of the end marker; `image` holds the distinct values up to bisimulation.
struct MuEncoding {
  lang::LanguageSpec spec;
  eqsolver::EquationSystem system;
  std::map<lang::Str, hyperset::HGraph> mu_of;
  std::optional<hyperset::HGraph> mu_dollar;
  std::vector<hyperset::HGraph> image;
  eqsolver::Solution raw;  // unminimized solver output, kept for replay

  const hyperset::HGraph& mu(const lang::Str& s) const;  // throws NotInLanguage
  const hyperset::HGraph& dollar() const { return *mu_dollar; }
};

MuEncoding encode(const lang::LanguageSpec& spec);

// Hyperset function application: scan the decodable pair members of
// minimize(f) for an argument bisimilar to x and return its value. All
// matching values must agree up to bisimulation.
// Throws NotAFunction / NoMatch / Ambiguous.
hyperset::HGraph apply(const hyperset::HGraph& f, const hyperset::HGraph& x);

// Applies the encoded value of s to the end marker and reads back the
// meaning label; equals the meaning table entry on intact encodings.
lang::MeaningLabel recover(const MuEncoding& enc, const lang::Str& s);

// The encoding map extended to encoded values: h must be bisimilar to some
// element of the image. Throws NotInImage.
lang::MeaningLabel mu_of_meaning(const MuEncoding& enc, const hyperset::HGraph& h);

// Machine-checks of the encoding, one line each:
//   V1 compositionality   over all decompositions
//   V2 recoverability     over all strings
//   V3 synonymy           over all synonym pairs
//   V4 functionality      of every encoded value and the marker
//   V5 mu-dollar-omega    the marker solves X = {X}
//   V6 solution-fixpoint  the solver output satisfies the system
//   V7 separation         distinct meanings have distinct values
//   D1 collapse-beyond-synonymy (note only)
report::Report verify(const MuEncoding& enc);

// Certifies the renaming argument on one synonym pair of single symbols:
// swapping a and b everywhere in variable names maps the equation system
// onto itself (after canonicalizing member order).
// Throws NotSymbols / NotSynonyms.
bool swap_invariance_check(const lang::LanguageSpec& spec, const lang::Symbol& a,
                           const lang::Symbol& b);

// ---------------------------------------------------------------------------
// Bundles
// ---------------------------------------------------------------------------

// Persisted encoding: {"spec": <spec-document>,
//                      "graphs": {"$": <graph>, "<joined string>": <graph>}}
// with strings joined by U+241F.
std::string serialize_bundle(const MuEncoding& enc);

struct Bundle {
  lang::LanguageSpec spec;
  std::map<lang::Str, hyperset::HGraph> graphs;
  std::optional<hyperset::HGraph> dollar;

  const hyperset::HGraph& mu(const lang::Str& s) const;  // throws NotInLanguage
};

Bundle parse_bundle(std::string_view text);

// Runs the V-checks against the stored graphs instead of a fresh solve; the
// terminal variables, which the bundle does not carry, are reconstructed
// from the meaning table.
report::Report verify_bundle(const Bundle& bundle);

}  // namespace afa::mu
