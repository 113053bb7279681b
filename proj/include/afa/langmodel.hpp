#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "afa/errors.hpp"

namespace afa::lang {

// A symbol is a nonempty token distinct from the reserved marker "$".
using Symbol = std::string;
// A string of the language: a nonempty symbol sequence. Symbols are kept as
// separate tokens, so multi-character symbols cannot collide under
// concatenation.
using Str = std::vector<Symbol>;
using MeaningLabel = std::string;
// A context half may be empty (unlike Str).
using Context = std::pair<std::vector<Symbol>, std::vector<Symbol>>;

struct UnknownSymbol : Error {
  explicit UnknownSymbol(const std::string& s)
      : Error("symbol \"" + s + "\" is not in the alphabet") {}
};
struct MissingMeaning : Error {
  explicit MissingMeaning(const std::string& s)
      : Error("string \"" + s + "\" has no meaning entry") {}
};
struct ReservedDollar : Error {
  ReservedDollar() : Error("\"$\" is reserved and may not appear as a symbol or meaning") {}
};
struct NotInLanguage : Error {
  explicit NotInLanguage(const std::string& s)
      : Error("string \"" + s + "\" is not in the language") {}
};

// A finite alphabet, a finite language over it (not necessarily closed under
// concatenation), and a total meaning table.
struct LanguageSpec {
  std::vector<Symbol> alphabet;   // sorted, unique
  std::vector<Str> language;      // sorted, unique
  std::map<Str, MeaningLabel> meanings;

  bool contains(const Str& s) const;
  const MeaningLabel& meaning_of(const Str& s) const;  // throws NotInLanguage
};

// Validates and normalizes; the single constructor behind parse_spec and the
// test fixtures. Throws ParseError / UnknownSymbol / MissingMeaning /
// ReservedDollar.
LanguageSpec make_spec(std::vector<Symbol> alphabet, std::vector<Str> language,
                       std::map<Str, MeaningLabel> meanings);

// JSON document:
//   {"alphabet": ["a","b"], "language": [["a"],["a","b"]],
//    "meanings": [{"string": ["a"], "value": "P"}, ...]}
LanguageSpec parse_spec(std::string_view text);
std::string serialize_spec(const LanguageSpec& spec);

Str concat(const Str& a, const Str& b);
std::string join(const Str& s, std::string_view sep);
std::string display(const Str& s);  // comma-joined, for messages and the CLI

// All splittings of x into two language strings, by ascending split position.
std::vector<std::pair<Str, Str>> decompositions(const LanguageSpec& spec, const Str& x);

// All t in L with s·t in L, in language order.
std::vector<Str> right_extensions(const LanguageSpec& spec, const Str& s);

// All (x, y) with x·a·y in L, one entry per contiguous occurrence of a in a
// language string, overlaps included; ordered by host string, then position.
std::vector<Context> contexts(const LanguageSpec& spec, const Str& a);

// Substitutional synonymy: equal meaning, and in every context of either
// string the other can be substituted staying inside the language with the
// same meaning.
bool synonyms(const LanguageSpec& spec, const Str& a, const Str& b);

// All unordered pairs a < b with synonyms(a, b).
std::vector<std::pair<Str, Str>> synonym_pairs(const LanguageSpec& spec);

struct RandomSpecBounds {
  int max_alphabet = 4;
  int max_strings = 16;
  int max_meanings = 4;
  int max_len = 3;
};

// Deterministic in the seed; always yields a spec that make_spec accepts.
LanguageSpec random_spec(std::uint64_t seed, const RandomSpecBounds& bounds);

}  // namespace afa::lang
