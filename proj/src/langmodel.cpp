#include "afa/langmodel.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "json_detail.hpp"

namespace afa::lang {

bool LanguageSpec::contains(const Str& s) const {
  return std::binary_search(language.begin(), language.end(), s);
}

const MeaningLabel& LanguageSpec::meaning_of(const Str& s) const {
  auto it = meanings.find(s);
  if (it == meanings.end()) throw NotInLanguage(display(s));
  return it->second;
}

Str concat(const Str& a, const Str& b) {
  Str out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

std::string join(const Str& s, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += sep;
    out += s[i];
  }
  return out;
}

std::string display(const Str& s) { return join(s, ","); }

LanguageSpec make_spec(std::vector<Symbol> alphabet, std::vector<Str> language,
                       std::map<Str, MeaningLabel> meanings) {
  LanguageSpec spec;

  for (const Symbol& s : alphabet) {
    if (s.empty()) throw ParseError("alphabet symbols must be nonempty");
    if (s == "$") throw ReservedDollar();
  }
  std::sort(alphabet.begin(), alphabet.end());
  if (std::adjacent_find(alphabet.begin(), alphabet.end()) != alphabet.end())
    throw ParseError("duplicate alphabet symbol");
  spec.alphabet = std::move(alphabet);

  std::sort(language.begin(), language.end());
  language.erase(std::unique(language.begin(), language.end()), language.end());
  for (const Str& w : language) {
    if (w.empty()) throw ParseError("language strings must be nonempty");
    for (const Symbol& s : w)
      if (!std::binary_search(spec.alphabet.begin(), spec.alphabet.end(), s))
        throw UnknownSymbol(s);
  }
  spec.language = std::move(language);

  for (const auto& [w, label] : meanings) {
    if (label.empty()) throw ParseError("meaning labels must be nonempty");
    if (label == "$") throw ReservedDollar();
    if (!spec.contains(w))
      throw ParseError("meaning given for \"" + display(w) +
                       "\", which is not in the language");
  }
  for (const Str& w : spec.language)
    if (!meanings.count(w)) throw MissingMeaning(display(w));
  spec.meanings = std::move(meanings);
  return spec;
}

std::vector<std::pair<Str, Str>> decompositions(const LanguageSpec& spec, const Str& x) {
  if (!spec.contains(x)) throw NotInLanguage(display(x));
  std::vector<std::pair<Str, Str>> out;
  for (std::size_t split = 1; split < x.size(); ++split) {
    Str s(x.begin(), x.begin() + split);
    Str t(x.begin() + split, x.end());
    if (spec.contains(s) && spec.contains(t)) out.emplace_back(std::move(s), std::move(t));
  }
  return out;
}

std::vector<Str> right_extensions(const LanguageSpec& spec, const Str& s) {
  if (!spec.contains(s)) throw NotInLanguage(display(s));
  std::vector<Str> out;
  for (const Str& t : spec.language)
    if (spec.contains(concat(s, t))) out.push_back(t);
  return out;
}

std::vector<Context> contexts(const LanguageSpec& spec, const Str& a) {
  if (!spec.contains(a)) throw NotInLanguage(display(a));
  std::vector<Context> out;
  for (const Str& w : spec.language) {
    if (w.size() < a.size()) continue;
    for (std::size_t i = 0; i + a.size() <= w.size(); ++i) {
      if (std::equal(a.begin(), a.end(), w.begin() + i))
        out.emplace_back(std::vector<Symbol>(w.begin(), w.begin() + i),
                         std::vector<Symbol>(w.begin() + i + a.size(), w.end()));
    }
  }
  return out;
}

namespace {

// One substitution direction: every context of a admits b with equal meaning.
bool substitutable(const LanguageSpec& spec, const Str& a, const Str& b) {
  for (const auto& [x, y] : contexts(spec, a)) {
    Str with_a = x;
    with_a.insert(with_a.end(), a.begin(), a.end());
    with_a.insert(with_a.end(), y.begin(), y.end());
    Str with_b = x;
    with_b.insert(with_b.end(), b.begin(), b.end());
    with_b.insert(with_b.end(), y.begin(), y.end());
    if (!spec.contains(with_b)) return false;
    if (spec.meaning_of(with_a) != spec.meaning_of(with_b)) return false;
  }
  return true;
}

}  // namespace

bool synonyms(const LanguageSpec& spec, const Str& a, const Str& b) {
  if (!spec.contains(a)) throw NotInLanguage(display(a));
  if (!spec.contains(b)) throw NotInLanguage(display(b));
  if (spec.meaning_of(a) != spec.meaning_of(b)) return false;
  return substitutable(spec, a, b) && substitutable(spec, b, a);
}

std::vector<std::pair<Str, Str>> synonym_pairs(const LanguageSpec& spec) {
  std::vector<std::pair<Str, Str>> out;
  for (std::size_t i = 0; i < spec.language.size(); ++i)
    for (std::size_t j = i + 1; j < spec.language.size(); ++j)
      if (synonyms(spec, spec.language[i], spec.language[j]))
        out.emplace_back(spec.language[i], spec.language[j]);
  return out;
}

LanguageSpec random_spec(std::uint64_t seed, const RandomSpecBounds& bounds) {
  std::mt19937_64 rng(seed);
  // rng() % k instead of a distribution: identical streams on every platform.
  auto pick = [&](int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); };

  int na = 1 + pick(bounds.max_alphabet);
  std::vector<Symbol> alphabet;
  for (int i = 0; i < na; ++i) alphabet.push_back(std::string(1, static_cast<char>('a' + i)));

  int nm = 1 + pick(bounds.max_meanings);
  int ns = 1 + pick(bounds.max_strings);
  std::set<Str> language;
  for (int i = 0; i < ns; ++i) {
    int len = 1 + pick(bounds.max_len);
    Str w;
    for (int j = 0; j < len; ++j) w.push_back(alphabet[pick(na)]);
    language.insert(std::move(w));
  }
  std::map<Str, MeaningLabel> meanings;
  for (const Str& w : language) meanings[w] = "m" + std::to_string(1 + pick(nm));

  return make_spec(std::move(alphabet),
                   std::vector<Str>(language.begin(), language.end()),
                   std::move(meanings));
}

// ---------------------------------------------------------------------------
// Persistence
// ---------------------------------------------------------------------------

namespace detail {

nlohmann::ordered_json spec_to_json(const LanguageSpec& spec) {
  nlohmann::ordered_json doc;
  doc["alphabet"] = spec.alphabet;
  auto lang = nlohmann::ordered_json::array();
  for (const Str& w : spec.language) lang.push_back(w);
  doc["language"] = std::move(lang);
  auto meanings = nlohmann::ordered_json::array();
  for (const Str& w : spec.language) {
    nlohmann::ordered_json entry;
    entry["string"] = w;
    entry["value"] = spec.meanings.at(w);
    meanings.push_back(std::move(entry));
  }
  doc["meanings"] = std::move(meanings);
  return doc;
}

LanguageSpec spec_from_json(const nlohmann::ordered_json& doc) {
  if (!doc.is_object() || !doc.contains("alphabet") || !doc.contains("language") ||
      !doc.contains("meanings"))
    throw ParseError("spec document needs \"alphabet\", \"language\" and \"meanings\"");
  if (!doc["alphabet"].is_array() || !doc["language"].is_array() ||
      !doc["meanings"].is_array())
    throw ParseError("\"alphabet\", \"language\" and \"meanings\" must be arrays");

  std::vector<Symbol> alphabet;
  for (const auto& s : doc["alphabet"]) {
    if (!s.is_string()) throw ParseError("alphabet entries must be strings");
    alphabet.push_back(s.get<std::string>());
  }
  auto read_str = [](const nlohmann::ordered_json& jw) {
    if (!jw.is_array()) throw ParseError("language strings must be arrays of symbols");
    Str w;
    for (const auto& s : jw) {
      if (!s.is_string()) throw ParseError("string entries must be symbol strings");
      w.push_back(s.get<std::string>());
    }
    return w;
  };
  std::vector<Str> language;
  for (const auto& jw : doc["language"]) language.push_back(read_str(jw));
  std::map<Str, MeaningLabel> meanings;
  for (const auto& entry : doc["meanings"]) {
    if (!entry.is_object() || !entry.contains("string") || !entry.contains("value") ||
        !entry["value"].is_string())
      throw ParseError("meaning entries need \"string\" and string \"value\"");
    Str w = read_str(entry["string"]);
    auto [it, fresh] = meanings.emplace(std::move(w), entry["value"].get<std::string>());
    if (!fresh && it->second != entry["value"].get<std::string>())
      throw ParseError("conflicting meanings for \"" + display(it->first) + "\"");
  }
  return make_spec(std::move(alphabet), std::move(language), std::move(meanings));
}

}  // namespace detail

std::string serialize_spec(const LanguageSpec& spec) {
  return detail::spec_to_json(spec).dump();
}

LanguageSpec parse_spec(std::string_view text) {
  nlohmann::ordered_json doc;
  try {
    doc = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
  return detail::spec_from_json(doc);
}

}  // namespace afa::lang
