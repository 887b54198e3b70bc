#include "argmine/features.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "utf8.hpp"

namespace argmine {

EmbeddingTable::EmbeddingTable(
    std::size_t dimension,
    std::unordered_map<std::string, std::vector<double>> entries)
    : dimension_(dimension) {
  for (auto& [token, vec] : entries) {
    if (vec.size() != dimension_)
      throw std::invalid_argument("vector for \"" + token +
                                  "\" does not match declared dimension");
    entries_.emplace(utf8::lowercase(token), std::move(vec));
  }
}

EmbeddingTable EmbeddingTable::load(
    const std::filesystem::path& path,
    std::optional<std::size_t> expected_dimension) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot read vector file: " + path.string());

  EmbeddingTable table;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;

    const auto where = [&] {
      return path.string() + ":" + std::to_string(line_no);
    };
    std::size_t token_end = line.find(' ');
    if (token_end == std::string::npos || token_end == 0)
      throw std::runtime_error("malformed vector line at " + where());
    std::string token = utf8::lowercase(std::string_view(line).substr(0, token_end));

    std::vector<double> values;
    const char* p = line.data() + token_end;
    const char* end = line.data() + line.size();
    while (p < end) {
      while (p < end && *p == ' ') ++p;
      if (p == end) break;
      double v = 0.0;
      auto [next, ec] = std::from_chars(p, end, v);
      if (ec != std::errc() || (next < end && *next != ' '))
        throw std::runtime_error("non-numeric field at " + where());
      values.push_back(v);
      p = next;
    }
    if (values.empty())
      throw std::runtime_error("vector line without values at " + where());

    if (table.dimension_ == 0) {
      table.dimension_ = values.size();
      if (expected_dimension && *expected_dimension != table.dimension_)
        throw std::runtime_error(
            "vector file dimension " + std::to_string(table.dimension_) +
            " does not match expected " + std::to_string(*expected_dimension));
    } else if (values.size() != table.dimension_) {
      throw std::runtime_error("dimension mismatch at " + where() +
                               ": expected " + std::to_string(table.dimension_) +
                               ", found " + std::to_string(values.size()));
    }
    table.entries_.emplace(std::move(token), std::move(values));
  }
  if (table.entries_.empty())
    throw std::runtime_error("no vectors in file: " + path.string());
  return table;
}

const std::vector<double>* EmbeddingTable::find(std::string_view token) const {
  auto it = entries_.find(utf8::lowercase(token));
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char32_t cp = utf8::decode_at(text, pos);
    if (utf8::is_word(cp)) {
      utf8::encode(utf8::to_lower(cp), current);
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

SentenceEmbedding sentence_embedding(const std::vector<std::string>& tokens,
                                     const EmbeddingTable& table) {
  if (table.empty())
    throw std::invalid_argument("embedding table must not be empty");
  SentenceEmbedding out;
  out.values.assign(table.dimension(), 0.0);
  std::size_t found = 0;
  for (const auto& token : tokens) {
    if (const auto* vec = table.find(token)) {
      for (std::size_t i = 0; i < vec->size(); ++i) out.values[i] += (*vec)[i];
      ++found;
    }
  }
  if (found == 0) {
    out.all_oov = true;
    return out;
  }
  for (auto& v : out.values) v /= static_cast<double>(found);
  return out;
}

double cosine(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("cosine: dimension mismatch (" +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + ")");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += a[i] * b[i];
    na += a[i] * a[i];
    nb += b[i] * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

IndicatorLexicons IndicatorLexicons::defaults(Language language) {
  IndicatorLexicons lex;
  if (language == Language::EN) {
    lex.claim = {"therefore",    "thus",          "hence",
                 "consequently", "accordingly",   "in conclusion",
                 "as a result",  "it follows that", "this shows that",
                 "in short",     "in my opinion"};
    lex.premise = {"because",     "since",       "for example", "for instance",
                   "due to",      "owing to",    "given that",  "furthermore",
                   "moreover",    "in addition", "in particular"};
    lex.first_person = {"i",  "me", "my", "mine", "myself",
                        "we", "us", "our", "ours", "ourselves"};
    lex.modal = {"should", "must",  "could", "would", "might",
                 "may",    "can",   "shall", "ought", "will"};
  } else {
    lex.claim = {"daher",           "deshalb",  "folglich", "somit",
                 "infolgedessen",   "demnach",  "daraus folgt",
                 "zusammenfassend", "meiner meinung nach"};
    lex.premise = {"weil",          "denn",    "zum beispiel", "beispielsweise",
                   "aufgrund",      "wegen",   "ausserdem",    "außerdem",
                   "zudem",         "insbesondere"};
    lex.first_person = {"ich", "mir", "mich", "mein",  "meine",
                        "wir", "uns", "unser", "unsere"};
    lex.modal = {"sollte",  "sollten", "muss",   "müssen", "musste",
                 "kann",    "können",  "könnte", "könnten", "darf",
                 "dürfen",  "soll",    "will",   "wollen",  "mag"};
  }
  return lex;
}

namespace {

const std::vector<std::string>& subordinators(Language language) {
  static const std::vector<std::string> en = {
      "because", "since", "although", "though",  "while", "whereas",
      "if",      "unless", "when",    "after",   "before", "that",
      "which",   "who"};
  static const std::vector<std::string> de = {
      "weil",    "da",     "dass",   "obwohl", "während", "wenn",
      "falls",   "nachdem", "bevor", "damit",  "sodass",  "indem"};
  return language == Language::EN ? en : de;
}

// Word-boundary aware phrase search over lowercased text.
bool contains_phrase(const std::string& haystack, const std::string& phrase) {
  std::size_t pos = 0;
  while ((pos = haystack.find(phrase, pos)) != std::string::npos) {
    const bool left_ok =
        pos == 0 || !std::isalnum(static_cast<unsigned char>(haystack[pos - 1]));
    const std::size_t after = pos + phrase.size();
    const bool right_ok =
        after >= haystack.size() ||
        !std::isalnum(static_cast<unsigned char>(haystack[after]));
    if (left_ok && right_ok) return true;
    ++pos;
  }
  return false;
}

bool any_phrase(const std::string& haystack,
                const std::vector<std::string>& phrases) {
  for (const auto& p : phrases)
    if (contains_phrase(haystack, utf8::lowercase(p))) return true;
  return false;
}

bool any_token(const std::vector<std::string>& tokens,
               const std::vector<std::string>& list) {
  std::unordered_set<std::string> set;
  for (const auto& entry : list) set.insert(utf8::lowercase(entry));
  for (const auto& t : tokens)
    if (set.count(t)) return true;
  return false;
}

}  // namespace

std::string feature_schema_id(std::size_t embedding_dimension) {
  return "adu-fv1/d" + std::to_string(10 + embedding_dimension);
}

std::vector<double> FeatureVector::dense() const {
  std::vector<double> out;
  out.reserve(10 + embedding.values.size());
  out.push_back(punctuation_count);
  out.push_back(token_count);
  out.push_back(sentence_index);
  out.push_back(relative_position);
  out.push_back(claim_indicator ? 1.0 : 0.0);
  out.push_back(premise_indicator ? 1.0 : 0.0);
  out.push_back(first_person ? 1.0 : 0.0);
  out.push_back(modal_verb ? 1.0 : 0.0);
  out.push_back(clause_count_proxy);
  out.push_back(token_depth_proxy);
  out.insert(out.end(), embedding.values.begin(), embedding.values.end());
  return out;
}

FeatureVector extract_features(const SentenceSpan& span,
                               std::size_t doc_sentence_count,
                               const EmbeddingTable& table, Language language) {
  return extract_features(span, doc_sentence_count, table, language,
                          IndicatorLexicons::defaults(language));
}

FeatureVector extract_features(const SentenceSpan& span,
                               std::size_t doc_sentence_count,
                               const EmbeddingTable& table, Language language,
                               const IndicatorLexicons& lexicons) {
  if (doc_sentence_count == 0)
    throw std::invalid_argument("document sentence count must be positive");

  FeatureVector fv;
  const std::string lowered = utf8::lowercase(span.text);
  const std::vector<std::string> tokens = tokenize(span.text);

  for (char c : span.text)
    if (std::ispunct(static_cast<unsigned char>(c))) fv.punctuation_count += 1;
  fv.token_count = static_cast<double>(tokens.size());
  fv.sentence_index = static_cast<double>(span.index);
  fv.relative_position =
      doc_sentence_count > 1
          ? static_cast<double>(span.index) /
                static_cast<double>(doc_sentence_count - 1)
          : 0.0;
  fv.relative_position = std::clamp(fv.relative_position, 0.0, 1.0);

  fv.claim_indicator = any_phrase(lowered, lexicons.claim);
  fv.premise_indicator = any_phrase(lowered, lexicons.premise);
  fv.first_person = any_token(tokens, lexicons.first_person);
  fv.modal_verb = any_token(tokens, lexicons.modal);

  // Clause proxy: main clause plus one per comma or subordinator token.
  std::size_t commas = 0;
  for (char c : span.text)
    if (c == ',') ++commas;
  std::unordered_set<std::string> subs;
  for (const auto& s : subordinators(language)) subs.insert(s);
  std::size_t sub_count = 0;
  for (const auto& t : tokens)
    if (subs.count(t)) ++sub_count;
  fv.clause_count_proxy = static_cast<double>(1 + commas + sub_count);

  // Depth proxy: deepest concurrent nesting of brackets plus subordinate
  // clauses (a subordinator opens a clause, a comma closes one).
  {
    int paren = 0, clause = 0, best = 0;
    std::string word;
    auto flush_word = [&] {
      if (!word.empty() && subs.count(word)) ++clause;
      word.clear();
    };
    std::size_t pos = 0;
    while (pos < lowered.size()) {
      const char32_t cp = utf8::decode_at(lowered, pos);
      if (utf8::is_word(cp)) {
        utf8::encode(cp, word);
        continue;
      }
      flush_word();
      if (cp == U'(' || cp == U'[') ++paren;
      if ((cp == U')' || cp == U']') && paren > 0) --paren;
      if (cp == U',' && clause > 0) --clause;
      best = std::max(best, paren + clause);
    }
    flush_word();
    best = std::max(best, paren + clause);
    fv.token_depth_proxy = static_cast<double>(1 + best);
  }

  fv.embedding = sentence_embedding(tokens, table);
  fv.schema_id = feature_schema_id(table.dimension());
  return fv;
}

}  // namespace argmine
