#include "argmine/segment.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "utf8.hpp"

namespace argmine {

const char* to_string(Language language) {
  return language == Language::EN ? "en" : "de";
}

Language language_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), ::tolower);
  if (lower == "en" || lower == "english") return Language::EN;
  if (lower == "de" || lower == "german") return Language::DE;
  throw std::invalid_argument("unknown language: " + std::string(name));
}

const char* to_string(AduRole role) {
  switch (role) {
    case AduRole::MajorClaim: return "MajorClaim";
    case AduRole::Claim: return "Claim";
    default: return "Premise";
  }
}

SegmenterOptions SegmenterOptions::defaults(Language language) {
  SegmenterOptions opts;
  if (language == Language::EN) {
    opts.abbreviations = {"e.g.", "i.e.",  "etc.", "cf.",  "vs.",
                          "mr.",  "mrs.",  "ms.",  "dr.",  "prof.",
                          "st.",  "no.",   "fig.", "al.",  "approx."};
  } else {
    opts.abbreviations = {"z.b.", "bzw.",  "ca.",  "dr.",   "usw.",
                          "bspw.", "d.h.", "nr.",  "ggf.",  "u.a.",
                          "vgl.", "evtl.", "inkl.", "sog.", "prof."};
  }
  return opts;
}

namespace {

bool is_ws(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool is_terminator(char c) { return c == '.' || c == '!' || c == '?'; }

// Closing punctuation allowed to trail the terminator inside a sentence.
bool is_closing_at(std::string_view text, std::size_t pos, std::size_t& len) {
  const char c = text[pos];
  if (c == '"' || c == '\'' || c == ')' || c == ']') {
    len = 1;
    return true;
  }
  std::size_t p = pos;
  const char32_t cp = utf8::decode_at(text, p);
  len = p - pos;
  return cp == 0x201Du || cp == 0x2019u || cp == 0x00BBu || cp == 0x201Cu;
}

// An opening quote, uppercase letter or digit marks the next sentence.
bool starts_next_sentence(std::string_view text, std::size_t pos) {
  const char c = text[pos];
  if (c == '"' || c == '\'') return true;
  if (c >= '0' && c <= '9') return true;
  std::size_t p = pos;
  const char32_t cp = utf8::decode_at(text, p);
  if (cp == 0x201Eu || cp == 0x201Cu || cp == 0x00ABu || cp == 0x2018u)
    return true;
  return utf8::is_upper(cp);
}

}  // namespace

std::vector<SentenceSpan> segment(std::string_view text, Language language) {
  return segment(text, SegmenterOptions::defaults(language));
}

std::vector<SentenceSpan> segment(std::string_view text,
                                  const SegmenterOptions& options) {
  std::unordered_set<std::string> abbreviations;
  for (const auto& a : options.abbreviations)
    abbreviations.insert(utf8::lowercase(a));

  const std::size_t n = text.size();
  auto skip_ws = [&](std::size_t p) {
    while (p < n && is_ws(text[p])) ++p;
    return p;
  };

  std::vector<SentenceSpan> spans;
  auto emit = [&](std::size_t start, std::size_t end) {
    while (end > start && is_ws(text[end - 1])) --end;
    if (end <= start) return;
    spans.push_back({spans.size(), start, end,
                     std::string(text.substr(start, end - start))});
  };

  std::size_t sentence_start = skip_ws(0);
  std::size_t pos = sentence_start;
  while (pos < n) {
    if (!is_terminator(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t last = pos;
    while (last + 1 < n && is_terminator(text[last + 1])) ++last;
    std::size_t end = last + 1;
    std::size_t len = 0;
    while (end < n && is_closing_at(text, end, len)) end += len;

    bool abbreviation = false;
    if (last == pos && text[pos] == '.') {
      std::size_t token_start = pos;
      while (token_start > sentence_start && !is_ws(text[token_start - 1]))
        --token_start;
      abbreviation = abbreviations.count(utf8::lowercase(
                         text.substr(token_start, pos + 1 - token_start))) > 0;
    }

    bool boundary = false;
    if (!abbreviation) {
      if (end >= n) {
        boundary = true;
      } else {
        const std::size_t next = skip_ws(end);
        boundary = next > end && next < n && starts_next_sentence(text, next);
      }
    }

    if (boundary) {
      emit(sentence_start, end);
      pos = sentence_start = skip_ws(end);
    } else {
      pos = end;
    }
  }
  if (sentence_start < n) emit(sentence_start, n);
  return spans;
}

std::vector<SentenceSpan> preset_segments(const std::vector<PresetAdu>& adus) {
  if (adus.empty())
    throw std::invalid_argument("preset ADU list must not be empty");
  std::vector<SentenceSpan> spans;
  spans.reserve(adus.size());
  std::size_t offset = 0;
  for (std::size_t i = 0; i < adus.size(); ++i) {
    if (adus[i].text.empty())
      throw std::invalid_argument("preset ADU text must not be empty");
    spans.push_back({i, offset, offset + adus[i].text.size(), adus[i].text});
    offset += adus[i].text.size() + 1;
  }
  return spans;
}

std::vector<std::string> load_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read lexicon: " + path.string());
  std::vector<std::string> entries;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || is_ws(line.back())))
      line.pop_back();
    std::size_t start = 0;
    while (start < line.size() && is_ws(line[start])) ++start;
    if (start > 0) line.erase(0, start);
    if (line.empty() || line.front() == '#') continue;
    entries.push_back(line);
  }
  return entries;
}

}  // namespace argmine
