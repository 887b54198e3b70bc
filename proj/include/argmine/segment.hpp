#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace argmine {

enum class Language { EN, DE };

const char* to_string(Language language);
Language language_from_string(std::string_view name);

/// One candidate sentence. Offsets are byte positions [start, end) into the
/// source document; text is the exact slice content.
struct SentenceSpan {
  std::size_t index = 0;
  std::size_t start = 0;
  std::size_t end = 0;
  std::string text;
};

/// Rule-based splitter options. Abbreviations are tokens ending in '.' that
/// never terminate a sentence (matched case-insensitively).
struct SegmenterOptions {
  std::vector<std::string> abbreviations;
  static SegmenterOptions defaults(Language language);
};

/// Splits text into sentences. A sentence ends at '.', '!' or '?' (plus any
/// trailing closing quotes or brackets) when followed by whitespace and an
/// uppercase letter, digit or quote. Blank candidates are dropped; empty
/// input yields an empty list.
std::vector<SentenceSpan> segment(std::string_view text, Language language);
std::vector<SentenceSpan> segment(std::string_view text,
                                  const SegmenterOptions& options);

/// Role labels attached to benchmark discourse units.
enum class AduRole { MajorClaim, Claim, Premise };

const char* to_string(AduRole role);

struct PresetAdu {
  std::string text;
  AduRole role = AduRole::Premise;
};

/// One span per benchmark unit, order preserved, bypassing segmentation.
/// Offsets index into the space-joined unit texts. Throws on an empty list
/// or an empty unit text.
std::vector<SentenceSpan> preset_segments(const std::vector<PresetAdu>& adus);

/// Reads a lexicon file: one entry per line, blank lines and lines starting
/// with '#' skipped.
std::vector<std::string> load_lexicon(const std::filesystem::path& path);

}  // namespace argmine
