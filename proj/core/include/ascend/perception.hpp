#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>

#include "ascend/text.hpp"

namespace ascend {

inline constexpr std::size_t kSentimentDim = 4;
inline constexpr std::size_t kEmotionDim = 10;
inline constexpr std::size_t kToxicityDim = 6;
inline constexpr std::size_t kPerceptionDim =
    kSentimentDim + kEmotionDim + kToxicityDim;

/// Canonical category orders. Every 10/6-dim vector in the pipeline uses
/// these positions.
extern const std::array<std::string_view, kEmotionDim> kEmotionCategories;
extern const std::array<std::string_view, kToxicityDim> kToxicityCategories;

/// token -> valence. TSV rows: token<TAB>valence.
struct SentimentLexicon {
  std::unordered_map<std::string, double> valence;
  static SentimentLexicon load_tsv(const std::string& path);
};

/// token -> emotion category bitset. TSV rows: token<TAB>category, one row
/// per token-category pair.
struct EmotionLexicon {
  std::unordered_map<std::string, std::uint16_t> category_bits;
  static EmotionLexicon load_tsv(const std::string& path);
  static int category_index(std::string_view name);  // -1 if unknown
};

/// token -> per-category weights. TSV rows: token<TAB>category<TAB>weight.
struct ToxicityLexicon {
  std::unordered_map<std::string, std::array<double, kToxicityDim>> weights;
  static ToxicityLexicon load_tsv(const std::string& path);
};

/// Precomputed per-post toxicity scores keyed by post id, as emitted by an
/// external scorer. JSONL rows: {"id": str, "toxic": f, ...}.
struct ToxicitySidecar {
  std::unordered_map<std::string, std::array<double, kToxicityDim>> scores;
  static ToxicitySidecar load_jsonl(const std::string& path);
};

using ToxicitySource = std::variant<ToxicityLexicon, ToxicitySidecar>;

/// (neg, neu, pos, compound). neu is the unmatched-token fraction; the
/// matched valence mass is split between pos and neg in proportion to the
/// positive sum and |negative sum|; compound = x / sqrt(x^2 + 15) for the
/// raw valence sum x. Empty or hit-free text gives (0, 1, 0, 0).
std::array<double, kSentimentDim> sentiment_features(
    std::string_view text, const SentimentLexicon& lexicon);

/// Per category: flagged-token count / total token count. Empty text gives
/// all zeros.
std::array<double, kEmotionDim> emotion_features(std::string_view text,
                                                 const EmotionLexicon& lexicon);

/// Lexicon mode: clamp(sum of token weights / token count, 0, 1) per
/// category. Sidecar mode: the stored scores, bit-exact; a missing id is a
/// DataError.
std::array<double, kToxicityDim> toxicity_features(const RawPost& post,
                                                   const ToxicitySource& source);

struct PerceptionFeatures {
  std::array<double, kPerceptionDim> values{};

  std::span<const double> sentiment() const { return {values.data(), kSentimentDim}; }
  std::span<const double> emotion() const {
    return {values.data() + kSentimentDim, kEmotionDim};
  }
  std::span<const double> toxicity() const {
    return {values.data() + kSentimentDim + kEmotionDim, kToxicityDim};
  }
};

struct PerceptionSources {
  SentimentLexicon sentiment;
  EmotionLexicon emotion;
  ToxicitySource toxicity = ToxicityLexicon{};
};

/// sentiment(4) || emotion(10) || toxicity(6) over the cleaned post text.
PerceptionFeatures perception_vector(const RawPost& post,
                                     const PerceptionSources& sources);

}  // namespace ascend
