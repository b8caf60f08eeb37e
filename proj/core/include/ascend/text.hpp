#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ascend/common.hpp"

namespace ascend {

/// One post as it appears in a JSONL dataset row. The label list is kept
/// sorted and de-duplicated so it behaves as a set.
struct RawPost {
  std::string id;
  std::string text;
  std::vector<std::string> labels;
};

/// Removes URLs, @-mentions and #-hashtag tokens, drops characters outside
/// letters/digits/basic punctuation (. , ! ? ' "), collapses whitespace runs
/// to single spaces and trims. Total and idempotent.
std::string clean_text(std::string_view raw);

/// Lowercased whitespace-split word list; the token stream shared by the
/// tokenizer and the lexicon featurizers.
std::vector<std::string> split_words(std::string_view text);

struct TokenSequence {
  std::vector<int> ids;    // length == max_len
  std::vector<int> mask;   // 1 = real or special token, 0 = padding
  std::size_t true_length = 0;
};

/// Token-to-id map with four reserved ids. Non-reserved tokens are ordered by
/// descending corpus frequency (ties broken lexicographically) so a build
/// from the same corpus is always identical.
class Vocabulary {
 public:
  static constexpr int kPadId = 0;
  static constexpr int kUnkId = 1;
  static constexpr int kClsId = 2;
  static constexpr int kSepId = 3;
  static constexpr std::size_t kNumReserved = 4;

  Vocabulary() = default;

  static Vocabulary build(const std::vector<std::string>& texts,
                          std::size_t min_freq = 1);

  /// Plain-text vocabulary file: one token per line, line number = id after
  /// the four reserved ids.
  static Vocabulary load(const std::string& path);
  void save(const std::string& path) const;

  /// Id lookup with [UNK] fallback.
  int id_of(std::string_view token) const;

  /// Total id count including the reserved ids.
  std::size_t size() const { return tokens_.size() + kNumReserved; }

  const std::vector<std::string>& tokens() const { return tokens_; }

  /// FNV-1a over the newline-joined token list; stored in checkpoints so a
  /// mismatched vocabulary file is caught at load time.
  std::uint64_t content_hash() const;

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> ids_;
};

/// Lowercases, splits on whitespace, maps through the vocabulary with [UNK]
/// fallback, wraps in [CLS]...[SEP], then truncates or pads to exactly
/// max_len. [SEP] is always the last real token. Requires max_len >= 2.
TokenSequence tokenize(std::string_view text, const Vocabulary& vocab,
                       std::size_t max_len);

}  // namespace ascend
