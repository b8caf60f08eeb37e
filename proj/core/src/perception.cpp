#include "ascend/perception.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace ascend {

const std::array<std::string_view, kEmotionDim> kEmotionCategories = {
    "fear",     "anger",    "anticipation", "trust", "surprise",
    "positive", "negative", "sadness",      "disgust", "joy"};

const std::array<std::string_view, kToxicityDim> kToxicityCategories = {
    "toxic", "severe_toxic", "obscene", "threat", "insult", "identity_hate"};

namespace {

std::vector<std::string> read_tsv_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

double parse_number(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    double x = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    if (!std::isfinite(x)) throw std::invalid_argument(s);
    return x;
  } catch (const std::exception&) {
    throw DataError(context + ": bad number '" + s + "'");
  }
}

template <typename Fn>
void for_each_line(const std::string& path, Fn fn) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open file: " + path);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fn(line, lineno);
  }
}

int toxicity_index(std::string_view name) {
  for (std::size_t i = 0; i < kToxicityDim; ++i) {
    if (kToxicityCategories[i] == name) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

int EmotionLexicon::category_index(std::string_view name) {
  for (std::size_t i = 0; i < kEmotionDim; ++i) {
    if (kEmotionCategories[i] == name) return static_cast<int>(i);
  }
  return -1;
}

SentimentLexicon SentimentLexicon::load_tsv(const std::string& path) {
  SentimentLexicon lex;
  for_each_line(path, [&](const std::string& line, std::size_t lineno) {
    auto fields = read_tsv_fields(line);
    if (fields.size() != 2) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected token<TAB>valence");
    }
    lex.valence[fields[0]] =
        parse_number(fields[1], path + ":" + std::to_string(lineno));
  });
  return lex;
}

EmotionLexicon EmotionLexicon::load_tsv(const std::string& path) {
  EmotionLexicon lex;
  for_each_line(path, [&](const std::string& line, std::size_t lineno) {
    auto fields = read_tsv_fields(line);
    if (fields.size() != 2) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected token<TAB>category");
    }
    int idx = category_index(fields[1]);
    if (idx < 0) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": unknown emotion category '" + fields[1] + "'");
    }
    lex.category_bits[fields[0]] |= static_cast<std::uint16_t>(1u << idx);
  });
  return lex;
}

ToxicityLexicon ToxicityLexicon::load_tsv(const std::string& path) {
  ToxicityLexicon lex;
  for_each_line(path, [&](const std::string& line, std::size_t lineno) {
    auto fields = read_tsv_fields(line);
    if (fields.size() != 3) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": expected token<TAB>category<TAB>weight");
    }
    int idx = toxicity_index(fields[1]);
    if (idx < 0) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": unknown toxicity category '" + fields[1] + "'");
    }
    auto [it, inserted] = lex.weights.try_emplace(fields[0]);
    (void)inserted;
    it->second[static_cast<std::size_t>(idx)] +=
        parse_number(fields[2], path + ":" + std::to_string(lineno));
  });
  return lex;
}

ToxicitySidecar ToxicitySidecar::load_jsonl(const std::string& path) {
  ToxicitySidecar sidecar;
  for_each_line(path, [&](const std::string& line, std::size_t lineno) {
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": malformed sidecar row: " + e.what());
    }
    if (!row.is_object() || !row.contains("id") || !row["id"].is_string()) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": sidecar row needs a string 'id'");
    }
    std::array<double, kToxicityDim> scores{};
    for (std::size_t i = 0; i < kToxicityDim; ++i) {
      std::string key(kToxicityCategories[i]);
      if (!row.contains(key) || !row[key].is_number()) {
        throw DataError(path + ":" + std::to_string(lineno) +
                        ": sidecar row missing numeric '" + key + "'");
      }
      scores[i] = row[key].get<double>();
    }
    std::string id = row["id"].get<std::string>();
    if (!sidecar.scores.emplace(id, scores).second) {
      throw DataError(path + ":" + std::to_string(lineno) +
                      ": duplicate sidecar id '" + id + "'");
    }
  });
  return sidecar;
}

std::array<double, kSentimentDim> sentiment_features(
    std::string_view text, const SentimentLexicon& lexicon) {
  auto words = split_words(text);
  if (words.empty()) return {0.0, 1.0, 0.0, 0.0};

  double pos_sum = 0.0;
  double neg_sum = 0.0;
  std::size_t unmatched = 0;
  for (const auto& w : words) {
    auto it = lexicon.valence.find(w);
    if (it == lexicon.valence.end() || it->second == 0.0) {
      ++unmatched;
      continue;
    }
    if (it->second > 0.0) {
      pos_sum += it->second;
    } else {
      neg_sum += -it->second;
    }
  }

  double neu = static_cast<double>(unmatched) / static_cast<double>(words.size());
  double pos = 0.0;
  double neg = 0.0;
  if (pos_sum + neg_sum > 0.0) {
    pos = (1.0 - neu) * pos_sum / (pos_sum + neg_sum);
    neg = (1.0 - neu) * neg_sum / (pos_sum + neg_sum);
  }
  double x = pos_sum - neg_sum;
  double compound = x / std::sqrt(x * x + 15.0);
  return {neg, neu, pos, compound};
}

std::array<double, kEmotionDim> emotion_features(std::string_view text,
                                                 const EmotionLexicon& lexicon) {
  std::array<double, kEmotionDim> scores{};
  auto words = split_words(text);
  if (words.empty()) return scores;

  std::array<std::size_t, kEmotionDim> hits{};
  for (const auto& w : words) {
    auto it = lexicon.category_bits.find(w);
    if (it == lexicon.category_bits.end()) continue;
    for (std::size_t i = 0; i < kEmotionDim; ++i) {
      if (it->second & (1u << i)) ++hits[i];
    }
  }
  for (std::size_t i = 0; i < kEmotionDim; ++i) {
    scores[i] = static_cast<double>(hits[i]) / static_cast<double>(words.size());
  }
  return scores;
}

std::array<double, kToxicityDim> toxicity_features(const RawPost& post,
                                                   const ToxicitySource& source) {
  if (const auto* sidecar = std::get_if<ToxicitySidecar>(&source)) {
    auto it = sidecar->scores.find(post.id);
    if (it == sidecar->scores.end()) {
      throw DataError("toxicity sidecar has no entry for post id '" + post.id +
                      "'");
    }
    return it->second;
  }

  const auto& lexicon = std::get<ToxicityLexicon>(source);
  std::array<double, kToxicityDim> scores{};
  auto words = split_words(post.text);
  if (words.empty()) return scores;

  for (const auto& w : words) {
    auto it = lexicon.weights.find(w);
    if (it == lexicon.weights.end()) continue;
    for (std::size_t i = 0; i < kToxicityDim; ++i) scores[i] += it->second[i];
  }
  for (double& s : scores) {
    s = std::clamp(s / static_cast<double>(words.size()), 0.0, 1.0);
  }
  return scores;
}

PerceptionFeatures perception_vector(const RawPost& post,
                                     const PerceptionSources& sources) {
  RawPost cleaned = post;
  cleaned.text = clean_text(post.text);

  PerceptionFeatures feats;
  auto s = sentiment_features(cleaned.text, sources.sentiment);
  auto e = emotion_features(cleaned.text, sources.emotion);
  auto t = toxicity_features(cleaned, sources.toxicity);
  std::copy(s.begin(), s.end(), feats.values.begin());
  std::copy(e.begin(), e.end(), feats.values.begin() + kSentimentDim);
  std::copy(t.begin(), t.end(),
            feats.values.begin() + kSentimentDim + kEmotionDim);
  return feats;
}

}  // namespace ascend
