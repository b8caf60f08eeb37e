#include "ascend/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ascend {

namespace {

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

bool is_kept_char(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u >= 0x80) return true;  // keep multi-byte UTF-8 sequences intact
  if (std::isalnum(u)) return true;
  switch (c) {
    case '.':
    case ',':
    case '!':
    case '?':
    case '\'':
    case '"':
      return true;
    default:
      return is_space(c);
  }
}

bool starts_with_ci(std::string_view s, std::string_view prefix) {
  if (s.size() < prefix.size()) return false;
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(s[i])) != prefix[i])
      return false;
  }
  return true;
}

// Blanks out scheme:// and www. URLs up to the next whitespace.
std::string strip_urls(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    std::string_view rest = s.substr(i);
    bool url = starts_with_ci(rest, "http://") ||
               starts_with_ci(rest, "https://") ||
               starts_with_ci(rest, "ftp://") || starts_with_ci(rest, "www.");
    if (url) {
      while (i < s.size() && !is_space(s[i])) ++i;
      out.push_back(' ');
      continue;
    }
    out.push_back(s[i]);
    ++i;
  }
  return out;
}

std::string clean_pass(std::string_view raw) {
  std::string no_urls = strip_urls(raw);

  // Drop whitespace-delimited tokens that begin with '@' or '#'.
  std::string kept;
  kept.reserve(no_urls.size());
  std::size_t i = 0;
  while (i < no_urls.size()) {
    if (is_space(no_urls[i])) {
      kept.push_back(no_urls[i]);
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < no_urls.size() && !is_space(no_urls[end])) ++end;
    if (no_urls[i] != '@' && no_urls[i] != '#') {
      kept.append(no_urls, i, end - i);
    }
    i = end;
  }

  // Character filter, whitespace collapse, trim.
  std::string out;
  out.reserve(kept.size());
  bool pending_space = false;
  for (char c : kept) {
    if (!is_kept_char(c)) continue;
    if (is_space(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string clean_text(std::string_view raw) {
  // Character removal can join fragments into a new URL-like token, so the
  // pass is iterated to a fixed point. Each pass only deletes characters,
  // which bounds the iteration count.
  std::string cur = clean_pass(raw);
  for (;;) {
    std::string next = clean_pass(cur);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<std::string> split_words(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && is_space(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_space(text[i])) ++i;
    if (i > start) {
      std::string w(text.substr(start, i - start));
      for (char& c : w)
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      words.push_back(std::move(w));
    }
  }
  return words;
}

Vocabulary Vocabulary::build(const std::vector<std::string>& texts,
                             std::size_t min_freq) {
  std::map<std::string, std::size_t> freq;
  for (const auto& text : texts) {
    for (auto& w : split_words(text)) ++freq[w];
  }

  std::vector<std::pair<std::string, std::size_t>> entries;
  entries.reserve(freq.size());
  for (auto& [tok, n] : freq) {
    if (n >= min_freq) entries.emplace_back(tok, n);
  }
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });

  Vocabulary vocab;
  vocab.tokens_.reserve(entries.size());
  for (auto& [tok, n] : entries) {
    (void)n;
    vocab.ids_.emplace(tok, static_cast<int>(kNumReserved + vocab.tokens_.size()));
    vocab.tokens_.push_back(tok);
  }
  return vocab;
}

Vocabulary Vocabulary::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open vocabulary file: " + path);
  Vocabulary vocab;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (vocab.ids_.count(line)) {
      throw DataError("duplicate token in vocabulary file: " + line);
    }
    vocab.ids_.emplace(line,
                       static_cast<int>(kNumReserved + vocab.tokens_.size()));
    vocab.tokens_.push_back(line);
  }
  return vocab;
}

void Vocabulary::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write vocabulary file: " + path);
  for (const auto& tok : tokens_) out << tok << '\n';
}

int Vocabulary::id_of(std::string_view token) const {
  auto it = ids_.find(std::string(token));
  return it == ids_.end() ? kUnkId : it->second;
}

std::uint64_t Vocabulary::content_hash() const {
  std::string joined;
  for (const auto& tok : tokens_) {
    joined += tok;
    joined.push_back('\n');
  }
  return fnv1a64(joined);
}

TokenSequence tokenize(std::string_view text, const Vocabulary& vocab,
                       std::size_t max_len) {
  if (max_len < 2) {
    throw std::invalid_argument("tokenize: max_len must be at least 2");
  }

  std::vector<int> ids;
  ids.reserve(max_len);
  ids.push_back(Vocabulary::kClsId);
  for (const auto& w : split_words(text)) {
    if (ids.size() == max_len - 1) break;  // leave room for [SEP]
    ids.push_back(vocab.id_of(w));
  }
  ids.push_back(Vocabulary::kSepId);

  TokenSequence seq;
  seq.true_length = ids.size();
  seq.ids = std::move(ids);
  seq.ids.resize(max_len, Vocabulary::kPadId);
  seq.mask.assign(max_len, 0);
  for (std::size_t i = 0; i < seq.true_length; ++i) seq.mask[i] = 1;
  return seq;
}

}  // namespace ascend
