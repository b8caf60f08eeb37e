#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ascend/tensor.hpp"
#include "ascend/text.hpp"

namespace ascend {

struct EncoderConfig {
  std::size_t vocab_size = 0;
  std::size_t hidden_dim = 32;
  std::size_t num_layers = 2;
  std::size_t num_heads = 2;
  std::size_t ffn_dim = 64;
  std::size_t max_len = 64;
  double dropout = 0.0;

  std::size_t head_dim() const { return hidden_dim / num_heads; }
  void validate() const;
};

struct EncoderLayerParams {
  Tensor ln1_gain, ln1_bias;  // d
  Tensor wq, wk, wv, wo;      // d x d
  Tensor bq, bk, bv, bo;      // d
  Tensor ln2_gain, ln2_bias;  // d
  Tensor w1, b1;              // d x f, f
  Tensor w2, b2;              // f x d, d
};

struct EncoderParams {
  EncoderConfig cfg;
  Tensor tok_emb;  // vocab x d
  Tensor pos_emb;  // max_len x d
  std::vector<EncoderLayerParams> layers;

  void init(Rng& rng);
  void collect(const std::string& prefix, ParamList& out);
};

/// Forward-pass cache for one sequence; holds everything backward needs.
struct EncoderTrace {
  std::vector<int> ids;
  std::vector<int> mask;
  Tensor h0;

  struct Layer {
    Tensor x_in;
    Tensor ln1_xhat;
    std::vector<double> ln1_invstd;
    Tensor a;
    Tensor q, k, v;
    std::vector<Tensor> attn;  // per head, X x X row-stochastic
    Tensor ctx;
    Tensor attn_out;
    std::vector<double> drop_attn;  // per-element keep multipliers; empty = off
    Tensor x_mid;
    Tensor ln2_xhat;
    std::vector<double> ln2_invstd;
    Tensor f;
    Tensor z1, a1;
    Tensor ffn_out;
    std::vector<double> drop_ffn;
  };
  std::vector<Layer> layers;
  Tensor h_out;  // X x d
};

/// Embedding lookup plus learned positional embeddings, then pre-norm blocks
/// of masked multi-head self-attention and a feed-forward sublayer, each with
/// a residual connection. Padding positions are excluded as attention keys, so
/// they can never influence unmasked rows. Returns the last layer's states.
Tensor encode(const TokenSequence& tokens, const EncoderParams& params,
              EncoderTrace* trace = nullptr, bool training = false,
              Rng* dropout_rng = nullptr);

/// Accumulates parameter gradients for a cached forward pass.
void encode_backward(EncoderParams& params, const EncoderTrace& trace,
                     const Tensor& dh_out);

/// Row 0 of the hidden states: the [CLS] vector.
std::vector<double> cls_of(const Tensor& hidden_states);

/// Precomputed per-post hidden states, an alternative to running the encoder.
struct CachedStates {
  Tensor h;               // X x d
  std::vector<int> mask;  // length X
};

class EmbeddingCache {
 public:
  /// JSONL rows {"id": str, "mask": [0/1...], "h": [[f,...] x X]}.
  /// Shapes are validated against the given dimensions on load.
  static EmbeddingCache load(const std::string& path, std::size_t max_len,
                             std::size_t hidden_dim);
  static void save(const std::string& path,
                   const std::vector<std::pair<std::string, CachedStates>>& entries);

  const CachedStates& get(const std::string& id) const;
  bool contains(const std::string& id) const { return entries_.count(id) > 0; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, CachedStates> entries_;
};

}  // namespace ascend
