#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ascend/common.hpp"

namespace ascend {

/// Dense row-major matrix of doubles with a paired gradient buffer. Vectors
/// are tensors with cols == 1 wherever a shape matters; activations simply
/// leave the gradient buffer at zero until backward runs.
struct Tensor {
  std::vector<double> v;
  std::vector<double> g;
  std::size_t rows = 0;
  std::size_t cols = 0;

  Tensor() = default;
  Tensor(std::size_t r, std::size_t c) { resize(r, c); }

  void resize(std::size_t r, std::size_t c) {
    rows = r;
    cols = c;
    v.assign(r * c, 0.0);
    g.assign(r * c, 0.0);
  }

  std::size_t size() const { return v.size(); }

  double& at(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
  double& grad_at(std::size_t r, std::size_t c) { return g[r * cols + c]; }

  std::span<double> row(std::size_t r) { return {v.data() + r * cols, cols}; }
  std::span<const double> row(std::size_t r) const {
    return {v.data() + r * cols, cols};
  }
  std::span<double> grad_row(std::size_t r) {
    return {g.data() + r * cols, cols};
  }

  void zero_grad() { g.assign(g.size(), 0.0); }
  void fill(double x) { v.assign(v.size(), x); }

  void init_uniform(Rng& rng, double bound) {
    for (double& x : v) x = rng.uniform(-bound, bound);
  }
};

struct NamedParam {
  std::string name;
  Tensor* tensor;
};

using ParamList = std::vector<NamedParam>;

inline void zero_grads(ParamList& params) {
  for (auto& p : params) p.tensor->zero_grad();
}

double dot(std::span<const double> a, std::span<const double> b);
double norm(std::span<const double> a);

}  // namespace ascend
