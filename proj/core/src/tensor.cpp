// Copyright 2026 The Sista Authors
// SPDX-License-Identifier: Apache-2.0

#include "sista/tensor.hpp"

#include <cmath>

#include "sista/common.hpp"

namespace sista {

std::int64_t shape_numel(const std::vector<std::int64_t>& shape) {
  std::int64_t n = 1;
  for (auto d : shape) {
    SISTA_CHECK(d >= 0, "negative tensor dimension {}", d);
    n *= d;
  }
  return n;
}

Tensor::Tensor(std::vector<std::int64_t> shape)
    : shape_(std::move(shape)), data_(static_cast<std::size_t>(shape_numel(shape_)), 0.0) {}

Tensor::Tensor(std::vector<std::int64_t> shape, std::vector<double> data) : shape_(std::move(shape)), data_(std::move(data)) {
  SISTA_CHECK(shape_numel(shape_) == static_cast<std::int64_t>(data_.size()),
              "tensor data size {} does not match shape {}", data_.size(), shape_string());
}

Tensor Tensor::zeros(std::vector<std::int64_t> shape) { return Tensor(std::move(shape)); }

Tensor Tensor::full(std::vector<std::int64_t> shape, double value) {
  Tensor t(std::move(shape));
  for (auto& x : t.data_) x = value;
  return t;
}

Tensor Tensor::scalar(double value) { return Tensor({1}, {value}); }

Tensor Tensor::from_vector(std::vector<double> values) {
  const auto n = static_cast<std::int64_t>(values.size());
  return Tensor({n}, std::move(values));
}

double& Tensor::at2(std::int64_t r, std::int64_t c) {
  return data_[static_cast<std::size_t>(r * shape_[1] + c)];
}
double Tensor::at2(std::int64_t r, std::int64_t c) const {
  return data_[static_cast<std::size_t>(r * shape_[1] + c)];
}

double& Tensor::at4(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w) {
  return data_[static_cast<std::size_t>(((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
}
double Tensor::at4(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w) const {
  return data_[static_cast<std::size_t>(((n * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
}

bool Tensor::all_finite() const {
  for (double x : data_) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

std::string Tensor::shape_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(shape_[i]);
  }
  return s + "]";
}

}  // namespace sista
