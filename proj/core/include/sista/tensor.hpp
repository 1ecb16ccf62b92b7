// Copyright 2026 The Sista Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace sista {

/// Dense row-major double tensor. Rank is dynamic; interpretation of the
/// axes is by convention (images and activations are NCHW, matrices are
/// [rows, cols]).
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<std::int64_t> shape);
  Tensor(std::vector<std::int64_t> shape, std::vector<double> data);

  static Tensor zeros(std::vector<std::int64_t> shape);
  static Tensor full(std::vector<std::int64_t> shape, double value);
  static Tensor scalar(double value);
  static Tensor from_vector(std::vector<double> values);  // rank 1

  const std::vector<std::int64_t>& shape() const { return shape_; }
  std::int64_t dim(std::size_t axis) const { return shape_.at(axis); }
  std::size_t rank() const { return shape_.size(); }
  std::int64_t numel() const { return static_cast<std::int64_t>(data_.size()); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& vec() { return data_; }
  const std::vector<double>& vec() const { return data_; }

  double& operator[](std::int64_t i) { return data_[static_cast<std::size_t>(i)]; }
  double operator[](std::int64_t i) const { return data_[static_cast<std::size_t>(i)]; }

  /// [rows, cols] access.
  double& at2(std::int64_t r, std::int64_t c);
  double at2(std::int64_t r, std::int64_t c) const;

  /// NCHW access.
  double& at4(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w);
  double at4(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w) const;

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  bool all_finite() const;
  std::string shape_string() const;

 private:
  std::vector<std::int64_t> shape_;
  std::vector<double> data_;
};

std::int64_t shape_numel(const std::vector<std::int64_t>& shape);

}  // namespace sista
