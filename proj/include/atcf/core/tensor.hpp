// Part of atcf-sim, an aerial-terrestrial cell-free massive MIMO toolkit.
// SPDX-License-Identifier: Apache-2.0

#ifndef ATCF_CORE_TENSOR_HPP
#define ATCF_CORE_TENSOR_HPP

#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace atcf {

// Dense real tensor, row-major.
class Tensor {
  public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> shape)
        : shape_(std::move(shape)), data_(numel_of(shape_), 0.0) {}
    Tensor(std::vector<std::size_t> shape, std::vector<double> data)
        : shape_(std::move(shape)), data_(std::move(data)) {
        if (data_.size() != numel_of(shape_))
            throw std::invalid_argument("Tensor: data size does not match shape");
    }

    static Tensor scalar(double v) { return Tensor({1}, {v}); }

    static std::size_t numel_of(const std::vector<std::size_t>& shape) {
        std::size_t n = 1;
        for (std::size_t d : shape) n *= d;
        return n;
    }

    const std::vector<std::size_t>& shape() const { return shape_; }
    std::size_t rank() const { return shape_.size(); }
    std::size_t numel() const { return data_.size(); }
    bool empty() const { return data_.empty(); }

    double& operator[](std::size_t i) { return data_[i]; }
    const double& operator[](std::size_t i) const { return data_[i]; }
    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    double item() const {
        if (numel() != 1) throw std::logic_error("Tensor::item: not a scalar");
        return data_[0];
    }

    void fill(double v) { std::fill(data_.begin(), data_.end(), v); }

    // Reinterpret with a new shape of identical element count.
    Tensor reshaped(std::vector<std::size_t> shape) const {
        if (numel_of(shape) != numel()) throw std::invalid_argument("Tensor: reshape size mismatch");
        return Tensor(std::move(shape), data_);
    }

  private:
    std::vector<std::size_t> shape_;
    std::vector<double> data_;
};

}  // namespace atcf

#endif
