#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ecgvae {

// Dense row-major tensor of doubles. product(shape) == values.size() always;
// the constructors enforce it.
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<double> values;

    Tensor() = default;
    Tensor(std::vector<std::size_t> shape_in, std::vector<double> values_in);

    static Tensor zeros(std::vector<std::size_t> shape);
    static Tensor scalar(double v);
    static Tensor from_vector(std::vector<double> v);

    std::size_t size() const { return values.size(); }
    std::size_t rank() const { return shape.size(); }
    std::size_t dim(std::size_t i) const { return shape[i]; }

    double* data() { return values.data(); }
    const double* data() const { return values.data(); }
    double& operator[](std::size_t i) { return values[i]; }
    double operator[](std::size_t i) const { return values[i]; }

    bool same_shape(const Tensor& other) const { return shape == other.shape; }
    void fill(double v);

    // Throws std::runtime_error naming `what` if any entry is NaN/Inf.
    void require_finite(const std::string& what) const;
};

std::size_t shape_product(const std::vector<std::size_t>& shape);
std::string shape_to_string(const std::vector<std::size_t>& shape);

}  // namespace ecgvae
