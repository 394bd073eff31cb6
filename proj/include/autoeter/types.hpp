#pragma once
// Core value types shared across the library: dense ids, triples,
// norm / projection selectors and the small vector carriers used by
// the energy functions.

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace autoeter {

using EntityId = std::uint32_t;
using RelationId = std::uint32_t;

struct Triple {
    EntityId head{};
    RelationId relation{};
    EntityId tail{};

    friend bool operator==(const Triple&, const Triple&) = default;
};

struct TripleHash {
    std::size_t operator()(const Triple& t) const noexcept {
        // mix the three dense ids into one 64-bit key
        std::uint64_t x = (std::uint64_t(t.head) << 32) ^ (std::uint64_t(t.relation) << 16) ^ t.tail;
        x ^= x >> 33;
        x *= 0xff51afd7ed558ccdULL;
        x ^= x >> 33;
        x *= 0xc4ceb9fe1a85ec53ULL;
        x ^= x >> 33;
        return static_cast<std::size_t>(x);
    }
};

enum class Norm { L1, L2 };

enum class ProjectionMode { Hyperplane, LiteralScaling };

enum class Side { Head, Tail };

enum class Split { Train, Valid, Test };

// Complex k-vector stored as separate real and imaginary parts.
struct ComplexVec {
    std::vector<double> re;
    std::vector<double> im;

    ComplexVec() = default;
    explicit ComplexVec(std::size_t k) : re(k, 0.0), im(k, 0.0) {}

    std::size_t size() const { return re.size(); }
};

// Real d-vector living in the latent type space.
struct TypeVec {
    std::vector<double> values;

    TypeVec() = default;
    explicit TypeVec(std::size_t d) : values(d, 0.0) {}

    std::size_t size() const { return values.size(); }
};

// Dense row-major matrix of doubles. All learnable tensors are stored
// this way; the d x d projection matrices are rows of width d*d.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    double& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    double at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    friend bool operator==(const Matrix&, const Matrix&) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

inline const char* to_string(Norm n) { return n == Norm::L1 ? "L1" : "L2"; }
inline const char* to_string(ProjectionMode m) {
    return m == ProjectionMode::Hyperplane ? "hyperplane" : "literal-scaling";
}

inline Norm norm_from_string(const std::string& s) {
    if (s == "L1") return Norm::L1;
    if (s == "L2") return Norm::L2;
    throw std::invalid_argument("unknown norm '" + s + "' (expected L1 or L2)");
}

inline ProjectionMode projection_mode_from_string(const std::string& s) {
    if (s == "hyperplane") return ProjectionMode::Hyperplane;
    if (s == "literal-scaling") return ProjectionMode::LiteralScaling;
    throw std::invalid_argument("unknown projection mode '" + s +
                                "' (expected hyperplane or literal-scaling)");
}

}  // namespace autoeter
