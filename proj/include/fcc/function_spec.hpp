#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "fcc/word.hpp"

namespace fcc {

/// A function value: a scalar (lookup tables, Hamming weights) or a vector over
/// F_q (linear maps). Values of different shapes never mix within one function.
class Value {
  public:
    Value() : v_(std::int64_t{0}) {}
    explicit Value(std::int64_t n) : v_(n) {}
    explicit Value(Word w) : v_(std::move(w)) {}

    bool is_scalar() const { return std::holds_alternative<std::int64_t>(v_); }
    std::int64_t scalar() const { return std::get<std::int64_t>(v_); }
    const Word& word() const { return std::get<Word>(v_); }

    std::string to_string() const;

    bool operator==(const Value& other) const { return v_ == other.v_; }
    bool operator!=(const Value& other) const { return !(*this == other); }
    /// Total order: numeric for scalars, lexicographic for vector values.
    bool operator<(const Value& other) const;

  private:
    std::variant<std::int64_t, Word> v_;
};

/// A simple dense matrix over F_q, row major.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::uint8_t> a;  // rows*cols entries

    std::uint8_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
    std::uint8_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }

    static Matrix from_rows(const std::vector<std::vector<int>>& rows_in, int q);
    std::vector<std::vector<int>> to_rows() const;
};

/// An evaluable function f : F_q^k -> Im(f). Four variants cover the target
/// families: explicit lookup table, Hamming weight, weight mod m, and a linear
/// map given by an l x k matrix.
class FunctionSpec {
  public:
    enum class Kind { table, weight, weight_mod, linear };

    static FunctionSpec make_table(int q, int k, std::vector<std::int64_t> values);
    static FunctionSpec make_weight(int q, int k);
    static FunctionSpec make_weight_mod(int q, int k, int m);
    static FunctionSpec make_linear(int q, int k, Matrix map);

    int q() const { return q_; }
    int k() const { return k_; }
    Kind kind() const { return kind_; }
    int mod() const { return m_; }
    const Matrix& map() const { return map_; }
    const std::vector<std::int64_t>& table() const { return table_; }

    Value eval(const Word& u) const;

    /// Im(f), sorted ascending under Value's total order.
    const std::vector<Value>& image() const { return image_; }
    int image_size() const { return static_cast<int>(image_.size()); }
    /// Index of a value within image(); throws if the value is not attained.
    int image_index(const Value& v) const;

    /// |f^{-1}(v)| for v in the image.
    std::uint64_t preimage_size(const Value& v) const;
    /// max_v |f^{-1}(v)|.
    std::uint64_t max_preimage_size() const;
    /// min_v |f^{-1}(v)|.
    std::uint64_t min_preimage_size() const;

  private:
    FunctionSpec(int q, int k, Kind kind);
    void compute_image();

    int q_;
    int k_;
    Kind kind_;
    std::vector<std::int64_t> table_;
    int m_ = 0;
    Matrix map_;
    std::vector<Value> image_;
    std::vector<std::uint64_t> preimage_sizes_;  // aligned with image_
};

/// Kernel of a linear-map function: a basis plus the enumerated kernel
/// (size q^(k - rank)). Throws unless f is the linear variant.
struct KernelResult {
    std::vector<Word> basis;
    std::vector<Word> elements;  // sorted by rank
};
KernelResult kernel_of_linear_map(const FunctionSpec& f);

}  // namespace fcc
