#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcc {

/// Returns true iff q is a prime number (trial division; field orders are small).
bool is_prime(int q);

/// A vector over the prime field F_q. Symbols are stored left to right, so the
/// leftmost symbol is coordinate 1 and the most significant digit of the
/// lexicographic rank. Empty words are permitted; they arise as zero-length
/// parities.
class Word {
  public:
    Word() = default;
    Word(int q, std::vector<std::uint8_t> symbols);

    /// Parses a digit string such as "0110". Requires q <= 10 so that one
    /// character encodes one symbol.
    static Word from_string(int q, const std::string& digits);

    /// Inverse of rank(): the word of length len whose lexicographic index is r.
    static Word from_rank(int q, int len, std::uint64_t r);

    /// The all-zero word of the given length.
    static Word zero(int q, int len);

    int q() const { return q_; }
    int size() const { return static_cast<int>(sym_.size()); }
    std::uint8_t operator[](int i) const { return sym_[static_cast<std::size_t>(i)]; }
    const std::vector<std::uint8_t>& symbols() const { return sym_; }

    /// Lexicographic index with coordinate 1 most significant.
    std::uint64_t rank() const;

    std::string to_string() const;

    /// Componentwise sum over F_q.
    Word operator+(const Word& other) const;
    /// Componentwise difference over F_q.
    Word operator-(const Word& other) const;
    /// Scalar multiple over F_q.
    Word scaled(int factor) const;
    /// Concatenation (fields must match).
    Word append(const Word& tail) const;

    bool operator==(const Word& other) const { return q_ == other.q_ && sym_ == other.sym_; }
    bool operator!=(const Word& other) const { return !(*this == other); }
    bool operator<(const Word& other) const;

  private:
    int q_ = 2;
    std::vector<std::uint8_t> sym_;
};

/// Number of coordinates where a and b differ. Throws on length or field mismatch.
int hamming_distance(const Word& a, const Word& b);

/// Number of nonzero coordinates.
int hamming_weight(const Word& a);

/// q^e with overflow guard.
std::uint64_t pow_u64(std::uint64_t base, unsigned exp);

/// All q^len words of the given length in lexicographic order. Guarded against
/// absurd sizes.
std::vector<Word> all_words(int q, int len);

}  // namespace fcc
