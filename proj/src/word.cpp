#include "fcc/word.hpp"

#include <limits>

namespace fcc {

bool is_prime(int q) {
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

Word::Word(int q, std::vector<std::uint8_t> symbols) : q_(q), sym_(std::move(symbols)) {
    if (!is_prime(q_)) throw std::invalid_argument("field order must be prime, got " + std::to_string(q_));
    if (q_ > 255) throw std::invalid_argument("field order too large");
    for (std::uint8_t s : sym_)
        if (s >= q_) throw std::invalid_argument("symbol " + std::to_string(s) + " out of range for q=" + std::to_string(q_));
}

Word Word::from_string(int q, const std::string& digits) {
    if (q > 10) throw std::invalid_argument("digit-string words require q <= 10");
    std::vector<std::uint8_t> syms;
    syms.reserve(digits.size());
    for (char c : digits) {
        if (c < '0' || c > '9') throw std::invalid_argument(std::string("invalid symbol character '") + c + "'");
        syms.push_back(static_cast<std::uint8_t>(c - '0'));
    }
    return Word(q, std::move(syms));
}

Word Word::from_rank(int q, int len, std::uint64_t r) {
    std::vector<std::uint8_t> syms(static_cast<std::size_t>(len));
    for (int i = len - 1; i >= 0; --i) {
        syms[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r % static_cast<std::uint64_t>(q));
        r /= static_cast<std::uint64_t>(q);
    }
    if (r != 0) throw std::invalid_argument("rank out of range for word length");
    return Word(q, std::move(syms));
}

Word Word::zero(int q, int len) { return Word(q, std::vector<std::uint8_t>(static_cast<std::size_t>(len), 0)); }

std::uint64_t Word::rank() const {
    std::uint64_t r = 0;
    for (std::uint8_t s : sym_) {
        if (r > (std::numeric_limits<std::uint64_t>::max() - s) / static_cast<std::uint64_t>(q_))
            throw std::overflow_error("word too long for 64-bit rank");
        r = r * static_cast<std::uint64_t>(q_) + s;
    }
    return r;
}

std::string Word::to_string() const {
    if (q_ > 10) throw std::invalid_argument("digit-string words require q <= 10");
    std::string s;
    s.reserve(sym_.size());
    for (std::uint8_t v : sym_) s.push_back(static_cast<char>('0' + v));
    return s;
}

Word Word::operator+(const Word& other) const {
    if (q_ != other.q_ || size() != other.size()) throw std::invalid_argument("word dimension/field mismatch in +");
    std::vector<std::uint8_t> out(sym_.size());
    for (std::size_t i = 0; i < sym_.size(); ++i) out[i] = static_cast<std::uint8_t>((sym_[i] + other.sym_[i]) % q_);
    return Word(q_, std::move(out));
}

Word Word::operator-(const Word& other) const {
    if (q_ != other.q_ || size() != other.size()) throw std::invalid_argument("word dimension/field mismatch in -");
    std::vector<std::uint8_t> out(sym_.size());
    for (std::size_t i = 0; i < sym_.size(); ++i) out[i] = static_cast<std::uint8_t>((sym_[i] + q_ - other.sym_[i]) % q_);
    return Word(q_, std::move(out));
}

Word Word::scaled(int factor) const {
    factor %= q_;
    if (factor < 0) factor += q_;
    std::vector<std::uint8_t> out(sym_.size());
    for (std::size_t i = 0; i < sym_.size(); ++i) out[i] = static_cast<std::uint8_t>((sym_[i] * factor) % q_);
    return Word(q_, std::move(out));
}

Word Word::append(const Word& tail) const {
    if (q_ != tail.q_) throw std::invalid_argument("field mismatch in append");
    std::vector<std::uint8_t> out = sym_;
    out.insert(out.end(), tail.sym_.begin(), tail.sym_.end());
    return Word(q_, std::move(out));
}

bool Word::operator<(const Word& other) const {
    if (q_ != other.q_ || size() != other.size()) throw std::invalid_argument("word dimension/field mismatch in <");
    return sym_ < other.sym_;
}

int hamming_distance(const Word& a, const Word& b) {
    if (a.q() != b.q() || a.size() != b.size()) throw std::invalid_argument("word dimension/field mismatch in hamming_distance");
    int d = 0;
    for (int i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) ++d;
    return d;
}

int hamming_weight(const Word& a) {
    int w = 0;
    for (int i = 0; i < a.size(); ++i)
        if (a[i] != 0) ++w;
    return w;
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    while (exp--) {
        if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) throw std::overflow_error("pow_u64 overflow");
        r *= base;
    }
    return r;
}

std::vector<Word> all_words(int q, int len) {
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q), static_cast<unsigned>(len));
    if (total > (1u << 22)) throw std::length_error("space too large to enumerate");
    std::vector<Word> out;
    out.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) out.push_back(Word::from_rank(q, len, r));
    return out;
}

}  // namespace fcc
