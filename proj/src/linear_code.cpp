#include "fcc/linear_code.hpp"

#include <algorithm>
#include <numeric>

namespace fcc {

namespace {

int rank_of(Matrix m, int q) {
    int rank = 0;
    auto inv_mod = [&](int a) {
        for (int x = 1; x < q; ++x)
            if ((a * x) % q == 1) return x;
        throw std::logic_error("no inverse");
    };
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pr = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(rank, c), m.at(pr, c));
        int inv = inv_mod(m.at(rank, col));
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) = static_cast<std::uint8_t>((m.at(rank, c) * inv) % q);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank || m.at(r, col) == 0) continue;
            int factor = m.at(r, col);
            for (int c = 0; c < m.cols; ++c) m.at(r, c) = static_cast<std::uint8_t>((m.at(r, c) + (q - factor) * m.at(rank, c)) % q);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

LinearCode::LinearCode(int q, Matrix generator) : q_(q), k_(generator.rows), n_(generator.cols), gen_(std::move(generator)) {
    if (!is_prime(q_)) throw std::invalid_argument("field order must be prime");
    if (k_ < 1 || n_ < k_) throw std::invalid_argument("generator must be k x n with n >= k >= 1");
    for (std::uint8_t v : gen_.a)
        if (v >= q_) throw std::invalid_argument("generator entry out of field range");
    if (rank_of(gen_, q_) != k_) throw std::invalid_argument("generator matrix is rank deficient");
}

Word LinearCode::encode(const Word& u) const {
    if (u.q() != q_ || u.size() != k_) throw std::invalid_argument("message dimension mismatch in encode");
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n_), 0);
    for (int c = 0; c < n_; ++c) {
        int acc = 0;
        for (int r = 0; r < k_; ++r) acc += u[r] * gen_.at(r, c);
        out[static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(acc % q_);
    }
    return Word(q_, std::move(out));
}

bool LinearCode::is_systematic() const {
    for (int r = 0; r < k_; ++r)
        for (int c = 0; c < k_; ++c)
            if (gen_.at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

std::vector<Word> LinearCode::codewords() const {
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q_), static_cast<unsigned>(k_));
    if (total > (1u << 22)) throw std::length_error("codebook too large to enumerate");
    std::vector<Word> out;
    out.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) out.push_back(encode(Word::from_rank(q_, k_, r)));
    return out;
}

int LinearCode::min_distance() const {
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(q_), static_cast<unsigned>(k_));
    if (total > (1u << 22)) throw std::length_error("dimension too large for exhaustive minimum-distance sweep");
    int best = n_;
    for (std::uint64_t r = 1; r < total; ++r) {
        int w = hamming_weight(encode(Word::from_rank(q_, k_, r)));
        best = std::min(best, w);
    }
    return best;
}

SystematicForm systematic_form(const LinearCode& code) {
    const int q = code.q(), k = code.k(), n = code.n();
    Matrix m = code.generator();
    std::vector<int> column_from(static_cast<std::size_t>(n));
    std::iota(column_from.begin(), column_from.end(), 0);
    auto inv_mod = [&](int a) {
        for (int x = 1; x < q; ++x)
            if ((a * x) % q == 1) return x;
        throw std::logic_error("no inverse");
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        for (int r = 0; r < k; ++r) std::swap(m.at(r, i), m.at(r, j));
        std::swap(column_from[static_cast<std::size_t>(i)], column_from[static_cast<std::size_t>(j)]);
    };
    for (int row = 0; row < k; ++row) {
        // Find a pivot for this row: first scan column `row` downward, then
        // later columns, swapping the found column into place.
        int pc = -1, pr = -1;
        for (int col = row; col < n && pc < 0; ++col)
            for (int r = row; r < k; ++r)
                if (m.at(r, col) != 0) {
                    pc = col;
                    pr = r;
                    break;
                }
        if (pc < 0) throw std::invalid_argument("generator matrix is rank deficient");
        swap_cols(row, pc);
        if (pr != row)
            for (int c = 0; c < n; ++c) std::swap(m.at(row, c), m.at(pr, c));
        int inv = inv_mod(m.at(row, row));
        for (int c = 0; c < n; ++c) m.at(row, c) = static_cast<std::uint8_t>((m.at(row, c) * inv) % q);
        for (int r = 0; r < k; ++r) {
            if (r == row || m.at(r, row) == 0) continue;
            int factor = m.at(r, row);
            for (int c = 0; c < n; ++c) m.at(r, c) = static_cast<std::uint8_t>((m.at(r, c) + (q - factor) * m.at(row, c)) % q);
        }
    }
    return SystematicForm{LinearCode(q, std::move(m)), std::move(column_from)};
}

}  // namespace fcc
