#include "fcc/fcc_code.hpp"

#include <algorithm>

namespace fcc {

FccCode::FccCode(FunctionSpec f, std::vector<Word> codewords, int declared_dd, int declared_df, std::string provenance)
    : f_(std::move(f)), codewords_(std::move(codewords)), dd_(declared_dd), df_(declared_df), provenance_(std::move(provenance)) {
    std::uint64_t expected = pow_u64(static_cast<std::uint64_t>(f_.q()), static_cast<unsigned>(f_.k()));
    if (codewords_.size() != expected) throw std::invalid_argument("code must map every message in F_q^k");
    n_ = codewords_.front().size();
    for (const Word& c : codewords_) {
        if (c.q() != f_.q()) throw std::invalid_argument("codeword field mismatch");
        if (c.size() != n_) throw std::invalid_argument("codewords must share one length");
    }
    if (dd_ < 0 || df_ < dd_) throw std::invalid_argument("declared distances must satisfy 0 <= d_d <= d_f");
    std::vector<Word> sorted = codewords_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw std::invalid_argument("encoding must be injective");
}

const Word& FccCode::codeword(const Word& message) const {
    if (message.q() != q() || message.size() != k()) throw std::invalid_argument("message dimension mismatch");
    return codewords_[message.rank()];
}

}  // namespace fcc
