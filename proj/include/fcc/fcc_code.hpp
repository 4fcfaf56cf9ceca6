#pragma once

#include <string>
#include <vector>

#include "fcc/function_spec.hpp"
#include "fcc/word.hpp"

namespace fcc {

/// An explicit message -> codeword map over the whole space F_q^k, together
/// with its declared parameters and how it was built. Codewords are stored in
/// message-rank order.
class FccCode {
  public:
    FccCode(FunctionSpec f, std::vector<Word> codewords, int declared_dd, int declared_df, std::string provenance);

    int q() const { return f_.q(); }
    int k() const { return f_.k(); }
    int n() const { return n_; }
    std::uint64_t size() const { return codewords_.size(); }

    const FunctionSpec& function() const { return f_; }
    int declared_dd() const { return dd_; }
    int declared_df() const { return df_; }
    const std::string& provenance() const { return provenance_; }

    const Word& codeword(const Word& message) const;
    const Word& codeword_at(std::uint64_t message_rank) const { return codewords_[message_rank]; }
    Word message_at(std::uint64_t message_rank) const { return Word::from_rank(q(), k(), message_rank); }
    const std::vector<Word>& codewords() const { return codewords_; }

  private:
    FunctionSpec f_;
    std::vector<Word> codewords_;
    int n_;
    int dd_;
    int df_;
    std::string provenance_;
};

}  // namespace fcc
