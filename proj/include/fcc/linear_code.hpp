#pragma once

#include <optional>
#include <vector>

#include "fcc/function_spec.hpp"
#include "fcc/word.hpp"

namespace fcc {

/// An [n, k] linear code over F_q given by a full-rank k x n generator matrix.
class LinearCode {
  public:
    LinearCode(int q, Matrix generator);

    int q() const { return q_; }
    int k() const { return k_; }
    int n() const { return n_; }
    const Matrix& generator() const { return gen_; }

    /// c_u = uG. Throws on dimension mismatch.
    Word encode(const Word& u) const;

    /// True iff the generator is [I_k | P].
    bool is_systematic() const;

    /// All q^k codewords in message-rank order.
    std::vector<Word> codewords() const;

    /// Minimum distance via exhaustive sweep of the q^k - 1 nonzero messages.
    /// Throws std::length_error when the sweep would be too large.
    int min_distance() const;

  private:
    int q_;
    int k_;
    int n_;
    Matrix gen_;
};

/// Result of bringing a generator into standard form [I_k | P].
/// column_from[i] is the index in the original matrix of the column that ends
/// up at position i, so applying column_from to the original reproduces the
/// systematic generator.
struct SystematicForm {
    LinearCode code;
    std::vector<int> column_from;
};

/// Row reduction plus the minimal column moves needed to reach [I_k | P].
/// Throws when the generator is rank deficient.
SystematicForm systematic_form(const LinearCode& code);

}  // namespace fcc
