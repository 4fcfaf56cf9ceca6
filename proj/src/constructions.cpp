#include "fcc/constructions.hpp"

#include <algorithm>

#include "fcc/dcode_search.hpp"
#include "fcc/distance_matrix.hpp"

namespace fcc {

namespace {

void require_systematic(const LinearCode& code) {
    if (!code.is_systematic()) throw std::invalid_argument("inner code must be systematic [I_k | P]");
}

void require_match(const LinearCode& code, const FunctionSpec& f) {
    if (code.q() != f.q() || code.k() != f.k()) throw std::invalid_argument("inner code and function dimensions must match");
}

Word parity_part(const LinearCode& code, const Word& u) {
    Word c = code.encode(u);
    std::vector<std::uint8_t> tail(c.symbols().begin() + code.k(), c.symbols().end());
    return Word(code.q(), std::move(tail));
}

int min_pairwise_distance(const std::vector<Word>& words) {
    int best = words.empty() ? 0 : words.front().size();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, hamming_distance(words[i], words[j]));
    return best;
}

void check_parities(const std::vector<Word>& parities, std::uint64_t expected, int q) {
    if (parities.size() != expected) throw std::invalid_argument("need one parity word per message");
    for (const Word& p : parities) {
        if (p.q() != q) throw std::invalid_argument("parity field mismatch");
        if (p.size() != parities.front().size()) throw std::invalid_argument("parities must share one length");
    }
}

int order_position(const std::vector<Value>& order, const Value& v) {
    for (std::size_t i = 0; i < order.size(); ++i)
        if (order[i] == v) return static_cast<int>(i);
    throw std::invalid_argument("value " + v.to_string() + " missing from the supplied value order");
}

}  // namespace

FunctionBall function_ball(const FunctionSpec& f, const Word& u, int rho) {
    if (rho < 0) throw std::invalid_argument("radius must be nonnegative");
    if (u.q() != f.q() || u.size() != f.k()) throw std::invalid_argument("center dimension mismatch");
    FunctionBall ball;
    ball.center = u;
    ball.radius = rho;
    for (const Word& v : all_messages(f)) {
        if (hamming_distance(u, v) > rho) continue;
        Value val = f.eval(v);
        if (!std::binary_search(ball.values.begin(), ball.values.end(), val)) ball.values.insert(std::upper_bound(ball.values.begin(), ball.values.end(), val), val);
    }
    return ball;
}

bool is_locally_bounded(const FunctionSpec& f, int rho, int lambda) {
    if (lambda < 1) throw std::invalid_argument("lambda must be positive");
    for (const Word& u : all_messages(f))
        if (static_cast<int>(function_ball(f, u, rho).values.size()) > lambda) return false;
    return true;
}

ColorMap color_map(const FunctionSpec& f, int rho, int lambda, const std::vector<Value>& value_order) {
    if (!is_locally_bounded(f, rho, lambda)) throw std::invalid_argument("function is not (rho, lambda)-bounded");
    if (value_order.size() != f.image().size()) throw std::invalid_argument("value order must cover the image exactly");
    for (const Value& v : f.image()) order_position(value_order, v);

    ColorMap cm;
    cm.lambda = lambda;
    cm.rho = rho;
    cm.value_order = value_order;
    std::vector<Word> msgs = all_messages(f);
    cm.colors.resize(msgs.size());
    for (const Word& u : msgs) {
        // every ball must occupy a contiguous run of the value order, else the
        // index-mod-lambda rule cannot separate values inside the ball
        FunctionBall ball = function_ball(f, u, rho);
        std::vector<int> positions;
        positions.reserve(ball.values.size());
        for (const Value& v : ball.values) positions.push_back(order_position(value_order, v));
        std::sort(positions.begin(), positions.end());
        for (std::size_t i = 1; i < positions.size(); ++i)
            if (positions[i] != positions[i - 1] + 1)
                throw std::invalid_argument("function ball around " + u.to_string() + " is not contiguous in the value order");
        cm.colors[u.rank()] = order_position(value_order, f.eval(u)) % lambda;
    }
    return cm;
}

ColorMap color_map(const FunctionSpec& f, int rho, int lambda) { return color_map(f, rho, lambda, f.image()); }

FccCode construct_two_step(const LinearCode& inner, const FunctionSpec& f, const std::vector<Word>& parities, int declared_df) {
    require_systematic(inner);
    require_match(inner, f);
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(f.q()), static_cast<unsigned>(f.k()));
    check_parities(parities, total, f.q());
    int dd = inner.min_distance();
    std::vector<Word> codewords;
    codewords.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) codewords.push_back(inner.encode(Word::from_rank(f.q(), f.k(), r)).append(parities[r]));
    return FccCode(f, std::move(codewords), dd, std::max(dd, declared_df), "two-step");
}

std::vector<Word> lift_dcode(const LinearCode& inner, const FunctionSpec& f, int t_d, int t_f, const std::vector<Word>& cdrm_parities) {
    require_systematic(inner);
    require_match(inner, f);
    if (t_d < 0 || t_d > t_f) throw std::invalid_argument("need 0 <= t_d <= t_f");
    if (inner.min_distance() < 2 * t_d + 1) throw std::invalid_argument("inner code distance below 2 t_d + 1");
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(f.q()), static_cast<unsigned>(f.k()));
    check_parities(cdrm_parities, total, f.q());

    std::vector<Word> lifted;
    lifted.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r)
        lifted.push_back(parity_part(inner, Word::from_rank(f.q(), f.k(), r)).append(cdrm_parities[r]));

    DistanceMatrix target = build_drm_dp(f, t_d, t_f, all_messages(f));
    DcodeCheck check = is_dcode(lifted, target);
    if (!check.ok)
        throw std::invalid_argument("lifted parities miss requirement at pair (" + target.labels[static_cast<std::size_t>(check.i)] + ", " +
                                    target.labels[static_cast<std::size_t>(check.j)] + "): distance " + std::to_string(check.distance) +
                                    " < " + std::to_string(check.required) + "; the supplied parities do not satisfy the coded matrix");
    return lifted;
}

FccCode construct_locally_binary(const FunctionSpec& f, const LinearCode& inner, int d_f, const std::vector<Value>& value_order) {
    require_systematic(inner);
    require_match(inner, f);
    int d_d = inner.min_distance();
    if (d_f <= d_d) throw std::invalid_argument("need d_f > d_d");
    if (!is_locally_bounded(f, d_f - 1, 2)) throw std::invalid_argument("function is not locally binary at radius d_f - 1");
    for (const Value& v : f.image()) order_position(value_order, v);

    const int tail_len = d_f - d_d;
    std::uint64_t total = pow_u64(static_cast<std::uint64_t>(f.q()), static_cast<unsigned>(f.k()));
    Word ones(f.q(), std::vector<std::uint8_t>(static_cast<std::size_t>(tail_len), 1));
    Word zeros = Word::zero(f.q(), tail_len);
    std::vector<Word> codewords;
    codewords.reserve(total);
    for (std::uint64_t r = 0; r < total; ++r) {
        Word u = Word::from_rank(f.q(), f.k(), r);
        FunctionBall ball = function_ball(f, u, d_f - 1);
        const Value* top = &ball.values.front();
        for (const Value& v : ball.values)
            if (order_position(value_order, v) > order_position(value_order, *top)) top = &v;
        bool is_top = f.eval(u) == *top;
        codewords.push_back(inner.encode(u).append(is_top ? ones : zeros));
    }
    return FccCode(f, std::move(codewords), d_d, d_f, "locally-binary");
}

FccCode construct_locally_binary(const FunctionSpec& f, const LinearCode& inner, int d_f) {
    return construct_locally_binary(f, inner, d_f, f.image());
}

FccCode construct_locally_bounded(const FunctionSpec& f, const LinearCode& inner, int t_d, int t_f, const std::vector<Word>& aux,
                                  const ColorMap& color) {
    require_systematic(inner);
    require_match(inner, f);
    if (t_d < 0 || t_d > t_f) throw std::invalid_argument("need 0 <= t_d <= t_f");
    if (inner.min_distance() < 2 * t_d + 1) throw std::invalid_argument("inner code distance below 2 t_d + 1");
    if (static_cast<int>(aux.size()) < color.lambda) throw std::invalid_argument("auxiliary code needs at least lambda words");
    if (aux.size() > 1 && min_pairwise_distance(aux) < 2 * (t_f - t_d))
        throw std::invalid_argument("auxiliary code distance below 2 (t_f - t_d)");
    for (const Word& w : aux)
        if (w.q() != f.q() || w.size() != aux.front().size()) throw std::invalid_argument("auxiliary words must share field and length");

    std::vector<Word> msgs = all_messages(f);
    if (color.colors.size() != msgs.size()) throw std::invalid_argument("color map does not cover the message space");
    // re-verify the coloring is proper at radius 2 t_f
    for (std::size_t i = 0; i < msgs.size(); ++i)
        for (std::size_t j = i + 1; j < msgs.size(); ++j) {
            if (hamming_distance(msgs[i], msgs[j]) > 2 * t_f) continue;
            if (f.eval(msgs[i]) == f.eval(msgs[j])) continue;
            if (color.colors[i] == color.colors[j])
                throw std::invalid_argument("coloring is improper at radius 2 t_f for pair (" + msgs[i].to_string() + ", " +
                                            msgs[j].to_string() + ")");
        }

    std::vector<Word> codewords;
    codewords.reserve(msgs.size());
    for (const Word& u : msgs) codewords.push_back(inner.encode(u).append(aux[static_cast<std::size_t>(color.color(u))]));
    return FccCode(f, std::move(codewords), 2 * t_d + 1, 2 * t_f + 1, "locally-bounded");
}

FccCode construct_hamming_weight(const LinearCode& inner, const std::vector<Word>& aux, int t_d, int t_f) {
    require_systematic(inner);
    if (t_d < 0 || t_d >= t_f) throw std::invalid_argument("need 0 <= t_d < t_f");
    if (inner.min_distance() < 2 * t_d + 1) throw std::invalid_argument("inner code distance below 2 t_d + 1");
    if (static_cast<int>(aux.size()) < 2 * t_f + 1) throw std::invalid_argument("auxiliary code needs 2 t_f + 1 words");
    if (min_pairwise_distance(aux) < 2 * (t_f - t_d)) throw std::invalid_argument("auxiliary code distance below 2 (t_f - t_d)");
    for (const Word& w : aux)
        if (w.q() != inner.q() || w.size() != aux.front().size()) throw std::invalid_argument("auxiliary words must share field and length");

    FunctionSpec f = FunctionSpec::make_weight(inner.q(), inner.k());
    std::vector<Word> codewords;
    for (const Word& u : all_messages(f))
        codewords.push_back(inner.encode(u).append(aux[static_cast<std::size_t>(hamming_weight(u) % (2 * t_f + 1))]));
    return FccCode(f, std::move(codewords), 2 * t_d + 1, 2 * t_f + 1, "hamming-weight");
}

FccCode construct_linear_fcc(const FunctionSpec& f, const LinearCode& inner, const LinearCode& outer) {
    if (f.kind() != FunctionSpec::Kind::linear) throw std::invalid_argument("construction requires a linear-map function");
    require_systematic(inner);
    require_match(inner, f);
    if (outer.q() != f.q() || outer.k() != f.map().rows) throw std::invalid_argument("outer code dimension must match the map's output length");
    int d_inner = inner.min_distance();
    int d_outer = outer.min_distance();
    std::vector<Word> codewords;
    for (const Word& u : all_messages(f)) codewords.push_back(inner.encode(u).append(outer.encode(f.eval(u).word())));
    return FccCode(f, std::move(codewords), d_inner, d_inner + d_outer, "linear-concat");
}

CosetReport coset_subcode_distance(const FccCode& code) {
    const FunctionSpec& f = code.function();
    if (f.kind() != FunctionSpec::Kind::linear) throw std::invalid_argument("coset analysis requires a linear-map function");
    const std::uint64_t total = code.size();
    if (total > 4096) throw std::length_error("code too large for the pairwise closure sweep");

    // encoding linearity over a prime field: additive closure suffices
    for (std::uint64_t i = 0; i < total; ++i)
        for (std::uint64_t j = i; j < total; ++j) {
            Word sum_msg = code.message_at(i) + code.message_at(j);
            if (code.codeword_at(i) + code.codeword_at(j) != code.codeword(sum_msg))
                throw std::invalid_argument("code is not linear: encoding is not additive at (" + code.message_at(i).to_string() + ", " +
                                            code.message_at(j).to_string() + ")");
        }

    KernelResult ker = kernel_of_linear_map(f);
    CosetReport report;
    std::vector<bool> in_kernel(total, false);
    for (const Word& u : ker.elements) in_kernel[u.rank()] = true;
    for (const Word& u : ker.elements) report.subcode.push_back(code.codeword(u));

    report.code_distance = code.n();
    for (std::uint64_t i = 1; i < total; ++i) report.code_distance = std::min(report.code_distance, hamming_weight(code.codeword_at(i)));

    if (ker.elements.size() == total) return report;  // every coset collapses; no cross-coset pair
    int best = code.n();
    for (std::uint64_t i = 0; i < total; ++i) {
        if (in_kernel[i]) continue;
        for (const Word& d : report.subcode) best = std::min(best, hamming_weight(code.codeword_at(i) - d));
    }
    report.coset_distance = best;
    return report;
}

}  // namespace fcc
