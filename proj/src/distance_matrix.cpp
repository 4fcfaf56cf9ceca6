#include "fcc/distance_matrix.hpp"

#include <algorithm>

namespace fcc {

int DistanceMatrix::max_entry() const {
    int m = 0;
    for (const auto& row : entries)
        for (int v : row) m = std::max(m, v);
    return m;
}

long long DistanceMatrix::upper_sum() const {
    long long s = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j) s += at(i, j);
    return s;
}

void DistanceMatrix::validate() const {
    const int m = size();
    if (static_cast<int>(labels.size()) != m) throw std::invalid_argument("label count must match matrix size");
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(entries[static_cast<std::size_t>(i)].size()) != m) throw std::invalid_argument("distance matrix must be square");
        if (at(i, i) != 0) throw std::invalid_argument("distance matrix diagonal must be zero");
        for (int j = 0; j < m; ++j) {
            if (at(i, j) < 0) throw std::invalid_argument("distance requirements must be nonnegative");
            if (at(i, j) != at(j, i)) throw std::invalid_argument("distance matrix must be symmetric");
        }
    }
}

std::string kind_name(DistanceMatrix::Kind kind) {
    switch (kind) {
        case DistanceMatrix::Kind::drm_t: return "DRM_t";
        case DistanceMatrix::Kind::drm_dp: return "DRM_dp";
        case DistanceMatrix::Kind::fdm: return "FDM";
        case DistanceMatrix::Kind::cdrm: return "CDRM";
        case DistanceMatrix::Kind::cfdm: return "CFDM";
        case DistanceMatrix::Kind::custom: return "custom";
    }
    throw std::logic_error("unreachable");
}

DistanceMatrix::Kind kind_from_name(const std::string& name) {
    if (name == "DRM_t") return DistanceMatrix::Kind::drm_t;
    if (name == "DRM_dp") return DistanceMatrix::Kind::drm_dp;
    if (name == "FDM") return DistanceMatrix::Kind::fdm;
    if (name == "CDRM") return DistanceMatrix::Kind::cdrm;
    if (name == "CFDM") return DistanceMatrix::Kind::cfdm;
    if (name == "custom") return DistanceMatrix::Kind::custom;
    throw std::invalid_argument("unknown distance matrix kind: " + name);
}

namespace {

void check_vectors(const FunctionSpec& f, const std::vector<Word>& vectors) {
    for (const Word& u : vectors)
        if (u.q() != f.q() || u.size() != f.k()) throw std::invalid_argument("vector dimension/field mismatch");
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i + 1; j < vectors.size(); ++j)
            if (vectors[i] == vectors[j]) throw std::invalid_argument("vectors must be distinct");
}

DistanceMatrix make_matrix(DistanceMatrix::Kind kind, std::vector<std::string> labels, int m) {
    DistanceMatrix d;
    d.kind = kind;
    d.labels = std::move(labels);
    d.entries.assign(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
    return d;
}

std::vector<std::string> word_labels(const std::vector<Word>& vectors) {
    std::vector<std::string> labels;
    labels.reserve(vectors.size());
    for (const Word& u : vectors) labels.push_back(u.to_string());
    return labels;
}

std::vector<std::string> value_labels(const std::vector<Value>& values) {
    std::vector<std::string> labels;
    labels.reserve(values.size());
    for (const Value& v : values) labels.push_back(v.to_string());
    return labels;
}

}  // namespace

DistanceMatrix build_drm(const FunctionSpec& f, int t, const std::vector<Word>& vectors) {
    if (t < 0) throw std::invalid_argument("radius must be nonnegative");
    check_vectors(f, vectors);
    const int m = static_cast<int>(vectors.size());
    DistanceMatrix d = make_matrix(DistanceMatrix::Kind::drm_t, word_labels(vectors), m);
    std::vector<Value> values;
    values.reserve(vectors.size());
    for (const Word& u : vectors) values.push_back(f.eval(u));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (values[static_cast<std::size_t>(i)] == values[static_cast<std::size_t>(j)]) continue;
            int e = std::max(2 * t + 1 - hamming_distance(vectors[static_cast<std::size_t>(i)], vectors[static_cast<std::size_t>(j)]), 0);
            d.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
            d.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e;
        }
    return d;
}

DistanceMatrix build_drm_dp(const FunctionSpec& f, int t_d, int t_f, const std::vector<Word>& vectors) {
    if (t_d < 0 || t_d > t_f) throw std::invalid_argument("need 0 <= t_d <= t_f");
    check_vectors(f, vectors);
    const int m = static_cast<int>(vectors.size());
    DistanceMatrix d = make_matrix(DistanceMatrix::Kind::drm_dp, word_labels(vectors), m);
    std::vector<Value> values;
    values.reserve(vectors.size());
    for (const Word& u : vectors) values.push_back(f.eval(u));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int dist = hamming_distance(vectors[static_cast<std::size_t>(i)], vectors[static_cast<std::size_t>(j)]);
            int level = values[static_cast<std::size_t>(i)] == values[static_cast<std::size_t>(j)] ? t_d : t_f;
            int e = std::max(2 * level + 1 - dist, 0);
            d.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
            d.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e;
        }
    return d;
}

int function_distance(const FunctionSpec& f, const Value& fi, const Value& fj) {
    f.image_index(fi);
    f.image_index(fj);
    if (fi == fj) return 0;
    std::vector<Word> pre_i, pre_j;
    for (const Word& u : all_messages(f)) {
        Value v = f.eval(u);
        if (v == fi) pre_i.push_back(u);
        if (v == fj) pre_j.push_back(u);
    }
    int best = f.k();
    for (const Word& a : pre_i)
        for (const Word& b : pre_j) best = std::min(best, hamming_distance(a, b));
    return best;
}

DistanceMatrix build_fdm(const FunctionSpec& f, int t) {
    if (t < 0) throw std::invalid_argument("radius must be nonnegative");
    const std::vector<Value>& img = f.image();
    const int e = static_cast<int>(img.size());
    DistanceMatrix d = make_matrix(DistanceMatrix::Kind::fdm, value_labels(img), e);
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j) {
            int v = std::max(2 * t + 1 - function_distance(f, img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]), 0);
            d.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            d.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    return d;
}

DistanceMatrix build_cdrm(const LinearCode& code, const FunctionSpec& f, int t_f, const std::vector<Word>& vectors) {
    if (code.q() != f.q() || code.k() != f.k()) throw std::invalid_argument("inner code and function dimensions must match");
    if (t_f < 0) throw std::invalid_argument("radius must be nonnegative");
    check_vectors(f, vectors);
    const int m = static_cast<int>(vectors.size());
    DistanceMatrix d = make_matrix(DistanceMatrix::Kind::cdrm, word_labels(vectors), m);
    std::vector<Value> values;
    std::vector<Word> coded;
    for (const Word& u : vectors) {
        values.push_back(f.eval(u));
        coded.push_back(code.encode(u));
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (values[static_cast<std::size_t>(i)] == values[static_cast<std::size_t>(j)]) continue;
            int e = std::max(2 * t_f + 1 - hamming_distance(coded[static_cast<std::size_t>(i)], coded[static_cast<std::size_t>(j)]), 0);
            d.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
            d.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = e;
        }
    return d;
}

int coded_function_distance(const LinearCode& code, const FunctionSpec& f, const Value& fi, const Value& fj) {
    if (code.q() != f.q() || code.k() != f.k()) throw std::invalid_argument("inner code and function dimensions must match");
    f.image_index(fi);
    f.image_index(fj);
    if (fi == fj) return 0;
    std::vector<Word> pre_i, pre_j;
    for (const Word& u : all_messages(f)) {
        Value v = f.eval(u);
        if (v == fi) pre_i.push_back(code.encode(u));
        if (v == fj) pre_j.push_back(code.encode(u));
    }
    int best = code.n();
    for (const Word& a : pre_i)
        for (const Word& b : pre_j) best = std::min(best, hamming_distance(a, b));
    return best;
}

DistanceMatrix build_cfdm(const LinearCode& code, const FunctionSpec& f, int t_f) {
    if (t_f < 0) throw std::invalid_argument("radius must be nonnegative");
    const std::vector<Value>& img = f.image();
    const int e = static_cast<int>(img.size());
    DistanceMatrix d = make_matrix(DistanceMatrix::Kind::cfdm, value_labels(img), e);
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j) {
            int v = std::max(2 * t_f + 1 - coded_function_distance(code, f, img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(j)]), 0);
            d.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            d.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
        }
    return d;
}

std::vector<Word> all_messages(const FunctionSpec& f) { return all_words(f.q(), f.k()); }

}  // namespace fcc
