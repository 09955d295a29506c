#pragma once

#include <cstdint>
#include <vector>

namespace hadz {

// Dense square matrix over {+1, -1}. Rows and columns are 1-based to match
// the group-element numbering used throughout.
class SignMatrix {
public:
    explicit SignMatrix(int n, int8_t fill = 1) : n_(n), e_(static_cast<size_t>(n) * n, fill) {}

    int size() const { return n_; }

    int8_t at(int i, int j) const { return e_[idx(i, j)]; }
    void set(int i, int j, int8_t v) { e_[idx(i, j)] = v; }

    void negate_row(int i) {
        for (int j = 1; j <= n_; ++j) e_[idx(i, j)] = -e_[idx(i, j)];
    }
    void negate_col(int j) {
        for (int i = 1; i <= n_; ++i) e_[idx(i, j)] = -e_[idx(i, j)];
    }

    long long row_sum(int i) const {
        long long s = 0;
        for (int j = 1; j <= n_; ++j) s += e_[idx(i, j)];
        return s;
    }

    int row_negatives(int i) const {
        int c = 0;
        for (int j = 1; j <= n_; ++j) c += e_[idx(i, j)] < 0;
        return c;
    }

    bool operator==(const SignMatrix&) const = default;

private:
    size_t idx(int i, int j) const { return static_cast<size_t>(i - 1) * n_ + (j - 1); }

    int n_;
    std::vector<int8_t> e_;
};

// Entrywise (Hadamard) product.
SignMatrix pointwise(const SignMatrix& a, const SignMatrix& b);

} // namespace hadz
