#pragma once

#include <cstdint>
#include <vector>

namespace hycount {

// Dense bit matrix with 64-bit row words; the workhorse behind the
// triangle-style detection tests.
class BoolMatrix {
public:
    BoolMatrix() = default;
    BoolMatrix(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t row_words() const { return row_words_; }

    void set(std::size_t r, std::size_t c) { data_[r * row_words_ + (c >> 6)] |= 1ull << (c & 63); }
    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * row_words_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * row_words_; }
    std::uint64_t* row(std::size_t r) { return data_.data() + r * row_words_; }

    BoolMatrix transposed() const;

private:
    std::size_t rows_ = 0, cols_ = 0, row_words_ = 0;
    std::vector<std::uint64_t> data_;
};

// Boolean-semiring product: C[i][l] = OR_j A[i][j] & B[j][l].
BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b);

// Whether trace(A*B*C) > 0 over the boolean semiring, i.e. some i admits j, l
// with A[i][j], B[j][l], C[l][i] all set.  Works row by row without
// materializing the product; short-circuits on the first witness.
bool trace_nonzero(const BoolMatrix& a, const BoolMatrix& b, const BoolMatrix& c);

// Integer trace of A*B*C with 0/1 entries: the number of (i, j, l) witnesses.
// Used by tests to count (not merely detect) triangles.
std::uint64_t trace_count(const BoolMatrix& a, const BoolMatrix& b, const BoolMatrix& c);

} // namespace hycount
