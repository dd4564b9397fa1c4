#include "hycount/problems/matmul.hpp"

#include <stdexcept>

namespace hycount {

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), row_words_((cols + 63) / 64), data_(rows * row_words_, 0) {}

BoolMatrix BoolMatrix::transposed() const {
    BoolMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        const std::uint64_t* row_r = row(r);
        for (std::size_t w = 0; w < row_words_; ++w) {
            std::uint64_t bits = row_r[w];
            while (bits != 0) {
                const std::size_t c = (w << 6) + static_cast<unsigned>(__builtin_ctzll(bits));
                t.set(c, r);
                bits &= bits - 1;
            }
        }
    }
    return t;
}

BoolMatrix bool_matmul(const BoolMatrix& a, const BoolMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("bool_matmul: dimension mismatch");
    BoolMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::uint64_t* arow = a.row(i);
        std::uint64_t* crow = c.row(i);
        for (std::size_t w = 0; w < a.row_words(); ++w) {
            std::uint64_t bits = arow[w];
            while (bits != 0) {
                const std::size_t j = (w << 6) + static_cast<unsigned>(__builtin_ctzll(bits));
                const std::uint64_t* brow = b.row(j);
                for (std::size_t t = 0; t < b.row_words(); ++t) crow[t] |= brow[t];
                bits &= bits - 1;
            }
        }
    }
    return c;
}

namespace {

bool rows_intersect(const std::uint64_t* x, const std::uint64_t* y, std::size_t words) {
    for (std::size_t w = 0; w < words; ++w) {
        if ((x[w] & y[w]) != 0) return true;
    }
    return false;
}

} // namespace

bool trace_nonzero(const BoolMatrix& a, const BoolMatrix& b, const BoolMatrix& c) {
    if (a.cols() != b.rows() || b.cols() != c.rows() || c.cols() != a.rows()) {
        throw std::invalid_argument("trace_nonzero: dimension mismatch");
    }
    const BoolMatrix ct = c.transposed(); // ct[i] = column i of C
    std::vector<std::uint64_t> acc(b.row_words());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        const std::uint64_t* arow = a.row(i);
        for (std::size_t w = 0; w < a.row_words(); ++w) {
            std::uint64_t bits = arow[w];
            while (bits != 0) {
                const std::size_t j = (w << 6) + static_cast<unsigned>(__builtin_ctzll(bits));
                const std::uint64_t* brow = b.row(j);
                for (std::size_t t = 0; t < acc.size(); ++t) acc[t] |= brow[t];
                bits &= bits - 1;
            }
        }
        if (rows_intersect(acc.data(), ct.row(i), acc.size())) return true;
    }
    return false;
}

std::uint64_t trace_count(const BoolMatrix& a, const BoolMatrix& b, const BoolMatrix& c) {
    if (a.cols() != b.rows() || b.cols() != c.rows() || c.cols() != a.rows()) {
        throw std::invalid_argument("trace_count: dimension mismatch");
    }
    const BoolMatrix ct = c.transposed();
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const std::uint64_t* arow = a.row(i);
        const std::uint64_t* crow = ct.row(i);
        for (std::size_t w = 0; w < a.row_words(); ++w) {
            std::uint64_t bits = arow[w];
            while (bits != 0) {
                const std::size_t j = (w << 6) + static_cast<unsigned>(__builtin_ctzll(bits));
                const std::uint64_t* brow = b.row(j);
                for (std::size_t t = 0; t < b.row_words(); ++t) {
                    total += static_cast<std::uint64_t>(__builtin_popcountll(brow[t] & crow[t]));
                }
                bits &= bits - 1;
            }
        }
    }
    return total;
}

} // namespace hycount
