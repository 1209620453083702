#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace spincover {

/// Dense GF(2) vector with 1-based indices, matching the subscript
/// conventions of symplectic bases sigma_1..sigma_2g.  Lengths up to 64.
class BitVector {
public:
    static constexpr int max_length = 64;

    explicit BitVector(int length) : len_(length) {
        if (length < 1 || length > max_length)
            throw std::invalid_argument("BitVector: length must be in 1..64");
    }

    /// Parse "0101..."; character k (0-based) becomes entry k+1.
    static BitVector from_string(std::string_view s) {
        BitVector v(static_cast<int>(s.size()));
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (s[k] == '1')
                v.bits_ |= uint64_t{1} << k;
            else if (s[k] != '0')
                throw std::invalid_argument("BitVector: bit string may contain only 0 and 1");
        }
        return v;
    }

    static BitVector unit(int length, int index) {
        BitVector v(length);
        v.set(index, true);
        return v;
    }

    int length() const noexcept { return len_; }

    bool get(int index) const {
        check(index);
        return (bits_ >> (index - 1)) & 1u;
    }

    void set(int index, bool value) {
        check(index);
        const uint64_t mask = uint64_t{1} << (index - 1);
        if (value)
            bits_ |= mask;
        else
            bits_ &= ~mask;
    }

    bool any() const noexcept { return bits_ != 0; }
    int count() const noexcept { return std::popcount(bits_); }

    /// Raw packed bits; entry i lives at bit position i-1.
    uint64_t bits() const noexcept { return bits_; }

    BitVector& operator^=(const BitVector& o) {
        if (o.len_ != len_)
            throw std::invalid_argument("BitVector: length mismatch");
        bits_ ^= o.bits_;
        return *this;
    }
    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    std::string to_string() const {
        std::string s(static_cast<std::size_t>(len_), '0');
        for (int i = 0; i < len_; ++i)
            if ((bits_ >> i) & 1u)
                s[static_cast<std::size_t>(i)] = '1';
        return s;
    }

private:
    void check(int index) const {
        if (index < 1 || index > len_)
            throw std::out_of_range("BitVector: index out of range");
    }

    int len_;
    uint64_t bits_ = 0;
};

/// Row-major packed GF(2) matrix, 1-based indices, up to 64 columns.
/// One 64-bit word per row keeps products and elimination cheap.
class BitMatrix {
public:
    BitMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1 || cols > BitVector::max_length || rows > BitVector::max_length)
            throw std::invalid_argument("BitMatrix: dimensions must be in 1..64");
        row_bits_.assign(static_cast<std::size_t>(rows), 0);
    }

    static BitMatrix identity(int n) {
        BitMatrix m(n, n);
        for (int i = 1; i <= n; ++i)
            m.set(i, i, true);
        return m;
    }

    static BitMatrix from_strings(const std::vector<std::string>& rows) {
        if (rows.empty())
            throw std::invalid_argument("BitMatrix: no rows");
        BitMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (int i = 1; i <= m.rows_; ++i) {
            const std::string& r = rows[static_cast<std::size_t>(i - 1)];
            if (static_cast<int>(r.size()) != m.cols_)
                throw std::invalid_argument("BitMatrix: ragged rows");
            m.row_bits_[static_cast<std::size_t>(i - 1)] = BitVector::from_string(r).bits();
        }
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    bool get(int i, int j) const {
        check(i, j);
        return (row_bits_[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1u;
    }

    void set(int i, int j, bool value) {
        check(i, j);
        const uint64_t mask = uint64_t{1} << (j - 1);
        if (value)
            row_bits_[static_cast<std::size_t>(i - 1)] |= mask;
        else
            row_bits_[static_cast<std::size_t>(i - 1)] &= ~mask;
    }

    BitVector row(int i) const {
        if (i < 1 || i > rows_)
            throw std::out_of_range("BitMatrix: row index out of range");
        BitVector v(cols_);
        for (int j = 1; j <= cols_; ++j)
            v.set(j, get(i, j));
        return v;
    }

    BitVector col(int j) const {
        if (j < 1 || j > cols_)
            throw std::out_of_range("BitMatrix: column index out of range");
        BitVector v(rows_);
        for (int i = 1; i <= rows_; ++i)
            v.set(i, get(i, j));
        return v;
    }

    void set_row(int i, const BitVector& v) {
        if (v.length() != cols_)
            throw std::invalid_argument("BitMatrix: row length mismatch");
        check(i, 1);
        row_bits_[static_cast<std::size_t>(i - 1)] = v.bits();
    }

    uint64_t row_bits(int i) const {
        check(i, 1);
        return row_bits_[static_cast<std::size_t>(i - 1)];
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j)
                if (get(i, j))
                    t.set(j, i, true);
        return t;
    }

    BitMatrix& operator^=(const BitMatrix& o) {
        if (o.rows_ != rows_ || o.cols_ != cols_)
            throw std::invalid_argument("BitMatrix: dimension mismatch");
        for (std::size_t k = 0; k < row_bits_.size(); ++k)
            row_bits_[k] ^= o.row_bits_[k];
        return *this;
    }
    friend BitMatrix operator^(BitMatrix a, const BitMatrix& b) { return a ^= b; }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    std::vector<std::string> to_strings() const {
        std::vector<std::string> out;
        out.reserve(static_cast<std::size_t>(rows_));
        for (int i = 1; i <= rows_; ++i)
            out.push_back(row(i).to_string());
        return out;
    }

private:
    void check(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::out_of_range("BitMatrix: index out of range");
    }

    int rows_, cols_;
    std::vector<uint64_t> row_bits_;
};

inline BitMatrix mat_mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mat_mul: dimension mismatch");
    BitMatrix c(a.rows(), b.cols());
    for (int i = 1; i <= a.rows(); ++i) {
        uint64_t acc = 0;
        uint64_t arow = a.row_bits(i);
        while (arow) {
            const int k = std::countr_zero(arow);
            acc ^= b.row_bits(k + 1);
            arow &= arow - 1;
        }
        BitVector v(b.cols());
        for (int j = 1; j <= b.cols(); ++j)
            v.set(j, (acc >> (j - 1)) & 1u);
        c.set_row(i, v);
    }
    return c;
}

inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) { return mat_mul(a, b); }

inline BitVector mat_vec(const BitMatrix& a, const BitVector& x) {
    if (a.cols() != x.length())
        throw std::invalid_argument("mat_vec: dimension mismatch");
    BitVector y(a.rows());
    for (int i = 1; i <= a.rows(); ++i)
        y.set(i, std::popcount(a.row_bits(i) & x.bits()) & 1);
    return y;
}

/// Gauss-Jordan over GF(2) with deterministic pivoting: the first row
/// holding a nonzero entry in the pivot column wins.
inline std::optional<BitMatrix> mat_inverse(const BitMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("mat_inverse: matrix must be square");
    const int n = a.rows();
    BitMatrix work = a;
    BitMatrix inv = BitMatrix::identity(n);
    for (int col = 1; col <= n; ++col) {
        int pivot = 0;
        for (int i = col; i <= n; ++i)
            if (work.get(i, col)) {
                pivot = i;
                break;
            }
        if (pivot == 0)
            return std::nullopt;
        if (pivot != col) {
            BitVector wr = work.row(pivot), ir = inv.row(pivot);
            work.set_row(pivot, work.row(col));
            inv.set_row(pivot, inv.row(col));
            work.set_row(col, wr);
            inv.set_row(col, ir);
        }
        for (int i = 1; i <= n; ++i) {
            if (i == col || !work.get(i, col))
                continue;
            work.set_row(i, work.row(i) ^ work.row(col));
            inv.set_row(i, inv.row(i) ^ inv.row(col));
        }
    }
    return inv;
}

inline int rank(const BitMatrix& a) {
    BitMatrix work = a;
    int r = 0;
    for (int col = 1; col <= work.cols() && r < work.rows(); ++col) {
        int pivot = 0;
        for (int i = r + 1; i <= work.rows(); ++i)
            if (work.get(i, col)) {
                pivot = i;
                break;
            }
        if (pivot == 0)
            continue;
        ++r;
        if (pivot != r) {
            BitVector tmp = work.row(pivot);
            work.set_row(pivot, work.row(r));
            work.set_row(r, tmp);
        }
        for (int i = 1; i <= work.rows(); ++i)
            if (i != r && work.get(i, col))
                work.set_row(i, work.row(i) ^ work.row(r));
    }
    return r;
}

} // namespace spincover
