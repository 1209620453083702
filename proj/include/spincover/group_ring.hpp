#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincover/bits.hpp"

namespace spincover {

/// Element a + b*t of Z2[t]/(1-t^2).  Only four values exist:
/// 0, 1, t, 1+t; multiplication uses t*t = 1.
class GroupRingElement2 {
public:
    constexpr GroupRingElement2() = default;
    constexpr GroupRingElement2(bool a, bool b) : a_(a), b_(b) {}

    static constexpr GroupRingElement2 zero() { return {false, false}; }
    static constexpr GroupRingElement2 one() { return {true, false}; }
    static constexpr GroupRingElement2 t() { return {false, true}; }
    static constexpr GroupRingElement2 one_plus_t() { return {true, true}; }

    constexpr bool a() const { return a_; }
    constexpr bool b() const { return b_; }

    /// Augmentation t -> 1.
    constexpr bool augment() const { return a_ != b_; }

    friend constexpr GroupRingElement2 operator+(GroupRingElement2 x, GroupRingElement2 y) {
        return {x.a_ != y.a_, x.b_ != y.b_};
    }
    friend constexpr GroupRingElement2 operator*(GroupRingElement2 x, GroupRingElement2 y) {
        // (a+bt)(c+dt) = ac+bd + (ad+bc) t
        return {(x.a_ && y.a_) != (x.b_ && y.b_), (x.a_ && y.b_) != (x.b_ && y.a_)};
    }
    GroupRingElement2& operator+=(GroupRingElement2 y) { return *this = *this + y; }
    GroupRingElement2& operator*=(GroupRingElement2 y) { return *this = *this * y; }

    friend constexpr bool operator==(GroupRingElement2, GroupRingElement2) = default;

    std::string to_string() const {
        if (a_ && b_) return "1+t";
        if (b_) return "t";
        if (a_) return "1";
        return "0";
    }

private:
    bool a_ = false;
    bool b_ = false;
};

/// Element a + b*t of Z[t]/(1-t^2) with integer coefficients.
/// Supports ring arithmetic and augmentation; no inversion.
class GroupRingElementZ {
public:
    constexpr GroupRingElementZ() = default;
    constexpr GroupRingElementZ(long long a, long long b) : a_(a), b_(b) {}

    static constexpr GroupRingElementZ zero() { return {0, 0}; }
    static constexpr GroupRingElementZ one() { return {1, 0}; }
    static constexpr GroupRingElementZ t() { return {0, 1}; }

    constexpr long long a() const { return a_; }
    constexpr long long b() const { return b_; }

    constexpr long long augment() const { return a_ + b_; }

    constexpr GroupRingElement2 reduce_mod2() const {
        return {(a_ % 2) != 0, (b_ % 2) != 0};
    }

    friend constexpr GroupRingElementZ operator+(GroupRingElementZ x, GroupRingElementZ y) {
        return {x.a_ + y.a_, x.b_ + y.b_};
    }
    friend constexpr GroupRingElementZ operator-(GroupRingElementZ x, GroupRingElementZ y) {
        return {x.a_ - y.a_, x.b_ - y.b_};
    }
    friend constexpr GroupRingElementZ operator-(GroupRingElementZ x) { return {-x.a_, -x.b_}; }
    friend constexpr GroupRingElementZ operator*(GroupRingElementZ x, GroupRingElementZ y) {
        return {x.a_ * y.a_ + x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    GroupRingElementZ& operator+=(GroupRingElementZ y) { return *this = *this + y; }
    GroupRingElementZ& operator-=(GroupRingElementZ y) { return *this = *this - y; }
    GroupRingElementZ& operator*=(GroupRingElementZ y) { return *this = *this * y; }

    friend constexpr bool operator==(GroupRingElementZ, GroupRingElementZ) = default;

    /// Canonical "a+bt" rendering with signed integers, e.g. "1-t", "-2+2t".
    std::string to_string() const {
        if (a_ == 0 && b_ == 0)
            return "0";
        std::string s;
        if (a_ != 0)
            s += std::to_string(a_);
        if (b_ != 0) {
            if (b_ > 0 && !s.empty())
                s += "+";
            if (b_ == -1)
                s += "-";
            else if (b_ != 1)
                s += std::to_string(b_);
            s += "t";
        }
        return s;
    }

private:
    long long a_ = 0;
    long long b_ = 0;
};

/// Matrix over Z2[t]/(1-t^2), 1-based indices.
class GroupRingMatrix2 {
public:
    GroupRingMatrix2(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("GroupRingMatrix2: dimensions must be positive");
        e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), {});
    }

    static GroupRingMatrix2 identity(int n) {
        GroupRingMatrix2 m(n, n);
        for (int i = 1; i <= n; ++i)
            m.set(i, i, GroupRingElement2::one());
        return m;
    }

    /// Entrywise lift of a GF(2) matrix (0 -> 0, 1 -> 1).
    static GroupRingMatrix2 lift(const BitMatrix& b) {
        GroupRingMatrix2 m(b.rows(), b.cols());
        for (int i = 1; i <= b.rows(); ++i)
            for (int j = 1; j <= b.cols(); ++j)
                if (b.get(i, j))
                    m.set(i, j, GroupRingElement2::one());
        return m;
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    GroupRingElement2 at(int i, int j) const {
        check(i, j);
        return e_[idx(i, j)];
    }
    void set(int i, int j, GroupRingElement2 v) {
        check(i, j);
        e_[idx(i, j)] = v;
    }

    /// Entrywise augmentation t -> 1, landing in GF(2).
    BitMatrix augment() const {
        BitMatrix b(rows_, cols_);
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j)
                b.set(i, j, at(i, j).augment());
        return b;
    }

    friend GroupRingMatrix2 operator+(const GroupRingMatrix2& x, const GroupRingMatrix2& y) {
        if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
            throw std::invalid_argument("GroupRingMatrix2: dimension mismatch");
        GroupRingMatrix2 r(x.rows_, x.cols_);
        for (std::size_t k = 0; k < r.e_.size(); ++k)
            r.e_[k] = x.e_[k] + y.e_[k];
        return r;
    }

    friend GroupRingMatrix2 operator*(const GroupRingMatrix2& x, const GroupRingMatrix2& y) {
        if (x.cols_ != y.rows_)
            throw std::invalid_argument("GroupRingMatrix2: dimension mismatch");
        GroupRingMatrix2 r(x.rows_, y.cols_);
        for (int i = 1; i <= x.rows_; ++i)
            for (int j = 1; j <= y.cols_; ++j) {
                GroupRingElement2 acc;
                for (int k = 1; k <= x.cols_; ++k)
                    acc += x.at(i, k) * y.at(k, j);
                r.set(i, j, acc);
            }
        return r;
    }

    friend GroupRingMatrix2 operator*(GroupRingElement2 s, const GroupRingMatrix2& m) {
        GroupRingMatrix2 r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < r.e_.size(); ++k)
            r.e_[k] = s * m.e_[k];
        return r;
    }

    friend bool operator==(const GroupRingMatrix2&, const GroupRingMatrix2&) = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j - 1);
    }
    void check(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::out_of_range("GroupRingMatrix2: index out of range");
    }

    int rows_, cols_;
    std::vector<GroupRingElement2> e_;
};

/// B is invertible over Z2[t]/(1-t^2) exactly when its augmentation B0 is
/// invertible over GF(2): writing B = B0 + (1+t)K, (B0^-1 B)^2 = Id since
/// (1+t)^2 = 0 and char 2.
inline bool is_invertible(const GroupRingMatrix2& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("is_invertible: matrix must be square");
    return mat_inverse(m.augment()).has_value();
}

/// Inverse of an invertible matrix over Z2[t]/(1-t^2): B0^-1 * B * B0^-1
/// where B0^-1 is the GF(2) inverse of the augmentation, lifted entrywise.
inline GroupRingMatrix2 inverse(const GroupRingMatrix2& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("inverse: matrix must be square");
    auto b0_inv = mat_inverse(m.augment());
    if (!b0_inv)
        throw std::invalid_argument("inverse: matrix is not invertible");
    const GroupRingMatrix2 lift_inv = GroupRingMatrix2::lift(*b0_inv);
    GroupRingMatrix2 result = lift_inv * m * lift_inv;
    const GroupRingMatrix2 id = GroupRingMatrix2::identity(m.rows());
    if (result * m != id || m * result != id)
        throw std::logic_error("inverse: verification against identity failed");
    return result;
}

/// Matrix over Z[t]/(1-t^2), 1-based indices.  Container plus equality and
/// mod-2 reduction; integral matrices are display/oracle artifacts here.
class GroupRingMatrixZ {
public:
    GroupRingMatrixZ(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("GroupRingMatrixZ: dimensions must be positive");
        e_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), {});
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    GroupRingElementZ at(int i, int j) const {
        check(i, j);
        return e_[idx(i, j)];
    }
    void set(int i, int j, GroupRingElementZ v) {
        check(i, j);
        e_[idx(i, j)] = v;
    }

    GroupRingMatrix2 reduce_mod2() const {
        GroupRingMatrix2 m(rows_, cols_);
        for (int i = 1; i <= rows_; ++i)
            for (int j = 1; j <= cols_; ++j)
                m.set(i, j, at(i, j).reduce_mod2());
        return m;
    }

    friend bool operator==(const GroupRingMatrixZ&, const GroupRingMatrixZ&) = default;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j - 1);
    }
    void check(int i, int j) const {
        if (i < 1 || i > rows_ || j < 1 || j > cols_)
            throw std::out_of_range("GroupRingMatrixZ: index out of range");
    }

    int rows_, cols_;
    std::vector<GroupRingElementZ> e_;
};

} // namespace spincover
