#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spincover/bits.hpp"
#include "spincover/symplectic.hpp"

namespace spincover {

namespace detail {

// Parity of sum over k of x_{2k-1} x_{2k}; bit i-1 holds entry i.
inline bool pair_product_parity(uint64_t bits) {
    constexpr uint64_t even_mask = 0x5555555555555555ull;
    return std::popcount(bits & (bits >> 1) & even_mask) & 1;
}

} // namespace detail

/// Quadratic refinement of the intersection form, stored by its values on
/// the standard symplectic basis: entry i is omega(sigma_i).  Evaluation
/// follows from polarization, omega(x+y) = omega(x) + omega(y) + x.y.
class QuadraticForm {
public:
    QuadraticForm(int g, BitVector basis_values) : g_(g), values_(std::move(basis_values)) {
        if (g < 1 || values_.length() != 2 * g)
            throw std::invalid_argument("QuadraticForm: basis value vector must have length 2g");
    }

    /// omega_0(x) = sum x_{2k-1} x_{2k}; all basis values zero, Arf 0.
    static QuadraticForm omega0(int g) { return {g, BitVector(2 * g)}; }

    /// omega_1(x) = omega_0(x) + x_1 + x_2; Arf 1.
    static QuadraticForm omega1(int g) {
        BitVector v(2 * g);
        v.set(1, true);
        v.set(2, true);
        return {g, v};
    }

    int genus() const noexcept { return g_; }
    const BitVector& basis_values() const noexcept { return values_; }

    friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

private:
    int g_;
    BitVector values_;
};

inline bool evaluate(const QuadraticForm& w, const BitVector& x) {
    if (x.length() != 2 * w.genus())
        throw std::invalid_argument("evaluate: length mismatch");
    const bool linear = std::popcount(x.bits() & w.basis_values().bits()) & 1;
    return linear != detail::pair_product_parity(x.bits());
}

/// Arf invariant: sum over j of omega(sigma_{2j-1}) omega(sigma_{2j}).
inline bool arf(const QuadraticForm& w) {
    return detail::pair_product_parity(w.basis_values().bits());
}

/// The form x -> omega(a x), expressed again by its basis values.
inline QuadraticForm compose(const QuadraticForm& w, const SymplecticMatrix& a) {
    if (a.genus() != w.genus())
        throw std::invalid_argument("compose: dimension mismatch");
    const int n = 2 * w.genus();
    BitVector values(n);
    for (int i = 1; i <= n; ++i)
        values.set(i, evaluate(w, a.apply(BitVector::unit(n, i))));
    return {w.genus(), values};
}

/// The unique V with (w2 - w)(x) = V.x for all x.  The difference of two
/// refinements is linear, and the dual basis of sigma under the pairing is
/// the pair-swapped basis, so V is the pair-swap of the basis differences.
inline BitVector difference_vector(const QuadraticForm& w, const QuadraticForm& w2) {
    if (w.genus() != w2.genus())
        throw std::invalid_argument("difference_vector: genus mismatch");
    const uint64_t d = w.basis_values().bits() ^ w2.basis_values().bits();
    constexpr uint64_t even_mask = 0x5555555555555555ull;
    const uint64_t swapped = ((d & even_mask) << 1) | ((d >> 1) & even_mask);
    BitVector v(2 * w.genus());
    for (int i = 1; i <= v.length(); ++i)
        if ((swapped >> (i - 1)) & 1u)
            v.set(i, true);
    return v;
}

/// All 2^2g refinements in lexicographic order of the basis-value string
/// (sigma_1 value most significant).  Fixed-form scans rely on this order.
inline std::vector<QuadraticForm> all_forms(int g) {
    const int n = 2 * g;
    std::vector<QuadraticForm> out;
    out.reserve(std::size_t{1} << n);
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
        BitVector v(n);
        for (int i = 1; i <= n; ++i)
            if ((m >> (n - i)) & 1u)
                v.set(i, true);
        out.emplace_back(g, v);
    }
    return out;
}

} // namespace spincover
