#pragma once

#include <array>
#include <cstdint>
#include <mutex>
#include <queue>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "spincover/bits.hpp"

namespace spincover {

/// Pairing matrix J of (Z2^2g, .): block diagonal with g blocks [[0,1],[1,0]].
/// Hyperbolic pairs are adjacent, (sigma_1,sigma_2), (sigma_3,sigma_4), ...
inline BitMatrix pairing_matrix(int g) {
    if (g < 1)
        throw std::invalid_argument("pairing_matrix: genus must be positive");
    BitMatrix j(2 * g, 2 * g);
    for (int k = 1; k <= g; ++k) {
        j.set(2 * k - 1, 2 * k, true);
        j.set(2 * k, 2 * k - 1, true);
    }
    return j;
}

/// The symplectic GF(2) pairing: sum over k of x_{2k-1} y_{2k} + x_{2k} y_{2k-1}.
inline bool intersection_product(const BitVector& x, const BitVector& y) {
    if (x.length() != y.length() || x.length() % 2 != 0)
        throw std::invalid_argument("intersection_product: vectors must share an even length");
    // Pair-swap y, then the pairing is an ordinary dot product.
    constexpr uint64_t even_mask = 0x5555555555555555ull;
    const uint64_t swapped = ((y.bits() & even_mask) << 1) | ((y.bits() >> 1) & even_mask);
    return std::popcount(x.bits() & swapped) & 1;
}

inline bool is_symplectic(const BitMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("is_symplectic: matrix must be square");
    if (m.rows() % 2 != 0)
        throw std::invalid_argument("is_symplectic: dimension must be even");
    const BitMatrix j = pairing_matrix(m.rows() / 2);
    return mat_mul(mat_mul(m.transpose(), j), m) == j;
}

/// A 2g x 2g GF(2) matrix known to preserve the pairing.  The checked
/// constructor rejects anything else; unchecked() is for hot paths whose
/// inputs are products of symplectic matrices.
class SymplecticMatrix {
public:
    explicit SymplecticMatrix(BitMatrix m) : m_(std::move(m)) {
        if (!is_symplectic(m_))
            throw std::invalid_argument("SymplecticMatrix: matrix does not preserve the pairing");
    }

    static SymplecticMatrix unchecked(BitMatrix m) {
        return SymplecticMatrix(std::move(m), unchecked_tag{});
    }

    static SymplecticMatrix identity(int g) {
        return unchecked(BitMatrix::identity(2 * g));
    }

    int genus() const noexcept { return m_.rows() / 2; }
    int dim() const noexcept { return m_.rows(); }
    const BitMatrix& matrix() const noexcept { return m_; }

    bool get(int i, int j) const { return m_.get(i, j); }

    BitVector apply(const BitVector& x) const { return mat_vec(m_, x); }

    friend SymplecticMatrix operator*(const SymplecticMatrix& a, const SymplecticMatrix& b) {
        return unchecked(mat_mul(a.m_, b.m_));
    }

    friend bool operator==(const SymplecticMatrix&, const SymplecticMatrix&) = default;

private:
    struct unchecked_tag {};
    SymplecticMatrix(BitMatrix m, unchecked_tag) : m_(std::move(m)) {}

    BitMatrix m_;
};

/// Symplectic transvection T_y : x -> x + (y.x) y.  T_0 is the identity,
/// and every T_y is an involution over GF(2).
inline SymplecticMatrix transvection(const BitVector& y) {
    if (y.length() % 2 != 0)
        throw std::invalid_argument("transvection: vector length must be even");
    const int n = y.length();
    BitMatrix m(n, n);
    for (int j = 1; j <= n; ++j) {
        BitVector image = BitVector::unit(n, j);
        if (intersection_product(y, image))
            image ^= y;
        for (int i = 1; i <= n; ++i)
            m.set(i, j, image.get(i));
    }
    return SymplecticMatrix::unchecked(std::move(m));
}

/// All nonzero transvections T_y, y in Z2^2g \ {0}.  Together with the
/// symplectic permutations these generate the full group.
inline std::vector<SymplecticMatrix> all_transvections(int g) {
    if (g < 1)
        throw std::invalid_argument("all_transvections: genus must be positive");
    std::vector<SymplecticMatrix> out;
    const int n = 2 * g;
    out.reserve((std::size_t{1} << n) - 1);
    for (uint64_t bits = 1; bits < (uint64_t{1} << n); ++bits) {
        BitVector y(n);
        for (int i = 1; i <= n; ++i)
            if ((bits >> (i - 1)) & 1u)
                y.set(i, true);
        out.push_back(transvection(y));
    }
    return out;
}

namespace detail {

inline BitMatrix permutation_from_map(int n, const std::array<int, 64>& image) {
    BitMatrix m(n, n);
    for (int j = 1; j <= n; ++j)
        m.set(image[static_cast<std::size_t>(j)], j, true);
    return m;
}

} // namespace detail

/// Generators of the group of pairing-preserving permutation matrices
/// (order 2^g g!): the g swaps within hyperbolic pairs and the g-1
/// adjacent pair-for-pair exchanges.
inline std::vector<SymplecticMatrix> symplectic_permutations(int g) {
    if (g < 1)
        throw std::invalid_argument("symplectic_permutations: genus must be positive");
    const int n = 2 * g;
    std::vector<SymplecticMatrix> gens;
    std::array<int, 64> image{};
    for (int k = 1; k <= g; ++k) {
        for (int i = 1; i <= n; ++i)
            image[static_cast<std::size_t>(i)] = i;
        image[static_cast<std::size_t>(2 * k - 1)] = 2 * k;
        image[static_cast<std::size_t>(2 * k)] = 2 * k - 1;
        gens.push_back(SymplecticMatrix::unchecked(detail::permutation_from_map(n, image)));
    }
    for (int k = 1; k < g; ++k) {
        for (int i = 1; i <= n; ++i)
            image[static_cast<std::size_t>(i)] = i;
        image[static_cast<std::size_t>(2 * k - 1)] = 2 * k + 1;
        image[static_cast<std::size_t>(2 * k)] = 2 * k + 2;
        image[static_cast<std::size_t>(2 * k + 1)] = 2 * k - 1;
        image[static_cast<std::size_t>(2 * k + 2)] = 2 * k;
        gens.push_back(SymplecticMatrix::unchecked(detail::permutation_from_map(n, image)));
    }
    return gens;
}

namespace detail {

// Dense matrices up to dim 8 pack into one 64-bit key: bit of entry (i,j)
// sits at (i-1)*dim + (j-1).  Closure enumeration works on keys only.
struct PackedMat {
    std::array<uint8_t, 8> rows{};
    int dim = 0;
};

inline uint64_t encode_rows(const PackedMat& m) {
    uint64_t key = 0;
    for (int i = 0; i < m.dim; ++i)
        key |= static_cast<uint64_t>(m.rows[static_cast<std::size_t>(i)]) << (i * m.dim);
    return key;
}

inline PackedMat decode_rows(int dim, uint64_t key) {
    PackedMat m;
    m.dim = dim;
    const uint8_t mask = static_cast<uint8_t>((1u << dim) - 1u);
    for (int i = 0; i < dim; ++i)
        m.rows[static_cast<std::size_t>(i)] = static_cast<uint8_t>((key >> (i * dim)) & mask);
    return m;
}

inline PackedMat packed_mul(const PackedMat& a, const PackedMat& b) {
    PackedMat c;
    c.dim = a.dim;
    for (int i = 0; i < a.dim; ++i) {
        uint8_t acc = 0;
        uint8_t arow = a.rows[static_cast<std::size_t>(i)];
        while (arow) {
            const int k = std::countr_zero(static_cast<unsigned>(arow));
            acc = static_cast<uint8_t>(acc ^ b.rows[static_cast<std::size_t>(k)]);
            arow = static_cast<uint8_t>(arow & (arow - 1));
        }
        c.rows[static_cast<std::size_t>(i)] = acc;
    }
    return c;
}

inline PackedMat pack(const BitMatrix& m) {
    PackedMat p;
    p.dim = m.rows();
    for (int i = 1; i <= p.dim; ++i)
        p.rows[static_cast<std::size_t>(i - 1)] = static_cast<uint8_t>(m.row_bits(i));
    return p;
}

inline BitMatrix unpack(const PackedMat& p) {
    BitMatrix m(p.dim, p.dim);
    for (int i = 1; i <= p.dim; ++i)
        for (int j = 1; j <= p.dim; ++j)
            if ((p.rows[static_cast<std::size_t>(i - 1)] >> (j - 1)) & 1u)
                m.set(i, j, true);
    return m;
}

} // namespace detail

inline uint64_t matrix_key(const SymplecticMatrix& m) {
    return detail::encode_rows(detail::pack(m.matrix()));
}

inline SymplecticMatrix key_matrix(int g, uint64_t key) {
    return SymplecticMatrix::unchecked(detail::unpack(detail::decode_rows(2 * g, key)));
}

/// Breadth-first closure under multiplication, keys in discovery order.
/// Deterministic: the frontier is scanned in insertion order and the
/// generators in the order given.
inline std::vector<uint64_t> group_closure_keys(int g, const std::vector<SymplecticMatrix>& gens) {
    if (g < 1)
        throw std::invalid_argument("group_closure: genus must be positive");
    if (g > 3)
        throw std::length_error("group_closure: enumeration supported only for genus <= 3");
    for (const auto& a : gens)
        if (a.genus() != g)
            throw std::invalid_argument("group_closure: generator has mismatched genus");

    const int dim = 2 * g;
    std::vector<detail::PackedMat> packed_gens;
    packed_gens.reserve(gens.size());
    for (const auto& a : gens)
        packed_gens.push_back(detail::pack(a.matrix()));

    detail::PackedMat id;
    id.dim = dim;
    for (int i = 0; i < dim; ++i)
        id.rows[static_cast<std::size_t>(i)] = static_cast<uint8_t>(1u << i);

    std::vector<uint64_t> order;
    std::unordered_set<uint64_t> seen;
    seen.reserve(4096);
    order.push_back(detail::encode_rows(id));
    seen.insert(order.front());
    for (std::size_t front = 0; front < order.size(); ++front) {
        const detail::PackedMat cur = detail::decode_rows(dim, order[front]);
        for (const auto& gen : packed_gens) {
            const uint64_t key = detail::encode_rows(detail::packed_mul(cur, gen));
            if (seen.insert(key).second)
                order.push_back(key);
        }
    }
    return order;
}

/// The subgroup generated, materialized in discovery order.
inline std::vector<SymplecticMatrix> group_closure(int g, const std::vector<SymplecticMatrix>& gens) {
    std::vector<uint64_t> keys = group_closure_keys(g, gens);
    std::vector<SymplecticMatrix> out;
    out.reserve(keys.size());
    for (uint64_t k : keys)
        out.push_back(key_matrix(g, k));
    return out;
}

inline std::size_t group_closure_order(int g, const std::vector<SymplecticMatrix>& gens) {
    return group_closure_keys(g, gens).size();
}

/// Generating set used for whole-group enumeration: every nonzero
/// transvection plus the symplectic permutations.
inline std::vector<SymplecticMatrix> sp_generating_set(int g) {
    std::vector<SymplecticMatrix> gens = all_transvections(g);
    for (auto& p : symplectic_permutations(g))
        gens.push_back(std::move(p));
    return gens;
}

/// Memoized closure of Sp(Z2, 2g), genus 1..3; keys in discovery order.
inline const std::vector<uint64_t>& sp_group_keys(int g) {
    if (g < 1 || g > 3)
        throw std::length_error("sp_group_keys: enumeration supported only for genus <= 3");
    static std::vector<uint64_t> cache[3];
    static std::once_flag flags[3];
    std::call_once(flags[g - 1], [g] { cache[g - 1] = group_closure_keys(g, sp_generating_set(g)); });
    return cache[g - 1];
}

/// Sp(Z2, 2g) as matrices; intended for genus <= 2 (720 elements at g=2).
inline std::vector<SymplecticMatrix> sp_group(int g) {
    const auto& keys = sp_group_keys(g);
    std::vector<SymplecticMatrix> out;
    out.reserve(keys.size());
    for (uint64_t k : keys)
        out.push_back(key_matrix(g, k));
    return out;
}

} // namespace spincover
