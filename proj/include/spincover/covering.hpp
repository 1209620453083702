#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spincover/bits.hpp"
#include "spincover/quadform.hpp"
#include "spincover/symplectic.hpp"

namespace spincover {

/// A special 2-fold covering of the circle bundle with Chern class q over
/// the genus-g surface: the monodromy phi with phi(u_0) = 1, stored as the
/// bits n_i = phi(u_i) on the base generators.  Nonempty only for even q.
class SpecialCovering {
public:
    SpecialCovering(int g, long long q, BitVector n) : g_(g), q_(q), n_(std::move(n)) {
        if (g < 1 || n_.length() != 2 * g)
            throw std::invalid_argument("SpecialCovering: monodromy vector must have length 2g");
        if (q % 2 != 0)
            throw std::invalid_argument("SpecialCovering: Chern class must be even");
    }

    static SpecialCovering from_string(int g, long long q, std::string_view bits) {
        return {g, q, BitVector::from_string(bits)};
    }

    int genus() const noexcept { return g_; }
    long long chern() const noexcept { return q_; }
    long long c() const noexcept { return q_ / 2; }
    const BitVector& bits() const noexcept { return n_; }

    friend bool operator==(const SpecialCovering&, const SpecialCovering&) = default;

private:
    int g_;
    long long q_;
    BitVector n_;
};

/// Every covering for the given bundle, in ascending bit-string order.
inline std::vector<SpecialCovering> all_coverings(int g, long long q) {
    const int n = 2 * g;
    std::vector<SpecialCovering> out;
    out.reserve(std::size_t{1} << n);
    for (uint64_t m = 0; m < (uint64_t{1} << n); ++m) {
        BitVector v(n);
        for (int i = 1; i <= n; ++i)
            if ((m >> (n - i)) & 1u)
                v.set(i, true);
        out.emplace_back(g, q, v);
    }
    return out;
}

/// A quadratic section s of H_1(P;Z2) -> H_1(F_g;Z2): the choice bits r_i
/// with s(sigma_i) = nu_i + r_i nu_0.  Any of the 2^2g choices is valid.
class QuadraticSection {
public:
    QuadraticSection(int g, BitVector r) : g_(g), r_(std::move(r)) {
        if (g < 1 || r_.length() != 2 * g)
            throw std::invalid_argument("QuadraticSection: choice vector must have length 2g");
    }

    static QuadraticSection zero(int g) { return {g, BitVector(2 * g)}; }

    /// The tangent-bundle normalization r_i = 1 for all i.
    static QuadraticSection johnson(int g) {
        BitVector r(2 * g);
        for (int i = 1; i <= 2 * g; ++i)
            r.set(i, true);
        return {g, r};
    }

    int genus() const noexcept { return g_; }
    const BitVector& r() const noexcept { return r_; }

    friend bool operator==(const QuadraticSection&, const QuadraticSection&) = default;

private:
    int g_;
    BitVector r_;
};

/// The quadratic form omega_phi = phi~ o s: basis value i is n_i + r_i.
inline QuadraticForm omega_of(const SpecialCovering& phi, const QuadraticSection& s) {
    if (phi.genus() != s.genus())
        throw std::invalid_argument("omega_of: genus mismatch");
    return {phi.genus(), phi.bits() ^ s.r()};
}

/// Image of a symplectic matrix under the embedding into SL(Z2, 2g+1):
/// block shape [[A, 0], [W, 1]] with w_j = sum_i a_ij r_i + S_j + r_j and
/// S_j = sum_i a_{2i,j} a_{2i-1,j}.
class EmbeddedMatrix {
public:
    explicit EmbeddedMatrix(BitMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols() || m_.rows() < 3 || m_.rows() % 2 == 0)
            throw std::invalid_argument("EmbeddedMatrix: expected odd dimension 2g+1");
        const int n = m_.rows() - 1;
        for (int i = 1; i <= n; ++i)
            if (m_.get(i, n + 1))
                throw std::invalid_argument("EmbeddedMatrix: last column must be (0,...,0,1)");
        if (!m_.get(n + 1, n + 1))
            throw std::invalid_argument("EmbeddedMatrix: last column must be (0,...,0,1)");
        BitMatrix a(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                a.set(i, j, m_.get(i, j));
        if (!is_symplectic(a))
            throw std::invalid_argument("EmbeddedMatrix: upper block must be symplectic");
    }

    int genus() const noexcept { return (m_.rows() - 1) / 2; }
    const BitMatrix& matrix() const noexcept { return m_; }

    SymplecticMatrix block_a() const {
        const int n = m_.rows() - 1;
        BitMatrix a(n, n);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                a.set(i, j, m_.get(i, j));
        return SymplecticMatrix::unchecked(std::move(a));
    }

    BitVector row_w() const {
        const int n = m_.rows() - 1;
        BitVector w(n);
        for (int j = 1; j <= n; ++j)
            w.set(j, m_.get(n + 1, j));
        return w;
    }

    friend EmbeddedMatrix operator*(const EmbeddedMatrix& a, const EmbeddedMatrix& b) {
        return EmbeddedMatrix(mat_mul(a.m_, b.m_));
    }

    friend bool operator==(const EmbeddedMatrix&, const EmbeddedMatrix&) = default;

private:
    BitMatrix m_;
};

namespace detail {

inline BitVector w_row(const SymplecticMatrix& a, const QuadraticSection& s) {
    const int n = 2 * a.genus();
    BitVector w(n);
    for (int j = 1; j <= n; ++j) {
        bool wj = s.r().get(j);
        for (int i = 1; i <= a.genus(); ++i)
            wj ^= a.get(2 * i, j) && a.get(2 * i - 1, j);
        for (int i = 1; i <= n; ++i)
            wj ^= a.get(i, j) && s.r().get(i);
        w.set(j, wj);
    }
    return w;
}

// Right side of the defining relation: n_j = sum_i a_ij n'_i + w_j.
inline BitVector related_bits(const SymplecticMatrix& a, const BitVector& n_prime,
                              const QuadraticSection& s) {
    const int n = 2 * a.genus();
    BitVector out = w_row(a, s);
    for (int j = 1; j <= n; ++j) {
        bool v = out.get(j);
        for (int i = 1; i <= n; ++i)
            v ^= a.get(i, j) && n_prime.get(i);
        out.set(j, v);
    }
    return out;
}

} // namespace detail

inline EmbeddedMatrix j_embed(const SymplecticMatrix& a, const QuadraticSection& s) {
    if (a.genus() != s.genus())
        throw std::invalid_argument("j_embed: genus mismatch");
    const int n = 2 * a.genus();
    BitMatrix m(n + 1, n + 1);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.set(i, j, a.get(i, j));
    const BitVector w = detail::w_row(a, s);
    for (int j = 1; j <= n; ++j)
        m.set(n + 1, j, w.get(j));
    m.set(n + 1, n + 1, true);
    return EmbeddedMatrix(std::move(m));
}

/// Whether phi(u_j) = sum_i a_ij phi'(u_i) + w_j holds for all j.
inline bool s_related(const SpecialCovering& phi, const SpecialCovering& phi2,
                      const SymplecticMatrix& a, const QuadraticSection& s) {
    if (phi.genus() != phi2.genus() || phi.genus() != a.genus() || phi.genus() != s.genus())
        throw std::invalid_argument("s_related: genus mismatch");
    if (phi.chern() != phi2.chern())
        throw std::invalid_argument("s_related: Chern class mismatch");
    return phi.bits() == detail::related_bits(a, phi2.bits(), s);
}

/// The unique phi that is s-related to phi2 via a.  Composition follows
/// the embedding, so act(a*b, phi) = act(b, act(a, phi)): a right action.
inline SpecialCovering act(const SymplecticMatrix& a, const SpecialCovering& phi2,
                           const QuadraticSection& s) {
    if (phi2.genus() != a.genus() || phi2.genus() != s.genus())
        throw std::invalid_argument("act: genus mismatch");
    return {phi2.genus(), phi2.chern(), detail::related_bits(a, phi2.bits(), s)};
}

struct OrbitPartition {
    std::vector<SpecialCovering> arf_zero; // 2^{g-1} (2^g + 1) elements
    std::vector<SpecialCovering> arf_one;  // 2^{g-1} (2^g - 1) elements
};

/// Partition of all 2^2g coverings into the two orbits.  Computed by Arf
/// invariant, and for g <= 2 cross-checked against the literal orbit of
/// the group action; a mismatch is an internal error.
inline OrbitPartition orbits(int g, long long q, const QuadraticSection& s) {
    if (q % 2 != 0)
        throw std::invalid_argument("orbits: Chern class must be even");
    if (g < 1 || g > 3)
        throw std::invalid_argument("orbits: supported for genus 1..3");
    OrbitPartition part;
    for (const auto& phi : all_coverings(g, q)) {
        if (arf(omega_of(phi, s)))
            part.arf_one.push_back(phi);
        else
            part.arf_zero.push_back(phi);
    }
    if (g <= 2) {
        auto orbit_of = [&](const SpecialCovering& seed) {
            std::vector<uint64_t> found;
            for (uint64_t key : sp_group_keys(g))
                found.push_back(act(key_matrix(g, key), seed, s).bits().bits());
            std::sort(found.begin(), found.end());
            found.erase(std::unique(found.begin(), found.end()), found.end());
            return found;
        };
        auto as_sorted_bits = [](const std::vector<SpecialCovering>& v) {
            std::vector<uint64_t> out;
            out.reserve(v.size());
            for (const auto& phi : v)
                out.push_back(phi.bits().bits());
            std::sort(out.begin(), out.end());
            return out;
        };
        if (orbit_of(part.arf_zero.front()) != as_sorted_bits(part.arf_zero) ||
            orbit_of(part.arf_one.front()) != as_sorted_bits(part.arf_one))
            throw std::logic_error("orbits: Arf partition and group action disagree");
    }
    return part;
}

/// Elements of Sp(Z2,2g) fixing phi under the action, in group discovery
/// order.  |stabilizer| * |orbit| = |Sp(Z2,2g)|.
inline std::vector<SymplecticMatrix> stabilizer(const SpecialCovering& phi,
                                                const QuadraticSection& s) {
    const int g = phi.genus();
    std::vector<SymplecticMatrix> out;
    for (uint64_t key : sp_group_keys(g)) {
        SymplecticMatrix a = key_matrix(g, key);
        if (act(a, phi, s) == phi)
            out.push_back(std::move(a));
    }
    return out;
}

/// A section making both coverings Arf 0: r_i = phi(u_i) for odd i and
/// r_i = phi'(u_i) for even i.
inline QuadraticSection choose_section(const SpecialCovering& phi, const SpecialCovering& phi2) {
    if (phi.genus() != phi2.genus())
        throw std::invalid_argument("choose_section: genus mismatch");
    if (phi.chern() != phi2.chern())
        throw std::invalid_argument("choose_section: Chern class mismatch");
    const int n = 2 * phi.genus();
    BitVector r(n);
    for (int i = 1; i <= n; ++i)
        r.set(i, i % 2 == 1 ? phi.bits().get(i) : phi2.bits().get(i));
    return {phi.genus(), r};
}

} // namespace spincover
