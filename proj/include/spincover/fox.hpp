#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "spincover/bits.hpp"
#include "spincover/covering.hpp"
#include "spincover/group_ring.hpp"

namespace spincover {

/// One letter of a word in the free group on u_0, ..., u_2g.
/// Generator 0 is the fiber class u_0.
struct Letter {
    int gen;
    int exp; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word inverse_word(const Word& w) {
    Word inv;
    inv.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        inv.push_back({it->gen, -it->exp});
    return inv;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline Word commutator(const Word& a, const Word& b) {
    return concat(concat(a, b), concat(inverse_word(a), inverse_word(b)));
}

inline Word power(int gen, long long k) {
    Word w;
    const int exp = k >= 0 ? 1 : -1;
    for (long long i = 0; i < std::llabs(k); ++i)
        w.push_back({gen, exp});
    return w;
}

/// Relators of the fundamental group of the circle bundle:
/// relator(i) = [u_i, u_0] for 1 <= i <= 2g, and
/// relator(0) = prod_l [u_{2l-1}, u_{2l}] u_0^q.
inline Word relator(int i, int g, long long q) {
    if (g < 1)
        throw std::invalid_argument("relator: genus must be positive");
    if (i < 0 || i > 2 * g)
        throw std::out_of_range("relator: index out of range");
    if (i > 0)
        return commutator({{i, 1}}, {{0, 1}});
    Word w;
    for (int l = 1; l <= g; ++l)
        w = concat(std::move(w), commutator({{2 * l - 1, 1}}, {{2 * l, 1}}));
    return concat(std::move(w), power(0, q));
}

/// Ring image of a generator: u_0 -> t, u_i -> 1 or t as phi(u_i) = 0 or 1.
inline GroupRingElementZ phi_image(const SpecialCovering& phi, int gen) {
    if (gen < 0 || gen > 2 * phi.genus())
        throw std::out_of_range("phi_image: generator index out of range");
    if (gen == 0 || phi.bits().get(gen))
        return GroupRingElementZ::t();
    return GroupRingElementZ::one();
}

/// Free derivative of a word with respect to generator j, pushed through
/// phi into Z[t]/(1-t^2).  Letterwise: a positive letter x contributes the
/// current prefix when x = u_j; a negative letter x^-1 first divides the
/// prefix, then contributes its negation.
inline GroupRingElementZ fox_derivative(const Word& w, int j, const SpecialCovering& phi) {
    if (j < 0 || j > 2 * phi.genus())
        throw std::out_of_range("fox_derivative: generator index out of range");
    GroupRingElementZ result = GroupRingElementZ::zero();
    GroupRingElementZ prefix = GroupRingElementZ::one();
    for (const Letter& l : w) {
        const GroupRingElementZ value = phi_image(phi, l.gen);
        if (l.exp == 1) {
            if (l.gen == j)
                result += prefix;
            prefix *= value;
        } else if (l.exp == -1) {
            prefix *= value; // 1 and t are their own inverses
            if (l.gen == j)
                result -= prefix;
        } else {
            throw std::invalid_argument("fox_derivative: letter exponent must be +1 or -1");
        }
    }
    return result;
}

/// Integral convention n_i in {0, -1}: n_i = 0 when phi(u_i) = 1 and
/// n_i = -1 when phi(u_i) = t.
inline long long n_integral(const SpecialCovering& phi, int i) {
    return phi.bits().get(i) ? -1 : 0;
}

/// eps(2s) = n_{2s-1}, eps(2s-1) = -n_{2s} in the integral convention;
/// both reduce to the pair-swapped bit pattern mod 2.
inline long long epsilon_integral(const SpecialCovering& phi, int i) {
    if (i % 2 == 0)
        return n_integral(phi, i - 1);
    return -n_integral(phi, i + 1);
}

inline bool epsilon_mod2(const SpecialCovering& phi, int i) {
    return i % 2 == 0 ? phi.bits().get(i - 1) : phi.bits().get(i + 1);
}

namespace detail {

// Row index of generator u_j and column index of relator R_i in the
// derived matrix: u_1..u_2g then u_0 last, same for relators.
inline int gen_index(int j, int g) { return j == 0 ? 2 * g + 1 : j; }

} // namespace detail

/// Derived matrix over Z[t]/(1-t^2), entry (row u_j, column R_i) the Fox
/// derivative of R_i by u_j through phi.  Computed by the generic engine.
inline GroupRingMatrixZ derived_matrix(const SpecialCovering& phi) {
    const int g = phi.genus();
    const long long q = phi.chern();
    GroupRingMatrixZ m(2 * g + 1, 2 * g + 1);
    for (int i = 0; i <= 2 * g; ++i) {
        const Word r = relator(i, g, q);
        for (int j = 0; j <= 2 * g; ++j)
            m.set(detail::gen_index(j, g), detail::gen_index(i, g), fox_derivative(r, j, phi));
    }
    return m;
}

/// The closed form of the derived matrix: (1-t) on the diagonal,
/// eps(i)(1-t) in the last column, n_i(1-t) in the last row, c(1+t) in
/// the corner.  Independent of the engine; used as its oracle.
inline GroupRingMatrixZ derived_matrix_closed_form(const SpecialCovering& phi) {
    const int g = phi.genus();
    const GroupRingElementZ one_minus_t{1, -1};
    const GroupRingElementZ one_plus_t{1, 1};
    GroupRingMatrixZ m(2 * g + 1, 2 * g + 1);
    for (int i = 1; i <= 2 * g; ++i) {
        m.set(i, i, one_minus_t);
        m.set(i, 2 * g + 1, GroupRingElementZ{epsilon_integral(phi, i), 0} * one_minus_t);
        m.set(2 * g + 1, i, GroupRingElementZ{n_integral(phi, i), 0} * one_minus_t);
    }
    m.set(2 * g + 1, 2 * g + 1, GroupRingElementZ{phi.c(), 0} * one_plus_t);
    return m;
}

/// Derived matrix mod 2: (1+t) times the pattern with identity block,
/// pair-swapped monodromy bits in the last column, the monodromy bits in
/// the last row and c mod 2 in the corner.
inline GroupRingMatrix2 derived_matrix_mod2(const SpecialCovering& phi) {
    const int g = phi.genus();
    const auto w = GroupRingElement2::one_plus_t();
    GroupRingMatrix2 m(2 * g + 1, 2 * g + 1);
    for (int i = 1; i <= 2 * g; ++i) {
        m.set(i, i, w);
        if (epsilon_mod2(phi, i))
            m.set(i, 2 * g + 1, w);
        if (phi.bits().get(i))
            m.set(2 * g + 1, i, w);
    }
    if (phi.c() % 2 != 0)
        m.set(2 * g + 1, 2 * g + 1, w);
    return m;
}

struct VqDecomposition {
    GroupRingMatrix2 left;        // inverse of the basis matrix of V = {u_i + n_i u_0, u_0}
    GroupRingMatrix2 right;       // basis matrix of Q = {R_1, ..., R_2g, R_0 - sum eps(i) R_i}
    GroupRingMatrix2 normal_form; // left * derived_matrix_mod2 * right
};

/// Basis change to (Q, V).  The result is (1+t) Id for c odd and
/// (1+t) diag(Id_2g, 0) for c even; anything else is an internal error.
inline VqDecomposition vq_decomposition(const SpecialCovering& phi) {
    const int g = phi.genus();
    const int n = 2 * g + 1;
    GroupRingMatrix2 basis_v = GroupRingMatrix2::identity(n);
    GroupRingMatrix2 basis_q = GroupRingMatrix2::identity(n);
    for (int i = 1; i <= 2 * g; ++i) {
        if (phi.bits().get(i))
            basis_v.set(n, i, GroupRingElement2::one());
        if (epsilon_mod2(phi, i))
            basis_q.set(i, n, GroupRingElement2::one());
    }
    VqDecomposition d{inverse(basis_v), basis_q,
                      GroupRingMatrix2(n, n)};
    d.normal_form = d.left * derived_matrix_mod2(phi) * d.right;

    GroupRingMatrix2 expected(n, n);
    const auto w = GroupRingElement2::one_plus_t();
    for (int i = 1; i <= 2 * g; ++i)
        expected.set(i, i, w);
    if (phi.c() % 2 != 0)
        expected.set(n, n, w);
    if (d.normal_form != expected)
        throw std::logic_error("vq_decomposition: normal form does not match the expected shape");
    return d;
}

inline GroupRingMatrix2 vq_normal_form(const SpecialCovering& phi) {
    return vq_decomposition(phi).normal_form;
}

/// Structure of the relative first homology as a module: integrally
/// Z^{2g} plus Z[t]/((1-t^2), c(1+t)); mod 2 either all Z2 summands
/// (c odd) or 2g of them plus one free Z2[Z2] summand (c even).
struct ModuleDescriptor {
    int free_rank = 0;
    std::vector<long long> torsion;  // invariant factors, each > 1
    int z2_summands = 0;
    int group_ring_summands = 0;

    std::string integral_string() const {
        std::string s = "Z^" + std::to_string(free_rank);
        for (long long t : torsion)
            s += " + Z/" + std::to_string(t);
        return s;
    }

    std::string mod2_string() const {
        std::string s = "Z2^" + std::to_string(z2_summands);
        for (int i = 0; i < group_ring_summands; ++i)
            s += " + Z2[Z2]";
        return s;
    }

    friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;
};

inline ModuleDescriptor module_structure(const SpecialCovering& phi) {
    const int g = phi.genus();
    const long long c = phi.c();
    ModuleDescriptor d;
    d.free_rank = 2 * g + 1;
    if (c == 0)
        d.free_rank += 1; // Z/0 is another free summand
    else if (std::llabs(c) > 1)
        d.torsion.push_back(std::llabs(c));
    if (c % 2 != 0) {
        d.z2_summands = 2 * g + 1;
    } else {
        d.z2_summands = 2 * g;
        d.group_ring_summands = 1;
    }
    return d;
}

namespace detail {

// Substitute u_k = u_0^{alpha_k} u'_k into a word over the unprimed
// generators, producing the same group element as a word over the primed
// ones (indices unchanged; u'_0 = u_0).
inline Word substitute_generators(const Word& w, const BitVector& alpha) {
    Word out;
    for (const Letter& l : w) {
        Word piece;
        if (l.gen != 0 && alpha.get(l.gen))
            piece.push_back({0, 1});
        piece.push_back({l.gen, 1});
        if (l.exp == -1)
            piece = inverse_word(piece);
        out = concat(std::move(out), piece);
    }
    return out;
}

} // namespace detail

/// Relator rewritten in the primed generators u'_i = u_0^{-alpha_i} u_i.
inline Word rewritten_relator(int i, const BitVector& alpha, int g, long long q) {
    return detail::substitute_generators(relator(i, g, q), alpha);
}

/// Derived matrix of the rewritten relators with respect to the primed
/// generators, mod 2.  The ring values of the primed generators are the
/// shifted monodromy phi'(u_i) = phi(u_i) + alpha_i.
inline GroupRingMatrix2 rewritten_derived_matrix_mod2(const SpecialCovering& phi,
                                                      const BitVector& alpha) {
    const int g = phi.genus();
    if (alpha.length() != 2 * g)
        throw std::invalid_argument("rewritten_derived_matrix_mod2: alpha must have length 2g");
    const SpecialCovering phi_prime(g, phi.chern(), phi.bits() ^ alpha);
    GroupRingMatrixZ m(2 * g + 1, 2 * g + 1);
    for (int i = 0; i <= 2 * g; ++i) {
        const Word r = rewritten_relator(i, alpha, g, phi.chern());
        for (int j = 0; j <= 2 * g; ++j)
            m.set(detail::gen_index(j, g), detail::gen_index(i, g),
                  fox_derivative(r, j, phi_prime));
    }
    return m.reduce_mod2();
}

struct GeneratorChange {
    SpecialCovering phi_prime;
    GroupRingMatrix2 c_matrix; // phi(C), C the matrix of derivatives du_j/du'_i
};

/// Change of generators u'_i = u_0^{-alpha_i} u_i.  Shifts the monodromy
/// by alpha and returns phi(C) — diagonal t^{alpha_i}, last row alpha,
/// corner 1.  Asserts both that the Fox engine reproduces phi(C) and that
/// the rewritten derived matrix equals phi(C) times the original.
inline GeneratorChange change_generators(const SpecialCovering& phi, const BitVector& alpha) {
    const int g = phi.genus();
    if (alpha.length() != 2 * g)
        throw std::invalid_argument("change_generators: alpha must have length 2g");
    const SpecialCovering phi_prime(g, phi.chern(), phi.bits() ^ alpha);

    const int n = 2 * g + 1;
    GroupRingMatrix2 c_mat(n, n);
    for (int k = 1; k <= 2 * g; ++k) {
        c_mat.set(k, k, alpha.get(k) ? GroupRingElement2::t() : GroupRingElement2::one());
        if (alpha.get(k))
            c_mat.set(n, k, GroupRingElement2::one());
    }
    c_mat.set(n, n, GroupRingElement2::one());

    // Engine cross-check: C_{ik} = d u_k / d u'_i for u_k = u_0^{alpha_k} u'_k.
    GroupRingMatrixZ engine(n, n);
    for (int k = 0; k <= 2 * g; ++k) {
        Word word_uk;
        if (k != 0 && alpha.get(k))
            word_uk.push_back({0, 1});
        word_uk.push_back({k, 1});
        for (int i = 0; i <= 2 * g; ++i)
            engine.set(detail::gen_index(i, g), detail::gen_index(k, g),
                       fox_derivative(word_uk, i, phi_prime));
    }
    if (engine.reduce_mod2() != c_mat)
        throw std::logic_error("change_generators: engine disagrees with the closed form of phi(C)");

    if (rewritten_derived_matrix_mod2(phi, alpha) != c_mat * derived_matrix_mod2(phi))
        throw std::logic_error("change_generators: rewritten matrix is not phi(C) times the original");

    return {phi_prime, c_mat};
}

} // namespace spincover
