#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spincover/bits.hpp"
#include "spincover/quadform.hpp"
#include "spincover/symplectic.hpp"

namespace spincover {

inline QuadraticForm reference_form(int which, int g) {
    if (which == 0)
        return QuadraticForm::omega0(g);
    if (which == 1)
        return QuadraticForm::omega1(g);
    throw std::invalid_argument("reference_form: which must be 0 or 1");
}

namespace detail {

inline SymplecticMatrix block_embed(const std::vector<std::vector<int>>& block, int g) {
    const int n = 2 * g;
    const int k = static_cast<int>(block.size());
    BitMatrix m = BitMatrix::identity(n);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j)
            m.set(i, j, block[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] != 0);
    return SymplecticMatrix(std::move(m));
}

} // namespace detail

/// The shear [[1,1],[0,1]] on the first hyperbolic pair, identity
/// elsewhere.  Together with the Arf-0 stabilizer generators it
/// generates the whole symplectic group.
inline SymplecticMatrix shear_generator(int g) {
    if (g < 1)
        throw std::invalid_argument("shear_generator: genus must be positive");
    return detail::block_embed({{1, 1}, {0, 1}}, g);
}

/// The 4x4 block generator completing the symplectic permutations to a
/// generating set of the stabilizer of omega_0.  Needs genus >= 2.
inline SymplecticMatrix extra_generator_sp0(int g) {
    if (g < 2)
        throw std::invalid_argument("extra_generator_sp0: genus must be at least 2");
    return detail::block_embed({{1, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}, {0, 0, 0, 1}}, g);
}

/// The 4x4 block generator for the stabilizer of omega_1.  Needs genus >= 2.
inline SymplecticMatrix extra_generator_sp1(int g) {
    if (g < 2)
        throw std::invalid_argument("extra_generator_sp1: genus must be at least 2");
    return detail::block_embed({{1, 0, 0, 0}, {0, 1, 0, 1}, {1, 0, 1, 1}, {0, 0, 0, 1}}, g);
}

inline bool membership(const SymplecticMatrix& a, int which) {
    const QuadraticForm w = reference_form(which, a.genus());
    return compose(w, a) == w;
}

namespace detail {

// Re-index a 2(g-1)-dimensional symplectic matrix to act on pairs 2..g,
// identity on the first pair.
inline SymplecticMatrix shift_by_pair(const SymplecticMatrix& a, int g) {
    const int small = 2 * a.genus();
    BitMatrix m = BitMatrix::identity(2 * g);
    for (int i = 1; i <= small; ++i)
        for (int j = 1; j <= small; ++j)
            m.set(i + 2, j + 2, a.get(i, j));
    return SymplecticMatrix::unchecked(std::move(m));
}

} // namespace detail

/// Generator set for the stabilizer Sp_which of the reference form.
/// which = 0: symplectic permutations, plus the block generator at g >= 2.
/// which = 1: generators of Sp(Z2,2) x Sp_0(Z2,2g-2) (the full rank-2
/// group on the first pair, the Arf-0 stabilizer on the rest), plus the
/// block generator at g >= 2.
inline std::vector<SymplecticMatrix> sp_generators(int which, int g) {
    if (g < 1)
        throw std::invalid_argument("sp_generators: genus must be positive");
    if (which == 0) {
        std::vector<SymplecticMatrix> gens = symplectic_permutations(g);
        if (g >= 2)
            gens.push_back(extra_generator_sp0(g));
        return gens;
    }
    if (which != 1)
        throw std::invalid_argument("sp_generators: which must be 0 or 1");
    std::vector<SymplecticMatrix> gens;
    gens.push_back(shear_generator(g));
    gens.push_back(symplectic_permutations(g).front()); // swap within the first pair
    if (g >= 2) {
        for (const auto& a : sp_generators(0, g - 1))
            gens.push_back(detail::shift_by_pair(a, g));
        gens.push_back(extra_generator_sp1(g));
    }
    return gens;
}

struct CoverWitness {
    int which;   // 0 or 1: which reference form the conjugate fixes
    BitVector y; // T_y a T_y lies in Sp_which; omega_which(y) = 0
};

/// Every symplectic automorphism fixes some quadratic form.  Scan the
/// forms in lexicographic basis-value order, take the first fixed one,
/// read off its Arf class and the transvection direction, and certify
/// T_y a T_y in Sp_which before returning (T_y is its own inverse).
inline CoverWitness cover_witness(const SymplecticMatrix& a) {
    const int g = a.genus();
    if (g > 3)
        throw std::length_error("cover_witness: supported for genus <= 3");
    for (const auto& w : all_forms(g)) {
        if (compose(w, a) != w)
            continue;
        const int which = arf(w) ? 1 : 0;
        const QuadraticForm ref = reference_form(which, g);
        const BitVector y = difference_vector(ref, w);
        if (evaluate(ref, y))
            throw std::logic_error("cover_witness: transvection direction not in the zero set");
        const SymplecticMatrix t = transvection(y);
        if (!membership(t * a * t, which))
            throw std::logic_error("cover_witness: certified membership failed");
        return {which, y};
    }
    throw std::logic_error("cover_witness: no fixed quadratic form found");
}

struct VectorOrbits {
    std::vector<BitVector> zero_set;          // orbit of e_1: all x != 0 with omega_0(x) = 0
    std::vector<BitVector> one_set;           // orbit of e_1 + e_2: all x with omega_0(x) = 1
};

/// Orbits of basis vectors under the Arf-0 stabilizer generators, by
/// breadth-first closure on vectors; the stabilizer acts transitively on
/// each of the two omega_0 level sets away from zero.
inline VectorOrbits sp0_vector_orbits(int g) {
    if (g < 1 || g > 3)
        throw std::invalid_argument("sp0_vector_orbits: supported for genus 1..3");
    const std::vector<SymplecticMatrix> gens = sp_generators(0, g);
    auto orbit = [&](BitVector seed) {
        std::vector<BitVector> order{seed};
        std::vector<bool> seen(std::size_t{1} << (2 * g), false);
        seen[seed.bits()] = true;
        for (std::size_t front = 0; front < order.size(); ++front) {
            const BitVector cur = order[front];
            for (const auto& a : gens) {
                BitVector next = a.apply(cur);
                if (!seen[next.bits()]) {
                    seen[next.bits()] = true;
                    order.push_back(next);
                }
            }
        }
        return order;
    };
    const int n = 2 * g;
    return {orbit(BitVector::unit(n, 1)),
            orbit(BitVector::unit(n, 1) ^ BitVector::unit(n, 2))};
}

} // namespace spincover
