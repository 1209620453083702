#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spincover/bits.hpp"
#include "spincover/covering.hpp"
#include "spincover/fox.hpp"
#include "spincover/group_ring.hpp"
#include "spincover/quadform.hpp"
#include "spincover/symplectic.hpp"

namespace spincover {

/// Parameters of the basis change theta on the relator module, taken
/// mod (1+t): the block matrix [[B1, B2], [B3, b]].  The congruence
/// definition constrains B3 = 0 and b = 1.
struct ThetaParams {
    BitMatrix b1;      // 2g x 2g
    BitVector b2_col;  // length 2g
    BitVector b3_row;  // length 2g
    bool b = true;

    static ThetaParams identity(int g) {
        return {BitMatrix::identity(2 * g), BitVector(2 * g), BitVector(2 * g), true};
    }

    int genus() const { return b1.rows() / 2; }

    /// The (2g+1)-square matrix over Z2[t]/(1-t^2), entries lifted from GF(2).
    GroupRingMatrix2 matrix() const {
        const int n = b1.rows();
        GroupRingMatrix2 m(n + 1, n + 1);
        for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j)
                if (b1.get(i, j))
                    m.set(i, j, GroupRingElement2::one());
        for (int i = 1; i <= n; ++i) {
            if (b2_col.get(i))
                m.set(i, n + 1, GroupRingElement2::one());
            if (b3_row.get(i))
                m.set(n + 1, i, GroupRingElement2::one());
        }
        if (b)
            m.set(n + 1, n + 1, GroupRingElement2::one());
        return m;
    }

    friend bool operator==(const ThetaParams&, const ThetaParams&) = default;
};

/// Literal commutativity of the congruence diagram over Z2[t]/(1-t^2):
/// J(a) * M_phi == M_phi' * theta, checked by matrix multiplication.
inline bool diagram_commutes(const SymplecticMatrix& a, const ThetaParams& theta,
                             const SpecialCovering& phi, const SpecialCovering& phi2,
                             const QuadraticSection& s) {
    const GroupRingMatrix2 psi = GroupRingMatrix2::lift(j_embed(a, s).matrix());
    return psi * derived_matrix_mod2(phi) == derived_matrix_mod2(phi2) * theta.matrix();
}

/// The four parameter conditions for the diagram to commute with an
/// invertible theta, all mod (1+t):
///   (alpha)  b_ij = a_ij + b_j eps'(i)
///   (beta)   c_i  = sum_j a_ij eps(j) + b eps'(i)
///   (gamma)  w_j + n_j = sum_i n'_i a_ij + b_j c
///   (delta)  0 = 1 + b + sum_j b_j eps(j)
/// For odd c, (delta) is forced by commutativity itself; for even c it is
/// exactly the invertibility of theta.  Either way the conjunction equals
/// "diagram commutes and theta is invertible", which is what this returns.
inline bool check_dn(const SymplecticMatrix& a, const ThetaParams& theta,
                     const SpecialCovering& phi, const SpecialCovering& phi2,
                     const QuadraticSection& s, long long c) {
    const int g = phi.genus();
    if (phi2.genus() != g || a.genus() != g || s.genus() != g || theta.genus() != g)
        throw std::invalid_argument("check_dn: genus mismatch");
    if (phi.chern() != 2 * c || phi2.chern() != 2 * c)
        throw std::invalid_argument("check_dn: coverings must have Chern class 2c");

    const int n = 2 * g;
    const bool c_bit = (c % 2) != 0;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            const bool expected = a.get(i, j) != (theta.b3_row.get(j) && epsilon_mod2(phi2, i));
            if (theta.b1.get(i, j) != expected)
                return false; // (alpha)
        }
    for (int i = 1; i <= n; ++i) {
        bool expected = theta.b && epsilon_mod2(phi2, i);
        for (int j = 1; j <= n; ++j)
            expected ^= a.get(i, j) && epsilon_mod2(phi, j);
        if (theta.b2_col.get(i) != expected)
            return false; // (beta)
    }
    const BitVector w = detail::w_row(a, s);
    for (int j = 1; j <= n; ++j) {
        bool rhs = theta.b3_row.get(j) && c_bit;
        for (int i = 1; i <= n; ++i)
            rhs ^= phi2.bits().get(i) && a.get(i, j);
        if ((w.get(j) != phi.bits().get(j)) != rhs)
            return false; // (gamma)
    }
    bool delta = !theta.b; // 1 + b
    for (int j = 1; j <= n; ++j)
        delta ^= theta.b3_row.get(j) && epsilon_mod2(phi, j);
    return !delta; // (delta)
}

struct CongruenceWitness {
    SymplecticMatrix a;
    ThetaParams theta;
};

namespace detail {

// theta of the constrained shape [[A, B2], [0, 1]] completing an
// s-relating matrix a to a congruence witness: B1 = A from (alpha),
// B2 from (beta) with b = 1.
inline ThetaParams build_theta(const SymplecticMatrix& a, const SpecialCovering& phi,
                               const SpecialCovering& phi2) {
    const int n = 2 * a.genus();
    BitVector b2(n);
    for (int i = 1; i <= n; ++i) {
        bool v = epsilon_mod2(phi2, i);
        for (int j = 1; j <= n; ++j)
            v ^= a.get(i, j) && epsilon_mod2(phi, j);
        b2.set(i, v);
    }
    return {a.matrix(), b2, BitVector(n), true};
}

} // namespace detail

/// Search for a congruence witness (a, theta), theta constrained to the
/// shape [[B1, B2], [0, 1]].  Under that constraint the only live
/// condition is (gamma), which is the s-relation itself, so witnesses
/// exist exactly when the Arf invariants agree.  Genus 1 and 2 scan the
/// whole group in discovery order (first hit wins); larger genus takes
/// the transvection shortcut through the difference of the two forms.
/// Every returned witness has its diagram verified by multiplication.
inline std::optional<CongruenceWitness> congruent(const SpecialCovering& phi,
                                                  const SpecialCovering& phi2,
                                                  const QuadraticSection& s) {
    const int g = phi.genus();
    if (phi2.genus() != g || s.genus() != g)
        throw std::invalid_argument("congruent: genus mismatch");
    if (phi.chern() != phi2.chern())
        throw std::invalid_argument("congruent: Chern class mismatch");

    std::optional<SymplecticMatrix> found;
    if (g <= 2) {
        for (uint64_t key : sp_group_keys(g)) {
            SymplecticMatrix a = key_matrix(g, key);
            if (s_related(phi, phi2, a, s)) {
                found = std::move(a);
                break;
            }
        }
    } else {
        const QuadraticForm w = omega_of(phi, s);
        const QuadraticForm w2 = omega_of(phi2, s);
        if (arf(w) == arf(w2)) {
            // omega_phi2 composed with the transvection along the
            // difference vector equals omega_phi, and the forms determine
            // the relation.
            SymplecticMatrix a = transvection(difference_vector(w2, w));
            if (!s_related(phi, phi2, a, s))
                throw std::logic_error("congruent: transvection shortcut failed");
            found = std::move(a);
        }
    }
    if (!found)
        return std::nullopt;

    CongruenceWitness witness{*found, detail::build_theta(*found, phi, phi2)};
    if (!is_invertible(witness.theta.matrix()))
        throw std::logic_error("congruent: constructed theta is not invertible");
    if (!diagram_commutes(witness.a, witness.theta, phi, phi2, s))
        throw std::logic_error("congruent: witness diagram does not commute");
    return witness;
}

/// An element of the relative homology mod 2 in the V basis: coefficients
/// of the v_i plus a group-ring coefficient on u_0 (constant when c is odd).
struct HphiElement {
    BitVector v_coeffs;
    GroupRingElement2 u0_coeff;

    friend bool operator==(const HphiElement&, const HphiElement&) = default;
};

/// The intersection product lifted through the projection that kills the
/// fiber class: v_i maps to sigma_i, u_0 to zero.
inline bool star_product(const HphiElement& x, const HphiElement& y, const SpecialCovering& phi) {
    if (x.v_coeffs.length() != 2 * phi.genus() || y.v_coeffs.length() != 2 * phi.genus())
        throw std::invalid_argument("star_product: length mismatch");
    return intersection_product(x.v_coeffs, y.v_coeffs);
}

/// Matrix of an isomorphism between two of the mod-2 homology modules in
/// their V bases, in blocks [[A, B], [C, D]].
struct PsiMatrix {
    BitMatrix a;           // 2g x 2g
    BitVector b_col;       // length 2g
    BitVector c_row;       // length 2g
    GroupRingElement2 d;

    int genus() const { return a.rows() / 2; }

    friend bool operator==(const PsiMatrix&, const PsiMatrix&) = default;
};

/// Criterion for preserving the star product: A symplectic and B = 0.
inline bool psi_respects_product(const PsiMatrix& psi) {
    return !psi.b_col.any() && is_symplectic(psi.a);
}

/// Brute-force counterexample search over the Z2-basis elements v_i, u_0
/// and t u_0.  Returns a violating pair when one exists; the criterion
/// above holds exactly when this returns nothing.
inline std::optional<std::pair<HphiElement, HphiElement>> star_violation(const PsiMatrix& psi,
                                                                         const SpecialCovering& phi) {
    const int g = psi.genus();
    if (phi.genus() != g)
        throw std::invalid_argument("star_violation: genus mismatch");
    const int n = 2 * g;

    std::vector<HphiElement> basis;
    std::vector<HphiElement> images;
    for (int i = 1; i <= n; ++i) {
        basis.push_back({BitVector::unit(n, i), GroupRingElement2::zero()});
        BitVector col(n);
        for (int r = 1; r <= n; ++r)
            col.set(r, psi.a.get(r, i));
        images.push_back({col, psi.c_row.get(i) ? GroupRingElement2::one() : GroupRingElement2::zero()});
    }
    basis.push_back({BitVector(n), GroupRingElement2::one()});
    images.push_back({psi.b_col, psi.d});
    basis.push_back({BitVector(n), GroupRingElement2::t()});
    images.push_back({psi.b_col, GroupRingElement2::t() * psi.d});

    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (star_product(basis[i], basis[j], phi) != star_product(images[i], images[j], phi))
                return std::make_pair(basis[i], basis[j]);
    return std::nullopt;
}

/// Whether the induced map on the V bases is a quotient of the embedded
/// automorphism: the obstruction row M_j = w_j + n_j + sum_i a_ij n'_i
/// must vanish, which is the s-relation once more.
inline bool is_quotient(const SymplecticMatrix& a, const SpecialCovering& phi,
                        const SpecialCovering& phi2, const QuadraticSection& s) {
    const int g = phi.genus();
    if (phi2.genus() != g || a.genus() != g || s.genus() != g)
        throw std::invalid_argument("is_quotient: genus mismatch");
    const BitVector w = detail::w_row(a, s);
    for (int j = 1; j <= 2 * g; ++j) {
        bool m = w.get(j) != phi.bits().get(j);
        for (int i = 1; i <= 2 * g; ++i)
            m ^= a.get(i, j) && phi2.bits().get(i);
        if (m)
            return false;
    }
    return true;
}

} // namespace spincover
