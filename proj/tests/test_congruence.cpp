#include <doctest.h>

#include "spincover/congruence.hpp"

using namespace spincover;

namespace {

BitVector vec(std::string_view s) { return BitVector::from_string(s); }

SpecialCovering cov(int g, long long q, std::string_view bits) {
    return SpecialCovering::from_string(g, q, bits);
}

const SymplecticMatrix kSwap{BitMatrix::from_strings({"01", "10"})};

} // namespace

TEST_CASE("check_dn") {
    const QuadraticSection s = QuadraticSection::zero(1);

    SUBCASE("identity parameters") {
        const SpecialCovering phi = cov(1, 2, "10");
        CHECK(check_dn(SymplecticMatrix::identity(1), ThetaParams::identity(1), phi, phi, s, 1));
    }
    SUBCASE("the swap witness at c=1") {
        const SpecialCovering phi = cov(1, 2, "01");
        const SpecialCovering phi2 = cov(1, 2, "10");
        const auto witness = congruent(phi, phi2, s);
        REQUIRE(witness.has_value());
        CHECK(witness->a == kSwap);
        CHECK(check_dn(witness->a, witness->theta, phi, phi2, s, 1));
    }
    SUBCASE("no constrained parameters relate coverings of different Arf") {
        const SpecialCovering phi = cov(1, 2, "00");
        const SpecialCovering phi2 = cov(1, 2, "11");
        for (const auto& a : sp_group(1))
            for (uint64_t b1 = 0; b1 < 16; ++b1)
                for (uint64_t b2 = 0; b2 < 4; ++b2) {
                    BitMatrix m(2, 2);
                    m.set(1, 1, b1 & 1);
                    m.set(1, 2, (b1 >> 1) & 1);
                    m.set(2, 1, (b1 >> 2) & 1);
                    m.set(2, 2, (b1 >> 3) & 1);
                    BitVector col(2);
                    col.set(1, b2 & 1);
                    col.set(2, (b2 >> 1) & 1);
                    const ThetaParams theta{m, col, BitVector(2), true};
                    CHECK_FALSE(check_dn(a, theta, phi, phi2, s, 1));
                }
    }
    SUBCASE("conditions decide the literal diagram, sampled") {
        // exhaustive sweep lives in the verification suite; spot-check the
        // equivalence on the first few hundred parameter words here
        const SpecialCovering phi = cov(1, 2, "01");
        const SpecialCovering phi2 = cov(1, 2, "10");
        for (uint64_t tb = 0; tb < (1u << 9); ++tb) {
            BitMatrix b1(2, 2);
            b1.set(1, 1, tb & 1);
            b1.set(1, 2, (tb >> 1) & 1);
            b1.set(2, 1, (tb >> 2) & 1);
            b1.set(2, 2, (tb >> 3) & 1);
            BitVector b2(2), b3(2);
            b2.set(1, (tb >> 4) & 1);
            b2.set(2, (tb >> 5) & 1);
            b3.set(1, (tb >> 6) & 1);
            b3.set(2, (tb >> 7) & 1);
            const ThetaParams theta{b1, b2, b3, static_cast<bool>((tb >> 8) & 1)};
            const bool by_conditions = check_dn(kSwap, theta, phi, phi2, s, 1);
            const bool by_diagram = diagram_commutes(kSwap, theta, phi, phi2, s) &&
                                    is_invertible(theta.matrix());
            CHECK(by_conditions == by_diagram);
        }
    }
}

TEST_CASE("general-parameter congruence is strictly coarser") {
    // With the bottom row of theta unconstrained, even coverings with
    // different Arf invariants admit a commuting invertible square: the
    // constraint B3 = 0, b = 1 is what ties congruence to the s-relation.
    const QuadraticSection s = QuadraticSection::zero(1);
    const SpecialCovering phi = cov(1, 2, "00");
    const SpecialCovering phi2 = cov(1, 2, "11");
    REQUIRE_FALSE(congruent(phi, phi2, s).has_value());

    const ThetaParams theta{BitMatrix::from_strings({"01", "10"}), vec("11"), vec("11"), true};
    CHECK(check_dn(SymplecticMatrix::identity(1), theta, phi, phi2, s, 1));
    CHECK(diagram_commutes(SymplecticMatrix::identity(1), theta, phi, phi2, s));
    CHECK(is_invertible(theta.matrix()));
}

TEST_CASE("congruent") {
    const QuadraticSection s = QuadraticSection::zero(1);

    SUBCASE("identity witness for equal coverings") {
        const SpecialCovering phi = cov(1, 2, "00");
        const auto witness = congruent(phi, phi, s);
        REQUIRE(witness.has_value());
        CHECK(witness->a == SymplecticMatrix::identity(1));
        CHECK(witness->theta == ThetaParams::identity(1));
    }
    SUBCASE("witness exists iff Arf values agree, g=1, q in {2,4}") {
        for (long long q : {2ll, 4ll})
            for (const auto& phi : all_coverings(1, q))
                for (const auto& phi2 : all_coverings(1, q)) {
                    const bool arf_equal =
                        arf(omega_of(phi, s)) == arf(omega_of(phi2, s));
                    CHECK(congruent(phi, phi2, s).has_value() == arf_equal);
                }
    }
    SUBCASE("witness diagram is literally commutative") {
        const auto witness = congruent(cov(1, 2, "01"), cov(1, 2, "10"), s);
        REQUIRE(witness.has_value());
        const GroupRingMatrix2 psi =
            GroupRingMatrix2::lift(j_embed(witness->a, s).matrix());
        CHECK(psi * derived_matrix_mod2(cov(1, 2, "01")) ==
              derived_matrix_mod2(cov(1, 2, "10")) * witness->theta.matrix());
        CHECK(is_invertible(witness->theta.matrix()));
    }
    SUBCASE("not congruent reports rely on Arf difference") {
        CHECK_FALSE(congruent(cov(1, 2, "00"), cov(1, 2, "11"), s).has_value());
        CHECK_FALSE(congruent(cov(1, 4, "11"), cov(1, 4, "01"), s).has_value());
    }
    SUBCASE("transvection shortcut at g=3 agrees with the Arf test") {
        const QuadraticSection s3 = QuadraticSection::zero(3);
        const SpecialCovering a = cov(3, 2, "110000");
        const SpecialCovering b = cov(3, 2, "000011");
        const auto witness = congruent(a, b, s3);
        REQUIRE(witness.has_value());
        CHECK(s_related(a, b, witness->a, s3));
        CHECK_FALSE(congruent(a, cov(3, 2, "000000"), s3).has_value());
    }
}

TEST_CASE("star_product") {
    const SpecialCovering phi = cov(2, 2, "0000");
    const int n = 4;
    auto v = [&](std::string_view bits) {
        return HphiElement{vec(bits), GroupRingElement2::zero()};
    };
    const HphiElement u0{BitVector(n), GroupRingElement2::one()};

    CHECK(star_product(v("1000"), v("0100"), phi));        // v1 * v2 = 1
    CHECK_FALSE(star_product(v("1000"), v("0010"), phi));  // v1 * v3 = 0
    CHECK_FALSE(star_product(u0, v("1000"), phi));
    CHECK_FALSE(star_product(u0, u0, phi));
    CHECK_FALSE(star_product(v("1010"), v("0101"), phi));  // bilinear expansion, 1+1
}

TEST_CASE("psi_respects_product") {
    const SpecialCovering phi = cov(1, 2, "00");

    SUBCASE("identity") {
        const PsiMatrix psi{BitMatrix::identity(2), BitVector(2), BitVector(2),
                            GroupRingElement2::one()};
        CHECK(psi_respects_product(psi));
        CHECK_FALSE(star_violation(psi, phi).has_value());
    }
    SUBCASE("swap block with zero column") {
        const PsiMatrix psi{BitMatrix::from_strings({"01", "10"}), BitVector(2), vec("10"),
                            GroupRingElement2::t()};
        CHECK(psi_respects_product(psi));
        CHECK_FALSE(star_violation(psi, phi).has_value());
    }
    SUBCASE("nonzero column breaks preservation with a concrete witness") {
        const PsiMatrix psi{BitMatrix::identity(2), vec("10"), BitVector(2),
                            GroupRingElement2::one()};
        CHECK_FALSE(psi_respects_product(psi));
        const auto violation = star_violation(psi, phi);
        REQUIRE(violation.has_value());

        auto apply_psi = [&](const HphiElement& x) {
            BitVector image_v(2);
            for (int r = 1; r <= 2; ++r) {
                bool bit = x.u0_coeff.augment() && psi.b_col.get(r);
                for (int j = 1; j <= 2; ++j)
                    bit ^= psi.a.get(r, j) && x.v_coeffs.get(j);
                image_v.set(r, bit);
            }
            return HphiElement{image_v, GroupRingElement2::zero()}; // u0 part is dead weight
        };
        CHECK(star_product(violation->first, violation->second, phi) !=
              star_product(apply_psi(violation->first), apply_psi(violation->second), phi));
    }
    SUBCASE("criterion equals brute force over all blocks at g=1") {
        for (uint64_t ab = 0; ab < 16; ++ab) {
            BitMatrix a(2, 2);
            a.set(1, 1, ab & 1);
            a.set(1, 2, (ab >> 1) & 1);
            a.set(2, 1, (ab >> 2) & 1);
            a.set(2, 2, (ab >> 3) & 1);
            for (uint64_t rest = 0; rest < (1u << 6); ++rest) {
                BitVector b(2), c(2);
                b.set(1, rest & 1);
                b.set(2, (rest >> 1) & 1);
                c.set(1, (rest >> 2) & 1);
                c.set(2, (rest >> 3) & 1);
                const PsiMatrix psi{a, b, c,
                                    GroupRingElement2((rest >> 4) & 1, (rest >> 5) & 1)};
                CHECK(psi_respects_product(psi) == !star_violation(psi, phi).has_value());
            }
        }
    }
}

TEST_CASE("is_quotient") {
    const QuadraticSection s = QuadraticSection::zero(1);
    CHECK(is_quotient(SymplecticMatrix::identity(1), cov(1, 2, "00"), cov(1, 2, "00"), s));
    CHECK(is_quotient(kSwap, cov(1, 2, "01"), cov(1, 2, "10"), s));
    for (const auto& a : sp_group(1))
        CHECK_FALSE(is_quotient(a, cov(1, 2, "00"), cov(1, 2, "11"), s));

    SUBCASE("equals the s-relation, exhaustive at g=1") {
        for (const auto& phi : all_coverings(1, 2))
            for (const auto& phi2 : all_coverings(1, 2))
                for (const auto& a : sp_group(1))
                    CHECK(is_quotient(a, phi, phi2, s) == s_related(phi, phi2, a, s));
    }
}
