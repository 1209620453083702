#include <doctest.h>

#include <cstdint>
#include <random>

#include "spincover/symplectic.hpp"

using namespace spincover;

namespace {

// |Sp(Z2,2g)| = 2^{g^2} prod_{i=1..g} (4^i - 1), computed from scratch.
uint64_t classical_sp_order(int g) {
    uint64_t order = uint64_t{1} << (g * g);
    uint64_t four_pow = 1;
    for (int i = 1; i <= g; ++i) {
        four_pow *= 4;
        order *= four_pow - 1;
    }
    return order;
}

BitVector vec(std::string_view s) { return BitVector::from_string(s); }

} // namespace

TEST_CASE("intersection product on basis vectors") {
    CHECK(intersection_product(vec("10"), vec("01"))); // e1 . e2 = 1
    CHECK_FALSE(intersection_product(vec("10"), vec("10")));
    CHECK_FALSE(intersection_product(vec("1010"), vec("0101"))); // (e1+e3).(e2+e4) = 1+1
    CHECK_THROWS_AS(intersection_product(vec("10"), vec("0101")), std::invalid_argument);
}

TEST_CASE("intersection product is symmetric and bilinear") {
    std::mt19937 gen(3);
    std::bernoulli_distribution bit(0.5);
    for (int trial = 0; trial < 100; ++trial) {
        BitVector x(6), y(6), z(6);
        for (int i = 1; i <= 6; ++i) {
            x.set(i, bit(gen));
            y.set(i, bit(gen));
            z.set(i, bit(gen));
        }
        CHECK(intersection_product(x, y) == intersection_product(y, x));
        CHECK(intersection_product(x ^ y, z) ==
              (intersection_product(x, z) != intersection_product(y, z)));
    }
}

TEST_CASE("transvection") {
    CHECK(transvection(BitVector(2)) == SymplecticMatrix::identity(1));
    const SymplecticMatrix t = transvection(vec("10"));
    CHECK(t.apply(vec("01")) == vec("11")); // e2 -> e1+e2
    CHECK(t.apply(vec("10")) == vec("10")); // e1 fixed
}

TEST_CASE("every transvection is a symplectic involution") {
    for (int g = 1; g <= 2; ++g) {
        const int n = 2 * g;
        for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
            BitVector y(n);
            for (int i = 1; i <= n; ++i)
                y.set(i, (bits >> (i - 1)) & 1u);
            const SymplecticMatrix t = transvection(y);
            CHECK(is_symplectic(t.matrix()));
            CHECK(t * t == SymplecticMatrix::identity(g));
        }
    }
}

TEST_CASE("is_symplectic") {
    CHECK(is_symplectic(BitMatrix::identity(4)));
    CHECK(is_symplectic(BitMatrix::from_strings({"11", "01"})));
    CHECK_FALSE(is_symplectic(BitMatrix::from_strings({"10", "00"})));
    CHECK_THROWS_AS(is_symplectic(BitMatrix(3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(is_symplectic(BitMatrix(2, 3)), std::invalid_argument);
    CHECK_THROWS_AS(SymplecticMatrix(BitMatrix::from_strings({"10", "00"})),
                    std::invalid_argument);
}

TEST_CASE("symplectic matrices preserve the pairing") {
    std::mt19937 gen(5);
    std::bernoulli_distribution bit(0.5);
    const auto group = sp_group(1);
    CHECK(group.size() == 6);
    for (const auto& m : group)
        for (uint64_t xb = 0; xb < 4; ++xb)
            for (uint64_t zb = 0; zb < 4; ++zb) {
                BitVector x(2), z(2);
                x.set(1, xb & 1);
                x.set(2, (xb >> 1) & 1);
                z.set(1, zb & 1);
                z.set(2, (zb >> 1) & 1);
                CHECK(intersection_product(m.apply(x), m.apply(z)) ==
                      intersection_product(x, z));
            }
    // sampled products at g=3
    const auto gens = sp_generating_set(3);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    for (int trial = 0; trial < 30; ++trial) {
        SymplecticMatrix m = gens[pick(gen)] * gens[pick(gen)] * gens[pick(gen)];
        CHECK(is_symplectic(m.matrix()));
        BitVector x(6), z(6);
        for (int i = 1; i <= 6; ++i) {
            x.set(i, bit(gen));
            z.set(i, bit(gen));
        }
        CHECK(intersection_product(m.apply(x), m.apply(z)) == intersection_product(x, z));
    }
}

TEST_CASE("symplectic permutation generators") {
    const auto g1 = symplectic_permutations(1);
    REQUIRE(g1.size() == 1);
    CHECK(g1.front().matrix() == BitMatrix::from_strings({"01", "10"}));

    const auto g2 = symplectic_permutations(2);
    CHECK(g2.size() == 3);
    for (const auto& p : g2)
        CHECK(is_symplectic(p.matrix()));
    CHECK(group_closure_order(2, g2) == 8); // 2^2 * 2!

    // 2^g g! for g = 1, 2, 3
    CHECK(group_closure_order(1, symplectic_permutations(1)) == 2);
    CHECK(group_closure_order(3, symplectic_permutations(3)) == 48);
}

TEST_CASE("group_closure") {
    CHECK(group_closure(1, {}).size() == 1);
    CHECK(group_closure(1, {}).front() == SymplecticMatrix::identity(1));

    // nonzero transvections generate the full group at g=1
    CHECK(group_closure_order(1, all_transvections(1)) == 6);

    CHECK(group_closure_order(1, sp_generating_set(1)) == classical_sp_order(1));
    CHECK(group_closure_order(2, sp_generating_set(2)) == classical_sp_order(2));
    CHECK(classical_sp_order(2) == 720);

    CHECK_THROWS_AS(group_closure_order(4, symplectic_permutations(4)), std::length_error);
    // mismatched genus among generators
    CHECK_THROWS_AS(group_closure_order(2, symplectic_permutations(1)), std::invalid_argument);
}

TEST_CASE("closure is deterministic and starts at the identity") {
    const auto first = group_closure_keys(2, sp_generating_set(2));
    const auto second = group_closure_keys(2, sp_generating_set(2));
    CHECK(first == second);
    CHECK(key_matrix(2, first.front()) == SymplecticMatrix::identity(2));
}

TEST_CASE("matrix key round trip") {
    for (const auto& m : sp_group(1))
        CHECK(key_matrix(1, matrix_key(m)) == m);
}
