#include <doctest.h>

#include <array>
#include <random>

#include "spincover/group_ring.hpp"

using namespace spincover;

namespace {

std::array<GroupRingElement2, 4> all_elements() {
    return {GroupRingElement2::zero(), GroupRingElement2::one(), GroupRingElement2::t(),
            GroupRingElement2::one_plus_t()};
}

GroupRingMatrix2 random_matrix2(int n, std::mt19937& gen) {
    const auto elems = all_elements();
    std::uniform_int_distribution<int> pick(0, 3);
    GroupRingMatrix2 m(n, n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            m.set(i, j, elems[static_cast<std::size_t>(pick(gen))]);
    return m;
}

} // namespace

TEST_CASE("ring axioms on all four elements, exhaustive tables") {
    const auto elems = all_elements();
    const auto zero = GroupRingElement2::zero();
    const auto one = GroupRingElement2::one();
    CHECK(GroupRingElement2::t() * GroupRingElement2::t() == one);
    for (auto x : elems) {
        CHECK(x + zero == x);
        CHECK(x * one == x);
        CHECK(x + x == zero); // characteristic 2
        for (auto y : elems) {
            CHECK(x + y == y + x);
            CHECK(x * y == y * x);
            for (auto z : elems) {
                CHECK((x + y) + z == x + (y + z));
                CHECK((x * y) * z == x * (y * z));
                CHECK(x * (y + z) == x * y + x * z);
            }
        }
    }
}

TEST_CASE("integral element arithmetic and rendering") {
    const GroupRingElementZ one_minus_t{1, -1};
    const GroupRingElementZ one_plus_t{1, 1};
    CHECK(GroupRingElementZ::t() * GroupRingElementZ::t() == GroupRingElementZ::one());
    CHECK(one_minus_t * one_plus_t == GroupRingElementZ::zero()); // (1-t)(1+t) = 1 - t^2 = 0
    CHECK(one_minus_t.augment() == 0);
    CHECK((GroupRingElementZ{2, 3}).augment() == 5);
    CHECK((GroupRingElementZ{3, -1}).reduce_mod2() == GroupRingElement2::one_plus_t());
    CHECK((GroupRingElementZ{3, -2}).reduce_mod2() == GroupRingElement2::one());
    CHECK(one_minus_t.to_string() == "1-t");
    CHECK((-one_minus_t).to_string() == "-1+t");
    CHECK((GroupRingElementZ{2, 2}).to_string() == "2+2t");
    CHECK(GroupRingElementZ::zero().to_string() == "0");
    CHECK((GroupRingElementZ{0, -1}).to_string() == "-t");
}

TEST_CASE("augment") {
    const auto w = GroupRingElement2::one_plus_t();
    GroupRingMatrix2 m(2, 2);
    m.set(1, 1, w);
    m.set(2, 2, w);
    CHECK(m.augment() == BitMatrix(2, 2)); // 1+1 = 0

    GroupRingMatrix2 d(2, 2);
    d.set(1, 1, GroupRingElement2::t());
    d.set(2, 2, GroupRingElement2::one());
    CHECK(d.augment() == BitMatrix::identity(2));

    GroupRingMatrix2 mixed(2, 2);
    mixed.set(1, 1, GroupRingElement2::one());
    mixed.set(1, 2, GroupRingElement2::t());
    mixed.set(2, 1, w);
    CHECK(mixed.augment() == BitMatrix::from_strings({"11", "00"}));
}

TEST_CASE("is_invertible") {
    CHECK(is_invertible(GroupRingMatrix2::identity(3)));

    GroupRingMatrix2 w_diag(2, 2);
    w_diag.set(1, 1, GroupRingElement2::one_plus_t());
    w_diag.set(2, 2, GroupRingElement2::one_plus_t());
    CHECK_FALSE(is_invertible(w_diag));

    GroupRingMatrix2 upper(2, 2);
    upper.set(1, 1, GroupRingElement2::one());
    upper.set(1, 2, GroupRingElement2::one_plus_t());
    upper.set(2, 2, GroupRingElement2::t());
    CHECK(is_invertible(upper));

    CHECK_THROWS_AS(is_invertible(GroupRingMatrix2(2, 3)), std::invalid_argument);
}

TEST_CASE("is_invertible agrees with brute-force two-sided inverse search, all 2x2") {
    const auto elems = all_elements();
    const GroupRingMatrix2 id = GroupRingMatrix2::identity(2);
    for (int code = 0; code < 256; ++code) {
        GroupRingMatrix2 m(2, 2);
        m.set(1, 1, elems[static_cast<std::size_t>(code & 3)]);
        m.set(1, 2, elems[static_cast<std::size_t>((code >> 2) & 3)]);
        m.set(2, 1, elems[static_cast<std::size_t>((code >> 4) & 3)]);
        m.set(2, 2, elems[static_cast<std::size_t>((code >> 6) & 3)]);
        bool found = false;
        for (int inv_code = 0; inv_code < 256 && !found; ++inv_code) {
            GroupRingMatrix2 cand(2, 2);
            cand.set(1, 1, elems[static_cast<std::size_t>(inv_code & 3)]);
            cand.set(1, 2, elems[static_cast<std::size_t>((inv_code >> 2) & 3)]);
            cand.set(2, 1, elems[static_cast<std::size_t>((inv_code >> 4) & 3)]);
            cand.set(2, 2, elems[static_cast<std::size_t>((inv_code >> 6) & 3)]);
            if (m * cand == id && cand * m == id)
                found = true;
        }
        CHECK(is_invertible(m) == found);
    }
}

TEST_CASE("inverse examples") {
    CHECK(inverse(GroupRingMatrix2::identity(3)) == GroupRingMatrix2::identity(3));

    GroupRingMatrix2 t_diag(2, 2);
    t_diag.set(1, 1, GroupRingElement2::t());
    t_diag.set(2, 2, GroupRingElement2::t());
    CHECK(inverse(t_diag) == t_diag); // t^2 = 1

    GroupRingMatrix2 nilpotent_shear = GroupRingMatrix2::identity(2);
    nilpotent_shear.set(1, 2, GroupRingElement2::one_plus_t());
    CHECK(inverse(nilpotent_shear) == nilpotent_shear); // (1+t)^2 = 0

    GroupRingMatrix2 w_diag(2, 2);
    w_diag.set(1, 1, GroupRingElement2::one_plus_t());
    w_diag.set(2, 2, GroupRingElement2::one_plus_t());
    CHECK_THROWS_AS(inverse(w_diag), std::invalid_argument);
}

TEST_CASE("inverse is two-sided on random invertible 5x5 matrices") {
    std::mt19937 gen(31);
    const GroupRingMatrix2 id = GroupRingMatrix2::identity(5);
    int inverted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const GroupRingMatrix2 m = random_matrix2(5, gen);
        if (!is_invertible(m))
            continue;
        ++inverted;
        const GroupRingMatrix2 inv = inverse(m);
        CHECK(inv * m == id);
        CHECK(m * inv == id);
    }
    CHECK(inverted > 20);
}
