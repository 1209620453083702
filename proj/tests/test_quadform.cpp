#include <doctest.h>

#include <cstdint>
#include <random>

#include "spincover/quadform.hpp"

using namespace spincover;

namespace {

BitVector vec(std::string_view s) { return BitVector::from_string(s); }

QuadraticForm form(int g, std::string_view values) {
    return {g, BitVector::from_string(values)};
}

std::vector<BitVector> all_vectors(int len) {
    std::vector<BitVector> out;
    for (uint64_t b = 0; b < (uint64_t{1} << len); ++b) {
        BitVector v(len);
        for (int i = 1; i <= len; ++i)
            v.set(i, (b >> (i - 1)) & 1u);
        out.push_back(v);
    }
    return out;
}

} // namespace

TEST_CASE("evaluate") {
    CHECK(evaluate(QuadraticForm::omega0(1), vec("11")));       // omega0(e1+e2) = 1
    CHECK_FALSE(evaluate(form(2, "1011"), vec("0000")));        // any form vanishes at 0
    CHECK(evaluate(QuadraticForm::omega1(1), vec("11")));       // 1 + (1+1) = 1
    CHECK(QuadraticForm::omega1(1).basis_values() == vec("11"));
    CHECK_THROWS_AS(evaluate(QuadraticForm::omega0(1), vec("1100")), std::invalid_argument);
}

TEST_CASE("arf") {
    CHECK_FALSE(arf(QuadraticForm::omega0(1)));
    CHECK_FALSE(arf(QuadraticForm::omega0(3)));
    CHECK(arf(QuadraticForm::omega1(1)));
    CHECK(arf(QuadraticForm::omega1(2)));
    CHECK_FALSE(arf(form(2, "1111"))); // 1*1 + 1*1 = 0
}

TEST_CASE("compose") {
    const SymplecticMatrix id = SymplecticMatrix::identity(2);
    const QuadraticForm w = form(2, "1011");
    CHECK(compose(w, id) == w);

    const SymplecticMatrix swap = transvection(vec("11")); // T_{e1+e2} swaps e1 and e2
    CHECK(compose(QuadraticForm::omega0(1), swap) == QuadraticForm::omega0(1));

    // a pair with equal Arf moved onto each other by the difference transvection
    const QuadraticForm target = form(1, "10");
    CHECK(compose(QuadraticForm::omega0(1), transvection(vec("01"))) == target);
}

TEST_CASE("polarization identity, exhaustive for g <= 2") {
    for (int g = 1; g <= 2; ++g) {
        const auto vectors = all_vectors(2 * g);
        for (const auto& w : all_forms(g))
            for (const auto& x : vectors)
                for (const auto& y : vectors)
                    CHECK(evaluate(w, x ^ y) ==
                          ((evaluate(w, x) != evaluate(w, y)) != intersection_product(x, y)));
    }
}

TEST_CASE("arf is invariant under the symplectic group") {
    // exhaustive at g=1
    for (const auto& a : sp_group(1))
        for (const auto& w : all_forms(1))
            CHECK(arf(compose(w, a)) == arf(w));
    // sampled products of generators at g=2 and g=3
    std::mt19937 gen(9);
    for (int g = 2; g <= 3; ++g) {
        const auto gens = sp_generating_set(g);
        std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
        for (int trial = 0; trial < 40; ++trial) {
            const SymplecticMatrix a = gens[pick(gen)] * gens[pick(gen)] * gens[pick(gen)];
            for (const auto& w : all_forms(g))
                CHECK(arf(compose(w, a)) == arf(w));
        }
    }
}

TEST_CASE("difference_vector") {
    const QuadraticForm w = form(2, "0110");
    CHECK(difference_vector(w, w) == BitVector(4));
    CHECK(difference_vector(QuadraticForm::omega0(1), QuadraticForm::omega1(1)) == vec("11"));

    // exhaustive at g=2: (w2 - w)(x) = V.x for all x
    const auto vectors = all_vectors(4);
    for (const auto& a : all_forms(2))
        for (const auto& b : all_forms(2)) {
            const BitVector v = difference_vector(a, b);
            for (const auto& x : vectors)
                CHECK((evaluate(b, x) != evaluate(a, x)) == intersection_product(v, x));
        }
}

TEST_CASE("arf difference identity, exhaustive for g <= 2") {
    for (int g = 1; g <= 2; ++g)
        for (const auto& w : all_forms(g))
            for (const auto& w2 : all_forms(g)) {
                const BitVector v = difference_vector(w, w2);
                CHECK((arf(w2) != arf(w)) == evaluate(w, v));
            }
}

TEST_CASE("level set counts for the reference forms") {
    for (int g = 1; g <= 3; ++g) {
        const auto vectors = all_vectors(2 * g);
        std::size_t zeros0 = 0, ones0 = 0, zeros1 = 0;
        for (const auto& x : vectors) {
            if (evaluate(QuadraticForm::omega0(g), x))
                ++ones0;
            else
                ++zeros0;
            if (!evaluate(QuadraticForm::omega1(g), x))
                ++zeros1;
        }
        const std::size_t plus = (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) + 1);
        const std::size_t minus = (std::size_t{1} << (g - 1)) * ((std::size_t{1} << g) - 1);
        CHECK(zeros0 == plus);
        CHECK(ones0 == minus);
        CHECK(zeros1 == minus);
    }
}

TEST_CASE("all_forms enumerates in lexicographic basis-value order") {
    const auto forms = all_forms(1);
    REQUIRE(forms.size() == 4);
    CHECK(forms[0].basis_values() == vec("00"));
    CHECK(forms[1].basis_values() == vec("01"));
    CHECK(forms[2].basis_values() == vec("10"));
    CHECK(forms[3].basis_values() == vec("11"));
}
