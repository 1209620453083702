#include <doctest.h>

#include <random>
#include <vector>

#include "spincover/bits.hpp"

using namespace spincover;

namespace {

// Independent naive row-reduction over int vectors; oracle for rank().
int naive_rank(const std::vector<std::vector<int>>& m) {
    std::vector<std::vector<int>> a = m;
    const int rows = static_cast<int>(a.size());
    const int cols = static_cast<int>(a[0].size());
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c]) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        std::swap(a[pivot], a[r]);
        for (int i = 0; i < rows; ++i)
            if (i != r && a[i][c])
                for (int j = 0; j < cols; ++j)
                    a[i][j] ^= a[r][j];
        ++r;
    }
    return r;
}

BitMatrix random_matrix(int rows, int cols, std::mt19937& gen) {
    BitMatrix m(rows, cols);
    std::bernoulli_distribution bit(0.5);
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j)
            m.set(i, j, bit(gen));
    return m;
}

} // namespace

TEST_CASE("BitVector basics and 1-based bounds") {
    BitVector v(4);
    CHECK(v.length() == 4);
    CHECK_FALSE(v.any());
    v.set(1, true);
    v.set(4, true);
    CHECK(v.get(1));
    CHECK_FALSE(v.get(2));
    CHECK(v.to_string() == "1001");
    CHECK(v == BitVector::from_string("1001"));
    CHECK_THROWS_AS(v.get(0), std::out_of_range);
    CHECK_THROWS_AS(v.get(5), std::out_of_range);
    CHECK_THROWS_AS(v.set(0, true), std::out_of_range);
    CHECK_THROWS_AS(BitVector(0), std::invalid_argument);
    CHECK_THROWS_AS(BitVector(65), std::invalid_argument);
    CHECK_THROWS_AS(BitVector::from_string("10x1"), std::invalid_argument);
    // different lengths are never equal, even if both are zero
    CHECK_FALSE(BitVector(3) == BitVector(4));
}

TEST_CASE("mat_mul") {
    const BitMatrix i2 = BitMatrix::identity(2);
    CHECK(mat_mul(i2, i2) == i2);

    const BitMatrix shear = BitMatrix::from_strings({"11", "01"});
    CHECK(mat_mul(shear, shear) == i2); // self-inverse over GF(2)

    const BitMatrix swap = BitMatrix::from_strings({"01", "10"});
    CHECK(mat_mul(swap, i2) == swap);

    const BitMatrix tall(3, 2);
    CHECK_THROWS_AS(mat_mul(tall, tall), std::invalid_argument);
}

TEST_CASE("mat_mul associativity on random conformable triples") {
    std::mt19937 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        const BitMatrix a = random_matrix(4, 5, gen);
        const BitMatrix b = random_matrix(5, 3, gen);
        const BitMatrix c = random_matrix(3, 6, gen);
        CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    }
}

TEST_CASE("mat_inverse") {
    CHECK(*mat_inverse(BitMatrix::identity(3)) == BitMatrix::identity(3));
    const BitMatrix shear = BitMatrix::from_strings({"11", "01"});
    CHECK(*mat_inverse(shear) == shear);
    CHECK_FALSE(mat_inverse(BitMatrix::from_strings({"11", "11"})).has_value());
    CHECK_THROWS_AS(mat_inverse(BitMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("mat_inverse on random invertible matrices") {
    std::mt19937 gen(13);
    int inverted = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const BitMatrix a = random_matrix(6, 6, gen);
        const auto inv = mat_inverse(a);
        if (!inv)
            continue;
        ++inverted;
        CHECK(mat_mul(a, *inv) == BitMatrix::identity(6));
        CHECK(mat_mul(*inv, a) == BitMatrix::identity(6));
    }
    CHECK(inverted > 50); // over half of random GF(2) matrices are invertible
}

TEST_CASE("rank") {
    CHECK(rank(BitMatrix(3, 3)) == 0);
    CHECK(rank(BitMatrix::identity(4)) == 4);
    CHECK(rank(BitMatrix::from_strings({"11", "11"})) == 1);
}

TEST_CASE("rank matches a naive eliminator on random small matrices") {
    std::mt19937 gen(17);
    std::uniform_int_distribution<int> dim(1, 8);
    for (int trial = 0; trial < 300; ++trial) {
        const int rows = dim(gen), cols = dim(gen);
        const BitMatrix m = random_matrix(rows, cols, gen);
        std::vector<std::vector<int>> naive(static_cast<std::size_t>(rows),
                                            std::vector<int>(static_cast<std::size_t>(cols)));
        for (int i = 1; i <= rows; ++i)
            for (int j = 1; j <= cols; ++j)
                naive[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
                    m.get(i, j) ? 1 : 0;
        CHECK(rank(m) == naive_rank(naive));
    }
}

TEST_CASE("rank(a) equals rank of inverse-composable products") {
    // invertible row/column transforms preserve rank
    std::mt19937 gen(23);
    for (int trial = 0; trial < 50; ++trial) {
        const BitMatrix m = random_matrix(5, 5, gen);
        const BitMatrix p = random_matrix(5, 5, gen);
        if (!mat_inverse(p))
            continue;
        CHECK(rank(mat_mul(p, m)) == rank(m));
    }
}
