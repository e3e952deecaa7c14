#include <gtest/gtest.h>

#include "printers.h"
#include "random_objects.h"
#include "reduction_example.h"
#include "stabnf/gf2.h"

namespace stabnf {
namespace {

using testing::Rng;

TEST(BitVector, XorAndInvolution) {
    auto x = BitVector::from_bits({1, 0, 0, 1});
    auto y = BitVector::from_bits({0, 0, 1, 1});
    EXPECT_EQ(x ^ y, BitVector::from_bits({1, 0, 1, 0}));
    EXPECT_TRUE((x ^ x).is_zero());
    EXPECT_EQ(x ^ BitVector(4), x);
}

TEST(BitVector, WideVectorsCrossWordBoundaries) {
    BitVector x(130);
    x.set(0, true);
    x.set(64, true);
    x.set(129, true);
    EXPECT_EQ(x.popcount(), 3u);
    EXPECT_EQ(x.support(), (std::vector<size_t>{0, 64, 129}));
    x.swap_bits(0, 100);
    EXPECT_FALSE(x[0]);
    EXPECT_TRUE(x[100]);
    EXPECT_TRUE(x.dot(BitVector::basis(130, 129)));
    EXPECT_THROW(x ^= BitVector(129), std::invalid_argument);
}

TEST(BitVector, StringRoundTrip) {
    auto x = BitVector::from_string("0110010");
    EXPECT_EQ(x.str(), "0110010");
    EXPECT_TRUE(x[1]);
    EXPECT_FALSE(x[0]);
}

TEST(BitMatrix, TransvectionOnEitherSide) {
    auto t01 = BitMatrix::from_rows({"11", "01"});
    EXPECT_EQ(transvect_left(BitMatrix::identity(2), 0, 1), t01);
    EXPECT_EQ(transvect_right(BitMatrix::identity(2), 0, 1), t01);
}

TEST(BitMatrix, TransvectionsAreInvolutions) {
    Rng rng(1);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 2 + rng() % 9;
        BitMatrix m = testing::random_matrix(rng, n);
        size_t i = rng() % n;
        size_t j = (i + 1 + rng() % (n - 1)) % n;
        EXPECT_EQ(transvect_left(transvect_left(m, i, j), i, j), m);
        EXPECT_EQ(transvect_right(transvect_right(m, i, j), i, j), m);
    }
}

TEST(BitMatrix, InPlaceOperationsMatchProducts) {
    Rng rng(2);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 2 + rng() % 9;
        BitMatrix m = testing::random_matrix(rng, n);
        size_t i = rng() % n;
        size_t j = (i + 1 + rng() % (n - 1)) % n;
        BitMatrix t = transvect_left(BitMatrix::identity(n), i, j);
        EXPECT_EQ(transvect_left(m, i, j), t * m);
        EXPECT_EQ(transvect_right(m, i, j), m * t);
    }
}

TEST(BitMatrix, WorkedReductionSteps) {
    BitMatrix b = testing::example_b_matrix();
    b.transvect_left(5, 3);
    b.transvect_right(3, 5);
    EXPECT_EQ(b, testing::example_first_step());
    b.transvect_left(1, 0);
    b.transvect_left(4, 0);
    b.transvect_right(0, 1);
    b.transvect_right(0, 4);
    EXPECT_EQ(b, testing::example_second_step());
}

TEST(BitMatrix, InvertKnownMatrices) {
    EXPECT_EQ(invert(BitMatrix::identity(5)), BitMatrix::identity(5));
    BitMatrix t = transvect_left(BitMatrix::identity(4), 2, 0);
    EXPECT_EQ(invert(t), t);
    BitMatrix a = testing::example_a();
    EXPECT_TRUE((invert(a) * a).is_identity());
    EXPECT_TRUE((a * invert(a)).is_identity());
    EXPECT_THROW(invert(BitMatrix::from_rows({"11", "11"})), SingularMatrixError);
}

TEST(BitMatrix, InvertRandom) {
    Rng rng(3);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng() % 40;
        BitMatrix a = testing::random_invertible(rng, n);
        EXPECT_TRUE((invert(a) * a).is_identity());
        EXPECT_EQ(rank(a), n);
    }
}

TEST(BitMatrix, TransposeInverse) {
    EXPECT_EQ(transpose_inverse(BitMatrix::identity(3)), BitMatrix::identity(3));
    EXPECT_EQ(transpose_inverse(transvect_left(BitMatrix::identity(2), 0, 1)),
              transvect_left(BitMatrix::identity(2), 1, 0));
}

TEST(BitMatrix, Rank) {
    EXPECT_EQ(rank(BitMatrix(4)), 0u);
    EXPECT_EQ(rank(BitMatrix::from_rows({"110", "011", "101"})), 2u);
    EXPECT_EQ(rank(testing::example_b_matrix()), 6u);
}

TEST(TransvectionWord, EvaluatesToProduct) {
    EXPECT_TRUE(word_to_matrix({}, 3).is_identity());
    TransvectionWord swap{GlLetter::transvection(0, 2), GlLetter::transvection(2, 0),
                          GlLetter::transvection(0, 2)};
    EXPECT_EQ(word_to_matrix(swap, 3), word_to_matrix({GlLetter::transposition(0, 2)}, 3));
    EXPECT_EQ(word_to_matrix(swap, 3), BitMatrix::from_rows({"001", "010", "100"}));
}

TEST(TransvectionWord, WorkedExampleWord) {
    TransvectionWord word = TransvectionWord::parse(testing::kExampleWord);
    EXPECT_EQ(word.size(), 9u);
    EXPECT_EQ(word.str(), testing::kExampleWord);
    EXPECT_EQ(word_to_matrix(word, 7), testing::example_a());
}

TEST(TransvectionWord, ParseRejectsGarbage) {
    EXPECT_THROW(TransvectionWord::parse("[01"), std::invalid_argument);
    EXPECT_THROW(TransvectionWord::parse("[00]"), std::invalid_argument);
    EXPECT_THROW(TransvectionWord::parse("x"), std::invalid_argument);
    EXPECT_EQ(TransvectionWord::parse("[10,3](2,11)").size(), 2u);
}

TEST(TransvectionWord, ConcatenationIsMultiplication) {
    Rng rng(4);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 2 + rng() % 8;
        TransvectionWord w1 = testing::random_word(rng, n, rng() % 20);
        TransvectionWord w2 = testing::random_word(rng, n, rng() % 20);
        TransvectionWord w = w1;
        w.append(w2);
        EXPECT_EQ(word_to_matrix(w, n), word_to_matrix(w1, n) * word_to_matrix(w2, n));
        EXPECT_EQ(word_to_matrix(w1.inverse(), n), invert(word_to_matrix(w1, n)));
        EXPECT_EQ(word_to_matrix(w1.transpose_inverse(), n), transpose_inverse(word_to_matrix(w1, n)));
    }
}

TEST(Synthesis, ReproducesMatrix) {
    Rng rng(5);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng() % 30;
        BitMatrix a = testing::random_invertible(rng, n);
        TransvectionWord w = synthesize_word(a);
        EXPECT_LE(w.size(), n * n);
        for (const auto &letter : w.letters) {
            EXPECT_FALSE(letter.is_transposition());
        }
        EXPECT_EQ(word_to_matrix(w, n), a);
    }
    EXPECT_THROW(synthesize_word(BitMatrix(3)), SingularMatrixError);
}

TEST(GeneralLinearGroup, Orders) {
    EXPECT_EQ(testing::all_invertible(1).size(), 1u);
    EXPECT_EQ(testing::all_invertible(2).size(), 6u);
    EXPECT_EQ(testing::all_invertible(3).size(), 168u);
}

}  // namespace
}  // namespace stabnf
