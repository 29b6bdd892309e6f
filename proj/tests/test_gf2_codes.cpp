#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <vector>

#include "cosetdht/gf2_codes.hpp"

using namespace cosetdht;

namespace {

GF2Matrix matrix_from_rows(int cols, std::vector<uint64_t> rows) {
    GF2Matrix m(static_cast<int>(rows.size()), cols);
    m.row = std::move(rows);
    return m;
}

// All codewords via Gray-code stepping over messages: one row XOR per step.
std::vector<uint64_t> all_codewords(const BinaryLinearCode& code) {
    std::vector<uint64_t> words(1ull << code.k());
    uint64_t cw = 0;
    words[0] = 0;
    for (uint64_t m = 1; m < words.size(); ++m) {
        cw ^= code.generator().row[static_cast<size_t>(std::countr_zero(m))];
        words[m] = cw;
    }
    std::sort(words.begin(), words.end());
    return words;
}

int min_distance(const BinaryLinearCode& code) {
    int best = code.n() + 1;
    uint64_t cw = 0;
    for (uint64_t m = 1; m < (1ull << code.k()); ++m) {
        cw ^= code.generator().row[static_cast<size_t>(std::countr_zero(m))];
        best = std::min(best, std::popcount(cw));
    }
    return best;
}

}  // namespace

TEST_CASE("BitVector basics") {
    BitVector v(3, 0b101);
    CHECK(v.length() == 3);
    CHECK(v.bits() == 0b101);
    CHECK(v.weight() == 2);
    CHECK(v.get(0));
    CHECK_FALSE(v.get(1));
    CHECK(v.get(2));

    CHECK(BitVector(3, 0xFF).bits() == 0b111);  // excess bits masked off
    CHECK(BitVector(64, ~0ull).weight() == 64);

    CHECK_THROWS_AS(BitVector(0, 0), OutOfRange);
    CHECK_THROWS_AS(BitVector(65, 0), OutOfRange);
    CHECK_THROWS_AS(v.get(3), OutOfRange);
    CHECK_THROWS_AS(v.get(-1), OutOfRange);

    BitVector w(3, 0b011);
    CHECK((v ^ w) == BitVector(3, 0b110));
    CHECK_THROWS_AS(v ^ BitVector(4, 0), LengthMismatch);
    CHECK(v == BitVector(3, 0b101));
    CHECK(v != w);
}

TEST_CASE("GF2Matrix construction and access") {
    GF2Matrix m(2, 5);
    CHECK(m.rows == 2);
    CHECK(m.cols == 5);
    m.set(1, 4, true);
    CHECK(m.get(1, 4));
    m.set(1, 4, false);
    CHECK_FALSE(m.get(1, 4));

    CHECK_THROWS_AS(GF2Matrix(0, 3), InputError);
    CHECK_THROWS_AS(GF2Matrix(2, 0), InputError);
    CHECK_THROWS_AS(GF2Matrix(2, 65), InputError);
}

TEST_CASE("gf2_rank") {
    CHECK(gf2_rank(matrix_from_rows(3, {0b001, 0b010, 0b100})) == 3);
    CHECK(gf2_rank(matrix_from_rows(3, {0b011, 0b011})) == 1);
    CHECK(gf2_rank(matrix_from_rows(3, {0b000})) == 0);
    CHECK(gf2_rank(matrix_from_rows(4, {0b0011, 0b0110, 0b0101})) == 2);  // row3 = row1 ^ row2
    CHECK(gf2_rank(catalog_lookup("hamming_7_4").generator()) == 4);
}

TEST_CASE("systematic_form produces [I|P] spanning the permuted row space") {
    // leading columns dependent, so a column swap is forced
    GF2Matrix g = matrix_from_rows(4, {0b0101, 0b1101, 0b1010});
    SystematicForm sf = systematic_form(g);
    CHECK(sf.g_sys.rows == 3);
    CHECK(sf.g_sys.cols == 4);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(sf.g_sys.get(i, j) == (i == j));

    std::vector<int> perm = sf.column_permutation;
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    CHECK(sorted == std::vector<int>{0, 1, 2, 3});

    // codeword sets agree once g_sys coordinates are mapped back through the permutation
    auto span = [](const GF2Matrix& m) {
        std::vector<uint64_t> words(1ull << m.rows);
        uint64_t cw = 0;
        for (uint64_t x = 1; x < words.size(); ++x) {
            cw ^= m.row[static_cast<size_t>(std::countr_zero(x))];
            words[x] = cw;
        }
        std::sort(words.begin(), words.end());
        return words;
    };
    std::vector<uint64_t> sys_words = span(sf.g_sys);
    std::vector<uint64_t> mapped;
    for (uint64_t w : sys_words) {
        uint64_t u = 0;
        for (int j = 0; j < 4; ++j)
            if ((w >> j) & 1u) u |= 1ull << perm[static_cast<size_t>(j)];
        mapped.push_back(u);
    }
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == span(g));

    CHECK_THROWS_AS(systematic_form(matrix_from_rows(3, {0b011, 0b011})), RankDeficient);
    CHECK_THROWS_AS(systematic_form(matrix_from_rows(3, {0b000})), RankDeficient);
}

TEST_CASE("parity_check of a systematic generator") {
    // [3,2] single parity check code: G = [I_2 | 1 1]^T columns
    GF2Matrix g = matrix_from_rows(3, {0b101, 0b110});
    GF2Matrix h = parity_check(g);
    CHECK(h.rows == 1);
    CHECK(h.cols == 3);
    CHECK(h.row[0] == 0b111);

    for (int i = 0; i < g.rows; ++i)
        CHECK(syndrome(h, BitVector(3, g.row[static_cast<size_t>(i)])).bits() == 0);

    CHECK_THROWS_AS(parity_check(matrix_from_rows(3, {0b101, 0b101})), InputError);
    CHECK_THROWS_AS(parity_check(matrix_from_rows(2, {0b01, 0b10})), InputError);
}

TEST_CASE("syndrome length checking") {
    GF2Matrix h = matrix_from_rows(3, {0b111});
    CHECK_THROWS_AS(syndrome(h, BitVector(4, 0)), LengthMismatch);
    CHECK(syndrome(h, BitVector(3, 0b011)).bits() == 0);
    CHECK(syndrome(h, BitVector(3, 0b001)).bits() == 1);
}

TEST_CASE("catalog codes have the expected parameters") {
    const struct {
        const char* name;
        int n, k, dmin;  // dmin checked only when k <= 12
    } expected[] = {
        {"hamming_7_4", 7, 4, 3},     {"rm_8_4", 8, 4, 4},
        {"hamming_15_11", 15, 11, 3}, {"rm_16_5", 16, 5, 8},
        {"golay_23_12", 23, 12, 7},   {"ext_golay_24_12", 24, 12, 8},
        {"bch_31_11", 31, 11, 11},    {"hamming_31_26", 31, 26, 3},
    };
    CHECK(catalog_names().size() == 8);
    for (const auto& e : expected) {
        CAPTURE(e.name);
        BinaryLinearCode code = catalog_lookup(e.name);
        CHECK(code.n() == e.n);
        CHECK(code.k() == e.k);
        CHECK(code.generator().rows == e.k);
        CHECK(code.generator().cols == e.n);
        CHECK(code.parity().rows == e.n - e.k);
        CHECK(code.parity().cols == e.n);
        if (e.k <= 12) CHECK(min_distance(code) == e.dmin);
        // every generator row lies in the kernel of H
        for (int i = 0; i < e.k; ++i)
            CHECK(code.syndrome_bits(code.generator().row[static_cast<size_t>(i)]) == 0);
    }
    CHECK_THROWS_AS(catalog_lookup("nonexistent"), UnknownCode);
}

TEST_CASE("Hamming parity checks index their error position") {
    for (const char* name : {"hamming_7_4", "hamming_15_11", "hamming_31_26"}) {
        CAPTURE(name);
        BinaryLinearCode code = catalog_lookup(name);
        for (int j = 0; j < code.n(); ++j)
            CHECK(code.syndrome_bits(1ull << j) == static_cast<uint64_t>(j) + 1);
    }
}

TEST_CASE("encode_bits is the row combination of G") {
    BinaryLinearCode code = catalog_lookup("hamming_7_4");
    CHECK(code.encode_bits(0) == 0);
    for (int i = 0; i < code.k(); ++i)
        CHECK(code.encode_bits(1ull << i) == code.generator().row[static_cast<size_t>(i)]);
    uint64_t m = 0b1011;
    uint64_t expect = code.generator().row[0] ^ code.generator().row[1] ^ code.generator().row[3];
    CHECK(code.encode_bits(m) == expect);
    CHECK(code.syndrome_bits(code.encode_bits(m)) == 0);
}

TEST_CASE("syndrome is linear and consistent between forms") {
    BinaryLinearCode code = catalog_lookup("golay_23_12");
    uint64_t x = 0x2fd5a3, y = 0x41lu << 10;
    uint64_t mask = (1ull << 23) - 1;
    x &= mask;
    CHECK(code.syndrome_bits(x ^ y) == (code.syndrome_bits(x) ^ code.syndrome_bits(y)));
    CHECK(code.syndrome(BitVector(23, x)).bits() == code.syndrome_bits(x));
    CHECK(code.syndrome(BitVector(23, x)).length() == 11);
}

TEST_CASE("from_generator and from_parity agree on the code") {
    BinaryLinearCode a = catalog_lookup("rm_8_4");
    BinaryLinearCode b = BinaryLinearCode::from_parity(a.parity());
    CHECK(b.n() == a.n());
    CHECK(b.k() == a.k());
    CHECK(all_codewords(a) == all_codewords(b));

    BinaryLinearCode c = BinaryLinearCode::from_generator(a.generator());
    CHECK(all_codewords(c) == all_codewords(a));
}

TEST_CASE("generator text parsing") {
    SUBCASE("round trip through the text form") {
        std::istringstream in("7 4\n1101000\n0110100\n1110010\n1010001\n");
        BinaryLinearCode code = parse_generator_text(in);
        CHECK(code.n() == 7);
        CHECK(code.k() == 4);
        CHECK(min_distance(code) == 3);
    }
    SUBCASE("CRLF and trailing blank lines are tolerated") {
        std::istringstream in("3 1\r\n111\r\n\r\n\n");
        BinaryLinearCode code = parse_generator_text(in);
        CHECK(code.n() == 3);
        CHECK(code.k() == 1);
    }
    SUBCASE("empty input") {
        std::istringstream in("");
        CHECK_THROWS_AS(parse_generator_text(in), ParseError);
    }
    SUBCASE("malformed header") {
        std::istringstream in("seven four\n");
        try {
            parse_generator_text(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
            CHECK(e.column == 1);
        }
    }
    SUBCASE("header with extra token") {
        std::istringstream in("7 4 9\n");
        CHECK_THROWS_AS(parse_generator_text(in), ParseError);
    }
    SUBCASE("dimensions out of range") {
        std::istringstream a("65 4\n");
        CHECK_THROWS_AS(parse_generator_text(a), ParseError);
        std::istringstream b("7 7\n");
        CHECK_THROWS_AS(parse_generator_text(b), ParseError);
        std::istringstream c("7 0\n");
        CHECK_THROWS_AS(parse_generator_text(c), ParseError);
    }
    SUBCASE("non-binary character is located exactly") {
        std::istringstream in("3 2\n101\n0x1\n");
        try {
            parse_generator_text(in, "inline");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
            CHECK(e.column == 2);
            CHECK(std::string(e.what()).find("inline: line 3, column 2") == 0);
        }
    }
    SUBCASE("short row") {
        std::istringstream in("4 2\n1010\n10\n");
        try {
            parse_generator_text(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
            CHECK(e.column == 3);
        }
    }
    SUBCASE("missing rows") {
        std::istringstream in("4 3\n1010\n");
        try {
            parse_generator_text(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SUBCASE("junk after the matrix") {
        std::istringstream in("3 1\n111\nextra\n");
        try {
            parse_generator_text(in);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == 3);
        }
    }
    SUBCASE("dependent rows surface as RankDeficient") {
        std::istringstream in("4 2\n1010\n1010\n");
        CHECK_THROWS_AS(parse_generator_text(in), RankDeficient);
    }
}

TEST_CASE("load_generator_file reports unopenable paths") {
    CHECK_THROWS_AS(load_generator_file("/nonexistent/gen.txt"), InputError);
}
