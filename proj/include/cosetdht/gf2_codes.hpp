#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cosetdht/errors.hpp"

namespace cosetdht {

// Binary vector of length n <= 64 packed into one machine word, bit i = coordinate i.
class BitVector {
  public:
    BitVector() = default;
    BitVector(int n, uint64_t bits);

    int length() const { return n_; }
    uint64_t bits() const { return bits_; }
    int weight() const { return std::popcount(bits_); }
    bool get(int i) const;

    BitVector operator^(const BitVector& o) const;
    bool operator==(const BitVector& o) const = default;

  private:
    int n_ = 0;
    uint64_t bits_ = 0;
};

// Row-major matrix over GF(2); each row packed like a BitVector.
struct GF2Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<uint64_t> row;

    GF2Matrix() = default;
    GF2Matrix(int r, int c);
    bool get(int r, int c) const { return (row[static_cast<size_t>(r)] >> c) & 1u; }
    void set(int r, int c, bool v);
};

struct SystematicForm {
    GF2Matrix g_sys;  // [I_k | P]
    // g_sys column j originated from input column column_permutation[j]
    std::vector<int> column_permutation;
};

int gf2_rank(GF2Matrix m);

// Row-reduce with column swaps until the left block is I_k.  Throws RankDeficient
// if rank(G) < k.  The permuted row space equals the input row space permuted.
SystematicForm systematic_form(const GF2Matrix& g);

// H = [P^T | I_{n-k}] from G_sys = [I_k | P]; satisfies G_sys * H^T = 0.
GF2Matrix parity_check(const GF2Matrix& g_sys);

BitVector syndrome(const GF2Matrix& h, const BitVector& v);

class BinaryLinearCode {
  public:
    static BinaryLinearCode from_generator(GF2Matrix g);
    static BinaryLinearCode from_parity(GF2Matrix h);

    int n() const { return n_; }
    int k() const { return k_; }
    const GF2Matrix& generator() const { return g_; }
    const GF2Matrix& parity() const { return h_; }

    // H * v^T packed into n-k bits (bit r = <H row r, v>).
    uint64_t syndrome_bits(uint64_t v) const;
    BitVector syndrome(const BitVector& v) const;

    // Codeword for a k-bit message (row combination of G).
    uint64_t encode_bits(uint64_t message) const;

  private:
    BinaryLinearCode(int n, int k, GF2Matrix g, GF2Matrix h);

    int n_;
    int k_;
    GF2Matrix g_;
    GF2Matrix h_;
    std::vector<uint64_t> column_syndrome_;  // syndrome of e_j, one per coordinate
};

const std::vector<std::string>& catalog_names();
BinaryLinearCode catalog_lookup(const std::string& name);

// Text format: first line "n k", then k lines of n characters in {0,1}.
// Parse errors name line and column, prefixed with `source` when given.
BinaryLinearCode parse_generator_text(std::istream& in, const std::string& source = "");
BinaryLinearCode load_generator_file(const std::string& path);

}  // namespace cosetdht
