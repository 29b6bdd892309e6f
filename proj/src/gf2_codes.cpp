#include "cosetdht/gf2_codes.hpp"

#include <fstream>
#include <sstream>

namespace cosetdht {

namespace {

uint64_t length_mask(int n) { return n == 64 ? ~0ull : (1ull << n) - 1; }

bool inner_parity(uint64_t a, uint64_t b) { return std::popcount(a & b) & 1; }

}  // namespace

BitVector::BitVector(int n, uint64_t bits) : n_(n) {
    if (n < 1 || n > 64)
        throw OutOfRange("BitVector length " + std::to_string(n) + " outside [1, 64]");
    bits_ = bits & length_mask(n);
}

bool BitVector::get(int i) const {
    if (i < 0 || i >= n_)
        throw OutOfRange("BitVector index " + std::to_string(i) + " outside [0, " +
                         std::to_string(n_) + ")");
    return (bits_ >> i) & 1u;
}

BitVector BitVector::operator^(const BitVector& o) const {
    if (n_ != o.n_)
        throw LengthMismatch("xor of BitVectors with lengths " + std::to_string(n_) + " and " +
                             std::to_string(o.n_));
    return BitVector(n_, bits_ ^ o.bits_);
}

GF2Matrix::GF2Matrix(int r, int c) : rows(r), cols(c), row(static_cast<size_t>(r), 0) {
    if (r < 1 || c < 1 || c > 64)
        throw InputError("GF2Matrix shape " + std::to_string(r) + "x" + std::to_string(c) +
                         " unsupported (need rows >= 1, 1 <= cols <= 64)");
}

void GF2Matrix::set(int r, int c, bool v) {
    uint64_t m = 1ull << c;
    if (v)
        row[static_cast<size_t>(r)] |= m;
    else
        row[static_cast<size_t>(r)] &= ~m;
}

int gf2_rank(GF2Matrix m) {
    int rank = 0;
    for (int c = 0; c < m.cols && rank < m.rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.get(r, c)) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m.row[static_cast<size_t>(pivot)], m.row[static_cast<size_t>(rank)]);
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && m.get(r, c)) m.row[static_cast<size_t>(r)] ^= m.row[static_cast<size_t>(rank)];
        ++rank;
    }
    return rank;
}

SystematicForm systematic_form(const GF2Matrix& g) {
    GF2Matrix m = g;
    std::vector<int> perm(static_cast<size_t>(m.cols));
    for (int j = 0; j < m.cols; ++j) perm[static_cast<size_t>(j)] = j;

    for (int r = 0; r < m.rows; ++r) {
        // pivot: first column >= r with a 1 in some row >= r
        int pc = -1, pr = -1;
        for (int c = r; c < m.cols && pc < 0; ++c)
            for (int r2 = r; r2 < m.rows; ++r2)
                if (m.get(r2, c)) {
                    pc = c;
                    pr = r2;
                    break;
                }
        if (pc < 0)
            throw RankDeficient("generator matrix rank " + std::to_string(r) + " < k = " +
                                std::to_string(m.rows));
        std::swap(m.row[static_cast<size_t>(pr)], m.row[static_cast<size_t>(r)]);
        if (pc != r) {
            for (int r2 = 0; r2 < m.rows; ++r2) {
                bool a = m.get(r2, r), b = m.get(r2, pc);
                m.set(r2, r, b);
                m.set(r2, pc, a);
            }
            std::swap(perm[static_cast<size_t>(r)], perm[static_cast<size_t>(pc)]);
        }
        for (int r2 = 0; r2 < m.rows; ++r2)
            if (r2 != r && m.get(r2, r)) m.row[static_cast<size_t>(r2)] ^= m.row[static_cast<size_t>(r)];
    }
    return {std::move(m), std::move(perm)};
}

GF2Matrix parity_check(const GF2Matrix& g_sys) {
    int k = g_sys.rows, n = g_sys.cols;
    if (k >= n) throw InputError("parity_check: need k < n");
    for (int r = 0; r < k; ++r)
        if ((g_sys.row[static_cast<size_t>(r)] & length_mask(k)) != (1ull << r))
            throw InputError("parity_check: input is not in systematic form [I_k | P]");
    GF2Matrix h(n - k, n);
    for (int j = 0; j < n - k; ++j) {
        for (int i = 0; i < k; ++i) h.set(j, i, g_sys.get(i, k + j));
        h.set(j, k + j, true);
    }
    return h;
}

BitVector syndrome(const GF2Matrix& h, const BitVector& v) {
    if (v.length() != h.cols)
        throw LengthMismatch("syndrome: vector length " + std::to_string(v.length()) +
                             " != code length " + std::to_string(h.cols));
    uint64_t s = 0;
    for (int r = 0; r < h.rows; ++r)
        s |= static_cast<uint64_t>(inner_parity(h.row[static_cast<size_t>(r)], v.bits())) << r;
    return BitVector(h.rows, s);
}

BinaryLinearCode::BinaryLinearCode(int n, int k, GF2Matrix g, GF2Matrix h)
    : n_(n), k_(k), g_(std::move(g)), h_(std::move(h)) {
    if (k < 1 || k >= n || n > 64)
        throw InputError("code parameters [n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         "] need 1 <= k < n <= 64");
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < n_ - k_; ++j)
            if (inner_parity(g_.row[static_cast<size_t>(i)], h_.row[static_cast<size_t>(j)]))
                throw InternalError("code construction: G * H^T != 0");
    column_syndrome_.resize(static_cast<size_t>(n_));
    for (int j = 0; j < n_; ++j) {
        uint64_t s = 0;
        for (int r = 0; r < n_ - k_; ++r) s |= static_cast<uint64_t>(h_.get(r, j)) << r;
        column_syndrome_[static_cast<size_t>(j)] = s;
    }
}

BinaryLinearCode BinaryLinearCode::from_generator(GF2Matrix g) {
    int k = g.rows, n = g.cols;
    if (k < 1 || k >= n || n > 64)
        throw InputError("code parameters [n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                         "] need 1 <= k < n <= 64");
    SystematicForm sf = systematic_form(g);
    GF2Matrix h_sys = parity_check(sf.g_sys);
    GF2Matrix h(n - k, n);
    for (int r = 0; r < n - k; ++r)
        for (int c = 0; c < n; ++c)
            if (h_sys.get(r, c)) h.set(r, sf.column_permutation[static_cast<size_t>(c)], true);
    return BinaryLinearCode(n, k, std::move(g), std::move(h));
}

BinaryLinearCode BinaryLinearCode::from_parity(GF2Matrix h) {
    int m = h.rows, n = h.cols, k = n - m;
    if (k < 1 || m < 1 || n > 64)
        throw InputError("parity-check shape " + std::to_string(m) + "x" + std::to_string(n) +
                         " leaves no code dimension");
    SystematicForm sf = systematic_form(h);  // [I_m | Q]
    GF2Matrix g(k, n);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < m; ++j)
            if (sf.g_sys.get(j, m + i)) g.set(i, sf.column_permutation[static_cast<size_t>(j)], true);
        g.set(i, sf.column_permutation[static_cast<size_t>(m + i)], true);
    }
    return BinaryLinearCode(n, k, std::move(g), std::move(h));
}

uint64_t BinaryLinearCode::syndrome_bits(uint64_t v) const {
    uint64_t s = 0;
    v &= length_mask(n_);
    while (v) {
        s ^= column_syndrome_[static_cast<size_t>(std::countr_zero(v))];
        v &= v - 1;
    }
    return s;
}

BitVector BinaryLinearCode::syndrome(const BitVector& v) const {
    if (v.length() != n_)
        throw LengthMismatch("syndrome: vector length " + std::to_string(v.length()) +
                             " != code length " + std::to_string(n_));
    return BitVector(n_ - k_, syndrome_bits(v.bits()));
}

uint64_t BinaryLinearCode::encode_bits(uint64_t message) const {
    uint64_t c = 0;
    for (int i = 0; i < k_; ++i)
        if ((message >> i) & 1u) c ^= g_.row[static_cast<size_t>(i)];
    return c;
}

namespace {

// Parity-check columns are the binary representations of 1..n, n = 2^m - 1.
BinaryLinearCode hamming_code(int m) {
    int n = (1 << m) - 1;
    GF2Matrix h(m, n);
    for (int j = 0; j < n; ++j)
        for (int r = 0; r < m; ++r)
            if (((j + 1) >> r) & 1) h.set(r, j, true);
    return BinaryLinearCode::from_parity(std::move(h));
}

// First-order Reed-Muller RM(1, m): all-ones row plus the m coordinate rows.
BinaryLinearCode reed_muller_1(int m) {
    int n = 1 << m;
    GF2Matrix g(m + 1, n);
    g.row[0] = length_mask(n);
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < n; ++c)
            if ((c >> r) & 1) g.set(r + 1, c, true);
    return BinaryLinearCode::from_generator(std::move(g));
}

// Cyclic code from a generator polynomial: row i = g(x) * x^i.
GF2Matrix cyclic_generator(int n, int k, uint64_t gpoly) {
    GF2Matrix g(k, n);
    for (int i = 0; i < k; ++i) g.row[static_cast<size_t>(i)] = gpoly << i;
    return g;
}

constexpr uint64_t kGolayPoly = 0xC75;      // x^11+x^10+x^6+x^5+x^4+x^2+1
constexpr uint64_t kBch31Poly = 0x1626D5;   // degree 20, divides x^31 + 1

BinaryLinearCode golay_23_12() {
    return BinaryLinearCode::from_generator(cyclic_generator(23, 12, kGolayPoly));
}

BinaryLinearCode ext_golay_24_12() {
    GF2Matrix g = cyclic_generator(23, 12, kGolayPoly);
    GF2Matrix ge(12, 24);
    for (int i = 0; i < 12; ++i) {
        uint64_t r = g.row[static_cast<size_t>(i)];
        ge.row[static_cast<size_t>(i)] = r | (static_cast<uint64_t>(std::popcount(r) & 1) << 23);
    }
    return BinaryLinearCode::from_generator(std::move(ge));
}

}  // namespace

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "hamming_7_4", "rm_8_4",         "hamming_15_11", "rm_16_5",
        "golay_23_12", "ext_golay_24_12", "bch_31_11",     "hamming_31_26",
    };
    return names;
}

BinaryLinearCode catalog_lookup(const std::string& name) {
    if (name == "hamming_7_4") return hamming_code(3);
    if (name == "hamming_15_11") return hamming_code(4);
    if (name == "hamming_31_26") return hamming_code(5);
    if (name == "rm_8_4") return reed_muller_1(3);
    if (name == "rm_16_5") return reed_muller_1(4);
    if (name == "golay_23_12") return golay_23_12();
    if (name == "ext_golay_24_12") return ext_golay_24_12();
    if (name == "bch_31_11")
        return BinaryLinearCode::from_generator(cyclic_generator(31, 11, kBch31Poly));
    std::string known;
    for (const auto& c : catalog_names()) known += (known.empty() ? "" : ", ") + c;
    throw UnknownCode("unknown catalog code '" + name + "' (known: " + known + ")");
}

BinaryLinearCode parse_generator_text(std::istream& in, const std::string& source) {
    std::string line;
    if (!std::getline(in, line)) throw ParseError("missing header 'n k'", 1, 1, source);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream header(line);
    long long n = 0, k = 0;
    std::string extra;
    if (!(header >> n >> k) || (header >> extra))
        throw ParseError("header must be two integers 'n k'", 1, 1, source);
    if (n < 2 || n > 64 || k < 1 || k >= n)
        throw ParseError("need 1 <= k < n <= 64, got n=" + std::to_string(n) +
                             " k=" + std::to_string(k),
                         1, 1, source);
    GF2Matrix g(static_cast<int>(k), static_cast<int>(n));
    for (int r = 0; r < k; ++r) {
        int lineno = r + 2;
        if (!std::getline(in, line))
            throw ParseError("expected " + std::to_string(k) + " matrix rows, got " +
                                 std::to_string(r),
                             lineno, 1, source);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<long long>(line.size()) != n)
            throw ParseError("row has " + std::to_string(line.size()) + " characters, expected " +
                                 std::to_string(n),
                             lineno,
                             static_cast<int>(std::min<size_t>(line.size(), static_cast<size_t>(n))) + 1,
                             source);
        for (int c = 0; c < n; ++c) {
            char ch = line[static_cast<size_t>(c)];
            if (ch != '0' && ch != '1')
                throw ParseError(std::string("character '") + ch + "' is not 0 or 1", lineno,
                                 c + 1, source);
            if (ch == '1') g.set(r, c, true);
        }
    }
    int lineno = static_cast<int>(k) + 2;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty())
            throw ParseError("unexpected content after matrix rows", lineno, 1, source);
        ++lineno;
    }
    return BinaryLinearCode::from_generator(std::move(g));
}

BinaryLinearCode load_generator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open generator file '" + path + "'");
    return parse_generator_text(in, path);
}

}  // namespace cosetdht
