#include "cosetdht/coset_spectrum.hpp"

#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "cosetdht/binomial.hpp"

namespace cosetdht {

std::string check_spectrum(const CosetLeaderSpectrum& s) {
    if (s.n < 1 || s.n > 64 || s.k < 1 || s.k > s.n) return "need 1 <= k <= n <= 64";
    if (s.n - s.k > 63) return "coset count 2^(n-k) exceeds 64-bit range";
    if (s.counts.empty()) return "counts is empty";
    if (s.counts[0] != 1) return "N_0 = " + std::to_string(s.counts[0]) + ", expected 1";
    if (s.counts.back() == 0) return "trailing count is zero (spectrum not trimmed)";
    int rho = s.rho();
    if (rho > s.n - s.k)
        return "rho = " + std::to_string(rho) + " violates the Singleton bound n-k = " +
               std::to_string(s.n - s.k);
    unsigned __int128 sum = 0, balls = 0;
    for (int i = 0; i <= rho; ++i) {
        uint64_t cap = binomial(s.n, i);
        if (s.counts[static_cast<size_t>(i)] > cap)
            return "N_" + std::to_string(i) + " = " + std::to_string(s.counts[static_cast<size_t>(i)]) +
                   " exceeds C(n," + std::to_string(i) + ") = " + std::to_string(cap);
        sum += s.counts[static_cast<size_t>(i)];
        balls += cap;
    }
    if (sum != s.coset_count())
        return "counts sum to " + std::to_string(static_cast<uint64_t>(sum)) + ", expected 2^(n-k) = " +
               std::to_string(s.coset_count());
    if (balls < s.coset_count()) return "sphere-covering bound violated";
    return "";
}

namespace {

// Gosper's hack: next bit pattern with the same popcount, ascending numeric order.
uint64_t next_fixed_weight(uint64_t v) {
    uint64_t c = v & (~v + 1);
    uint64_t r = v + c;
    return r | (((v ^ r) >> 2) / c);
}

}  // namespace

EnumerationResult enumerate_spectrum(const BinaryLinearCode& code, bool build_table) {
    int n = code.n(), m = code.n() - code.k();
    if (m > 24)
        throw SyndromeSpaceTooLarge("n - k = " + std::to_string(m) +
                                    " > 24: syndrome table of 2^(n-k) entries will not fit");
    uint64_t total = 1ull << m;
    std::vector<uint64_t> seen((total + 63) / 64, 0);
    EnumerationResult out;
    if (build_table) out.table = CosetLeaderTable{n, code.k(), std::vector<uint64_t>(total, 0)};

    std::vector<uint64_t> counts;
    uint64_t found = 0;
    for (int w = 0; w <= n && found < total; ++w) {
        uint64_t cnt = 0;
        uint64_t v = (w == 0) ? 0 : (w == 64 ? ~0ull : (1ull << w) - 1);
        uint64_t last = (w == 0) ? 0 : v << (n - w);
        for (;;) {
            uint64_t s = code.syndrome_bits(v);
            if (!((seen[s >> 6] >> (s & 63)) & 1u)) {
                seen[s >> 6] |= 1ull << (s & 63);
                ++cnt;
                if (out.table) out.table->leader[s] = v;
            }
            if (v == last) break;
            v = next_fixed_weight(v);
        }
        // every weight below rho contributes at least one leader
        if (cnt == 0) throw InternalError("coset enumeration found a gap in leader weights");
        counts.push_back(cnt);
        found += cnt;
    }
    if (found != total) throw InternalError("coset enumeration did not reach every syndrome");

    out.spectrum = CosetLeaderSpectrum{n, code.k(), std::move(counts)};
    std::string err = check_spectrum(out.spectrum);
    if (!err.empty()) throw InternalError("enumerated spectrum invalid: " + err);
    return out;
}

int covering_radius(const CosetLeaderSpectrum& s) {
    for (int i = static_cast<int>(s.counts.size()) - 1; i >= 0; --i)
        if (s.counts[static_cast<size_t>(i)] != 0) return i;
    return 0;
}

std::string spectrum_to_json(const CosetLeaderSpectrum& s) {
    nlohmann::ordered_json j;
    j["n"] = s.n;
    j["k"] = s.k;
    j["rho"] = s.rho();
    j["counts"] = s.counts;
    return j.dump();
}

std::string spectrum_to_csv(const CosetLeaderSpectrum& s) {
    std::string out = std::to_string(s.n) + "," + std::to_string(s.k) + "," + std::to_string(s.rho());
    for (uint64_t c : s.counts) out += "," + std::to_string(c);
    return out;
}

CosetLeaderSpectrum spectrum_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("spectrum JSON: ") + e.what());
    }
    CosetLeaderSpectrum s;
    try {
        s.n = j.at("n").get<int>();
        s.k = j.at("k").get<int>();
        s.counts = j.at("counts").get<std::vector<uint64_t>>();
        if (j.contains("rho") && j.at("rho").get<int>() != s.rho())
            throw InputError("spectrum JSON: rho field disagrees with counts length");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("spectrum JSON: ") + e.what());
    }
    std::string err = check_spectrum(s);
    if (!err.empty()) throw InputError("spectrum JSON: " + err);
    return s;
}

CosetLeaderSpectrum load_spectrum_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open spectrum file '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return spectrum_from_json(text);
    } catch (const InputError& e) {
        throw InputError("'" + path + "': " + e.what());
    }
}

CosetLeaderSpectrum spectrum_from_table(const CosetLeaderTable& t) {
    std::vector<uint64_t> counts;
    for (uint64_t v : t.leader) {
        int w = std::popcount(v);
        if (static_cast<size_t>(w) >= counts.size()) counts.resize(static_cast<size_t>(w) + 1, 0);
        ++counts[static_cast<size_t>(w)];
    }
    CosetLeaderSpectrum s{t.n, t.k, std::move(counts)};
    std::string err = check_spectrum(s);
    if (!err.empty()) throw InputError("leader table implies an invalid spectrum: " + err);
    return s;
}

namespace {
constexpr char kTableMagic[8] = {'C', 'D', 'H', 'T', 'L', 'T', '1', '\n'};
}

void save_leader_table(const CosetLeaderTable& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write leader table '" + path + "'");
    out.write(kTableMagic, sizeof kTableMagic);
    uint32_t n = static_cast<uint32_t>(t.n), k = static_cast<uint32_t>(t.k);
    out.write(reinterpret_cast<const char*>(&n), 4);
    out.write(reinterpret_cast<const char*>(&k), 4);
    out.write(reinterpret_cast<const char*>(t.leader.data()),
              static_cast<std::streamsize>(t.leader.size() * 8));
    if (!out) throw InputError("failed writing leader table '" + path + "'");
}

CosetLeaderTable load_leader_table(const std::string& path, const BinaryLinearCode& code) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open leader table '" + path + "'");
    char magic[8];
    in.read(magic, 8);
    if (!in || !std::equal(magic, magic + 8, kTableMagic))
        throw InputError("'" + path + "' is not a leader table dump");
    uint32_t n = 0, k = 0;
    in.read(reinterpret_cast<char*>(&n), 4);
    in.read(reinterpret_cast<char*>(&k), 4);
    if (!in || static_cast<int>(n) != code.n() || static_cast<int>(k) != code.k())
        throw InputError("leader table '" + path + "' is for [" + std::to_string(n) + "," +
                         std::to_string(k) + "], code is [" + std::to_string(code.n()) + "," +
                         std::to_string(code.k()) + "]");
    CosetLeaderTable t{code.n(), code.k(), {}};
    t.leader.resize(1ull << (code.n() - code.k()));
    in.read(reinterpret_cast<char*>(t.leader.data()),
            static_cast<std::streamsize>(t.leader.size() * 8));
    if (!in) throw InputError("leader table '" + path + "' is truncated");
    const uint64_t mask = (code.n() == 64) ? ~0ull : (1ull << code.n()) - 1;
    for (uint64_t s = 0; s < t.leader.size(); ++s) {
        if (t.leader[s] & ~mask)
            throw InputError("leader table '" + path + "' entry " + std::to_string(s) +
                             " has bits beyond coordinate n");
        if (code.syndrome_bits(t.leader[s]) != s)
            throw InputError("leader table '" + path + "' entry " + std::to_string(s) +
                             " has the wrong syndrome for this code");
    }
    return t;
}

}  // namespace cosetdht
