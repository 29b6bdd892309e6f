#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cosetdht/gf2_codes.hpp"

namespace cosetdht {

// N = (N_0, ..., N_rho): N_i cosets have a minimum-weight member of weight i.
struct CosetLeaderSpectrum {
    int n = 0;
    int k = 0;
    std::vector<uint64_t> counts;

    int rho() const { return static_cast<int>(counts.size()) - 1; }
    uint64_t coset_count() const { return 1ull << (n - k); }
};

// Empty string when all spectrum invariants hold, else a description of the
// first violation (N_0 = 1, sum = 2^(n-k), N_i <= C(n,i), trailing count > 0,
// sphere-covering and Singleton bounds).
std::string check_spectrum(const CosetLeaderSpectrum& s);

// One minimum-weight coset representative per syndrome value.
struct CosetLeaderTable {
    int n = 0;
    int k = 0;
    std::vector<uint64_t> leader;  // indexed by syndrome
};

struct EnumerationResult {
    CosetLeaderSpectrum spectrum;
    std::optional<CosetLeaderTable> table;
};

// Visits vectors in increasing weight order; the first vector reaching a
// syndrome is that coset's leader.  Requires n - k <= 24 so the syndrome
// bitset (and optional table) fit in memory.
EnumerationResult enumerate_spectrum(const BinaryLinearCode& code, bool build_table);

int covering_radius(const CosetLeaderSpectrum& s);

std::string spectrum_to_json(const CosetLeaderSpectrum& s);
std::string spectrum_to_csv(const CosetLeaderSpectrum& s);
CosetLeaderSpectrum spectrum_from_json(const std::string& text);
CosetLeaderSpectrum load_spectrum_file(const std::string& path);

// Spectrum implied by a leader table (count leaders by weight).
CosetLeaderSpectrum spectrum_from_table(const CosetLeaderTable& t);

void save_leader_table(const CosetLeaderTable& t, const std::string& path);
// Validates the table against the code: matching n and k, and every entry's
// syndrome equal to its index.  Leader minimality is trusted from the producer.
CosetLeaderTable load_leader_table(const std::string& path, const BinaryLinearCode& code);

}  // namespace cosetdht
