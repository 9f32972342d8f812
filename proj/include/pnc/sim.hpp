#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pnc/mapping.hpp"
#include "pnc/residue.hpp"

namespace pnc {

// Worker cap: PNC_THREADS when set, otherwise the hardware parallelism.
int worker_count();

// Uplink of the two-way relay: both nodes transmit simultaneously with unit
// power, the relay sees hA*xA + hB*xB + noise and decodes the NC symbol.
struct ChannelConfig {
    ResidueField field;
    std::complex<double> hA;
    std::complex<double> hB;
    double snr_db = 0.0;  // P/N0 in dB with P = 1
};

struct SerEstimate {
    std::int64_t trials = 0;
    std::int64_t errors = 0;
    double ser = 0.0;
    double half_width_95 = 0.0;
};

std::complex<double> modulate(GInt w, const ResidueField& field);

// Exhaustive joint-ML decode followed by the mapping: returns
// nc_map(m, argmin over joint symbols of |y - signal point|).
GInt decode_nc(std::complex<double> y, const ChannelConfig& config, const NcMapping& m);

// Monte-Carlo NC-symbol error rate.  Each trial draws its randomness from a
// stream keyed by (seed, trial index), so the result is bit-identical for any
// worker count.
SerEstimate estimate_ser(const ChannelConfig& config, const NcMapping& m, std::int64_t trials,
                         std::uint64_t seed);

struct CompareRow {
    NcMapping mapping;
    SerEstimate est;
    bool voronoi_optimal = false;  // the d_min-argmax mapping for this channel
};

// SER of every canonical mapping under common random numbers (same symbol and
// noise draws for all rows); the Voronoi-optimal row is flagged.
std::vector<CompareRow> compare_mappings(const ChannelConfig& config, std::int64_t trials,
                                         std::uint64_t seed);

}  // namespace pnc
