#pragma once

#include <complex>
#include <vector>

#include "pnc/diffs.hpp"
#include "pnc/mapping.hpp"
#include "pnc/residue.hpp"

namespace pnc {

// Channel gain ratio eta = hA/hB; the zero-l_min generator (0, 1) lives at
// eta = infinity, tracked separately from the finite complex values.
struct ChannelGain {
    enum class Kind { Finite, Infinite };
    Kind kind = Kind::Finite;
    std::complex<double> value{0.0, 0.0};  // meaningful when finite
    GInt unit_direction{1, 0};             // approach direction when infinite

    static ChannelGain finite(std::complex<double> v) { return {Kind::Finite, v, GInt{1, 0}}; }
    static ChannelGain infinity(GInt u = GInt{1, 0}) { return {Kind::Infinite, {0.0, 0.0}, u}; }
    bool is_finite() const { return kind == Kind::Finite; }
};

inline std::complex<double> to_complex(GInt a) {
    return {static_cast<double>(a.re), static_cast<double>(a.im)};
}

// eta = -dB/dA of a characteristic difference (infinite when dA = 0).
ChannelGain gain_of(const CharDiff& cd);

inline bool is_trivial(const CharDiff& cd) { return is_zero(cd.dA) || is_zero(cd.dB); }

// Exact same-gain test by cross multiplication: dB*dA' == dA*dB'.
bool same_gain(const CharDiff& a, const CharDiff& b);

// |eta*dA + dB|: distance between two superimposed points separated by the
// pair, up to the common power scaling.
double pair_distance(std::complex<double> eta, GInt dA, GInt dB);

struct LminResult {
    double value = 0.0;
    CharDiff argmin;
};

// Minimum pair distance over the characteristic set (equal to the minimum
// over the full difference set); deterministic tie-break by generator order.
LminResult l_min(std::complex<double> eta, const CharSetIndex& charset);

// Difference-set entry with its mod-q reduction precomputed; the reduction is
// what clustering is decided on.
struct DeltaEntry {
    GInt dA;
    GInt dB;
    GInt rA;
    GInt rB;
};

std::vector<DeltaEntry> build_delta_table(const ResidueField& field);

// Brute-force d_min: minimum distance over all valid pairs whose reduction
// the mapping does not cluster.  This is the oracle path; the fast path is
// the Voronoi module.
double d_min(std::complex<double> eta, const NcMapping& m, const ResidueField& field,
             const std::vector<DeltaEntry>& delta);
double d_min(std::complex<double> eta, const NcMapping& m, const ResidueField& field);

struct OptimalMapping {
    NcMapping mapping;
    double dmin = 0.0;
};

// Argmax of d_min over the norm(q)-1 canonical mappings (alpha, 1);
// deterministic tie-break by alpha order.
OptimalMapping optimal_mapping_bruteforce(std::complex<double> eta, const ResidueField& field,
                                          const std::vector<DeltaEntry>& delta);

struct GainEntry {
    ChannelGain gain;
    CharDiff cd;
};

// All zero-l_min gains with |eta| <= window_radius, plus eta = 0 with (1, 0)
// and eta = infinity with (0, 1); one entry per characteristic class.
std::vector<GainEntry> zero_lmin_gains(const ResidueField& field, double window_radius);
std::vector<GainEntry> zero_lmin_gains(const CharSetIndex& charset, double window_radius);

// The seven rotations/reflections of a first-octant zero-l_min gain together
// with their transformed characteristic differences; cd must be nontrivial
// with gain in the closed octant 0 <= arg <= pi/4.
std::vector<GainEntry> symmetric_gains(const CharDiff& cd);

// The closed-form optimal mapping at a zero-l_min gain: (-(dA)^-1 * dB, 1).
NcMapping optimal_mapping_at_gain(const CharDiff& cd, const ResidueField& field);

// d_min achieved at the gain under its optimal mapping: 1/|dA| (0 for the
// trivial generators).
double dmin_at_gain(const CharDiff& cd);

// All characteristic differences at normalized distance 1 from cd; these are
// the pairs that realize d_min at the gain.
std::vector<CharDiff> dmin_determining_at_gain(const CharDiff& cd, const CharSetIndex& charset);

}  // namespace pnc
