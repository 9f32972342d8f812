#include "pnc/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pnc {

ChannelGain gain_of(const CharDiff& cd) {
    if (is_zero(cd.dA)) return ChannelGain::infinity(canonical_associate(cd.dB));
    const std::complex<double> num = to_complex(-cd.dB);
    return ChannelGain::finite(num / to_complex(cd.dA));
}

bool same_gain(const CharDiff& a, const CharDiff& b) {
    return a.dB * b.dA == a.dA * b.dB;
}

double pair_distance(std::complex<double> eta, GInt dA, GInt dB) {
    return std::abs(eta * to_complex(dA) + to_complex(dB));
}

LminResult l_min(std::complex<double> eta, const CharSetIndex& charset) {
    LminResult best;
    bool first = true;
    // The set is sorted, so keeping the first strict minimum realizes the
    // documented tie-break.
    for (const CharDiff& cd : charset.items()) {
        const double d = pair_distance(eta, cd.dA, cd.dB);
        if (first || d < best.value) {
            best = {d, cd};
            first = false;
        }
    }
    if (first) throw std::logic_error("l_min over an empty characteristic set");
    return best;
}

std::vector<DeltaEntry> build_delta_table(const ResidueField& field) {
    std::vector<DeltaEntry> out;
    for (const DifferencePair& p : difference_set(field)) {
        out.push_back({p.dA, p.dB, field.reduce(p.dA), field.reduce(p.dB)});
    }
    return out;
}

double d_min(std::complex<double> eta, const NcMapping& m, const ResidueField& field,
             const std::vector<DeltaEntry>& delta) {
    const PairSet clustered = clustered_set(m, field);
    double best = std::numeric_limits<double>::infinity();
    for (const DeltaEntry& e : delta) {
        if (clustered.count({e.rA, e.rB})) continue;
        best = std::min(best, pair_distance(eta, e.dA, e.dB));
    }
    return best;
}

double d_min(std::complex<double> eta, const NcMapping& m, const ResidueField& field) {
    return d_min(eta, m, field, build_delta_table(field));
}

OptimalMapping optimal_mapping_bruteforce(std::complex<double> eta, const ResidueField& field,
                                          const std::vector<DeltaEntry>& delta) {
    OptimalMapping best;
    bool first = true;
    for (GInt alpha : field.elements()) {
        if (is_zero(alpha)) continue;
        const NcMapping m{alpha, GInt{1, 0}};
        const double d = d_min(eta, m, field, delta);
        if (first || d > best.dmin) {
            best = {m, d};
            first = false;
        }
    }
    if (first) throw std::logic_error("no nonzero residue to build a mapping from");
    return best;
}

std::vector<GainEntry> zero_lmin_gains(const CharSetIndex& charset, double window_radius) {
    if (!(window_radius > 0)) throw std::domain_error("window radius must be positive");
    std::vector<GainEntry> out;
    for (const CharDiff& cd : charset.items()) {
        if (is_trivial(cd)) {
            // (1, 0) owns eta = 0, (0, 1) owns eta = infinity; both always listed.
            out.push_back({gain_of(cd), cd});
            continue;
        }
        // |eta|^2 = norm(dB)/norm(dA) <= radius^2
        if (static_cast<double>(norm(cd.dB)) <=
            window_radius * window_radius * static_cast<double>(norm(cd.dA))) {
            out.push_back({gain_of(cd), cd});
        }
    }
    return out;
}

std::vector<GainEntry> zero_lmin_gains(const ResidueField& field, double window_radius) {
    return zero_lmin_gains(CharSetIndex::build(field), window_radius);
}

std::vector<GainEntry> symmetric_gains(const CharDiff& cd) {
    if (is_trivial(cd)) throw std::domain_error("symmetric gains need a nontrivial generator");
    // Exact octant test on eta = -dB*conj(dA)/norm(dA): the numerator must
    // satisfy re > 0 and 0 <= im <= re.
    const GInt num = -cd.dB * conj(cd.dA);
    if (!(num.re > 0 && num.im >= 0 && num.im <= num.re))
        throw std::domain_error("gain is outside the first octant");

    const GInt i{0, 1};
    const CharDiff transformed[7] = {
        {conj(cd.dA), i * conj(cd.dB)},     // angle pi/2 - theta
        {cd.dA, i * cd.dB},                 // angle pi/2 + theta
        {conj(cd.dA), -conj(cd.dB)},        // angle pi - theta
        {cd.dA, -cd.dB},                    // angle pi + theta
        {conj(cd.dA), -(i * conj(cd.dB))},  // angle 3*pi/2 - theta
        {cd.dA, -(i * cd.dB)},              // angle 3*pi/2 + theta
        {conj(cd.dA), conj(cd.dB)},         // angle 2*pi - theta
    };
    std::vector<GainEntry> out;
    for (const CharDiff& t : transformed) out.push_back({gain_of(t), t});
    return out;
}

NcMapping optimal_mapping_at_gain(const CharDiff& cd, const ResidueField& field) {
    if (is_trivial(cd)) throw std::domain_error("no optimal mapping at a trivial gain");
    return mapping_from_cluster(cd.dA, cd.dB, field);
}

double dmin_at_gain(const CharDiff& cd) {
    if (is_trivial(cd)) return 0.0;
    return 1.0 / std::sqrt(static_cast<double>(norm(cd.dA)));
}

std::vector<CharDiff> dmin_determining_at_gain(const CharDiff& cd, const CharSetIndex& charset) {
    if (is_trivial(cd)) throw std::domain_error("no determining set at a trivial gain");
    std::vector<CharDiff> out;
    for (const CharDiff& other : charset.items()) {
        if (norm(cd.dB * other.dA - cd.dA * other.dB) == 1) out.push_back(other);
    }
    return out;
}

}  // namespace pnc
