#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

#include "pnc/mapping.hpp"
#include "pnc/residue.hpp"

namespace pnc {

// A difference of two joint symbols.  distance_valid: both components are
// differences of field elements and the pair is not (0, 0).  nc_valid:
// additionally neither component is zero.
struct DifferencePair {
    GInt dA;
    GInt dB;
    bool distance_valid = false;
    bool nc_valid = false;

    friend bool operator==(const DifferencePair&, const DifferencePair&) = default;
};

// A coprime distance-valid pair, one representative per associate class.
// Generates the zero-l_min channel gain eta = -dB/dA (infinity when dA = 0).
struct CharDiff {
    GInt dA;
    GInt dB;

    friend bool operator==(const CharDiff&, const CharDiff&) = default;
};

// Deterministic order for tie-breaking and output.
bool chardiff_less(const CharDiff& a, const CharDiff& b);

// Scale (dA, dB) by the unit that turns the reference component (dA, or dB
// when dA = 0) into its canonical associate.
CharDiff normalize_chardiff(GInt dA, GInt dB);

// Lambda: all differences of two field elements, sorted; contains 0.
std::vector<GInt> component_differences(const ResidueField& field);

// Same enumeration over an explicit representative list (the q = 2 demo set).
std::vector<GInt> component_differences_of(const std::vector<GInt>& elements);

// Hard-coded representatives for the q = 2 vector-formulation demo; q = 2 is
// not a Gaussian prime so no ResidueField exists for it.
std::vector<GInt> q2_demo_elements();

// Delta: every (dA, dB) in Lambda x Lambda except (0, 0), flags filled in.
std::vector<DifferencePair> difference_set(const ResidueField& field);

struct ValidityReport {
    std::int64_t max_component_norm = 0;   // largest norm(delta) over Lambda
    std::int64_t necessary_bound = 0;      // 2*norm(q) - 4*qR + 2 for canonical q
    std::int64_t components_at_bound = 0;  // deltas meeting the bound exactly
    std::int64_t sufficient_checked = 0;   // nonzero norms < norm(q) confirmed present
};

// Checks the necessary norm bound on valid differences and the sufficient
// smallness condition (every nonzero delta with norm < norm(q) is valid);
// throws if either fails.
ValidityReport validity_bounds_check(const ResidueField& field);

// All characteristic differences: unit-gcd distance-valid pairs, one per
// associate class, sorted; includes the trivial generators (1,0) and (0,1).
std::vector<CharDiff> characteristic_set(const ResidueField& field);

// Characteristic set with O(1) membership lookups; built once per field.
class CharSetIndex {
public:
    static CharSetIndex build(const ResidueField& field);

    const std::vector<CharDiff>& items() const { return items_; }

    // Membership of the associate class of (dA, dB); inputs need not be
    // normalized.
    bool contains(GInt dA, GInt dB) const;

private:
    std::vector<CharDiff> items_;
    PairSet keys_;
};

// Q_q membership in the (kappa, tau) component order of the adjacency
// criteria: true iff some unit scaling of (k, t)/gcd(k, t) corresponds to a
// stored characteristic difference (dA, dB) = (tau, -kappa).
bool in_Qq(GInt k, GInt t, const CharSetIndex& charset);

// The closed convex hull of Lambda (equivalently twice the hull of the field
// elements), with exact integer membership tests.
class ConvexRegion {
public:
    static ConvexRegion build(const ResidueField& field);

    bool contains(GInt g) const;
    const std::vector<GInt>& hull() const { return hull_; }

private:
    std::vector<GInt> hull_;  // counter-clockwise, no repeated endpoint
};

inline bool convex_region_contains(GInt g, const ConvexRegion& region) { return region.contains(g); }

}  // namespace pnc
