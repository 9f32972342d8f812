#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pnc/residue.hpp"

namespace pnc {

// Linear NC mapping w_N = alpha*w_A + beta*w_B (mod q); both coefficients are
// nonzero residues.
struct NcMapping {
    GInt alpha;
    GInt beta;

    friend bool operator==(const NcMapping&, const NcMapping&) = default;
};

enum class Side { A, B };

struct GIntPairHash {
    std::size_t operator()(const std::pair<GInt, GInt>& p) const {
        GIntHash h;
        return h(p.first) * 0x100000001b3ull ^ h(p.second);
    }
};

using PairSet = std::unordered_set<std::pair<GInt, GInt>, GIntPairHash>;

// One coset: the joint symbols sharing an NC symbol.
struct CosetClass {
    GInt nc_symbol;
    std::vector<std::pair<GInt, GInt>> members;  // sorted
};

struct CosetPartition {
    NcMapping mapping;
    std::vector<CosetClass> classes;  // sorted by nc_symbol
};

// Throws if either coefficient vanishes mod q.
void validate_mapping(const NcMapping& m, const ResidueField& field);

GInt nc_map(const NcMapping& m, GInt wA, GInt wB, const ResidueField& field);

// Inverts nc_map given one's own symbol: side A recovers w_B and vice versa.
GInt recover_partner(GInt wN, const NcMapping& m, GInt own, Side side, const ResidueField& field);

// True iff the difference pair collapses onto one NC symbol:
// alpha*dA + beta*dB = 0 (mod q).
bool clusters(const NcMapping& m, GInt dA, GInt dB, const ResidueField& field);

// All norm(q) mod-q difference pairs clustered by m: {v*(-beta, alpha) mod q}.
PairSet clustered_set(const NcMapping& m, const ResidueField& field);

CosetPartition cosets(const NcMapping& m, const ResidueField& field);

// Isomorphism-class representative (beta^-1 * alpha, 1).
NcMapping canonicalize(const NcMapping& m, const ResidueField& field);

// Same coset structure up to relabeling; decided via canonical forms.
bool isomorphic(const NcMapping& m1, const NcMapping& m2, const ResidueField& field);

// Compares the unlabeled partitions directly (test cross-check for isomorphic).
bool same_unlabeled_partition(const CosetPartition& p1, const CosetPartition& p2);

// The mapping (-(dA)^-1 * dB, 1) clustering an NC-valid pair.
NcMapping mapping_from_cluster(GInt dA, GInt dB, const ResidueField& field);

// Vector-formulation dual mapping over GF(q), q a real integer prime: the
// rotation-matrix coefficient pair (aR, aI) acting on (wR, wI) as
// [[aR, -aI], [aI, aR]].  Solvable iff dA_R^2 + dA_I^2 is invertible mod q.
struct DualMapping {
    std::int64_t aR;
    std::int64_t aI;
};

std::optional<DualMapping> vector_dual_mapping(std::int64_t q, GInt dA_modq, GInt dB_modq);

}  // namespace pnc
