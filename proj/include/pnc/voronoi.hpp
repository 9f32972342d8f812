#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "pnc/metrics.hpp"

namespace pnc {

// |dA*eta + dB|: distance from eta to the generator's zero-l_min gain,
// weighted by |dA|.  Same quantity as pair_distance, Voronoi vocabulary.
inline double weighted_distance(const CharDiff& cd, std::complex<double> eta) {
    return pair_distance(eta, cd.dA, cd.dB);
}

// The generator whose weighted distance to eta is minimal (the Voronoi cell
// eta belongs to); ties resolved by generator order.
CharDiff cell_of(std::complex<double> eta, const CharSetIndex& charset);

// Locus of equal weighted distance between two generators: a circle when the
// weights |dA| differ, the perpendicular bisector line of the gains when they
// are equal.
struct EdgeDescriptor {
    bool is_circle = false;
    std::complex<double> center{0.0, 0.0};  // circle case
    double radius = 0.0;
    std::complex<double> point{0.0, 0.0};      // line case: a point on the line
    std::complex<double> direction{0.0, 0.0};  // line case: unit direction
};

EdgeDescriptor edge_descriptor(const CharDiff& cd_i, const CharDiff& cd_j);

// Evenly spread points of the edge locus (the line case is parameterized
// through a tangent map so the samples reach far out on both sides).
std::vector<std::complex<double>> sample_edge(const EdgeDescriptor& edge, int samples);

// Exact adjacency of two Voronoi cells via the integer criteria on the
// normalized distance Xi = dB_i*dA_j - dA_i*dB_j.
bool adjacent(const CharDiff& cd_i, const CharDiff& cd_j, const ResidueField& field,
              const CharSetIndex& charset);

// Numeric adjacency check: samples (and locally refines) the pairwise edge,
// looking for a point no third generator beats.  Test-side cross-check for
// adjacent(); margin 1e-7.
bool adjacency_oracle(const CharDiff& cd_i, const CharDiff& cd_j, const CharSetIndex& charset,
                      int samples);

struct VoronoiCell {
    CharDiff generator;
    std::optional<NcMapping> optimal_mapping;  // absent for the trivial generators
    std::vector<CharDiff> adjacent;
};

struct RocdResult {
    double value = 0.0;
    CharDiff determining;
};

// The full diagram: generators, optimal mappings and the adjacency structure,
// built once per field.
class VoronoiDiagram {
public:
    static VoronoiDiagram build(const ResidueField& field);

    const ResidueField& field() const { return field_; }
    const CharSetIndex& charset() const { return charset_; }
    const std::vector<VoronoiCell>& cells() const { return cells_; }
    const VoronoiCell& cell(const CharDiff& generator) const;

    CharDiff cell_of(std::complex<double> eta) const { return pnc::cell_of(eta, charset_); }

    // Fast d_min under the per-cell optimal mapping: scan only the cell's
    // adjacent generators (plus, exactly at a zero-l_min gain, the
    // normalized-distance-1 pairs, which extend the determining set without
    // changing the value).
    RocdResult rocd_dmin(std::complex<double> eta) const;

private:
    ResidueField field_ = ResidueField::build(GInt{1, 1});
    CharSetIndex charset_;
    std::vector<VoronoiCell> cells_;
};

struct SurfacePoint {
    std::complex<double> eta;
    double value = 0.0;
    CharDiff generator;  // cell (lmin) or determining difference (dmin)
    bool on_edge = false;
};

enum class SurfaceMetric { Lmin, Dmin };

struct Window {
    double re0, re1, im0, im1;
};

// Row-major resolution x resolution grid of the selected surface; points
// within 1e-9 of a cell boundary are flagged on_edge.
std::vector<SurfacePoint> sample_surface(const VoronoiDiagram& diagram, const Window& window,
                                         int resolution, SurfaceMetric which);

}  // namespace pnc
