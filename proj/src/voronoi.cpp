#include "pnc/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace pnc {

CharDiff cell_of(std::complex<double> eta, const CharSetIndex& charset) {
    CharDiff best;
    double best_d = std::numeric_limits<double>::infinity();
    bool first = true;
    for (const CharDiff& cd : charset.items()) {
        const double d = weighted_distance(cd, eta);
        if (first || d < best_d) {
            best = cd;
            best_d = d;
            first = false;
        }
    }
    if (first) throw std::logic_error("cell_of over an empty generator set");
    return best;
}

EdgeDescriptor edge_descriptor(const CharDiff& cd_i, const CharDiff& cd_j) {
    if (normalize_chardiff(cd_i.dA, cd_i.dB) == normalize_chardiff(cd_j.dA, cd_j.dB))
        throw std::domain_error("edge of a generator with itself");

    // Equidistance locus of |dA_i*eta + dB_i| = |dA_j*eta + dB_j|:
    //   (a_i - a_j)|eta|^2 + 2 Re(C eta) + (b_i - b_j) = 0
    // with a = norm(dA), b = norm(dB), C = dA*conj(dB) differenced.
    const std::int64_t da = norm(cd_i.dA) - norm(cd_j.dA);
    const std::int64_t db = norm(cd_i.dB) - norm(cd_j.dB);
    const GInt C_exact = cd_i.dA * conj(cd_i.dB) - cd_j.dA * conj(cd_j.dB);
    const std::complex<double> C = to_complex(C_exact);

    EdgeDescriptor edge;
    if (da == 0) {
        if (is_zero(C_exact)) throw std::domain_error("generators have no equidistance locus");
        // Line Re(C eta) = (b_j - b_i)/2.
        edge.is_circle = false;
        const double c2 = std::norm(C);
        edge.point = std::conj(C) * (static_cast<double>(-db) / (2.0 * c2));
        edge.direction = std::complex<double>(0.0, 1.0) * std::conj(C) / std::abs(C);
        return edge;
    }
    edge.is_circle = true;
    edge.center = -std::conj(C) / static_cast<double>(da);
    const double r2 = std::norm(edge.center) - static_cast<double>(db) / static_cast<double>(da);
    if (r2 < 0.0) throw std::domain_error("generators have no equidistance locus");
    edge.radius = std::sqrt(r2);
    return edge;
}

std::vector<std::complex<double>> sample_edge(const EdgeDescriptor& edge, int samples) {
    if (samples < 2) throw std::domain_error("need at least 2 edge samples");
    std::vector<std::complex<double>> out;
    out.reserve(static_cast<std::size_t>(samples));
    if (edge.is_circle) {
        for (int k = 0; k < samples; ++k) {
            const double a = 2.0 * std::numbers::pi * k / samples;
            out.push_back(edge.center + edge.radius * std::complex<double>(std::cos(a), std::sin(a)));
        }
    } else {
        const double scale = std::max(1.0, std::abs(edge.point));
        for (int k = 0; k < samples; ++k) {
            const double u = (k + 0.5) / samples;  // in (0, 1)
            const double t = std::tan(std::numbers::pi * (u - 0.5));
            out.push_back(edge.point + edge.direction * (t * scale));
        }
    }
    return out;
}

bool adjacent(const CharDiff& cd_i, const CharDiff& cd_j, const ResidueField& field,
              const CharSetIndex& charset) {
    if (normalize_chardiff(cd_i.dA, cd_i.dB) == normalize_chardiff(cd_j.dA, cd_j.dB))
        throw std::domain_error("adjacency of a generator with itself");

    const GInt xi = cd_i.dB * cd_j.dA - cd_i.dA * cd_j.dB;
    const std::int64_t n_xi = norm(xi);

    // Membership calls below use the (kappa, tau) = (-dB, dA) component order
    // of the criteria; in_Qq expects that order.
    if (n_xi == 1 || n_xi == 2) {
        for (GInt eps : units()) {
            const GInt sA = cd_i.dA + eps * cd_j.dA;
            const GInt sB = cd_i.dB + eps * cd_j.dB;
            if (!in_Qq(-(sB), sA, charset)) return true;
        }
        return false;
    }
    if (n_xi == 5) {
        // For norm(q) = 5 a normalized distance of sqrt(5) never yields
        // adjacency: every candidate median collapses back into Q_q.
        if (norm(field.q()) == 5) return false;
        GInt sA, sB;
        int hits = 0;
        for (GInt eps : units()) {
            const GInt cA = cd_i.dA + eps * cd_j.dA;
            const GInt cB = cd_i.dB + eps * cd_j.dB;
            if (divides(xi, cA) && divides(xi, cB)) {
                sA = cA;
                sB = cB;
                ++hits;
            }
        }
        if (hits != 1) throw std::logic_error("expected a unique unit with both sums divisible by Xi");
        return !in_Qq(-(sB), sA, charset);
    }
    return false;
}

namespace {

// Parameterized point of an edge, u in [0, 1).
std::complex<double> edge_point(const EdgeDescriptor& edge, double u) {
    if (edge.is_circle) {
        const double a = 2.0 * std::numbers::pi * u;
        return edge.center + edge.radius * std::complex<double>(std::cos(a), std::sin(a));
    }
    const double scale = std::max(1.0, std::abs(edge.point));
    const double clamped = std::clamp(u, 1e-6, 1.0 - 1e-6);
    return edge.point + edge.direction * (std::tan(std::numbers::pi * (clamped - 0.5)) * scale);
}

}  // namespace

bool adjacency_oracle(const CharDiff& cd_i, const CharDiff& cd_j, const CharSetIndex& charset,
                      int samples) {
    EdgeDescriptor edge;
    try {
        edge = edge_descriptor(cd_i, cd_j);
    } catch (const std::domain_error&) {
        return false;  // no equidistance locus at all
    }

    // Excess margin of the edge point eta: how far the nearest third
    // generator stays above the shared distance.  The pair is adjacent iff
    // the excess is >= 0 somewhere on the locus.
    auto excess = [&](double u) {
        const std::complex<double> eta = edge_point(edge, u);
        const double own = std::max(weighted_distance(cd_i, eta), weighted_distance(cd_j, eta));
        double third = std::numeric_limits<double>::infinity();
        for (const CharDiff& cd : charset.items()) {
            if (cd == cd_i || cd == cd_j) continue;
            third = std::min(third, weighted_distance(cd, eta));
        }
        return third - own;
    };

    double best_u = 0.0;
    double best = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < samples; ++k) {
        const double u = (k + 0.5) / samples;
        const double f = excess(u);
        if (f > best) {
            best = f;
            best_u = u;
        }
    }
    constexpr double margin = 1e-7;
    if (best >= -margin) return true;

    // Vertex-only adjacency can hide between coarse samples (the shared
    // boundary may be a single point); refine around the best sample.
    double lo = best_u - 1.0 / samples;
    double hi = best_u + 1.0 / samples;
    for (int it = 0; it < 200; ++it) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (excess(m1) < excess(m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    return excess(0.5 * (lo + hi)) >= -margin;
}

VoronoiDiagram VoronoiDiagram::build(const ResidueField& field) {
    VoronoiDiagram d;
    d.field_ = field;
    d.charset_ = CharSetIndex::build(field);
    const auto& gens = d.charset_.items();
    d.cells_.reserve(gens.size());
    for (const CharDiff& g : gens) {
        VoronoiCell cell;
        cell.generator = g;
        if (!is_trivial(g)) cell.optimal_mapping = optimal_mapping_at_gain(g, field);
        for (const CharDiff& h : gens) {
            if (h == g) continue;
            if (adjacent(g, h, field, d.charset_)) cell.adjacent.push_back(h);
        }
        d.cells_.push_back(std::move(cell));
    }
    return d;
}

const VoronoiCell& VoronoiDiagram::cell(const CharDiff& generator) const {
    const CharDiff key = normalize_chardiff(generator.dA, generator.dB);
    for (const VoronoiCell& c : cells_) {
        if (c.generator == key) return c;
    }
    throw std::domain_error("unknown generator");
}

RocdResult VoronoiDiagram::rocd_dmin(std::complex<double> eta) const {
    const CharDiff g = cell_of(eta);
    if (is_trivial(g)) {
        // Inside a trivial cell no mapping clusters the closest difference,
        // so d_min collapses to l_min.
        return {l_min(eta, charset_).value, g};
    }
    const VoronoiCell& c = cell(g);

    RocdResult best;
    bool first = true;
    auto consider = [&](const CharDiff& cd) {
        const double d = weighted_distance(cd, eta);
        if (first || d < best.value || (d == best.value && chardiff_less(cd, best.determining))) {
            best = {d, cd};
            first = false;
        }
    };
    for (const CharDiff& cd : c.adjacent) consider(cd);

    // Exactly at the generator's own gain a non-adjacent pair can tie as a
    // determining difference; the value is unchanged (an adjacent pair always
    // ties too) but the determining set is wider.
    const std::complex<double> prod = eta * to_complex(g.dA);
    const bool at_gain = prod.real() == static_cast<double>(-g.dB.re) &&
                         prod.imag() == static_cast<double>(-g.dB.im);
    if (at_gain) {
        for (const CharDiff& cd : dmin_determining_at_gain(g, charset_)) consider(cd);
    }
    if (first) throw std::logic_error("cell has no adjacent generators");
    return best;
}

std::vector<SurfacePoint> sample_surface(const VoronoiDiagram& diagram, const Window& window,
                                         int resolution, SurfaceMetric which) {
    if (resolution < 2) throw std::domain_error("resolution must be at least 2");
    if (!(window.re1 > window.re0) || !(window.im1 > window.im0))
        throw std::domain_error("degenerate window");
    std::vector<SurfacePoint> out;
    out.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int r = 0; r < resolution; ++r) {
        const double im = window.im0 + (window.im1 - window.im0) * r / (resolution - 1);
        for (int ccol = 0; ccol < resolution; ++ccol) {
            const double re = window.re0 + (window.re1 - window.re0) * ccol / (resolution - 1);
            const std::complex<double> eta{re, im};

            // Distance gap between the two nearest generators decides the
            // on_edge flag.
            double d1 = std::numeric_limits<double>::infinity();
            double d2 = std::numeric_limits<double>::infinity();
            for (const CharDiff& cd : diagram.charset().items()) {
                const double d = weighted_distance(cd, eta);
                if (d < d1) {
                    d2 = d1;
                    d1 = d;
                } else {
                    d2 = std::min(d2, d);
                }
            }

            SurfacePoint pt;
            pt.eta = eta;
            pt.on_edge = (d2 - d1) <= 1e-9;
            if (which == SurfaceMetric::Lmin) {
                const LminResult lm = l_min(eta, diagram.charset());
                pt.value = lm.value;
                pt.generator = lm.argmin;
            } else {
                const RocdResult rd = diagram.rocd_dmin(eta);
                pt.value = rd.value;
                pt.generator = rd.determining;
            }
            out.push_back(pt);
        }
    }
    return out;
}

}  // namespace pnc
