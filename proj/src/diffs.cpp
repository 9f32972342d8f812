#include "pnc/diffs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pnc {

bool chardiff_less(const CharDiff& a, const CharDiff& b) {
    auto na = norm(a.dA), nb = norm(b.dA);
    if (na != nb) return na < nb;
    auto ma = norm(a.dB), mb = norm(b.dB);
    if (ma != mb) return ma < mb;
    if (a.dA.re != b.dA.re) return a.dA.re < b.dA.re;
    if (a.dA.im != b.dA.im) return a.dA.im < b.dA.im;
    if (a.dB.re != b.dB.re) return a.dB.re < b.dB.re;
    return a.dB.im < b.dB.im;
}

CharDiff normalize_chardiff(GInt dA, GInt dB) {
    if (is_zero(dA) && is_zero(dB)) throw std::domain_error("cannot normalize the zero pair");
    const GInt ref = is_zero(dA) ? dB : dA;
    const GInt target = canonical_associate(ref);
    for (GInt u : units()) {
        if (u * ref == target) return {u * dA, u * dB};
    }
    throw std::logic_error("normalize_chardiff: canonicalizing unit not found");
}

std::vector<GInt> component_differences_of(const std::vector<GInt>& elements) {
    std::unordered_set<GInt, GIntHash> seen;
    for (GInt w : elements) {
        for (GInt v : elements) seen.insert(w - v);
    }
    std::vector<GInt> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), norm_lex_less);
    return out;
}

std::vector<GInt> component_differences(const ResidueField& field) {
    return component_differences_of(field.elements());
}

std::vector<GInt> q2_demo_elements() {
    return {GInt{0, 0}, GInt{1, 0}, GInt{0, 1}, GInt{1, 1}};
}

std::vector<DifferencePair> difference_set(const ResidueField& field) {
    // Components are independent, so Delta is Lambda x Lambda minus (0, 0).
    const std::vector<GInt> lambda = component_differences(field);
    std::vector<DifferencePair> out;
    out.reserve(lambda.size() * lambda.size() - 1);
    for (GInt dA : lambda) {
        for (GInt dB : lambda) {
            if (is_zero(dA) && is_zero(dB)) continue;
            out.push_back({dA, dB, true, !is_zero(dA) && !is_zero(dB)});
        }
    }
    return out;
}

ValidityReport validity_bounds_check(const ResidueField& field) {
    const GInt q = field.q();
    const std::int64_t n = norm(q);

    // Rotate/reflect q so that qR >= qI >= 0; the difference set only
    // conjugates/rotates, so component norms are unaffected.
    GInt c = canonical_associate(q);
    if (c.im > c.re) c = canonical_associate(conj(c));
    const std::int64_t bound = 2 * n - 4 * c.re + 2;

    const std::vector<GInt> lambda = component_differences(field);
    std::unordered_set<GInt, GIntHash> lambda_set(lambda.begin(), lambda.end());

    ValidityReport report;
    report.necessary_bound = bound;
    for (GInt d : lambda) {
        const std::int64_t nd = norm(d);
        report.max_component_norm = std::max(report.max_component_norm, nd);
        if (nd == bound) ++report.components_at_bound;
        if (nd > bound) throw std::logic_error("valid difference exceeds the necessary norm bound");
    }

    // Sufficient condition: every nonzero delta with norm < norm(q) must be a
    // valid difference.  Does not apply to the degenerate norm-2 field.
    if (n > 2) {
        const std::int64_t r = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        for (std::int64_t re = -r; re <= r; ++re) {
            for (std::int64_t im = -r; im <= r; ++im) {
                const GInt d{re, im};
                if (is_zero(d) || norm(d) >= n) continue;
                if (!lambda_set.count(d))
                    throw std::logic_error("small nonzero delta missing from the difference set");
                ++report.sufficient_checked;
            }
        }
    }
    return report;
}

std::vector<CharDiff> characteristic_set(const ResidueField& field) {
    const std::vector<GInt> lambda = component_differences(field);
    PairSet seen;
    std::vector<CharDiff> out;
    for (GInt dA : lambda) {
        for (GInt dB : lambda) {
            if (is_zero(dA) && is_zero(dB)) continue;
            if (!is_unit(gcd(dA, dB))) continue;
            CharDiff cd = normalize_chardiff(dA, dB);
            if (seen.emplace(cd.dA, cd.dB).second) out.push_back(cd);
        }
    }
    std::sort(out.begin(), out.end(), chardiff_less);
    return out;
}

CharSetIndex CharSetIndex::build(const ResidueField& field) {
    CharSetIndex idx;
    idx.items_ = characteristic_set(field);
    for (const CharDiff& cd : idx.items_) idx.keys_.emplace(cd.dA, cd.dB);
    return idx;
}

bool CharSetIndex::contains(GInt dA, GInt dB) const {
    if (is_zero(dA) && is_zero(dB)) return false;
    CharDiff cd = normalize_chardiff(dA, dB);
    return keys_.count({cd.dA, cd.dB}) != 0;
}

bool in_Qq(GInt k, GInt t, const CharSetIndex& charset) {
    if (is_zero(k) && is_zero(t)) throw std::domain_error("in_Qq: zero pair");
    const GInt g = gcd(k, t);
    const GInt k0 = div_rem(k, g).quot;
    const GInt t0 = div_rem(t, g).quot;
    for (GInt u : units()) {
        // (kappa, tau) corresponds to the stored (dA, dB) = (tau, -kappa).
        if (charset.contains(u * t0, -(u * k0))) return true;
    }
    return false;
}

namespace {

// Cross product of (b - a) and (c - a); positive when a->b->c turns left.
std::int64_t cross(GInt a, GInt b, GInt c) {
    return checked_sub(checked_mul(checked_sub(b.re, a.re), checked_sub(c.im, a.im)),
                       checked_mul(checked_sub(b.im, a.im), checked_sub(c.re, a.re)));
}

bool on_segment(GInt a, GInt b, GInt p) {
    if (cross(a, b, p) != 0) return false;
    return std::min(a.re, b.re) <= p.re && p.re <= std::max(a.re, b.re) &&
           std::min(a.im, b.im) <= p.im && p.im <= std::max(a.im, b.im);
}

}  // namespace

ConvexRegion ConvexRegion::build(const ResidueField& field) {
    std::vector<GInt> pts = component_differences(field);
    std::sort(pts.begin(), pts.end(), [](GInt a, GInt b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    // Andrew monotone chain, counter-clockwise, collinear points dropped.
    std::vector<GInt> hull;
    auto extend = [&hull](GInt p, std::size_t floor) {
        while (hull.size() > floor + 1 && cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
            hull.pop_back();
        hull.push_back(p);
    };
    for (GInt p : pts) extend(p, 0);
    const std::size_t lower_size = hull.size();
    for (std::size_t j = pts.size() - 1; j-- > 0;) extend(pts[j], lower_size - 1);
    hull.pop_back();  // first point repeated

    ConvexRegion region;
    region.hull_ = std::move(hull);
    return region;
}

bool ConvexRegion::contains(GInt g) const {
    if (hull_.size() == 1) return g == hull_[0];
    if (hull_.size() == 2) return on_segment(hull_[0], hull_[1], g);
    for (std::size_t j = 0; j < hull_.size(); ++j) {
        const GInt a = hull_[j];
        const GInt b = hull_[(j + 1) % hull_.size()];
        if (cross(a, b, g) < 0) return false;  // strictly outside this edge
    }
    return true;
}

}  // namespace pnc
