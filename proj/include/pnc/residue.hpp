#pragma once

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pnc/gaussint.hpp"

namespace pnc {

// Exact basis coordinates of w in the rotated frame of q, scaled by |q| to
// stay integral: returns (|q|*w_x, |q|*w_y) = (qR*wR + qI*wI, -qI*wR + qR*wI).
// The representative-window test |w_x| < |q|/2 becomes 2*|first| < norm(q).
std::pair<std::int64_t, std::int64_t> basis_dot(GInt w, GInt q);

// Same coordinates as floating-point values (w_x, w_y), for display only.
std::pair<double, double> basis_coords(GInt w, GInt q);

// The residue field Z[i]/q for a Gaussian prime q: the norm(q) canonical
// representatives (minimum-magnitude points of each congruence class), sorted
// by (norm, re, im), plus the power normalization constant mu.
class ResidueField {
public:
    static ResidueField build(GInt q);

    GInt q() const { return q_; }
    std::int64_t size() const { return static_cast<std::int64_t>(elements_.size()); }
    const std::vector<GInt>& elements() const { return elements_; }
    double mu() const { return mu_; }

    bool contains(GInt w) const { return element_set_.count(w) != 0; }

    // Unique representative congruent to w (total: any Gaussian integer).
    GInt reduce(GInt w) const;

    GInt add(GInt a, GInt b) const { return reduce(a + b); }
    GInt sub(GInt a, GInt b) const { return reduce(a - b); }
    GInt mul(GInt a, GInt b) const { return reduce(a * b); }
    GInt neg(GInt a) const { return reduce(-a); }
    GInt inv(GInt a) const;

private:
    ResidueField() = default;

    GInt q_;
    std::int64_t norm_q_ = 0;
    std::vector<GInt> elements_;
    std::unordered_set<GInt, GIntHash> element_set_;
    // Representative of every lattice point in a window comfortably covering
    // all remainders and element differences; makes reduce() O(1).
    std::unordered_map<GInt, GInt, GIntHash> reduce_cache_;
    double mu_ = 0.0;
};

}  // namespace pnc
