#include "pnc/residue.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pnc {

std::pair<std::int64_t, std::int64_t> basis_dot(GInt w, GInt q) {
    if (is_zero(q)) throw std::domain_error("basis coordinates need q != 0");
    return {checked_add(checked_mul(q.re, w.re), checked_mul(q.im, w.im)),
            checked_add(checked_mul(-q.im, w.re), checked_mul(q.re, w.im))};
}

std::pair<double, double> basis_coords(GInt w, GInt q) {
    auto [x, y] = basis_dot(w, q);
    const double abs_q = std::sqrt(static_cast<double>(norm(q)));
    return {static_cast<double>(x) / abs_q, static_cast<double>(y) / abs_q};
}

ResidueField ResidueField::build(GInt q) {
    if (!is_gaussian_prime(q)) throw std::domain_error("q is not a Gaussian prime");
    ResidueField f;
    f.q_ = q;
    f.norm_q_ = norm(q);

    if (f.norm_q_ == 2) {
        // Degenerate window: take {0, 1} as the two representatives.
        f.elements_ = {GInt{0, 0}, GInt{1, 0}};
    } else {
        std::int64_t bound = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(f.norm_q_))));
        for (std::int64_t re = -bound; re <= bound; ++re) {
            for (std::int64_t im = -bound; im <= bound; ++im) {
                const GInt w{re, im};
                auto [x, y] = basis_dot(w, q);
                // Representative square: |w_x| < |q|/2 and |w_y| < |q|/2,
                // strict.  A lattice point exactly on the boundary would make
                // the representative set ill-defined; for odd norm(q) that
                // cannot happen, and we check rather than assume.
                if (2 * std::llabs(x) == f.norm_q_ || 2 * std::llabs(y) == f.norm_q_)
                    throw std::logic_error("representative-window boundary hit a lattice point");
                if (2 * std::llabs(x) < f.norm_q_ && 2 * std::llabs(y) < f.norm_q_)
                    f.elements_.push_back(w);
            }
        }
        std::sort(f.elements_.begin(), f.elements_.end(), norm_lex_less);
    }

    if (static_cast<std::int64_t>(f.elements_.size()) != f.norm_q_)
        throw std::logic_error("representative count does not equal norm(q)");

    f.element_set_.insert(f.elements_.begin(), f.elements_.end());

    std::int64_t norm_sum = 0;
    for (GInt e : f.elements_) norm_sum = checked_add(norm_sum, norm(e));
    f.mu_ = std::sqrt(static_cast<double>(norm_sum) / static_cast<double>(f.norm_q_));

    // Precompute representatives for a window that covers every nearest-integer
    // remainder and every difference of two representatives.
    const std::int64_t cache_bound =
        2 * static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(f.norm_q_)))) + 1;
    for (std::int64_t re = -cache_bound; re <= cache_bound; ++re) {
        for (std::int64_t im = -cache_bound; im <= cache_bound; ++im) {
            const GInt w{re, im};
            for (GInt e : f.elements_) {
                if (divides(q, w - e)) {
                    f.reduce_cache_.emplace(w, e);
                    break;
                }
            }
        }
    }
    return f;
}

GInt ResidueField::reduce(GInt w) const {
    auto it = reduce_cache_.find(w);
    if (it != reduce_cache_.end()) return it->second;
    // Fold far-away points into the cached window first.
    const GInt r = div_rem(w, q_).rem;
    it = reduce_cache_.find(r);
    if (it == reduce_cache_.end()) throw std::logic_error("reduce: remainder escaped the cache window");
    return it->second;
}

GInt ResidueField::inv(GInt a) const {
    if (divides(q_, a)) throw std::domain_error("field inverse of zero");
    return reduce(inverse_mod(a, q_));
}

}  // namespace pnc
