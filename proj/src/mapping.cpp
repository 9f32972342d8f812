#include "pnc/mapping.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pnc {

void validate_mapping(const NcMapping& m, const ResidueField& field) {
    if (is_zero(field.reduce(m.alpha)) || is_zero(field.reduce(m.beta)))
        throw std::domain_error("NC mapping coefficients must be nonzero mod q");
}

GInt nc_map(const NcMapping& m, GInt wA, GInt wB, const ResidueField& field) {
    return field.reduce(m.alpha * wA + m.beta * wB);
}

GInt recover_partner(GInt wN, const NcMapping& m, GInt own, Side side, const ResidueField& field) {
    if (side == Side::A) return field.reduce(field.inv(m.beta) * (wN - m.alpha * own));
    return field.reduce(field.inv(m.alpha) * (wN - m.beta * own));
}

bool clusters(const NcMapping& m, GInt dA, GInt dB, const ResidueField& field) {
    return is_zero(field.reduce(m.alpha * field.reduce(dA) + m.beta * field.reduce(dB)));
}

PairSet clustered_set(const NcMapping& m, const ResidueField& field) {
    PairSet out;
    for (GInt v : field.elements()) {
        out.emplace(field.reduce(v * (-m.beta)), field.reduce(v * m.alpha));
    }
    return out;
}

namespace {

bool pair_less(const std::pair<GInt, GInt>& a, const std::pair<GInt, GInt>& b) {
    if (a.first != b.first) return norm_lex_less(a.first, b.first);
    return norm_lex_less(a.second, b.second);
}

}  // namespace

CosetPartition cosets(const NcMapping& m, const ResidueField& field) {
    validate_mapping(m, field);
    std::map<std::pair<std::int64_t, std::pair<std::int64_t, std::int64_t>>, CosetClass> by_symbol;
    for (GInt wA : field.elements()) {
        for (GInt wB : field.elements()) {
            GInt wN = nc_map(m, wA, wB, field);
            auto key = std::make_pair(norm(wN), std::make_pair(wN.re, wN.im));
            auto& cls = by_symbol[key];
            cls.nc_symbol = wN;
            cls.members.emplace_back(wA, wB);
        }
    }
    CosetPartition part;
    part.mapping = m;
    for (auto& [key, cls] : by_symbol) {
        std::sort(cls.members.begin(), cls.members.end(), pair_less);
        part.classes.push_back(std::move(cls));
    }
    return part;
}

NcMapping canonicalize(const NcMapping& m, const ResidueField& field) {
    validate_mapping(m, field);
    return {field.reduce(field.inv(m.beta) * m.alpha), GInt{1, 0}};
}

bool isomorphic(const NcMapping& m1, const NcMapping& m2, const ResidueField& field) {
    return canonicalize(m1, field) == canonicalize(m2, field);
}

bool same_unlabeled_partition(const CosetPartition& p1, const CosetPartition& p2) {
    // Compare the class structures while ignoring the NC-symbol labels: each
    // class is identified by its sorted member list.
    auto shape = [](const CosetPartition& p) {
        std::vector<std::vector<std::pair<GInt, GInt>>> classes;
        for (const auto& cls : p.classes) classes.push_back(cls.members);
        std::sort(classes.begin(), classes.end(),
                  [](const auto& a, const auto& b) {
                      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), pair_less);
                  });
        return classes;
    };
    return shape(p1) == shape(p2);
}

NcMapping mapping_from_cluster(GInt dA, GInt dB, const ResidueField& field) {
    const GInt rA = field.reduce(dA);
    const GInt rB = field.reduce(dB);
    if (is_zero(rA) || is_zero(rB))
        throw std::domain_error("mapping_from_cluster needs an NC-valid pair (both components nonzero mod q)");
    return {field.reduce(-field.inv(rA) * rB), GInt{1, 0}};
}

namespace {

std::int64_t imod(std::int64_t x, std::int64_t q) {
    std::int64_t r = x % q;
    return r < 0 ? r + q : r;
}

std::int64_t int_inverse_mod(std::int64_t a, std::int64_t q) {
    // Extended Euclid over plain integers; a invertible by the caller's check.
    std::int64_t r0 = q, r1 = imod(a, q), x0 = 0, x1 = 1;
    while (r1 != 0) {
        std::int64_t k = r0 / r1;
        std::int64_t r2 = r0 - k * r1;
        r0 = r1;
        r1 = r2;
        std::int64_t x2 = x0 - k * x1;
        x0 = x1;
        x1 = x2;
    }
    return imod(x0, q);
}

}  // namespace

std::optional<DualMapping> vector_dual_mapping(std::int64_t q, GInt dA_modq, GInt dB_modq) {
    if (q < 2) throw std::domain_error("vector dual mapping needs an integer prime q");
    for (std::int64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) throw std::domain_error("vector dual mapping needs an integer prime q");
    }
    const std::int64_t aR = imod(dA_modq.re, q), aI = imod(dA_modq.im, q);
    const std::int64_t bR = imod(dB_modq.re, q), bI = imod(dB_modq.im, q);
    if ((aR == 0 && aI == 0) || (bR == 0 && bI == 0))
        throw std::domain_error("vector dual mapping needs an NC-valid pair");
    const std::int64_t s = imod(aR * aR + aI * aI, q);
    if (s == 0) return std::nullopt;  // no rotation matrix can cluster the pair and its dual
    const std::int64_t s_inv = int_inverse_mod(s, q);
    // Solving the clustering constraint alpha*M(dA) + M(dB) = 0 (mod q) for
    // the rotation matrix M(alpha): alpha = -conj(dA)*dB / |dA|^2.
    return DualMapping{imod(-s_inv * (aR * bR + aI * bI), q),
                       imod(-s_inv * (aR * bI - aI * bR), q)};
}

}  // namespace pnc
