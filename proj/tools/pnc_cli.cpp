// Command-line front end: residue-field inspection, mapping/coset tools,
// minimum-distance surfaces over the channel-gain plane, Monte-Carlo SER
// simulation, and a `verify` suite running the brute-force oracles.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pnc/diffs.hpp"
#include "pnc/gaussint.hpp"
#include "pnc/mapping.hpp"
#include "pnc/metrics.hpp"
#include "pnc/residue.hpp"
#include "pnc/sim.hpp"
#include "pnc/voronoi.hpp"

using json = nlohmann::ordered_json;
using namespace pnc;

namespace {

[[noreturn]] void die(const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    std::exit(2);
}

GInt parse_gint_flag(const std::string& s, const char* flag) {
    try {
        return parse_gint(s);
    } catch (const std::exception&) {
        die(std::string(flag) + ": malformed Gaussian integer '" + s + "'");
    }
}

// Complex literal with explicit imaginary suffix: "1.1+1.0i", "2", "-0.5i".
std::complex<double> parse_complex_flag(const std::string& s, const char* flag) {
    const auto fail = [&]() -> std::complex<double> {
        die(std::string(flag) + ": malformed complex literal '" + s + "'");
    };
    if (s.empty()) return fail();
    std::vector<std::pair<std::string, bool>> terms;  // text, is_imaginary
    std::size_t start = 0;
    for (std::size_t k = 1; k <= s.size(); ++k) {
        if (k == s.size() || ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E')) {
            std::string t = s.substr(start, k - start);
            bool imag = !t.empty() && t.back() == 'i';
            if (imag) {
                t.pop_back();
                if (t.empty() || t == "+" || t == "-") t += "1";
            }
            terms.push_back({t, imag});
            start = k;
        }
    }
    if (terms.empty() || terms.size() > 2) return fail();
    double re = 0.0, im = 0.0;
    bool saw_re = false, saw_im = false;
    for (const auto& [t, imag] : terms) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(t, &used);
        } catch (const std::exception&) {
            return fail();
        }
        if (used != t.size()) return fail();
        if (imag) {
            if (saw_im) return fail();
            im = v;
            saw_im = true;
        } else {
            if (saw_re) return fail();
            re = v;
            saw_re = true;
        }
    }
    return {re, im};
}

ResidueField field_for(const std::string& q_text) {
    const GInt q = parse_gint_flag(q_text, "--q");
    if (!is_gaussian_prime(q)) die("q is not a Gaussian prime");
    return ResidueField::build(q);
}

json gj(GInt a) { return json::array({a.re, a.im}); }

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// ---- subcommand bodies ---------------------------------------------------

int cmd_field(const std::string& q_text) {
    const auto f = field_for(q_text);
    json out;
    out["q"] = gj(f.q());
    out["norm"] = f.size();
    json els = json::array();
    for (GInt e : f.elements()) els.push_back(gj(e));
    out["elements"] = els;
    out["mu"] = f.mu();
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_cosets(const std::string& q_text, const std::string& a_text, const std::string& b_text) {
    const auto f = field_for(q_text);
    const NcMapping m{f.reduce(parse_gint_flag(a_text, "--alpha")),
                      f.reduce(parse_gint_flag(b_text, "--beta"))};
    if (is_zero(m.alpha) || is_zero(m.beta)) die("alpha and beta must be nonzero mod q");
    json out;
    out["q"] = gj(f.q());
    out["alpha"] = gj(m.alpha);
    out["beta"] = gj(m.beta);
    json classes = json::array();
    for (const CosetClass& c : cosets(m, f).classes) {
        json cls;
        cls["nc_symbol"] = gj(c.nc_symbol);
        json members = json::array();
        for (auto [wA, wB] : c.members) members.push_back(json::array({gj(wA), gj(wB)}));
        cls["members"] = members;
        classes.push_back(cls);
    }
    out["classes"] = classes;
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_dual_map(const std::string& q_text, const std::string& dA_text,
                 const std::string& dB_text) {
    std::int64_t q = 0;
    try {
        std::size_t used = 0;
        q = std::stoll(q_text, &used);
        if (used != q_text.size()) throw std::invalid_argument(q_text);
    } catch (const std::exception&) {
        die("--q: dual-map expects a real integer prime");
    }
    const GInt dA = parse_gint_flag(dA_text, "--dA");
    const GInt dB = parse_gint_flag(dB_text, "--dB");
    std::optional<DualMapping> dual;
    try {
        dual = vector_dual_mapping(q, dA, dB);
    } catch (const std::exception& e) {
        die(e.what());
    }
    if (!dual) {
        std::cout << "NO_DUAL_MAPPING\n";
        return 0;
    }
    json out;
    out["q"] = q;
    out["dA"] = gj(dA);
    out["dB"] = gj(dB);
    out["alpha"] = json::array({dual->aR, dual->aI});
    out["matrix"] = json::array({json::array({dual->aR, -dual->aI}),
                                 json::array({dual->aI, dual->aR})});
    std::cout << out.dump() << "\n";
    return 0;
}

int cmd_chardiffs(const std::string& q_text) {
    const auto f = field_for(q_text);
    for (const CharDiff& cd : characteristic_set(f)) {
        json line;
        line["dA"] = gj(cd.dA);
        line["dB"] = gj(cd.dB);
        const ChannelGain g = gain_of(cd);
        if (g.is_finite())
            line["eta"] = json::array({g.value.real(), g.value.imag()});
        else
            line["eta"] = "inf";
        std::cout << line.dump() << "\n";
    }
    return 0;
}

int cmd_gains(const std::string& q_text, double radius) {
    if (radius <= 0.0) die("--radius must be positive");
    const auto f = field_for(q_text);
    for (const GainEntry& e : zero_lmin_gains(f, radius)) {
        json line;
        if (e.gain.is_finite())
            line["eta"] = json::array({e.gain.value.real(), e.gain.value.imag()});
        else
            line["eta"] = "inf";
        line["char"] = json::array({gj(e.cd.dA), gj(e.cd.dB)});
        line["dmin_opt"] = dmin_at_gain(e.cd);
        std::cout << line.dump() << "\n";
    }
    return 0;
}

int cmd_lmin(const std::string& q_text, const std::string& eta_text) {
    const auto f = field_for(q_text);
    const std::complex<double> eta = parse_complex_flag(eta_text, "--eta");
    const auto idx = CharSetIndex::build(f);
    const LminResult r = l_min(eta, idx);
    std::cout << "l_min = " << fmt(r.value) << " at (dA, dB) = (" << to_string(r.argmin.dA)
              << ", " << to_string(r.argmin.dB) << ")\n";
    return 0;
}

int cmd_voronoi(const std::string& q_text, double radius, int resolution,
                const std::string& metric, const std::string& out_path) {
    if (radius <= 0.0) die("--radius must be positive");
    if (resolution < 2) die("--resolution must be at least 2");
    SurfaceMetric which;
    if (metric == "dmin")
        which = SurfaceMetric::Dmin;
    else if (metric == "lmin")
        which = SurfaceMetric::Lmin;
    else
        die("--metric must be dmin or lmin");
    const auto diagram = VoronoiDiagram::build(field_for(q_text));
    const Window w{-radius, radius, -radius, radius};
    std::ofstream out(out_path);
    if (!out) die("cannot open output file " + out_path);
    out << "eta_re,eta_im,value,gen_dA,gen_dB,on_edge\n";
    for (const SurfacePoint& p : sample_surface(diagram, w, resolution, which)) {
        out << fmt(p.eta.real()) << ',' << fmt(p.eta.imag()) << ',' << fmt(p.value) << ','
            << to_string(p.generator.dA) << ',' << to_string(p.generator.dB) << ','
            << (p.on_edge ? 1 : 0) << "\n";
    }
    std::cout << "wrote " << resolution * resolution << " samples to " << out_path << "\n";
    return 0;
}

int cmd_adjacency(const std::string& q_text) {
    const auto diagram = VoronoiDiagram::build(field_for(q_text));
    json out = json::array();
    for (const VoronoiCell& c : diagram.cells()) {
        json cell;
        cell["generator"] = json::array({gj(c.generator.dA), gj(c.generator.dB)});
        json adj = json::array();
        for (const CharDiff& n : c.adjacent) adj.push_back(json::array({gj(n.dA), gj(n.dB)}));
        cell["adjacent"] = adj;
        out.push_back(cell);
    }
    std::cout << out.dump() << "\n";
    return 0;
}

NcMapping parse_mapping_flag(const std::string& s, const ResidueField& f) {
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos) die("--mapping expects 'alpha,beta'");
    const NcMapping m{f.reduce(parse_gint_flag(s.substr(0, comma), "--mapping")),
                      f.reduce(parse_gint_flag(s.substr(comma + 1), "--mapping"))};
    if (is_zero(m.alpha) || is_zero(m.beta)) die("--mapping: alpha and beta must be nonzero mod q");
    return m;
}

int cmd_simulate(const std::string& q_text, const std::string& hA_text, const std::string& hB_text,
                 double snr_db, std::int64_t trials, std::uint64_t seed,
                 const std::string& mapping_text) {
    const auto f = field_for(q_text);
    if (trials < 1) die("--trials must be positive");
    const ChannelConfig cfg{f, parse_complex_flag(hA_text, "--hA"),
                            parse_complex_flag(hB_text, "--hB"), snr_db};
    if (std::abs(cfg.hB) == 0.0) die("--hB must be nonzero");
    const NcMapping m = parse_mapping_flag(mapping_text, f);
    const SerEstimate est = estimate_ser(cfg, m, trials, seed);
    json out;
    out["trials"] = est.trials;
    out["errors"] = est.errors;
    out["ser"] = est.ser;
    out["ci95"] = est.half_width_95;
    std::cout << out.dump() << "\n";
    return 0;
}

std::vector<double> parse_sweep(const std::string& s) {
    double lo = 0, step = 0, hi = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(s);
    if (!(in >> lo >> c1 >> step >> c2 >> hi) || c1 != ':' || c2 != ':' || step <= 0.0 || hi < lo)
        die("--snr-sweep expects lo:step:hi with positive step");
    std::vector<double> out;
    for (double v = lo; v <= hi + 1e-9; v += step) out.push_back(v);
    return out;
}

int cmd_compare(const std::string& q_text, const std::string& hA_text, const std::string& hB_text,
                const std::string& sweep_text, std::int64_t trials, std::uint64_t seed) {
    const auto f = field_for(q_text);
    if (trials < 1) die("--trials must be positive");
    const std::complex<double> hA = parse_complex_flag(hA_text, "--hA");
    const std::complex<double> hB = parse_complex_flag(hB_text, "--hB");
    if (std::abs(hB) == 0.0) die("--hB must be nonzero");
    std::cout << "snr_db,mapping,ser,ci95\n";
    for (double snr : parse_sweep(sweep_text)) {
        const ChannelConfig cfg{f, hA, hB, snr};
        for (const CompareRow& r : compare_mappings(cfg, trials, seed)) {
            std::cout << fmt(snr) << ",\"(" << to_string(r.mapping.alpha) << ","
                      << to_string(r.mapping.beta) << ")\"," << fmt(r.est.ser) << ','
                      << fmt(r.est.half_width_95) << "\n";
        }
    }
    return 0;
}

// ---- verify suites ---------------------------------------------------------

struct Verifier {
    const ResidueField& f;
    int failures = 0;

    void check(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }

    std::vector<NcMapping> canonical_mappings() const {
        std::vector<NcMapping> out;
        for (GInt a : f.elements())
            if (!is_zero(a)) out.push_back({a, GInt{1, 0}});
        return out;
    }

    void field_axioms() {
        bool ok = true;
        const auto& el = f.elements();
        const bool exhaustive = f.size() <= 25;
        for (GInt a : el) {
            ok = ok && f.add(a, f.neg(a)) == GInt{0, 0};
            if (!is_zero(a)) ok = ok && f.mul(a, f.inv(a)) == GInt{1, 0};
            if (!exhaustive) continue;
            for (GInt b : el) {
                ok = ok && f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a);
                for (GInt c : el) {
                    ok = ok && f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c));
                }
            }
        }
        check("field-axioms", ok, exhaustive ? "exhaustive" : "inverses only (large field)");
    }

    void cosets_suite() {
        bool ok = true;
        const std::int64_t n = f.size();
        for (const NcMapping& m : canonical_mappings()) {
            const CosetPartition p = cosets(m, f);
            ok = ok && static_cast<std::int64_t>(p.classes.size()) == n;
            for (const CosetClass& c : p.classes)
                ok = ok && static_cast<std::int64_t>(c.members.size()) == n;
        }
        check("cosets", ok,
              std::to_string(n) + " classes of " + std::to_string(n) + " per mapping");
    }

    void theorem1() {
        bool ok = true;
        const auto idx = CharSetIndex::build(f);
        for (const CharDiff& cd : idx.items()) {
            if (is_trivial(cd)) continue;
            const NcMapping m = optimal_mapping_at_gain(cd, f);
            ok = ok && clusters(m, f.reduce(cd.dA), f.reduce(cd.dB), f);
        }
        check("theorem1", ok, "closed-form mapping clusters its generator");
    }

    void theorem2() {
        bool ok = true;
        int gains = 0;
        const auto delta = build_delta_table(f);
        for (const GainEntry& e : zero_lmin_gains(f, 3.0)) {
            if (is_trivial(e.cd)) continue;
            const NcMapping m = optimal_mapping_at_gain(e.cd, f);
            const double got = d_min(e.gain.value, m, f, delta);
            const double expect = 1.0 / std::sqrt(static_cast<double>(norm(e.cd.dA)));
            ok = ok && std::abs(got - expect) <= 1e-9;
            ++gains;
        }
        check("theorem2", ok, std::to_string(gains) + " gains in the radius-3 window");
    }

    void theorems34() {
        bool ok = true;
        const auto idx = CharSetIndex::build(f);
        const bool large = idx.items().size() > 1500;
        // Building the full diagram is quadratic in the generator count, so
        // large fields resolve each cell's adjacency on demand instead.
        std::optional<VoronoiDiagram> diagram;
        if (!large) diagram.emplace(VoronoiDiagram::build(f));
        const auto delta = build_delta_table(f);
        const auto ms = canonical_mappings();
        const int grid = f.size() > 25 ? 6 : 15;
        int checked = 0;
        for (int a = 0; a < grid; ++a) {
            const double theta = (std::numbers::pi / 4.0) * a / (grid - 1);
            for (int r = 1; r <= grid; ++r) {
                const std::complex<double> eta = std::polar(2.0 * r / grid + 0.0131, theta + 0.0071);
                double best = 0.0;
                for (const NcMapping& m : ms) best = std::max(best, d_min(eta, m, f, delta));
                double fast;
                if (diagram) {
                    fast = diagram->rocd_dmin(eta).value;
                } else {
                    const CharDiff cell = cell_of(eta, idx);
                    if (is_trivial(cell)) {
                        fast = l_min(eta, idx).value;
                    } else {
                        fast = std::numeric_limits<double>::infinity();
                        for (const CharDiff& cd : idx.items()) {
                            if (cd == cell || !adjacent(cell, cd, f, idx)) continue;
                            fast = std::min(fast, weighted_distance(cd, eta));
                        }
                    }
                }
                if (std::abs(fast - best) > 1e-9) ok = false;
                ++checked;
            }
        }
        check("theorem3", ok, std::to_string(checked) + " grid points");
        check("theorem4", ok, "adjacent-cell scan sufficed at every point");
    }

    void qcriteria() {
        bool ok = true;
        const auto idx = CharSetIndex::build(f);
        const auto& items = idx.items();
        const std::size_t n = items.size();
        std::size_t tested = 0, adjacent_pairs = 0;
        // Exhaustive for small generator sets, a deterministic stride sample
        // otherwise; the oracle costs O(samples * generators) per pair, so
        // the pair budget shrinks as the generator count grows.
        const std::size_t budget =
            std::clamp<std::size_t>(200000000 / (400 * std::max<std::size_t>(n, 1)), 50, 25000);
        const std::size_t stride = std::max<std::size_t>(1, n * n / budget);
        for (std::size_t k = 0; k < n * n; k += stride) {
            const std::size_t i = k / n, j = k % n;
            if (i == j) continue;
            const bool exact = adjacent(items[i], items[j], f, idx);
            if (exact != adjacency_oracle(items[i], items[j], idx, 400)) ok = false;
            adjacent_pairs += exact ? 1 : 0;
            ++tested;
        }
        check("qcriteria", ok,
              std::to_string(tested) + " pairs tested, " + std::to_string(adjacent_pairs) +
                  " adjacent");
    }

    void symmetry() {
        bool ok = true;
        const auto idx = CharSetIndex::build(f);
        int covered = 0;
        for (const GainEntry& e : zero_lmin_gains(f, 2.0)) {
            if (is_trivial(e.cd) || !e.gain.is_finite()) continue;
            const double arg = std::arg(e.gain.value);
            if (arg < -1e-12 || arg > std::numbers::pi / 4.0 + 1e-12) continue;
            for (const GainEntry& img : symmetric_gains(e.cd)) {
                ok = ok && idx.contains(img.cd.dA, img.cd.dB);
                ok = ok && pair_distance(img.gain.value, img.cd.dA, img.cd.dB) <= 1e-9;
            }
            ++covered;
        }
        check("symmetry", ok, std::to_string(covered) + " first-octant gains expanded");
    }

    void convex() {
        bool ok = true;
        const auto region = ConvexRegion::build(f);
        std::set<std::pair<std::int64_t, std::int64_t>> lambda;
        std::int64_t extent = 0;
        for (GInt d : component_differences(f)) {
            lambda.insert({d.re, d.im});
            extent = std::max({extent, std::abs(d.re), std::abs(d.im)});
        }
        for (std::int64_t re = -extent - 2; re <= extent + 2 && ok; ++re) {
            for (std::int64_t im = -extent - 2; im <= extent + 2; ++im) {
                if (region.contains(GInt{re, im}) != (lambda.count({re, im}) == 1)) {
                    ok = false;
                    break;
                }
            }
        }
        check("convex", ok, "hull lattice points = difference components");
    }

    void lemma_bounds() {
        bool ok = true;
        std::string detail;
        try {
            const ValidityReport r = validity_bounds_check(f);
            detail = "max norm " + std::to_string(r.max_component_norm) + " <= bound " +
                     std::to_string(r.necessary_bound);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        check("lemma-bounds", ok, detail);
    }
};

int cmd_verify(const std::string& q_text, const std::string& suite) {
    const std::set<std::string> known = {"field-axioms", "cosets",   "theorem1", "theorem2",
                                         "theorem3",     "theorem4", "qcriteria", "symmetry",
                                         "convex",       "lemma-bounds", "all"};
    if (!known.count(suite)) die("unknown suite '" + suite + "'");
    const auto f = field_for(q_text);
    Verifier v{f};
    const bool all = suite == "all";
    if (all || suite == "field-axioms") v.field_axioms();
    if (all || suite == "cosets") v.cosets_suite();
    if (all || suite == "theorem1") v.theorem1();
    if (all || suite == "theorem2") v.theorem2();
    if (all || suite == "theorem3" || suite == "theorem4") v.theorems34();
    if (all || suite == "qcriteria") v.qcriteria();
    if (all || suite == "symmetry") v.symmetry();
    if (all || suite == "convex") v.convex();
    if (all || suite == "lemma-bounds") v.lemma_bounds();
    return v.failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"PNC mapping toolkit over Gaussian-integer residue fields"};
    app.require_subcommand(1);

    std::string q_text, alpha_text, beta_text = "1", dA_text, dB_text = "1";
    std::string eta_text, hA_text, hB_text = "1", mapping_text, sweep_text;
    std::string metric = "dmin", out_path = "grid.csv", suite = "all";
    double radius = 2.0, snr_db = 18.0;
    int resolution = 400;
    std::int64_t trials = 1000000;
    std::uint64_t seed = 42;

    auto* c_field = app.add_subcommand("field", "Print a residue field as JSON");
    c_field->add_option("--q", q_text)->required();

    auto* c_cosets = app.add_subcommand("cosets", "Coset partition of a mapping as JSON");
    c_cosets->add_option("--q", q_text)->required();
    c_cosets->add_option("--alpha", alpha_text)->required();
    c_cosets->add_option("--beta", beta_text);

    auto* c_dual = app.add_subcommand("dual-map", "Rotation-matrix dual over a real prime");
    c_dual->add_option("--q", q_text)->required();
    c_dual->add_option("--dA", dA_text)->required();
    c_dual->add_option("--dB", dB_text);

    auto* c_chardiffs = app.add_subcommand("chardiffs", "Characteristic differences as JSON lines");
    c_chardiffs->add_option("--q", q_text)->required();

    auto* c_gains = app.add_subcommand("gains", "Zero-l_min channel gains as JSON lines");
    c_gains->add_option("--q", q_text)->required();
    c_gains->add_option("--radius", radius);

    auto* c_lmin = app.add_subcommand("lmin", "Minimum superimposed distance at a gain");
    c_lmin->add_option("--q", q_text)->required();
    c_lmin->add_option("--eta", eta_text)->required();

    auto* c_voronoi = app.add_subcommand("voronoi", "Sample an l_min/d_min surface to CSV");
    c_voronoi->add_option("--q", q_text)->required();
    c_voronoi->add_option("--radius", radius);
    c_voronoi->add_option("--resolution", resolution);
    c_voronoi->add_option("--metric", metric);
    c_voronoi->add_option("--out", out_path);

    auto* c_adjacency = app.add_subcommand("adjacency", "Generator adjacency list as JSON");
    c_adjacency->add_option("--q", q_text)->required();

    auto* c_simulate = app.add_subcommand("simulate", "Monte-Carlo NC-symbol error rate");
    c_simulate->add_option("--q", q_text)->required();
    c_simulate->add_option("--hA", hA_text)->required();
    c_simulate->add_option("--hB", hB_text);
    c_simulate->add_option("--snr-db", snr_db);
    c_simulate->add_option("--trials", trials);
    c_simulate->add_option("--seed", seed);
    c_simulate->add_option("--mapping", mapping_text)->required();

    auto* c_compare = app.add_subcommand("compare", "SER of every canonical mapping over a sweep");
    c_compare->add_option("--q", q_text)->required();
    c_compare->add_option("--hA", hA_text)->required();
    c_compare->add_option("--hB", hB_text);
    c_compare->add_option("--snr-sweep", sweep_text)->required();
    c_compare->add_option("--trials", trials);
    c_compare->add_option("--seed", seed);

    auto* c_verify = app.add_subcommand("verify", "Run the theorem oracles");
    c_verify->add_option("--q", q_text)->required();
    c_verify->add_option("--suite", suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (c_field->parsed()) return cmd_field(q_text);
        if (c_cosets->parsed()) return cmd_cosets(q_text, alpha_text, beta_text);
        if (c_dual->parsed()) return cmd_dual_map(q_text, dA_text, dB_text);
        if (c_chardiffs->parsed()) return cmd_chardiffs(q_text);
        if (c_gains->parsed()) return cmd_gains(q_text, radius);
        if (c_lmin->parsed()) return cmd_lmin(q_text, eta_text);
        if (c_voronoi->parsed()) return cmd_voronoi(q_text, radius, resolution, metric, out_path);
        if (c_adjacency->parsed()) return cmd_adjacency(q_text);
        if (c_simulate->parsed())
            return cmd_simulate(q_text, hA_text, hB_text, snr_db, trials, seed, mapping_text);
        if (c_compare->parsed()) return cmd_compare(q_text, hA_text, hB_text, sweep_text, trials, seed);
        if (c_verify->parsed()) return cmd_verify(q_text, suite);
    } catch (const std::exception& e) {
        die(e.what());
    }
    return 0;
}
