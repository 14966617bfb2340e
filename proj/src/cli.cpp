// SPDX-License-Identifier: MIT
#include "lejalab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cctype>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "lejalab/lebesgue.hpp"
#include "lejalab/report_io.hpp"

namespace leja::cli {

namespace {

using io::json;

constexpr std::uint64_t default_seed = 0x1e7a5eedULL;
// rotation applied by --inject-bad-node; not a dyadic angle, so it never lands on another maximizer
constexpr double bad_node_rotation = 0.3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::size_t dim = 0;
    Index count = 0;
    std::uint64_t sweep = 0;
    std::size_t grid = 0;
    double tol = 1e-6;
    std::uint64_t seed = default_seed;
    std::string compact = "disk";
    std::string format = "json";
    std::string out;
    long long inject = -1;
    std::string function;
    std::uint64_t max_degree = 12;
    std::string suite = "all";
    std::string points_file;
    bool has_count = false;
    bool has_sweep = false;
    bool has_grid = false;
};

// --- configuration helpers -------------------------------------------------

std::vector<CompactDescriptor> parse_compacts(const std::string& text, std::size_t dim) {
    std::vector<CompactDescriptor> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "disk") {
            out.push_back(CompactDescriptor::unit_disk());
        } else if (item.rfind("ellipse:", 0) == 0) {
            double R = 0.0;
            try {
                std::size_t used = 0;
                R = std::stod(item.substr(8), &used);
                if (used != item.size() - 8) throw std::invalid_argument(item);
            } catch (const std::logic_error&) {
                throw UsageError("--compact: cannot parse radius in '" + item + "'");
            }
            if (!(R > 1.0) || !std::isfinite(R)) throw UsageError("--compact: ellipse needs R > 1, got '" + item + "'");
            out.push_back(CompactDescriptor::ellipse(R));
        } else {
            throw UsageError("--compact: expected disk or ellipse:R, got '" + item + "'");
        }
    }
    if (out.empty()) throw UsageError("--compact: empty specification");
    if (out.size() == 1)
        while (out.size() < dim) out.push_back(out.front());
    if (out.size() != dim)
        throw UsageError("--compact lists " + std::to_string(out.size()) + " axes but --dim is " + std::to_string(dim));
    return out;
}

// First `length` points of the explicit Leja sequence for one axis compact.
NodeSequence1D axis_nodes(const CompactDescriptor& c, std::size_t length) {
    const auto disk = disk_leja_section(length);
    if (c.is_unit_disk()) return disk;
    const auto& e = std::get<EllipseCompact>(c.kind());
    return mapped_nodes(e.map, *disk.angles());
}

std::vector<std::string> compact_names(const std::vector<CompactDescriptor>& cs) {
    std::vector<std::string> names;
    for (const auto& c : cs) names.push_back(c.name());
    return names;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) throw UsageError("--out: cannot open '" + o.out + "' for writing");
    f << text;
    if (!f) throw std::runtime_error("--out: write to '" + o.out + "' failed");
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- points ----------------------------------------------------------------

int cmd_points(const Options& o, std::ostream& out) {
    const std::size_t s = o.dim == 0 ? 1 : o.dim;
    if (!o.has_count || o.count == 0) throw UsageError("points: --count must be >= 1");
    const auto compacts = parse_compacts(o.compact, s);
    const auto lengths = required_lengths(s, o.count);
    std::vector<NodeSequence1D> axes;
    for (std::size_t j = 0; j < s; ++j) axes.push_back(axis_nodes(compacts[j], lengths[j]));

    std::vector<io::PointRecord> rows;
    rows.reserve(o.count);
    const auto ks = enumerate(s, o.count);
    for (Index n = 0; n < o.count; ++n) {
        io::PointRecord r;
        r.n = n + 1;
        r.k = ks[n];
        for (std::size_t j = 0; j < s; ++j) {
            r.coords.push_back(axes[j][r.k[j]]);
            if (compacts[j].is_unit_disk()) r.angles.emplace_back((*axes[j].angles())[r.k[j]]);
            else r.angles.emplace_back(std::nullopt);
        }
        rows.push_back(std::move(r));
    }
    emit(o, o.format == "csv" ? io::points_csv(rows) : dump(io::points_json(rows, compact_names(compacts))), out);
    return exit_pass;
}

// --- verify ----------------------------------------------------------------

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string failure;  // human-readable reason when !passed
    json details;
};

json leja_steps_json(const LejaSectionReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"k", s.k},
                         {"log_value", io::number(s.log_value)},
                         {"log_grid_max", io::number(s.log_grid_max)},
                         {"ok", s.ok}});
    return steps;
}

json multidim_steps_json(const MultidimLejaReport& r) {
    json steps = json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"n", s.n},
                         {"log_value", io::number(s.log_value)},
                         {"log_grid_max", io::number(s.log_grid_max)},
                         {"ok", s.ok}});
    return steps;
}

std::string first_failure_text(const std::optional<Index>& f, const char* what) {
    if (!f) return "";
    if (*f == 0) return std::string("first ") + what + " is not on the boundary";
    return std::string("Leja inequality fails at step ") + std::to_string(*f);
}

NodeSequence1D inject(const NodeSequence1D& nodes, long long k) {
    if (k < 0) return nodes;
    if (static_cast<std::size_t>(k) >= nodes.size())
        throw UsageError("--inject-bad-node " + std::to_string(k) + " is out of range for " +
                         std::to_string(nodes.size()) + " nodes");
    return nodes.with_node(static_cast<std::size_t>(k), nodes[k] * std::polar(1.0, bad_node_rotation));
}

SuiteResult suite_disk_leja(const Options& o, bool specific) {
    const Index N = specific && o.has_count ? o.count : 32;
    if (N == 0) throw UsageError("verify: --count must be >= 1");
    const std::size_t grid = specific && o.has_grid ? o.grid : default_leja_grid;
    const auto nodes = inject(disk_leja_section(N), o.inject);
    const auto r = verify_leja_section(nodes, grid, o.tol);
    SuiteResult s{"disk-leja", r.accepted, first_failure_text(r.first_failure, "node"), {}};
    s.details = {{"count", N},
                 {"grid", grid},
                 {"tol", o.tol},
                 {"injected_node", o.inject >= 0 ? json(o.inject) : json(nullptr)},
                 {"start_on_boundary", r.start_on_boundary},
                 {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
                 {"steps", leja_steps_json(r)}};
    return s;
}

SuiteResult suite_multidim(const Options& o, bool specific) {
    const std::size_t s = o.dim == 0 ? 2 : o.dim;
    const Index N = specific && o.has_count ? o.count : 15;
    if (N == 0) throw UsageError("verify: --count must be >= 1");
    const std::size_t grid = specific && o.has_grid ? o.grid : 4096;
    const auto lengths = required_lengths(s, N);
    std::vector<NodeSequence1D> comps;
    for (std::size_t j = 0; j < s; ++j) comps.push_back(disk_leja_section(lengths[j]));
    comps[0] = inject(comps[0], o.inject);
    const auto r = verify_multidim_leja(comps, N, grid, o.tol);
    SuiteResult res{"multidim", r.accepted, first_failure_text(r.first_failure, "point"), {}};
    res.details = {{"dim", s},
                   {"count", N},
                   {"grid", grid},
                   {"tol", o.tol},
                   {"injected_node_axis1", o.inject >= 0 ? json(o.inject) : json(nullptr)},
                   {"start_on_boundary", r.start_on_boundary},
                   {"first_failure", r.first_failure ? json(*r.first_failure) : json(nullptr)},
                   {"steps", multidim_steps_json(r)}};
    return res;
}

SuiteResult suite_counterexample(const Options& o, bool specific) {
    const std::size_t grid = specific && o.has_grid ? o.grid : 1024;
    const auto r = counterexample_section(grid, o.tol);
    SuiteResult s{"counterexample", r.is_leja_section && r.non_intertwining, "", {}};
    if (!r.is_leja_section) s.failure = "the three points are not a Leja section on the grid";
    else if (!r.non_intertwining) s.failure = "no intertwining conflict detected";
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back({io::complex_json(p[0]), io::complex_json(p[1])});
    s.details = {{"grid", grid},
                 {"points", pts},
                 {"start_on_boundary", r.start_on_boundary},
                 {"step1_value", io::number(r.step1_value)},
                 {"step1_grid_max", io::number(r.step1_grid_max)},
                 {"step2_value", io::number(r.step2_value)},
                 {"step2_grid_max", io::number(r.step2_grid_max)},
                 {"is_leja_section", r.is_leja_section},
                 {"non_intertwining", r.non_intertwining},
                 {"conflict", r.conflict ? json(r.conflict->describe()) : json(nullptr)},
                 {"components_not_leja", r.components_not_leja}};
    return s;
}

std::vector<Complex> random_unimodular(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> ang(0.0, 2.0 * std::numbers::pi);
    std::vector<Complex> pts;
    while (pts.size() < n) {
        const Complex z = std::polar(1.0, ang(rng));
        if (std::all_of(pts.begin(), pts.end(), [&](Complex p) { return std::abs(z - p) > 0.05; })) pts.push_back(z);
    }
    return pts;
}

Complex random_disk(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

SuiteResult suite_flip_oracle(const Options& o, bool specific) {
    const Index max_N = specific && o.has_count ? o.count : 28;
    if (max_N == 0) throw UsageError("verify: --count must be >= 1");
    constexpr std::size_t samples = 50;
    std::mt19937_64 rng(o.seed);
    std::size_t checked = 0, mismatches = 0;
    double worst_rel = 0.0;
    std::string first_bad;
    for (int kind = 0; kind < 2; ++kind) {
        for (Index N = 1; N <= max_N; ++N) {
            const auto d = decompose(N).d;
            const FlipContext ctx = kind == 0 ? FlipContext::disk_leja(N)
                                              : FlipContext(random_unimodular(rng, d + 1),
                                                            random_unimodular(rng, d + 1), N);
            for (std::size_t t = 0; t < samples; ++t) {
                const Complex z = random_disk(rng), w = random_disk(rng);
                for (const auto& [p, q] : ctx.nodes()) {
                    const Complex a = flip_eval(ctx, p, q, z, w);
                    const Complex b = flip_eval_oracle(ctx, p, q, z, w);
                    const double mag = std::abs(b), err = std::abs(a - b);
                    const bool ok = mag < 1e-3 ? err <= 1e-9 : err <= 1e-8 * mag;
                    if (mag >= 1e-3) worst_rel = std::max(worst_rel, err / mag);
                    ++checked;
                    if (!ok && mismatches++ == 0)
                        first_bad = std::string(kind == 0 ? "disk Leja" : "random") + " nodes, N=" +
                                    std::to_string(N) + ", (p,q)=(" + std::to_string(p) + "," + std::to_string(q) +
                                    ")";
                }
            }
        }
    }
    SuiteResult s{"flip-oracle", mismatches == 0, mismatches ? "closed form disagrees with oracle: " + first_bad : "",
                  {}};
    s.details = {{"max_count", max_N},
                 {"samples_per_count", samples},
                 {"seed", o.seed},
                 {"evaluations", checked},
                 {"mismatches", mismatches},
                 {"worst_relative_error", io::number(worst_rel)}};
    return s;
}

SuiteResult suite_points_file(const Options& o) {
    std::ifstream f(o.points_file, std::ios::binary);
    if (!f) throw UsageError("--points: cannot open '" + o.points_file + "'");
    std::stringstream buf;
    buf << f.rdbuf();
    std::vector<PointS> pts;
    try {
        pts = io::read_points(buf.str());
    } catch (const std::runtime_error& e) {
        throw UsageError(std::string("--points: ") + e.what());
    }
    const std::size_t s = pts.front().size();
    const std::size_t grid = o.has_grid ? o.grid : (s == 1 ? default_leja_grid : 4096);
    SuiteResult res{"points-file", false, "", {}};
    res.details = {{"file", o.points_file}, {"dim", s}, {"count", pts.size()}, {"grid", grid}, {"tol", o.tol}};

    // each axis is re-read as a compact known only through boundary samples
    const auto sampled = CompactDescriptor::sampled(torus_grid(grid));
    try {
        if (s == 1) {
            std::vector<Complex> xs;
            for (const auto& p : pts) xs.push_back(p[0]);
            const auto r = verify_leja_section(NodeSequence1D(std::move(xs), sampled), grid, o.tol);
            res.passed = r.accepted;
            res.failure = first_failure_text(r.first_failure, "node");
            res.details["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
            res.details["steps"] = leja_steps_json(r);
            return res;
        }
        if (const auto axes = split_intertwined(pts)) {
            std::vector<NodeSequence1D> comps;
            for (const auto& a : *axes) comps.emplace_back(a, sampled);
            const auto r = verify_multidim_leja(comps, pts.size(), grid, o.tol);
            res.passed = r.accepted;
            res.failure = first_failure_text(r.first_failure, "point");
            res.details["intertwining"] = true;
            res.details["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
            res.details["steps"] = multidim_steps_json(r);
        } else {
            // not an intertwining set: fall back to the cofactor check on the torus
            const std::size_t g = o.has_grid ? o.grid : 256;
            const auto r = verify_polydisc_leja_brute_force(pts, g, o.tol);
            res.passed = r.accepted;
            res.failure = first_failure_text(r.first_failure, "point");
            res.details["intertwining"] = false;
            res.details["conflict"] = find_intertwining_conflict(pts)->describe();
            res.details["grid"] = g;
            res.details["first_failure"] = r.first_failure ? json(*r.first_failure) : json(nullptr);
            res.details["steps"] = multidim_steps_json(r);
        }
    } catch (const std::invalid_argument& e) {
        res.passed = false;
        res.failure = e.what();
    }
    return res;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    static const std::vector<std::string> suites{"counterexample", "disk-leja", "multidim", "flip-oracle", "all"};
    if (std::find(suites.begin(), suites.end(), o.suite) == suites.end())
        throw UsageError("verify: unknown --suite '" + o.suite + "'");
    if (!(o.tol > 0.0 && o.tol < 1.0)) throw UsageError("verify: --tol must lie in (0, 1)");
    if (o.has_grid && o.grid < 64) throw UsageError("verify: --grid must be >= 64");

    std::vector<SuiteResult> results;
    if (!o.points_file.empty()) {
        results.push_back(suite_points_file(o));
    } else {
        const bool all = o.suite == "all";
        if (all || o.suite == "counterexample") results.push_back(suite_counterexample(o, !all));
        if (all || o.suite == "disk-leja") results.push_back(suite_disk_leja(o, !all));
        if (all || o.suite == "multidim") results.push_back(suite_multidim(o, !all));
        if (all || o.suite == "flip-oracle") results.push_back(suite_flip_oracle(o, !all));
    }

    bool passed = true;
    json report = {{"command", "verify"}};
    json arr = json::array();
    for (const auto& r : results) {
        passed = passed && r.passed;
        arr.push_back({{"suite", r.name}, {"passed", r.passed}, {"failure", r.failure}, {"details", r.details}});
        if (!r.passed) err << "verify: " << r.name << " FAILED: " << r.failure << '\n';
    }
    report["passed"] = passed;
    report["suites"] = std::move(arr);

    if (o.format == "csv") {
        std::ostringstream os;
        os << "suite,passed,failure\n";
        for (const auto& r : results) os << r.name << ',' << (r.passed ? "true" : "false") << ",\"" << r.failure << "\"\n";
        emit(o, os.str(), out);
    } else {
        emit(o, dump(report), out);
    }
    return passed ? exit_pass : exit_fail;
}

// --- lebesgue --------------------------------------------------------------

LebesgueReport lebesgue_one(std::size_t s, Index N, const std::vector<CompactDescriptor>& cs, std::size_t grid) {
    if (s == 1) return lebesgue_1d(axis_nodes(cs[0], N), grid);
    const auto d = decompose(N).d;
    const auto a = axis_nodes(cs[0], d + 1), b = axis_nodes(cs[1], d + 1);
    const FlipContext ctx({a.points().begin(), a.points().end()}, {b.points().begin(), b.points().end()}, N);
    std::vector<double> angles(grid);
    for (std::size_t k = 0; k < grid; ++k) angles[k] = torus_angle(k, grid);
    return lebesgue_2d_on_grid(ctx, cs[0].boundary_grid(grid), cs[1].boundary_grid(grid), angles, angles);
}

int cmd_lebesgue(const Options& o, std::ostream& out) {
    const std::size_t s = o.dim == 0 ? 2 : o.dim;
    if (s != 1 && s != 2) throw UsageError("lebesgue: --dim must be 1 or 2");
    if (o.has_count == o.has_sweep) throw UsageError("lebesgue: give exactly one of --count and --sweep-degree");
    if (o.has_count && o.count == 0) throw UsageError("lebesgue: --count must be >= 1");
    if (o.has_sweep && o.sweep == 0) throw UsageError("lebesgue: --sweep-degree must be >= 1");
    const std::size_t min_grid = s == 1 ? 256 : 64;
    if (o.has_grid && o.grid < min_grid)
        throw UsageError("lebesgue: --grid must be >= " + std::to_string(min_grid) + " in dimension " +
                         std::to_string(s));
    const auto cs = parse_compacts(o.compact, s);

    auto grid_for = [&](std::uint64_t d) -> std::size_t {
        if (o.has_grid) return o.grid;
        if (s == 1) return default_leja_grid;
        return d > 12 ? 256 : 512;  // coarser grid keeps high-degree sweeps affordable
    };

    std::vector<LebesgueReport> reports;
    if (o.has_count) {
        reports.push_back(lebesgue_one(s, o.count, cs, grid_for(s == 1 ? o.count - 1 : decompose(o.count).d)));
    } else {
        for (std::uint64_t d = 1; d <= o.sweep; ++d) {
            const Index N = s == 1 ? d + 1 : block_size(2, d);
            reports.push_back(lebesgue_one(s, N, cs, grid_for(d)));
        }
    }

    if (o.format == "csv") {
        std::string text = io::lebesgue_csv_header();
        for (const auto& r : reports) text += io::lebesgue_csv_row(r);
        emit(o, text, out);
    } else {
        const std::string name = s == 1 ? cs[0].name() : cs[0].name() + "," + cs[1].name();
        json rows = json::array();
        for (const auto& r : reports) rows.push_back(io::lebesgue_row_json(r, name));
        emit(o, dump({{"command", "lebesgue"}, {"dim", s}, {"compacts", compact_names(cs)}, {"rows", rows}}), out);
    }
    return exit_pass;
}

// --- interp ----------------------------------------------------------------

BidiscFunction parse_function(const std::string& text) {
    if (text == "exp") return [](Complex z, Complex w) { return std::exp(z + w); };
    if (text.rfind("poly:", 0) == 0) {
        // zAwB with optional exponents, e.g. z2w, zw3, z, w
        const std::string body = text.substr(5);
        unsigned a = 0, b = 0;
        std::size_t i = 0;
        auto exponent = [&](unsigned& e) {
            std::size_t j = i;
            while (j < body.size() && std::isdigit(static_cast<unsigned char>(body[j]))) ++j;
            e = j == i ? 1u : static_cast<unsigned>(std::stoul(body.substr(i, j - i)));
            i = j;
        };
        if (i < body.size() && body[i] == 'z') ++i, exponent(a);
        if (i < body.size() && body[i] == 'w') ++i, exponent(b);
        if (body.empty() || i != body.size() || a > 40 || b > 40)
            throw UsageError("--function: malformed polynomial '" + text + "', expected poly:zAwB");
        return [a, b](Complex z, Complex w) { return std::pow(z, static_cast<int>(a)) * std::pow(w, static_cast<int>(b)); };
    }
    if (text.rfind("pole:", 0) == 0) {
        double c = 0.0;
        try {
            std::size_t used = 0;
            c = std::stod(text.substr(5), &used);
            if (used != text.size() - 5) throw std::invalid_argument(text);
        } catch (const std::logic_error&) {
            throw UsageError("--function: cannot parse pole location in '" + text + "'");
        }
        if (!(std::abs(c) > 2.0) || !std::isfinite(c))
            throw UsageError("--function: pole:c needs |c| > 2 so the target is analytic on the closed bidisc");
        return [c](Complex z, Complex w) { return 1.0 / (c - z - w); };
    }
    throw UsageError("--function: unknown function '" + text + "', expected exp, poly:zAwB or pole:c");
}

int cmd_interp(const Options& o, std::ostream& out) {
    if (o.dim != 0 && o.dim != 2) throw UsageError("interp: only --dim 2 is supported");
    if (o.function.empty()) throw UsageError("interp: --function is required");
    const auto f = parse_function(o.function);
    if (o.max_degree == 0 || o.max_degree > 20) throw UsageError("interp: --max-degree must lie in [1, 20]");
    const std::size_t grid = o.has_grid ? o.grid : 128;
    if (grid < 16) throw UsageError("interp: --grid must be >= 16");
    const auto rows = jackson_study(f, o.max_degree, grid);
    if (o.format == "csv") {
        emit(o, io::convergence_csv(rows), out);
    } else {
        emit(o,
             dump({{"command", "interp"},
                   {"function", o.function},
                   {"grid", grid},
                   {"rows", io::convergence_json(rows)}}),
             out);
    }
    return exit_pass;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Leja sequences, intertwined node sets and bidimensional Lagrange interpolation"};
    app.name("leja_lab");
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--out", o.out, "Write the report to this path instead of standard output");
        sub->add_option("--seed", o.seed, "Random seed for sampled checks");
    };

    auto* points = app.add_subcommand("points", "List the first N intertwined Leja nodes");
    points->add_option("--dim", o.dim, "Dimension s")->check(CLI::Range(1, 16));
    auto* pc = points->add_option("--count", o.count, "Number of nodes N");
    points->add_option("--compact", o.compact, "disk | ellipse:R, one per axis or one for all");
    add_common(points);

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->add_option("--suite", o.suite, "counterexample | disk-leja | multidim | flip-oracle | all");
    verify->add_option("--dim", o.dim, "Dimension for the multidim suite")->check(CLI::Range(2, 6));
    auto* vc = verify->add_option("--count", o.count, "Node count (largest N for flip-oracle)");
    auto* vg = verify->add_option("--grid", o.grid, "Boundary grid per axis");
    verify->add_option("--tol", o.tol, "Relative tolerance of the Leja inequality");
    verify->add_option("--inject-bad-node", o.inject, "Rotate node K off its Leja position")->check(CLI::NonNegativeNumber);
    verify->add_option("--points", o.points_file, "Verify a listing written by `points` (JSON or CSV)");
    add_common(verify);

    auto* lebesgue = app.add_subcommand("lebesgue", "Lebesgue constants of disk Leja nodes");
    lebesgue->add_option("--dim", o.dim, "Dimension, 1 or 2");
    auto* lc = lebesgue->add_option("--count", o.count, "Node count N");
    auto* ls = lebesgue->add_option("--sweep-degree", o.sweep, "Report every degree d = 1..D");
    auto* lg = lebesgue->add_option("--grid", o.grid, "Boundary grid per axis");
    lebesgue->add_option("--compact", o.compact, "disk | ellipse:R, one per axis or one for all");
    add_common(lebesgue);

    auto* interp = app.add_subcommand("interp", "Interpolation error study on the bidisc");
    interp->add_option("--function", o.function, "exp | poly:zAwB | pole:c");
    interp->add_option("--max-degree", o.max_degree, "Largest total degree d");
    interp->add_option("--dim", o.dim, "Dimension (2 only)");
    auto* ig = interp->add_option("--grid", o.grid, "Torus grid per axis");
    add_common(interp);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_pass;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_pass;
    } catch (const CLI::ParseError& e) {
        err << "leja_lab: " << e.what() << '\n';
        return exit_usage;
    }
    o.has_count = pc->count() + vc->count() + lc->count() > 0;
    o.has_sweep = ls->count() > 0;
    o.has_grid = vg->count() + lg->count() + ig->count() > 0;

    try {
        if (points->parsed()) return cmd_points(o, out);
        if (verify->parsed()) return cmd_verify(o, out, err);
        if (lebesgue->parsed()) return cmd_lebesgue(o, out);
        return cmd_interp(o, out);
    } catch (const UsageError& e) {
        err << "leja_lab: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "leja_lab: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        err << "leja_lab: error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace leja::cli
