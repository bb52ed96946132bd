#pragma once

// Command-line front end: verify, demo, diag and bench.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or spec error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "grt/grt.hpp"

namespace grt::cli {

enum exit_code : int { ok = 0, failed = 1, usage = 2 };

struct RunConfig {
    std::string group = "Z4";
    std::string ring = "q";
    double tol = default_tolerance;
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    std::string format = "text";
    std::vector<std::size_t> sizes = {64, 256, 1024, 4096};

    json to_json() const {
        return json{{"group", group}, {"ring", ring},       {"tol", tol},
                    {"seed", seed},   {"samples", samples}, {"format", format},
                    {"rng", Rng::algorithm}};
    }
};

namespace detail {

template <class R>
std::string render(const Tower<R>& tw, const Matrix<typename R::value_type>& m, const std::string& indent = "  ") {
    std::vector<std::string> cells;
    std::size_t width = 1;
    for (const auto& v : m.data()) {
        cells.push_back(tw.ring().to_string(v));
        width = std::max(width, cells.back().size());
    }
    std::ostringstream os;
    for (std::size_t r = 0; r < m.size(); ++r) {
        os << indent << "[";
        for (std::size_t c = 0; c < m.size(); ++c) os << (c ? " " : "") << std::setw(int(width)) << cells[r * m.size() + c];
        os << "]\n";
    }
    return os.str();
}

inline json suite_to_json(const SuiteResult& s) {
    json checks = json::array();
    for (const auto& c : s.checks) checks.push_back(to_json(c));
    json j{{"name", s.name}, {"pass", s.pass()}, {"skipped", s.skipped}, {"checks", std::move(checks)}};
    if (!s.note.empty()) j["note"] = s.note;
    return j;
}

inline void print_suite_text(std::ostream& out, const SuiteResult& s) {
    out << s.name << ": " << (s.skipped ? "SKIPPED (" + s.note + ")" : s.pass() ? "PASS" : "FAIL") << "\n";
    for (const auto& c : s.checks)
        out << "  " << std::left << std::setw(30) << c.axiom << std::right << " samples=" << c.samples
            << " failures=" << c.failures << " max_residual=" << c.max_residual << (c.pass() ? "  ok" : "  FAIL")
            << "\n";
}

inline void require_format(const std::string& f, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (f == a) return;
    throw CLI::ValidationError("--format", "unsupported format '" + f + "' for this command");
}

inline double median_ms(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

}  // namespace detail

// -- verify -------------------------------------------------------------------

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    detail::require_format(cfg.format, {"text", "json"});
    const auto group = parse_group(cfg.group);
    const auto any = make_ring(cfg.ring, cfg.tol);

    std::vector<SuiteResult> suites = std::visit(
        [&](const auto& ring) {
            Tower tw(group, ring);
            std::vector<SuiteResult> s;
            s.push_back(group_ring_axiom_suite(tw.vectors(), cfg.samples, cfg.seed));
            s.push_back(circulant_equivalence_suite(tw, cfg.samples, cfg.seed));
            s.push_back(tensor_ring_suite(tw, cfg.samples, cfg.seed));
            s.push_back(module_suite(tw, cfg.samples, cfg.seed));
            s.push_back(isomorphism_suite(tw, cfg.samples, cfg.seed));
            s.push_back(diagonalization_suite(tw, std::min<std::size_t>(cfg.samples, 20), cfg.seed));
            s.push_back(transform_suite(tw, cfg.samples, cfg.seed));
            return s;
        },
        any);

    const bool pass = std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.pass(); });
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& s : suites) arr.push_back(detail::suite_to_json(s));
        out << json{{"config", cfg.to_json()}, {"suites", std::move(arr)}, {"pass", pass}}.dump(2) << "\n";
    } else {
        out << "verify " << group.spec() << " over " << cfg.ring << " (samples=" << cfg.samples
            << ", seed=" << cfg.seed << ", rng=" << Rng::algorithm << ")\n";
        for (const auto& s : suites) detail::print_suite_text(out, s);
        out << (pass ? "PASS" : "FAIL") << "\n";
    }
    return pass ? ok : failed;
}

// -- demo ---------------------------------------------------------------------

inline constexpr std::size_t max_demo_order = 8;

template <class R>
bool demo_products(const Tower<R>& tw, Rng& rng, std::ostream& out) {
    const auto& V = tw.vectors();
    const auto a = V.sample(rng), b = V.sample(rng);
    const auto x = tw.sample_matrix(rng);
    const auto ta = tw.sample_tensor(rng);
    bool all = true;

    out << "a = " << V.to_string(a) << "\nb = " << V.to_string(b) << "\n\n";
    out << "circ(a) =\n" << detail::render(tw, tw.circ_matrix(a));
    const auto lhs = tw.apply(tw.circ_matrix(a), b), rhs = V.mul(a, b);
    out << "circ(a) . b = " << V.to_string(lhs) << "\na * b       = " << V.to_string(rhs)
        << (V.eq(lhs, rhs) ? "   (equal)" : "   (DIFFER)") << "\n\n";
    all = all && V.eq(lhs, rhs);

    out << "X =\n" << detail::render(tw, x);
    const auto m1 = tw.matrix_multiply(x, tw.circ_matrix(a));
    const auto m2 = tw.scalar_product(V.anti_involution(a), x);
    out << "X . circ(a) =\n" << detail::render(tw, m1) << "phi(a) o X =\n" << detail::render(tw, m2)
        << (tw.eq(m1, m2) ? "  (equal)\n\n" : "  (DIFFER)\n\n");
    all = all && tw.eq(m1, m2);

    const auto p1 = tw.block_circulant_apply(ta, x), p2 = tw.tensor_matrix_product(ta, x);
    out << "blockcirc(A) . X =\n" << detail::render(tw, p1) << "A * X =\n" << detail::render(tw, p2)
        << (tw.eq(p1, p2) ? "  (equal)\n\n" : "  (DIFFER)\n\n");
    all = all && tw.eq(p1, p2);

    const auto tb = tw.sample_tensor(rng);
    const bool tt = tw.eq(tw.block_circulant_apply(ta, tb), tw.tensor_tensor_product(ta, tb));
    out << "blockcirc(A) . B vs A * B over all " << tw.n() << " slices: " << (tt ? "equal" : "DIFFER") << "\n";
    return all && tt;
}

template <class R>
bool demo_basis(const Tower<R>& tw, std::ostream& out) {
    out << "transposed basis B_g = |g><1_G|:\n";
    for (std::size_t g = 0; g < tw.n(); ++g)
        out << " B_" << tw.group().spec() << "[" << g << "]\n" << detail::render(tw, transposed_basis(tw, g), "   ");
    out << "\nnatural basis B~_g = |1_G><g|:\n";
    for (std::size_t g = 0; g < tw.n(); ++g)
        out << " B~[" << g << "]\n" << detail::render(tw, natural_basis(tw, g), "   ");
    return true;
}

template <class R>
bool demo_iso(const Tower<R>& tw, Rng& rng, std::ostream& out) {
    const auto t = tw.sample_tensor(rng);
    const auto l = hom_from_tensor(tw, t);
    out << "tensor T with slices:\n";
    for (std::size_t k = 0; k < tw.n(); ++k) out << " T_" << k << "\n" << detail::render(tw, t[k], "   ");
    out << "alpha(g, h) table:\n";
    for (std::size_t g = 0; g < tw.n(); ++g) {
        out << "  ";
        for (std::size_t h = 0; h < tw.n(); ++h) out << tw.vectors().to_string(l(g, h)) << " ";
        out << "\n";
    }
    const auto a = tw.sample_matrix(rng);
    const auto via_tensor = tw.tensor_matrix_product(t, a), via_hom = hom_apply(tw, l, a);
    out << "A =\n" << detail::render(tw, a) << "T * A =\n" << detail::render(tw, via_tensor) << "L(A) =\n"
        << detail::render(tw, via_hom) << (tw.eq(via_tensor, via_hom) ? "  (equal)\n" : "  (DIFFER)\n");
    const bool round = tw.eq(tensor_from_hom(tw, l), t);
    out << "tensor_from_hom(hom_from_tensor(T)) == T: " << (round ? "yes" : "NO") << "\n";
    return round && tw.eq(via_tensor, via_hom);
}

template <class R>
bool demo_degenerate(const Tower<R>& tw, Rng& rng, std::ostream& out) {
    if (tw.n() < 2) {
        out << "trivial group: the natural and transposed bases coincide\n";
        return true;
    }
    const auto a = tw.vectors().sample(rng);
    out << "a = " << tw.vectors().to_string(a) << "\n";
    for (std::size_t l = 0; l < tw.n(); ++l)
        out << "a o B~_" << l << " =\n" << detail::render(tw, tw.scalar_product(a, natural_basis(tw, l)));
    const auto target = tw.outer(1, 0);
    const auto w = natural_basis_degeneracy_witness(tw, target, 100, rng.next());
    out << "target |1><0| =\n" << detail::render(tw, target);
    out << "random natural-basis combinations confined to row 1_G: " << w.confined << "/" << w.samples
        << ", reached target: " << w.reached_target << "\n";
    const auto coords = decompose(tw, target);
    const bool back = tw.eq(reconstruct(tw, coords), target);
    out << "transposed basis reaches it with coordinates:";
    for (const auto& c : coords) out << " " << tw.vectors().to_string(c);
    out << (back ? "  (exact)\n" : "  (FAILED)\n");
    return w.pass() && back;
}

inline int cmd_demo(const RunConfig& cfg, const std::string& which, std::ostream& out) {
    detail::require_format(cfg.format, {"text"});
    const auto group = parse_group(cfg.group);
    if (group.order() > max_demo_order)
        throw too_large_for_demo("demo needs group order <= " + std::to_string(max_demo_order) + ", got " +
                                 std::to_string(group.order()));
    const auto any = make_ring(cfg.ring, cfg.tol);
    const bool pass = std::visit(
        [&](const auto& ring) {
            Tower tw(group, ring);
            Rng rng(cfg.seed);
            out << "demo " << which << " on " << group.spec() << " over " << ring.spec() << "\n\n";
            if (which == "products") return demo_products(tw, rng, out);
            if (which == "basis") return demo_basis(tw, out);
            if (which == "iso") return demo_iso(tw, rng, out);
            return demo_degenerate(tw, rng, out);
        },
        any);
    return pass ? ok : failed;
}

// -- diag ---------------------------------------------------------------------

inline int cmd_diag(const RunConfig& cfg, std::ostream& out) {
    detail::require_format(cfg.format, {"text", "json"});
    const auto group = parse_group(cfg.group);
    const auto any = make_ring(cfg.ring, cfg.tol);
    if (!std::holds_alternative<RealRing>(any) && !std::holds_alternative<ComplexRing>(any))
        throw unsupported_ring("diag needs a floating-point ring; try --ring f64");

    const DiagReport rep = std::visit(
        [&](const auto& ring) -> DiagReport {
            using R = std::decay_t<decltype(ring)>;
            if constexpr (is_float_ring_v<R>) {
                Tower tw(group, ring);
                const auto inst = generate_diag_instance(tw, cfg.seed);
                return verify_diagonalization(tw, inst.t, inst.x, inst.l);
            } else {
                throw unsupported_ring("diag needs a floating-point ring; try --ring f64");
            }
        },
        any);

    if (cfg.format == "json") {
        json j = to_json(rep);
        out << json{{"config", cfg.to_json()}, {"report", j}, {"pass", rep.pass()}}.dump(2) << "\n";
    } else {
        out << "diag " << group.spec() << " over " << cfg.ring << " seed=" << cfg.seed << "\n";
        out << "hypothesis T*X = X*L residual " << rep.hypothesis_residual
            << (rep.hypothesis_holds ? "  ok" : "  FAIL") << "\n";
        for (const auto& c : rep.per_k)
            out << "  k=" << c.k << " eigen residual " << c.eigen_residual << (c.pass ? "  ok" : "  FAIL") << "\n";
        out << (rep.pass() ? "PASS" : "FAIL") << "\n";
    }
    return rep.pass() ? ok : failed;
}

// -- bench --------------------------------------------------------------------

struct BenchRow {
    std::size_t size;
    std::string path;
    double median_ms;
    double residual;
};

inline constexpr std::size_t circulant_bench_limit = 2048;
inline constexpr std::size_t bench_repetitions = 5;

template <class F>
double time_median(F&& f, std::size_t reps) {
    std::vector<double> ms;
    for (std::size_t i = 0; i < reps; ++i) {
        const auto start = std::chrono::steady_clock::now();
        f();
        const auto stop = std::chrono::steady_clock::now();
        ms.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    return detail::median_ms(std::move(ms));
}

/// Times naive, transform and materialized-circulant convolution on Z_n.
inline std::vector<BenchRow> run_bench(const std::vector<std::size_t>& sizes, const RealRing& ring,
                                       std::uint64_t seed, std::vector<std::string>& notes) {
    std::vector<BenchRow> rows;
    for (std::size_t n : sizes) {
        const GroupRing V(make_group({static_cast<long long>(n)}), ring);
        Rng rng(derive_seed(seed, n));
        const auto a = V.sample(rng), b = V.sample(rng);
        GroupRingElement<double> naive, fast, circ;
        const double t_naive = time_median([&] { naive = V.mul(a, b); }, bench_repetitions);
        const double t_fast = time_median([&] { fast = gr_convolve_fast(V, a, b); }, bench_repetitions);
        rows.push_back({n, "naive", t_naive, 0.0});
        rows.push_back({n, "fast", t_fast, V.residual(fast, naive)});
        if (n <= circulant_bench_limit) {
            const Tower tw(V.group(), ring);
            const double t_circ =
                time_median([&] { circ = tw.apply(tw.circ_matrix(a), b); }, bench_repetitions);
            rows.push_back({n, "circulant", t_circ, V.residual(circ, naive)});
        } else {
            notes.push_back("circulant path skipped at n=" + std::to_string(n) + " (above " +
                            std::to_string(circulant_bench_limit) + ")");
        }
    }
    return rows;
}

inline int cmd_bench(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    detail::require_format(cfg.format, {"text", "json", "csv"});
    if (cfg.group != "Zn" && cfg.group != "zn")
        throw invalid_group_spec("bench runs on cyclic groups; pass --group Zn with --sizes");
    const auto any = make_ring(cfg.ring, cfg.tol);
    if (!std::holds_alternative<RealRing>(any)) throw unsupported_ring("bench needs --ring f64");
    if (cfg.sizes.empty()) throw CLI::ValidationError("--sizes", "need at least one size");
    for (std::size_t n : cfg.sizes)
        if (n == 0) throw invalid_group_spec("size must be >= 1");

    const RealRing& ring = std::get<RealRing>(any);
    std::vector<std::string> notes;
    const auto rows = run_bench(cfg.sizes, ring, cfg.seed, notes);
    bool correct = true;
    for (const auto& r : rows)
        if (r.residual > ring.tolerance()) correct = false;

    if (cfg.format == "csv") {
        out << "size,path,median_ms,residual\n";
        for (const auto& r : rows) out << r.size << "," << r.path << "," << r.median_ms << "," << r.residual << "\n";
    } else if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"size", r.size}, {"path", r.path}, {"median_ms", r.median_ms}, {"residual", r.residual}});
        out << json{{"config", cfg.to_json()}, {"rows", std::move(arr)}, {"notes", notes}, {"pass", correct}}.dump(2)
            << "\n";
    } else {
        out << std::setw(8) << "size" << std::setw(12) << "path" << std::setw(14) << "median_ms" << std::setw(14)
            << "residual" << "\n";
        for (const auto& r : rows)
            out << std::setw(8) << r.size << std::setw(12) << r.path << std::setw(14) << r.median_ms << std::setw(14)
                << r.residual << "\n";
    }
    if (cfg.format != "json")
        for (const auto& n : notes) err << "note: " << n << "\n";
    if (!correct) {
        err << "error: convolution paths disagree beyond tolerance " << ring.tolerance() << "\n";
        return failed;
    }
    return ok;
}

// -- entry point --------------------------------------------------------------

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Group-ring tensor algebra: verification suites, demos, diagonalization and benchmarks", "grt"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::string which;

    auto common = [&](CLI::App* sub, bool with_sizes) {
        sub->add_option("--group", cfg.group, "group spec, e.g. Z4 or Z4xZ2");
        sub->add_option("--ring", cfg.ring, "ring spec: q, zmod:<m>, f64, c64");
        sub->add_option("--tol", cfg.tol, "relative tolerance for f64/c64")->check(CLI::NonNegativeNumber);
        sub->add_option("--seed", cfg.seed, "random seed");
        sub->add_option("--samples", cfg.samples, "random instances per check");
        sub->add_option("--format", cfg.format, "text, json or csv");
        if (with_sizes) sub->add_option("--sizes", cfg.sizes, "comma-separated sizes")->delimiter(',');
    };

    auto* verify = app.add_subcommand("verify", "run every property suite that applies to the ring");
    common(verify, false);
    auto* demo = app.add_subcommand("demo", "worked walkthrough on a small group");
    common(demo, false);
    demo->add_option("which", which, "products, basis, iso or degenerate")
        ->required()
        ->check(CLI::IsMember({"products", "basis", "iso", "degenerate"}));
    auto* diag = app.add_subcommand("diag", "generate and verify a diagonalization instance");
    common(diag, false);
    auto* bench = app.add_subcommand("bench", "time naive, transform and circulant convolution on Z_n");
    common(bench, true);
    bench->final_callback([&] {
        if (bench->count("--group") == 0) cfg.group = "Zn";
        if (bench->count("--ring") == 0) cfg.ring = "f64";
        if (bench->count("--format") == 0) cfg.format = "csv";
    });
    diag->final_callback([&] {
        if (diag->count("--ring") == 0) cfg.ring = "f64";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    try {
        if (*verify) return cmd_verify(cfg, out);
        if (*demo) return cmd_demo(cfg, which, out);
        if (*diag) return cmd_diag(cfg, out);
        return cmd_bench(cfg, out, err);
    } catch (const CLI::Error& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const invalid_group_spec& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const invalid_ring_spec& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const unsupported_ring& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const too_large_for_demo& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return failed;
    }
}

}  // namespace grt::cli
