// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

namespace {

using namespace grt;
using support::to_q;

constexpr double float_tol = 1e-9;
constexpr double diag_hypothesis_tol = 1e-8;
constexpr double diag_eigen_tol = 1e-7;
constexpr double transform_tol = 1e-9;
constexpr double t_inverse_tol = 1e-8;
constexpr double min_speedup = 10.0;

struct Outcome {
    bool pass = true;
    std::string detail;
    void require(bool ok, const std::string& why) {
        if (!ok && pass) detail = why;
        pass = pass && ok;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. Products against explicit circulant and block-circulant matrices on Z_n.
Outcome circulant_equivalence() {
    Outcome o;
    std::size_t checked = 0;
    for (long long n = 2; n <= 8; ++n) {
        const Tower<RationalRing> tw(make_group({n}), RationalRing{});
        const auto& f = tw.group().factors();
        const auto& V = tw.vectors();
        for (std::size_t i = 0; i < 200; ++i) {
            Rng rng(derive_seed(1000 + n, i));
            const auto a = V.sample(rng), b = V.sample(rng);
            const auto x = tw.sample_matrix(rng);
            const auto ta = tw.sample_tensor(rng), tb = tw.sample_tensor(rng);
            const auto circ = oracle::circulant(f, a.coeffs);
            const auto big = oracle::block_circulant(f, to_q(ta));
            o.require(V.mul(a, b).coeffs == oracle::matvec(circ, b.coeffs), "a*b != circ(a) b");
            o.require(to_q(tw.circ_matrix(a)) == circ, "circ_matrix layout");
            o.require(to_q(tw.scalar_product(V.anti_involution(a), x)) == oracle::matmul(to_q(x), circ),
                      "phi(a) o X != X circ(a)");
            o.require(to_q(tw.tensor_matrix_product(ta, x)) ==
                          oracle::unstack_columns(oracle::matvec(big, oracle::stack_columns(to_q(x))), tw.n()),
                      "A*X != blockcirc(A) X");
            o.require(to_q(tw.tensor_tensor_product(ta, tb)) ==
                          oracle::unstack_slices(oracle::matmul(big, oracle::stack_slices(to_q(tb))), tw.n()),
                      "A*B != blockcirc(A) B");
            ++checked;
        }
    }
    o.detail = o.pass ? std::to_string(checked) + " instances, 0 failures" : o.detail;
    return o;
}

// 2. Group-ring axioms for every group of order <= 16 and every ring, plus a depth-3 nest.
template <CommutativeRing R>
void ring_axioms(Outcome& o, const FiniteAbelianGroup& g, R ring, std::size_t& runs) {
    const GroupRing<R> V(g, ring);
    const auto res = group_ring_axiom_suite(V, 500, 2024);
    for (const auto& c : res.checks) {
        o.require(c.samples == 500 && c.failures == 0, V.spec() + " " + c.axiom);
        if constexpr (is_approximate_v<R>) o.require(c.max_residual <= float_tol, V.spec() + " residual " + c.axiom);
    }
    ++runs;
}

Outcome group_ring_axioms() {
    Outcome o;
    std::size_t runs = 0;
    for (const auto& g : enumerate_groups(16)) {
        ring_axioms(o, g, RationalRing{}, runs);
        ring_axioms(o, g, ModRing(6), runs);
        ring_axioms(o, g, ModRing(7), runs);
        ring_axioms(o, g, RealRing(float_tol), runs);
        ring_axioms(o, g, ComplexRing(float_tol), runs);

        // Convolution against the definition, independent of the library kernel.
        const GroupRing<RationalRing> V(g, RationalRing{});
        Rng rng(g.order());
        for (int i = 0; i < 20; ++i) {
            const auto a = V.sample(rng), b = V.sample(rng);
            o.require(V.mul(a, b).coeffs == oracle::convolve(g.factors(), a.coeffs, b.coeffs), g.spec() + " convolution");
        }
    }
    const auto nested = make_nested<3>(make_group({2}), RationalRing{});
    const auto res = group_ring_axiom_suite(nested, 500, 2025);
    o.require(res.pass(), "depth-3 nested ring");
    ++runs;
    if (o.pass) o.detail = std::to_string(runs) + " (group, ring) pairings incl. " + nested.spec();
    return o;
}

// 3. Module axioms, lemmas, round trip and natural-basis confinement over q.
Outcome free_module() {
    Outcome o;
    for (auto f : std::vector<std::vector<long long>>{{4}, {2, 2}, {6}}) {
        const Tower<RationalRing> tw(make_group(f), RationalRing{});
        for (const auto& r : check_module_axioms(tw, 500, 77))
            o.require(r.samples == 500 && r.failures == 0, tw.group().spec() + " " + r.axiom);
        for (std::size_t i = 0; i < 500; ++i) {
            Rng rng(derive_seed(78, i));
            const auto x = tw.sample_matrix(rng);
            o.require(tw.eq(reconstruct(tw, decompose(tw, x)), x), tw.group().spec() + " round trip");
            // Coordinates are the rows of X.
            const auto c = decompose(tw, x);
            for (std::size_t l = 0; l < tw.n(); ++l)
                for (std::size_t k = 0; k < tw.n(); ++k) o.require(c[l].coeffs[k] == x(l, k), "coordinate layout");
        }
        const auto w = natural_basis_degeneracy_witness(tw, tw.outer(1, 0), 100, 79);
        o.require(w.samples == 100 && w.confined == 100 && w.pass(), tw.group().spec() + " witness");
    }
    if (o.pass) o.detail = "7 laws x 500 on Z4, Z2xZ2, Z6; witness 100/100";
    return o;
}

// 4. Tensor <-> homomorphism correspondence for |G| <= 8.
Outcome isomorphism() {
    Outcome o;
    std::size_t groups = 0;
    for (const auto& g : enumerate_groups(8)) {
        const Tower<RationalRing> tw(g, RationalRing{});
        for (std::size_t inst = 0; inst < 5; ++inst) {
            Rng rng(derive_seed(400 + g.order() * 10 + g.rank(), inst));
            const auto t = tw.sample_tensor(rng);
            o.require(tw.eq(tensor_from_hom(tw, hom_from_tensor(tw, t)), t), g.spec() + " tensor->hom->tensor");
            const auto l = sample_hom(tw, rng);
            o.require(hom_eq(tw, hom_from_tensor(tw, tensor_from_hom(tw, l)), l), g.spec() + " hom->tensor->hom");
            const auto lt = tensor_from_hom(tw, l);
            const auto big = oracle::block_circulant(g.factors(), to_q(lt));
            for (int m = 0; m < 50; ++m) {
                const auto a = tw.sample_matrix(rng);
                const auto applied = hom_apply(tw, l, a);
                o.require(tw.eq(applied, tw.tensor_matrix_product(lt, a)), g.spec() + " hom_apply vs T*A");
                o.require(to_q(applied) ==
                              oracle::unstack_columns(oracle::matvec(big, oracle::stack_columns(to_q(a))), tw.n()),
                          g.spec() + " hom_apply vs block circulant");
            }
        }
        ++groups;
    }
    if (o.pass) o.detail = std::to_string(groups) + " groups, 5 instances x 50 matrices each";
    return o;
}

// 5. Generated diagonalizations and a perturbed-L negative control.
template <CommutativeRing R>
void diag_instances(Outcome& o, const FiniteAbelianGroup& g, R ring, double& worst_h, double& worst_e) {
    const Tower<R> tw(g, ring);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto inst = generate_diag_instance(tw, seed);
        const auto rep = verify_diagonalization(tw, inst.t, inst.x, inst.l, diag_hypothesis_tol, diag_eigen_tol);
        o.require(rep.hypothesis_residual <= diag_hypothesis_tol, g.spec() + " hypothesis");
        o.require(rep.per_k.size() == tw.n(), g.spec() + " per-k count");
        worst_h = std::max(worst_h, rep.hypothesis_residual);
        for (const auto& c : rep.per_k) {
            o.require(c.eigen_residual <= diag_eigen_tol, g.spec() + " eigen k=" + std::to_string(c.k));
            worst_e = std::max(worst_e, c.eigen_residual);
        }
        auto bad = inst.l;
        bad(seed % tw.n(), (seed / 2) % tw.n()) += typename R::value_type(0.25);
        const auto neg = verify_diagonalization(tw, inst.t, inst.x, bad, diag_hypothesis_tol, diag_eigen_tol);
        o.require(!neg.hypothesis_holds && !neg.pass(), g.spec() + " negative control not flagged");
    }
}

Outcome diagonalization() {
    Outcome o;
    double worst_h = 0.0, worst_e = 0.0;
    for (auto f : std::vector<std::vector<long long>>{{3}, {4}, {2, 2}}) {
        diag_instances(o, make_group(f), RealRing(float_tol), worst_h, worst_e);
        diag_instances(o, make_group(f), ComplexRing(float_tol), worst_h, worst_e);
    }
    if (o.pass) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "worst hypothesis %.2e, worst eigen %.2e", worst_h, worst_e);
        o.detail = buf;
    }
    return o;
}

// 6. Fast transform path and t-inverse.
std::vector<double> naive_convolution(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    std::vector<double> c(n, 0.0);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) c[(r + s) % n] += a[r] * b[s];
    return c;
}

double relative_max_gap(const std::vector<double>& x, const std::vector<double>& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        worst = std::max(worst, std::abs(x[i] - y[i]) / std::max({1.0, std::abs(x[i]), std::abs(y[i])}));
    return worst;
}

Outcome transform_correctness() {
    Outcome o;
    double worst = 0.0, worst_inv = 0.0;
    for (long long n : {12, 17, 64, 4096}) {
        const GroupRing<RealRing> V(make_group({n}), RealRing(float_tol));
        for (std::uint64_t i = 0; i < 3; ++i) {
            Rng rng(derive_seed(600 + n, i));
            const auto a = V.sample(rng), b = V.sample(rng);
            const double gap = relative_max_gap(gr_convolve_fast(V, a, b).coeffs, naive_convolution(a.coeffs, b.coeffs));
            worst = std::max(worst, gap);
            o.require(gap <= transform_tol, "order " + std::to_string(n));
        }
    }
    for (auto f : std::vector<std::vector<long long>>{{3}, {4}, {2, 2}, {5}, {3, 2}}) {
        const Tower<RealRing> tw(make_group(f), RealRing(float_tol));
        for (std::uint64_t i = 0; i < 5; ++i) {
            Rng rng(derive_seed(650, i));
            const auto x = tw.sample_tensor(rng);
            const double r = tw.residual(tw.tensor_tensor_product(x, tensor_t_inverse(tw, x)), tw.identity_tensor());
            worst_inv = std::max(worst_inv, r);
            o.require(r <= t_inverse_tol, tw.group().spec() + " t-inverse");
        }
    }
    if (o.pass) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "worst convolution gap %.2e, worst t-inverse residual %.2e", worst, worst_inv);
        o.detail = buf;
    }
    return o;
}

// 7. Fast convolution speedup at n = 4096.
Outcome performance() {
    Outcome o;
    constexpr long long n = 4096;
    const GroupRing<RealRing> V(make_group({n}), RealRing(float_tol));
    Rng rng(700);
    const auto a = V.sample(rng), b = V.sample(rng);
    auto median_ms = [](const std::function<void()>& fn) {
        std::vector<double> ms;
        for (int r = 0; r < 5; ++r) {
            const auto t0 = Clock::now();
            fn();
            ms.push_back(seconds_since(t0) * 1e3);
        }
        std::sort(ms.begin(), ms.end());
        return ms[2];
    };
    GroupRingElement<double> slow, fast;
    const double naive_ms = median_ms([&] { slow = V.mul(a, b); });
    const double fast_ms = median_ms([&] { fast = gr_convolve_fast(V, a, b); });
    const double gap = V.residual(slow, fast);
    o.require(gap <= transform_tol, "fast and naive disagree");
    const double speedup = naive_ms / std::max(fast_ms, 1e-6);
    o.require(speedup >= min_speedup, "speedup below 10x");
    char buf[160];
    std::snprintf(buf, sizeof buf, "naive %.2f ms, fast %.3f ms, speedup %.1fx, residual %.1e", naive_ms, fast_ms,
                  speedup, gap);
    o.detail = o.pass ? std::string(buf) : o.detail + " (" + buf + ")";
    return o;
}

struct Criterion {
    const char* name;
    double budget_s;
    Outcome (*run)();
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 circulant equivalence (Z2..Z8, q, 200 per row)", 30.0, circulant_equivalence},
        {"2 group-ring axioms (|G| <= 16, five rings, depth-3 nest)", 60.0, group_ring_axioms},
        {"3 free module (axioms, lemmas, round trip, witness)", 60.0, free_module},
        {"4 tensor/hom isomorphism (|G| <= 8, q)", 60.0, isomorphism},
        {"5 diagonalization (Z3, Z4, Z2xZ2, 20 seeds)", 60.0, diagonalization},
        {"6 transform correctness (12, 17, 64, 4096; t-inverse)", 60.0, transform_correctness},
        {"7 performance (n = 4096, fast >= 10x naive)", 60.0, performance},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double elapsed = seconds_since(t0);
        if (elapsed > c.budget_s) {
            o.pass = false;
            o.detail += " (over time budget)";
        }
        std::printf("[%s] %s: %s [%.2f s / %.0f s]\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(), elapsed,
                    c.budget_s);
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
