// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "proxlab/proxlab.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

using namespace proxlab;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    std::vector<std::string> failures;

    void fail(const std::string& why)
    {
        pass = false;
        if (failures.size() < 5)
            failures.push_back(why);
    }
};

int failed = 0;

void report(int id, const char* title, Outcome& o)
{
    std::string d = o.detail.str();
    for (const auto& f : o.failures)
        d += "; " + f;
    std::printf("%s criterion %d (%s): %s\n", o.pass ? "PASS" : "FAIL", id, title, d.c_str());
    std::fflush(stdout);
    failed += !o.pass;
}

oracle::IntMat int_mat(const Matrix& M)
{
    oracle::IntMat out(M.rows(), std::vector<std::int64_t>(M.cols()));
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            out[i][j] = M(i, j).get_num().get_si();
    return out;
}

std::vector<std::int64_t> int_vec(const Vector& v)
{
    std::vector<std::int64_t> out;
    for (const auto& x : v)
        out.push_back(x.get_num().get_si());
    return out;
}

std::vector<std::pair<long, std::size_t>> delta_n_grid()
{
    std::vector<std::pair<long, std::size_t>> g;
    for (long delta = 3; delta <= 6; ++delta)
        for (std::size_t n = 2; n <= 5; ++n)
            g.emplace_back(delta, n);
    return g;
}

// ---------------------------------------------------------------------------
// Lower-bound family: criteria 1, 2, 3, 10

void lower_bound_criteria()
{
    Outcome c1, c2, c3, c10;
    double slowest = 0;
    std::size_t n1 = 0, n2 = 0, n10 = 0, oracle_checked = 0;
    for (auto [delta, n] : delta_n_grid()) {
        const std::size_t k = n - 2;
        auto t0 = Clock::now();
        auto L = gen_lower_bound(delta, n, k);
        auto rep = measure_proximity(L.instance, {}, DeltaModularWitness{L.T, L.B});
        double secs = since(t0);
        slowest = std::max(slowest, secs);
        ++n1;
        std::string tag = "(D=" + std::to_string(delta) + ",n=" + std::to_string(n) + ")";
        if (rep.proximity != delta - 2)
            c1.fail(tag + " proximity " + rational_string(rep.proximity));
        if (secs >= 10)
            c1.fail(tag + " took " + std::to_string(secs) + " s");
        if (n <= 3) {
            // brute-force cross-check on a box around the polytope
            auto bp = oracle::brute_proximity(int_mat(L.instance.A()), int_vec(L.instance.b()),
                                              int_vec(L.instance.c()), delta + 2);
            ++oracle_checked;
            if (bp != rep.proximity)
                c1.fail(tag + " oracle proximity " + rational_string(bp));
        }
    }
    c1.detail << n1 << " instances, proximity = Delta-2 exactly, slowest " << slowest << " s, " << oracle_checked
              << " cross-checked by brute force";

    std::size_t claims = 0;
    for (auto [delta, n] : delta_n_grid())
        for (std::size_t k = 0; k < n; ++k) {
            if (delta - static_cast<long>(n) + static_cast<long>(k) < 1)
                continue;
            auto L = gen_lower_bound(delta, n, k);
            auto c = inspect_lower_bound(L);
            std::string tag = "(D=" + std::to_string(delta) + ",n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
            ++n2;
            if (c.parallelepiped_points != (std::size_t{1} << k))
                c2.fail(tag + " count " + std::to_string(c.parallelepiped_points));
            // P(B) = {x : 0 <= B x <= rhs}, counted again by brute force
            auto rows = int_mat(L.B.stacked(-L.B));
            auto rhs = int_vec(L.rhs);
            rhs.resize(2 * n, 0);
            if (oracle::count_points(rows, rhs) != (std::size_t{1} << k))
                c2.fail(tag + " brute-force count disagrees");
            ++claims;
            if (!(c.x_star_feasible && c.no_shared_facet && c.full_dimensional && c.lattice_only_zero && c.tu_factor))
                c3.fail(tag + " " + c.failure());
            if (k + 1 == n) {
                ++n10;
                auto lp = lp_max(L.instance.polyhedron(), L.instance.c());
                if (lp.vertex.point != L.x_star)
                    c10.fail(tag + " generator x* is not the LP optimum");
                if (inf_norm(lp.vertex.point) != 1)
                    c10.fail(tag + " |x*| = " + rational_string(inf_norm(lp.vertex.point)));
                if (inf_norm(L.instance.b()) != delta - 1)
                    c10.fail(tag + " |b| = " + rational_string(inf_norm(L.instance.b())));
            }
        }
    c2.detail << n2 << " (Delta, n, k) instances with |P(B) cap Z^n| = 2^k, library and brute-force counts";
    c3.detail << claims << " instances: x* feasible, no shared facet, full-dimensional, P cap Z^n = {0}, TU factor";
    c10.detail << n10 << " top-cut instances with |x*|_inf = 1 and |b|_inf = Delta-1";
    report(1, "lower-bound tightness", c1);
    report(2, "parallelepiped lattice count", c2);
    report(3, "lower-bound structure", c3);
    report(10, "top cut", c10);
}

// ---------------------------------------------------------------------------
// Random normalized instances: criteria 4, 5, 6, 7, 8

struct Mahler {
    std::size_t checked = 0;
    Rational smallest;
};

/// Polar of a centrally symmetric lattice polygon, from its edges.
std::vector<Vector> polar_from_cycle(const std::vector<Vector>& cyc)
{
    std::vector<Vector> out;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& p = cyc[i];
        const auto& q = cyc[(i + 1) % cyc.size()];
        Vector nrm{q[1] - p[1], p[0] - q[0]};
        Rational h = nrm[0] * p[0] + nrm[1] * p[1];
        out.push_back(Vector{nrm[0] / h, nrm[1] / h});
    }
    return out;
}

HPolyhedron from_cycle(const std::vector<Vector>& cyc)
{
    std::vector<Vector> rows;
    Vector rhs;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
        const auto& p = cyc[i];
        const auto& q = cyc[(i + 1) % cyc.size()];
        Vector nrm{q[1] - p[1], p[0] - q[0]};
        rows.push_back(nrm);
        rhs.push_back(nrm[0] * p[0] + nrm[1] * p[1]);
    }
    return HPolyhedron(Matrix::from_rows(rows), rhs);
}

Mahler mahler_check(Outcome& o)
{
    Mahler m;
    std::mt19937_64 rng(2024);
    while (m.checked < 120) {
        std::vector<Vector> pts;
        int k = 2 + static_cast<int>(rng() % 5);
        for (int i = 0; i < k; ++i) {
            Vector p{Rational(static_cast<long>(rng() % 19) - 9), Rational(static_cast<long>(rng() % 19) - 9)};
            pts.push_back(p);
            pts.push_back(-p);
        }
        auto hull = convex_hull_2d(pts);
        if (hull.size() < 4)
            continue;
        Rational area = oracle::shoelace(hull);
        Rational polar_area = oracle::shoelace(polar_from_cycle(hull));
        if (polygon_area(polar_2d(from_cycle(hull))) != polar_area)
            o.fail("polar area disagrees with library");
        Rational product = area * polar_area;
        if (product < 8)
            o.fail("Mahler product " + rational_string(product));
        if (m.checked == 0 || product < m.smallest)
            m.smallest = product;
        ++m.checked;
    }
    return m;
}

void random_criteria()
{
    Outcome c4, c5, c6, c7, c8;
    const auto t_all = Clock::now();
    double c4_seconds = 0;
    std::size_t instances = 0, generated = 0, fallbacks = 0;
    std::map<std::size_t, std::size_t> per_n;
    std::map<std::size_t, Rational> kappa_max;
    std::size_t slices = 0, lift_triples = 0, volume_checks = 0, walked = 0, walks = 0;
    Rational worst_ratio = 0;

    const std::size_t target = 510;
    for (std::uint64_t seed = 1; instances < target && seed <= 6000; ++seed) {
        const std::size_t n = 2 + seed % 3;
        const std::size_t m = n + 1 + (seed / 3) % (10 - n); // n+1 .. 10
        auto t0 = Clock::now();
        auto g = gen_random(n, m, 3, seed);
        ++generated;
        auto N = normalize(g.instance);
        if (is_zero(N.x_star)) {
            c4_seconds += since(t0);
            continue; // trivial: the normalized polytope is {0}
        }
        ++instances;
        ++per_n[n];
        fallbacks += N.fallback;
        std::string tag = "seed " + std::to_string(seed);

        // 4: (n/2) Delta_{n-1} strictly and n Delta_{n-1}, on the original and the normalized instance
        for (const Instance* inst : {&g.instance, &N.base}) {
            auto rep = measure_proximity(*inst);
            Rational dn1 = rep.delta_table[n - 2];
            Rational main_bound = Rational(static_cast<long>(n), 2) * dn1;
            main_bound.canonicalize();
            if (!(rep.proximity < main_bound))
                c4.fail(tag + " proximity " + rational_string(rep.proximity) + " >= " + rational_string(main_bound));
            if (rep.proximity > static_cast<long>(n) * dn1)
                c4.fail(tag + " n Delta_{n-1} bound violated");
            if (rep.bound_main.flag == BoundFlag::Violated)
                c4.fail(tag + " report flags the main bound as violated");
            worst_ratio = std::max(worst_ratio, Rational(rep.proximity / main_bound));
        }
        c4_seconds += since(t0);

        // 5: kappa on slices of dimension 1..3 for every +-e_i
        auto sv = survey_slices(N, signed_unit_vectors(n), 1, 3);
        for (const auto& e : sv.entries) {
            ++slices;
            bool ok = e.dimension <= 2 ? e.kappa < 1 : e.kappa * e.kappa < 2;
            if (!ok)
                c5.fail(tag + " kappa_" + std::to_string(e.dimension) + " = " + rational_string(e.kappa));
            auto it = kappa_max.find(e.dimension);
            if (it == kappa_max.end() || e.kappa > it->second)
                kappa_max[e.dimension] = e.kappa;
        }

        // 6: lift triples; both sides recomputed here
        const Matrix& A = N.base.A();
        std::size_t lifted_here = 0;
        for (std::size_t s = 1; s + 1 <= n && lifted_here < 2; ++s)
            for_each_subset(A.rows(), s, [&](const std::vector<std::size_t>& idx) {
                if (lifted_here >= 2)
                    return false;
                IndexSet I(idx);
                if (rank(A.select_rows(I)) != s || dimension(slice(N.base.polyhedron(), I)) != n - s)
                    return true;
                for (const auto& a : signed_unit_vectors(n)) {
                    Rational dI = oracle::brute_delta_I(int_mat(A), int_vec(a), idx);
                    if (dI == 0)
                        continue;
                    auto L = lift(N, a, I);
                    Rational direct = lp_max(slice(N.base.polyhedron(), I), a).value / dI;
                    Rational lifted_delta = oracle::brute_delta_I(int_mat(L.A_hat), int_vec(L.alpha_hat), {});
                    Rational lifted = lp_max(HPolyhedron(L.A_hat, L.b_hat), L.alpha_hat).value / lifted_delta;
                    if (lifted_delta != dI)
                        c6.fail(tag + " Delta mismatch on I = " + to_string(I));
                    if (direct != lifted || kappa_I(N, a, I) != direct)
                        c6.fail(tag + " kappa mismatch on I = " + to_string(I));
                    ++lift_triples;
                    ++lifted_here;
                    break;
                }
                return true;
            });

        // 7: volume inequality on full-dimensional planar and spatial instances
        if (n <= 3 && dimension(N.base.polyhedron()) == n)
            for (const auto& a : signed_unit_vectors(n)) {
                auto v = check_volume_bound_full(N, a);
                ++volume_checks;
                if (!(v.lhs < v.rhs))
                    c7.fail(tag + " volume inequality " + rational_string(v.lhs) + " >= " + rational_string(v.rhs));
            }

        // 8: template walk with the default block sizes
        bool all_ok = true;
        for (const auto& a : signed_unit_vectors(n)) {
            auto tr = template_walk(N, a, {});
            auto cert = certify_walk(tr, A);
            ++walks;
            if (!(cert.telescoping && cert.step_bounds && cert.count_bound && cert.dimension_decrease)) {
                all_ok = false;
                c8.fail(tag + " walk for alpha " + to_string(a));
            }
        }
        walked += all_ok;
    }
    const double total = since(t_all);

    if (instances < 500)
        c4.fail("only " + std::to_string(instances) + " nontrivial instances");
    if (c4_seconds >= 600)
        c4.fail("runtime " + std::to_string(c4_seconds) + " s");
    c4.detail << instances << " nontrivial normalized instances (n=2: " << per_n[2] << ", n=3: " << per_n[3]
              << ", n=4: " << per_n[4] << ") from " << generated << " generated, " << fallbacks
              << " with fallback cut; max proximity/((n/2)Delta_{n-1}) = " << rational_string(worst_ratio) << ", "
              << c4_seconds << " s";
    c5.detail << slices << " (slice, alpha) pairs;";
    for (const auto& [d, k] : kappa_max)
        c5.detail << " max kappa_" << d << " = " << rational_string(k);
    if (kappa_max.count(3))
        c5.detail << " (squared " << rational_string(kappa_max[3] * kappa_max[3]) << " < 2)";
    if (lift_triples < 200)
        c6.fail("only " + std::to_string(lift_triples) + " triples");
    c6.detail << lift_triples << " (instance, I, alpha) triples with equal kappa and Delta";

    auto mh = mahler_check(c7);
    if (volume_checks == 0)
        c7.fail("no volume checks ran");
    c7.detail << volume_checks << " volume checks; Mahler product >= 8 on " << mh.checked
              << " symmetric polygons (smallest " << rational_string(mh.smallest) << ")";
    if (walked < 100)
        c8.fail("only " + std::to_string(walked) + " instances walked");
    c8.detail << walks << " walks on " << walked << " instances certified; shared loop " << total << " s";
    report(4, "main proximity bound sweep", c4);
    report(5, "slice widths", c5);
    report(6, "lifting equivalence", c6);
    report(7, "volume inequality and Mahler", c7);
    report(8, "template walk certification", c8);
}

// ---------------------------------------------------------------------------
// Strictly Delta-modular instances: criterion 9

void strictly_modular_criterion()
{
    Outcome c9;
    std::size_t sdm = 0, lb = 0, rays = 0;
    Integer max_mult = 0;
    auto check = [&](const Instance& inst, const DeltaModularWitness& w, const std::string& tag) {
        const std::size_t n = inst.n();
        auto rep = measure_proximity(inst, {}, w);
        Rational dn1 = n >= 2 ? rep.delta_table[n - 2] : Rational(1);
        Rational bound = std::max(dn1, rep.delta_table[n - 1]) - 1;
        if (rep.proximity > bound)
            c9.fail(tag + " proximity " + rational_string(rep.proximity) + " > " + rational_string(bound));
        auto N = normalize(inst);
        auto rd = decompose_normalized(N, w);
        for (const auto& v : ray_violations(N, w, rd))
            c9.fail(tag + " " + v);
        Integer delta = Rational(abs(det(w.B))).get_num();
        if (!is_zero(N.x_star) && rd.total_multiplicity > delta - 1)
            c9.fail(tag + " N > Delta - 1");
        rays += rd.terms.size();
        max_mult = std::max(max_mult, rd.total_multiplicity);
    };
    for (long delta = 1; delta <= 5; ++delta)
        for (std::uint64_t seed = 1; seed <= 24; ++seed) {
            std::size_t n = 2 + seed % 2;
            auto g = gen_strictly_delta_modular(n, n + 2 + seed % 3, delta, seed);
            check(g.instance, *g.witness, "sdm D=" + std::to_string(delta) + " seed " + std::to_string(seed));
            ++sdm;
        }
    for (auto [delta, n] : delta_n_grid())
        for (std::size_t k = 0; k < n; ++k) {
            if (delta - static_cast<long>(n) + static_cast<long>(k) < 1)
                continue;
            auto L = gen_lower_bound(delta, n, k);
            check(L.instance, DeltaModularWitness{L.T, L.B},
                  "lowerbound (" + std::to_string(delta) + "," + std::to_string(n) + "," + std::to_string(k) + ")");
            ++lb;
        }
    c9.detail << sdm << " strictly Delta-modular and " << lb << " lower-bound instances; " << rays
              << " rays, largest N = " << max_mult.get_str();
    report(9, "strictly Delta-modular bound and rays", c9);
}

} // namespace

int main()
{
    try {
        lower_bound_criteria();
        random_criteria();
        strictly_modular_criterion();
    } catch (const std::exception& e) {
        std::printf("FAIL acceptance aborted: %s\n", e.what());
        return 1;
    }
    return failed ? 1 : 0;
}
