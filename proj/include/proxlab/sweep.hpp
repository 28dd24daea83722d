#ifndef PROXLAB_SWEEP_HPP
#define PROXLAB_SWEEP_HPP

#include "proxlab/io.hpp"

#include <atomic>
#include <chrono>
#include <set>
#include <thread>

namespace proxlab {

// ---------------------------------------------------------------------------
// Configuration
// ---------------------------------------------------------------------------

struct GridSpec {
    std::string generator;           ///< random | lowerbound | sdm
    std::vector<std::size_t> n;
    std::vector<std::size_t> m;      ///< random, sdm; empty: n+1 .. 9 (random) or n+3 (sdm)
    std::vector<long> delta;         ///< lowerbound, sdm
    std::vector<std::size_t> k;      ///< lowerbound; empty: n-2
    long bound = 3;                  ///< random entry bound
    std::uint64_t seed_first = 1;
    std::uint64_t seed_last = 1;
};

struct SweepConfig {
    std::vector<GridSpec> grids;
    std::set<std::string> checks;    ///< proximity kappa volume walk lift rays lowerbound
    unsigned threads = 0;            ///< 0: hardware concurrency
    std::size_t lift_samples = 4;    ///< (I, alpha) pairs per instance for the lifting check
    Limits limits;
};

inline const std::set<std::string>& all_checks()
{
    static const std::set<std::string> c{"proximity", "kappa", "volume", "walk", "lift", "rays", "lowerbound"};
    return c;
}

inline SweepConfig default_sweep_config()
{
    SweepConfig cfg;
    cfg.checks = all_checks();
    GridSpec r;
    r.generator = "random";
    r.n = {2, 3, 4};
    r.seed_first = 1;
    r.seed_last = 60;
    cfg.grids.push_back(r);
    GridSpec lb;
    lb.generator = "lowerbound";
    lb.n = {2, 3, 4, 5};
    lb.delta = {3, 4, 5, 6};
    cfg.grids.push_back(lb);
    GridSpec s;
    s.generator = "sdm";
    s.n = {2, 3};
    s.delta = {1, 2, 3, 4, 5};
    s.seed_last = 10;
    cfg.grids.push_back(s);
    return cfg;
}

namespace detail {

template <class T>
std::vector<T> list_from_json(const Json& j, const std::string& where)
{
    std::vector<T> out;
    auto one = [&](const Json& x) {
        if (!x.is_number_integer())
            throw Error(ErrorKind::Parse, where + ": expected integers");
        auto v = x.get<long long>();
        if (v < 0 && std::is_unsigned_v<T>)
            throw Error(ErrorKind::Parse, where + ": expected nonnegative integers");
        out.push_back(static_cast<T>(v));
    };
    if (j.is_array())
        for (const auto& x : j)
            one(x);
    else
        one(j);
    return out;
}

} // namespace detail

/**
 * {} is a valid no-op configuration. A configuration with settings but no
 * "grids" key uses the default grids.
 */
inline SweepConfig sweep_config_from_json(const Json& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::Parse, "sweep config: expected a JSON object");
    SweepConfig cfg;
    if (j.empty())
        return cfg;
    if (!j.contains("grids"))
        cfg.grids = default_sweep_config().grids;
    cfg.checks = all_checks();
    for (const auto& [key, val] : j.items()) {
        if (key == "threads") {
            cfg.threads = detail::list_from_json<unsigned>(val, key).at(0);
        } else if (key == "lift_samples") {
            cfg.lift_samples = detail::list_from_json<std::size_t>(val, key).at(0);
        } else if (key == "cap_box") {
            cfg.limits.max_box_points = detail::list_from_json<unsigned long long>(val, key).at(0);
        } else if (key == "cap_subsets") {
            cfg.limits.max_subsets = detail::list_from_json<unsigned long long>(val, key).at(0);
        } else if (key == "checks") {
            if (!val.is_array())
                throw Error(ErrorKind::Parse, "sweep config: checks must be an array");
            cfg.checks.clear();
            for (const auto& c : val) {
                if (!c.is_string() || !all_checks().count(c.get<std::string>()))
                    throw Error(ErrorKind::Parse, "sweep config: unknown check " + c.dump());
                cfg.checks.insert(c.get<std::string>());
            }
        } else if (key == "grids") {
            if (!val.is_array())
                throw Error(ErrorKind::Parse, "sweep config: grids must be an array");
            for (const auto& g : val) {
                if (!g.is_object() || !g.contains("generator") || !g["generator"].is_string())
                    throw Error(ErrorKind::Parse, "sweep config: each grid needs a generator");
                GridSpec spec;
                spec.generator = g["generator"].get<std::string>();
                if (spec.generator != "random" && spec.generator != "lowerbound" && spec.generator != "sdm")
                    throw Error(ErrorKind::Parse, "sweep config: unknown generator " + spec.generator);
                for (const auto& [gk, gv] : g.items()) {
                    if (gk == "generator")
                        continue;
                    if (gk == "n")
                        spec.n = detail::list_from_json<std::size_t>(gv, gk);
                    else if (gk == "m")
                        spec.m = detail::list_from_json<std::size_t>(gv, gk);
                    else if (gk == "delta")
                        spec.delta = detail::list_from_json<long>(gv, gk);
                    else if (gk == "k")
                        spec.k = detail::list_from_json<std::size_t>(gv, gk);
                    else if (gk == "bound")
                        spec.bound = detail::list_from_json<long>(gv, gk).at(0);
                    else if (gk == "seeds") {
                        auto s = detail::list_from_json<std::uint64_t>(gv, gk);
                        if (s.size() != 2 || s[0] > s[1])
                            throw Error(ErrorKind::Parse, "sweep config: seeds must be [first, last]");
                        spec.seed_first = s[0];
                        spec.seed_last = s[1];
                    } else
                        throw Error(ErrorKind::Parse, "sweep config: unknown grid key " + gk);
                }
                if (spec.n.empty())
                    throw Error(ErrorKind::Parse, "sweep config: grid needs n");
                if (spec.generator != "random" && spec.delta.empty())
                    throw Error(ErrorKind::Parse, "sweep config: grid needs delta");
                cfg.grids.push_back(spec);
            }
        } else {
            throw Error(ErrorKind::Parse, "sweep config: unknown key " + key);
        }
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// Tasks and records
// ---------------------------------------------------------------------------

struct SweepTask {
    std::string id;
    std::string generator;
    std::size_t n = 0, m = 0, k = 0;
    long delta = 0;
    long bound = 0;
    std::uint64_t seed = 0;
};

inline std::vector<SweepTask> expand_grids(const SweepConfig& cfg)
{
    std::vector<SweepTask> out;
    for (const auto& g : cfg.grids) {
        for (auto n : g.n) {
            if (g.generator == "lowerbound") {
                std::vector<std::size_t> ks = g.k;
                if (ks.empty())
                    ks = {n >= 2 ? n - 2 : 0};
                for (auto d : g.delta)
                    for (auto k : ks) {
                        // the grid is a cross product; skip (n, k) pairs outside the family
                        if (k >= n || d - static_cast<long>(n) + static_cast<long>(k) < 1)
                            continue;
                        SweepTask t{"", g.generator, n, 0, k, d, 0, 0};
                        t.id = "lowerbound-d" + std::to_string(d) + "-n" + std::to_string(n) + "-k" + std::to_string(k);
                        out.push_back(t);
                    }
                continue;
            }
            std::vector<std::size_t> ms = g.m;
            std::vector<long> deltas = g.generator == "sdm" ? g.delta : std::vector<long>{0};
            for (auto d : deltas)
                for (auto seed = g.seed_first; seed <= g.seed_last; ++seed) {
                    std::vector<std::size_t> mlist = ms;
                    if (mlist.empty()) {
                        // cycle m through n+1 .. 9 by seed for random, fixed n+3 for sdm
                        std::size_t lo = n + 1, hi = std::max<std::size_t>(9, n + 1);
                        mlist = {g.generator == "sdm" ? n + 3 : lo + seed % (hi - lo + 1)};
                    }
                    for (auto m : mlist) {
                        SweepTask t{"", g.generator, n, m, 0, d, g.bound, seed};
                        t.id = g.generator + "-n" + std::to_string(n) + "-m" + std::to_string(m) +
                               (g.generator == "sdm" ? "-d" + std::to_string(d) : "") + "-s" + std::to_string(seed);
                        out.push_back(t);
                    }
                }
        }
    }
    return out;
}

struct InstanceRecord {
    std::string id;
    std::string generator;
    std::size_t n = 0, m = 0;
    std::uint64_t seed = 0;
    long delta_param = 0;
    bool ok = false;
    std::string error_kind;
    std::string error;

    std::optional<ProximityReport> report;            ///< original instance
    std::optional<ProximityReport> normalized_report; ///< normalized instance
    bool nontrivial = false;   ///< normalized x* != 0
    bool normalize_fallback = false;

    std::map<std::size_t, Rational> kappa_max;  ///< per slice dimension
    std::size_t kappa_slices = 0;
    std::size_t kappa_degenerate = 0;
    std::size_t volume_checks = 0;
    std::size_t walks = 0;
    std::size_t walks_certified = 0;
    std::size_t walk_steps_max = 0;
    std::size_t lifts = 0;
    std::size_t lifts_verified = 0;
    std::optional<Integer> ray_multiplicity;
    std::optional<std::string> lower_bound_failure;
    std::vector<std::string> violations;
    double seconds = 0;
};

inline std::string error_kind_name(ErrorKind k) { return std::string(to_string(k)); }

/// Witness of the normalized matrix: rows -A_{I*} appended by normalization extend T by -T_{I*}.
inline DeltaModularWitness normalized_witness(const NormalizedInstance& N, const DeltaModularWitness& w)
{
    if (N.base.m() == w.T.rows())
        return w;
    return DeltaModularWitness{w.T.stacked(-w.T.select_rows(N.basis)), w.B};
}

inline RayDecomposition decompose_normalized(const NormalizedInstance& N, const DeltaModularWitness& w,
                                             const Limits& limits = {})
{
    auto nw = normalized_witness(N, w);
    return ray_decomposition(N.base.A(), nw.T, nw.B, N.x_star, limits);
}

/// Failed decomposition properties and bounds (N <= Delta - 1, |r|_inf <= Delta_{n-1}/Delta).
inline std::vector<std::string> ray_violations(const NormalizedInstance& N, const DeltaModularWitness& w,
                                               const RayDecomposition& rd, const Limits& limits = {})
{
    std::vector<std::string> out;
    const Rational delta = abs(det(w.B));
    const Rational dn1 = N.base.n() >= 2 ? max_abs_minor(N.base.A(), N.base.n() - 1, limits) : Rational(1);
    if (!(rd.sums_to_apex && rd.rays_in_cone && rd.sums_in_spindle && rd.sums_distinct && rd.no_lattice_point))
        out.push_back("ray decomposition property fails");
    if (Rational(rd.total_multiplicity) > delta - 1 && !is_zero(N.x_star))
        out.push_back("ray multiplicity " + rd.total_multiplicity.get_str() + " > Delta - 1");
    for (const auto& t : rd.terms)
        if (inf_norm(t.ray) > dn1 / delta)
            out.push_back("ray norm " + rational_string(inf_norm(t.ray)) + " > Delta_{n-1}/Delta");
    return out;
}

namespace detail {

inline void check_report(InstanceRecord& rec, const ProximityReport& r, const std::string& tag)
{
    for (auto* b : r.bounds())
        if (!b->holds())
            rec.violations.push_back(tag + " " + b->name + ": proximity " + rational_string(r.proximity) +
                                     (b->strict_required ? " >= " : " > ") + rational_string(b->bound));
}

inline void run_kappa(InstanceRecord& rec, const NormalizedInstance& N, const Limits& limits)
{
    auto sv = survey_slices(N, signed_unit_vectors(N.base.n()), 1, 3, limits);
    rec.kappa_slices = sv.entries.size();
    rec.kappa_degenerate = sv.degenerate;
    for (const auto& [d, e] : sv.best_by_dimension)
        rec.kappa_max[d] = e.kappa;
    for (const auto& e : sv.entries) {
        bool bad = e.dimension <= 2 ? e.kappa >= 1 : e.kappa * e.kappa >= 2;
        if (bad)
            rec.violations.push_back("kappa_" + std::to_string(e.dimension) + " = " + rational_string(e.kappa) +
                                     " on I = " + to_string(e.I));
    }
}

inline void run_volume(InstanceRecord& rec, const NormalizedInstance& N, const Limits& limits)
{
    const std::size_t n = N.base.n();
    if (n != 2 && n != 3)
        return;
    if (dimension(N.base.polyhedron(), limits) != n)
        return;
    for (const auto& a : signed_unit_vectors(n)) {
        auto v = check_volume_bound_full(N, a, limits);
        ++rec.volume_checks;
        if (!v.holds)
            rec.violations.push_back("volume inequality: " + rational_string(v.lhs) + " >= " + rational_string(v.rhs));
    }
}

inline void run_walk(InstanceRecord& rec, const NormalizedInstance& N, const Limits& limits)
{
    for (const auto& a : signed_unit_vectors(N.base.n())) {
        auto tr = template_walk(N, a, {}, limits);
        auto cert = certify_walk(tr, N.base.A(), limits);
        ++rec.walks;
        rec.walk_steps_max = std::max(rec.walk_steps_max, tr.t());
        if (cert.all())
            ++rec.walks_certified;
        else
            rec.violations.push_back("walk certificate fails for alpha = " + to_string(tr.alpha));
    }
}

inline void run_lift(InstanceRecord& rec, const NormalizedInstance& N, std::size_t samples, const Limits& limits)
{
    const Matrix& A = N.base.A();
    const std::size_t n = A.cols();
    HPolyhedron P = N.base.polyhedron();
    for (std::size_t s = 1; s + 1 <= n && rec.lifts < samples; ++s) {
        for_each_subset(A.rows(), s, [&](const std::vector<std::size_t>& idx) {
            if (rec.lifts >= samples)
                return false;
            IndexSet I(idx);
            if (!I.empty() && rank(A.select_rows(I)) != s)
                return true;
            if (dimension(slice(P, I), limits) != n - s)
                return true;
            for (const auto& a : signed_unit_vectors(n)) {
                if (rec.lifts >= samples)
                    break;
                if (delta_I(A, a, I, limits) == 0)
                    continue;
                auto L = lift(N, a, I, limits);
                auto v = inspect_lift(N, a, L, limits);
                ++rec.lifts;
                if (v.failure().empty())
                    ++rec.lifts_verified;
                else
                    rec.violations.push_back("lift " + to_string(I) + ": " + v.failure());
            }
            return true;
        });
    }
}

inline void run_rays(InstanceRecord& rec, const NormalizedInstance& N, const DeltaModularWitness& w,
                     const Limits& limits)
{
    auto rd = decompose_normalized(N, w, limits);
    rec.ray_multiplicity = rd.total_multiplicity;
    for (auto& v : ray_violations(N, w, rd, limits))
        rec.violations.push_back(std::move(v));
}

} // namespace detail

inline InstanceRecord run_task(const SweepTask& t, const SweepConfig& cfg)
{
    const auto t0 = std::chrono::steady_clock::now();
    InstanceRecord rec;
    rec.id = t.id;
    rec.generator = t.generator;
    rec.n = t.n;
    rec.seed = t.seed;
    rec.delta_param = t.delta;
    const Limits& limits = cfg.limits;
    auto has = [&](const char* c) { return cfg.checks.count(c) > 0; };
    try {
        Instance inst;
        std::optional<DeltaModularWitness> witness;
        std::optional<LowerBoundInstance> lb;
        if (t.generator == "random") {
            inst = gen_random(t.n, t.m, t.bound, t.seed).instance;
        } else if (t.generator == "sdm") {
            auto g = gen_strictly_delta_modular(t.n, t.m, t.delta, t.seed);
            inst = g.instance;
            witness = g.witness;
        } else {
            lb = gen_lower_bound(t.delta, t.n, t.k);
            inst = lb->instance;
            witness = DeltaModularWitness{lb->T, lb->B};
        }
        rec.m = inst.m();

        if (lb && has("lowerbound")) {
            auto c = inspect_lower_bound(*lb, limits);
            rec.lower_bound_failure = c.failure();
            if (!c.failure().empty())
                rec.violations.push_back("lower bound claim fails: " + c.failure());
        }
        if (has("proximity")) {
            rec.report = measure_proximity(inst, limits, witness);
            detail::check_report(rec, *rec.report, "original");
            if (lb && t.k + 2 == t.n && rec.report->proximity != t.delta - 2)
                rec.violations.push_back("lower bound proximity " + rational_string(rec.report->proximity) +
                                         " != Delta - 2");
        }
        const bool need_norm = has("proximity") || has("kappa") || has("volume") || has("walk") || has("lift") ||
                               (has("rays") && witness);
        if (need_norm) {
            NormalizedInstance N = normalize(inst, limits);
            rec.normalize_fallback = N.fallback;
            rec.nontrivial = !is_zero(N.x_star);
            if (has("proximity")) {
                std::optional<DeltaModularWitness> nw;
                if (witness)
                    nw = normalized_witness(N, *witness);
                rec.normalized_report = measure_proximity(N.base, limits, nw);
                detail::check_report(rec, *rec.normalized_report, "normalized");
            }
            if (rec.nontrivial) {
                if (has("kappa"))
                    detail::run_kappa(rec, N, limits);
                if (has("volume"))
                    detail::run_volume(rec, N, limits);
                if (has("walk"))
                    detail::run_walk(rec, N, limits);
                if (has("lift"))
                    detail::run_lift(rec, N, cfg.lift_samples, limits);
            }
            if (has("rays") && witness)
                detail::run_rays(rec, N, *witness, limits);
        }
        rec.ok = true;
    } catch (const Error& e) {
        rec.error_kind = error_kind_name(e.kind());
        rec.error = e.what();
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

// ---------------------------------------------------------------------------
// Running and aggregation
// ---------------------------------------------------------------------------

struct SweepResult {
    std::vector<InstanceRecord> records;
    double seconds = 0;

    std::size_t violation_count() const
    {
        std::size_t v = 0;
        for (const auto& r : records)
            v += r.violations.size();
        return v;
    }
    std::size_t error_count() const
    {
        return static_cast<std::size_t>(
            std::count_if(records.begin(), records.end(), [](const InstanceRecord& r) { return !r.ok; }));
    }
};

/// Runs every task; results keep the task order whatever the thread count.
inline SweepResult run_sweep(const SweepConfig& cfg)
{
    const auto t0 = std::chrono::steady_clock::now();
    auto tasks = expand_grids(cfg);
    SweepResult res;
    res.records.resize(tasks.size());
    unsigned threads = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, tasks.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
            res.records[i] = run_task(tasks[i], cfg);
    };
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; ++i)
        pool.emplace_back(worker);
    worker();
    pool.clear();
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

inline Json to_json(const InstanceRecord& r)
{
    Json j{{"id", r.id}, {"generator", r.generator}, {"n", r.n}, {"m", r.m}, {"seed", r.seed}, {"ok", r.ok}};
    if (!r.ok) {
        j["error_kind"] = r.error_kind;
        j["error"] = r.error;
    }
    if (r.report)
        j["report"] = to_json(*r.report);
    if (r.normalized_report)
        j["normalized_report"] = to_json(*r.normalized_report);
    j["nontrivial"] = r.nontrivial;
    j["normalize_fallback"] = r.normalize_fallback;
    Json km = Json::object();
    for (const auto& [d, k] : r.kappa_max)
        km[std::to_string(d)] = rational_json(k);
    j["kappa_max"] = km;
    j["kappa_slices"] = r.kappa_slices;
    j["kappa_degenerate"] = r.kappa_degenerate;
    j["volume_checks"] = r.volume_checks;
    j["walks"] = r.walks;
    j["walks_certified"] = r.walks_certified;
    j["walk_steps_max"] = r.walk_steps_max;
    j["lifts"] = r.lifts;
    j["lifts_verified"] = r.lifts_verified;
    if (r.ray_multiplicity)
        j["ray_multiplicity"] = integer_json(*r.ray_multiplicity);
    if (r.lower_bound_failure)
        j["lower_bound_certified"] = r.lower_bound_failure->empty();
    j["violations"] = r.violations;
    j["seconds"] = r.seconds;
    return j;
}

inline Json summary_json(const SweepResult& res)
{
    std::map<std::size_t, std::pair<Rational, std::string>> kmax;
    std::size_t nontrivial = 0, walks = 0, walks_ok = 0, lifts = 0, lifts_ok = 0, vol = 0;
    for (const auto& r : res.records) {
        nontrivial += r.nontrivial;
        walks += r.walks;
        walks_ok += r.walks_certified;
        lifts += r.lifts;
        lifts_ok += r.lifts_verified;
        vol += r.volume_checks;
        for (const auto& [d, k] : r.kappa_max)
            if (!kmax.count(d) || k > kmax[d].first)
                kmax[d] = {k, r.id};
    }
    Json km = Json::object();
    for (const auto& [d, p] : kmax)
        km[std::to_string(d)] = Json{{"kappa", rational_json(p.first)},
                                     {"kappa_squared", rational_json(p.first * p.first)},
                                     {"instance", p.second}};
    Json viol = Json::array();
    for (const auto& r : res.records)
        for (const auto& v : r.violations)
            viol.push_back(r.id + ": " + v);
    return Json{{"instances", res.records.size()},
                {"errors", res.error_count()},
                {"nontrivial_normalized", nontrivial},
                {"violations", viol},
                {"kappa_max", km},
                {"volume_checks", vol},
                {"walks", walks},
                {"walks_certified", walks_ok},
                {"lifts", lifts},
                {"lifts_verified", lifts_ok},
                {"seconds", res.seconds}};
}

inline Json to_json(const SweepResult& res)
{
    Json recs = Json::array();
    for (const auto& r : res.records)
        recs.push_back(to_json(r));
    return Json{{"summary", summary_json(res)}, {"records", recs}};
}

inline std::string sweep_csv(const SweepResult& res)
{
    std::string out = csv_line({"id", "generator", "n", "m", "seed", "ok", "error_kind", "proximity", "delta_n1",
                                "delta_n", "classical", "classical_n1", "main", "strictly_delta_modular", "nontrivial",
                                "kappa_1", "kappa_2", "kappa_3", "walks_certified", "walks", "lifts_verified", "lifts",
                                "ray_multiplicity", "violations", "seconds"});
    for (const auto& r : res.records) {
        auto flag = [&](std::size_t i) {
            return r.report ? std::string(to_string(r.report->bounds()[i]->flag)) : std::string();
        };
        auto kap = [&](std::size_t d) {
            auto it = r.kappa_max.find(d);
            return it == r.kappa_max.end() ? std::string() : rational_string(it->second);
        };
        std::string dn1, dn;
        if (r.report) {
            const auto& t = r.report->delta_table;
            dn = rational_string(t.back());
            dn1 = t.size() >= 2 ? rational_string(t[t.size() - 2]) : "1";
        }
        std::ostringstream secs;
        secs << r.seconds;
        out += csv_line({r.id, r.generator, std::to_string(r.n), std::to_string(r.m), std::to_string(r.seed),
                         r.ok ? "true" : "false", r.error_kind,
                         r.report ? rational_string(r.report->proximity) : "", dn1, dn, flag(0), flag(1), flag(2),
                         flag(3), r.nontrivial ? "true" : "false", kap(1), kap(2), kap(3),
                         std::to_string(r.walks_certified), std::to_string(r.walks), std::to_string(r.lifts_verified),
                         std::to_string(r.lifts), r.ray_multiplicity ? r.ray_multiplicity->get_str() : "",
                         std::to_string(r.violations.size()), secs.str()});
    }
    return out;
}

} // namespace proxlab

#endif
