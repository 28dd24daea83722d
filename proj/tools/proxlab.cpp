// proxlab: measure, generate, sweep, walk, lift, decompose-rays.
//
// Exit codes: 0 all bounds hold, 1 a bound or certified claim is violated,
// 2 parse error or invalid parameters, 3 infeasible or unbounded, 4 resource
// cap exceeded.

#include "proxlab/proxlab.hpp"

#include "CLI11.hpp"

#include <iostream>

using namespace proxlab;

namespace {

enum Exit { Ok = 0, Violated = 1, BadInput = 2, NoOptimum = 3, OverCap = 4 };

int exit_code(ErrorKind k)
{
    switch (k) {
    case ErrorKind::Infeasible:
    case ErrorKind::Unbounded:
    case ErrorKind::Unpointed:
        return NoOptimum;
    case ErrorKind::Resource:
        return OverCap;
    case ErrorKind::Certification:
    case ErrorKind::LiftDefect:
    case ErrorKind::Stalled:
        return Violated;
    default:
        return BadInput;
    }
}

struct Global {
    unsigned long long cap_box = Limits{}.max_box_points;
    unsigned long long cap_subsets = Limits{}.max_subsets;
    std::uint64_t seed = 1;
    std::string out;

    Limits limits() const { return Limits{cap_box, cap_subsets}; }
};

void emit(const Global& g, const Json& j)
{
    if (g.out.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_json(g.out, j);
}

std::vector<std::string> split(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else if (ch != ' ') {
            cur += ch;
        }
    }
    if (!cur.empty() || !out.empty())
        out.push_back(cur);
    return out;
}

Vector parse_vector_arg(const std::string& s, const char* what)
{
    Vector v;
    for (const auto& x : split(s)) {
        Rational r = parse_rational(x);
        if (!is_integral(r))
            throw Error(ErrorKind::Parse, std::string(what) + ": entries must be integers");
        v.push_back(r);
    }
    return v;
}

std::vector<std::size_t> parse_index_arg(const std::string& s, const char* what)
{
    std::vector<std::size_t> out;
    for (const auto& x : split(s)) {
        if (x.empty() || x.find_first_not_of("0123456789") != std::string::npos)
            throw Error(ErrorKind::Parse, std::string(what) + ": expected nonnegative integers, got '" + x + "'");
        out.push_back(std::stoul(x));
    }
    return out;
}

/// Uses the instance as is when it already is normalized, otherwise normalizes it.
NormalizedInstance load_normalized(const InstanceFile& f, const Limits& limits, bool& was_normalized)
{
    auto pts = lattice_points(f.instance.polyhedron(), limits);
    was_normalized = pts.size() == 1 && is_zero(pts.front());
    return was_normalized ? as_normalized(f.instance, limits) : normalize(f.instance, limits);
}

Json normalization_json(const NormalizedInstance& N, bool input_normalized)
{
    return Json{{"input_normalized", input_normalized},
                {"x_star", vector_json(N.x_star, false)},
                {"basis", index_set_json(N.basis)},
                {"shift", vector_json(N.shift, true)},
                {"fallback", N.fallback},
                {"instance", to_json(InstanceFile{N.base, std::nullopt, {}})}};
}

// ---------------------------------------------------------------------------

int cmd_measure(const Global& g, const std::string& path)
{
    auto f = read_instance(path);
    const auto t0 = std::chrono::steady_clock::now();
    auto rep = measure_proximity(f.instance, g.limits(), f.witness);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    Json j{{"id", f.metadata.count("id") ? f.metadata.at("id") : path}, {"report", to_json(rep)}, {"seconds", secs}};
    emit(g, j);
    std::cerr << "proximity " << rational_string(rep.proximity) << "\n";
    for (const auto* b : rep.bounds())
        std::cerr << "  " << b->name << " <" << (b->strict_required ? "" : "=") << " " << rational_string(b->bound)
                  << ": " << to_string(b->flag) << "\n";
    return rep.all_hold() ? Ok : Violated;
}

struct GenerateArgs {
    long delta = 0;
    std::size_t n = 0, m = 0, k = 0;
    long bound = 3;
};

int cmd_generate(const Global& g, const std::string& kind, const GenerateArgs& a)
{
    InstanceFile f;
    int rc = Ok;
    if (kind == "lowerbound") {
        auto L = gen_lower_bound(a.delta, a.n, a.k);
        auto c = inspect_lower_bound(L, g.limits());
        f = InstanceFile{L.instance, DeltaModularWitness{L.T, L.B},
                         {{"generator", "lowerbound"},
                          {"delta", std::to_string(a.delta)},
                          {"n", std::to_string(a.n)},
                          {"k", std::to_string(a.k)},
                          {"x_star", to_string(L.x_star)},
                          {"certificate", to_json(c).dump()},
                          {"certified", c.failure().empty() ? "true" : "false"}}};
        if (!c.failure().empty()) {
            std::cerr << "lower bound claim fails: " << c.failure() << "\n";
            rc = Violated;
        }
    } else if (kind == "random") {
        auto r = gen_random(a.n, a.m, a.bound, g.seed);
        f = InstanceFile{r.instance, r.witness, r.metadata};
    } else {
        auto r = gen_strictly_delta_modular(a.n, a.m, a.delta, g.seed);
        f = InstanceFile{r.instance, r.witness, r.metadata};
    }
    emit(g, to_json(f));
    return rc;
}

int cmd_sweep(Global g, const std::string& path, const std::string& csv, unsigned threads)
{
    SweepConfig cfg = path.empty() ? default_sweep_config() : sweep_config_from_json(parse_json_text(read_text(path), path));
    if (g.cap_box != Limits{}.max_box_points)
        cfg.limits.max_box_points = g.cap_box;
    if (g.cap_subsets != Limits{}.max_subsets)
        cfg.limits.max_subsets = g.cap_subsets;
    if (threads)
        cfg.threads = threads;
    auto res = run_sweep(cfg);
    if (!g.out.empty())
        write_json(g.out, to_json(res));
    if (!csv.empty())
        write_atomic(csv, sweep_csv(res));
    auto summary = summary_json(res);
    std::cout << summary.dump(2) << "\n";
    if (res.violation_count())
        return Violated;
    for (const auto& r : res.records)
        if (!r.ok) {
            // first failed instance decides
            if (r.error_kind == "resource")
                return OverCap;
            if (r.error_kind == "infeasible" || r.error_kind == "unbounded" || r.error_kind == "unpointed")
                return NoOptimum;
            return r.error_kind == "certification" || r.error_kind == "lift-defect" ? Violated : BadInput;
        }
    return Ok;
}

int cmd_walk(const Global& g, const std::string& path, const std::string& dseq, const std::string& alpha_arg)
{
    auto f = read_instance(path);
    bool was;
    auto N = load_normalized(f, g.limits(), was);
    const std::size_t n = N.base.n();
    std::vector<Vector> alphas;
    if (!alpha_arg.empty())
        alphas.push_back(parse_vector_arg(alpha_arg, "--alpha"));
    else
        alphas = signed_unit_vectors(n);
    std::vector<std::size_t> d_seq = dseq.empty() ? std::vector<std::size_t>{} : parse_index_arg(dseq, "--d-seq");
    Json walks = Json::array();
    bool ok = true;
    for (const auto& a : alphas) {
        if (a.size() != n)
            throw Error(ErrorKind::InvalidArgument, "--alpha has " + std::to_string(a.size()) + " entries, expected " +
                                                        std::to_string(n));
        auto tr = template_walk(N, a, d_seq, g.limits());
        auto cert = certify_walk(tr, N.base.A(), g.limits());
        ok = ok && cert.all();
        walks.push_back(to_json(tr, cert));
        std::cerr << "alpha " << to_string(a) << ": t = " << tr.t() << ", certified " << (cert.all() ? "yes" : "NO")
                  << "\n";
    }
    emit(g, Json{{"normalization", normalization_json(N, was)}, {"walks", walks}});
    return ok ? Ok : Violated;
}

int cmd_lift(const Global& g, const std::string& path, const std::string& rows, const std::string& alpha_arg)
{
    auto f = read_instance(path);
    bool was;
    auto N = load_normalized(f, g.limits(), was);
    IndexSet I(parse_index_arg(rows, "--rows"));
    Vector a = parse_vector_arg(alpha_arg, "--alpha");
    if (a.size() != N.base.n())
        throw Error(ErrorKind::InvalidArgument, "--alpha has wrong length");
    auto L = lift(N, a, I, g.limits());
    auto v = inspect_lift(N, a, L, g.limits());
    emit(g, Json{{"normalization", normalization_json(N, was)}, {"lift", to_json(L, v)}});
    if (!v.failure().empty()) {
        std::cerr << "lift fails: " << v.failure() << "\n";
        return Violated;
    }
    std::cerr << "lifted to dimension " << L.d << ", all identities hold\n";
    return Ok;
}

int cmd_rays(const Global& g, const std::string& path)
{
    auto f = read_instance(path);
    if (!f.witness)
        throw Error(ErrorKind::InvalidArgument, "decompose-rays needs a T, B witness in the instance file");
    bool was;
    auto N = load_normalized(f, g.limits(), was);
    auto rd = decompose_normalized(N, *f.witness, g.limits());
    auto bad = ray_violations(N, *f.witness, rd, g.limits());
    emit(g, Json{{"normalization", normalization_json(N, was)}, {"decomposition", to_json(rd)}, {"violations", bad}});
    std::cerr << rd.terms.size() << " rays, total multiplicity " << rd.total_multiplicity.get_str() << "\n";
    for (const auto& v : bad)
        std::cerr << "  " << v << "\n";
    return bad.empty() ? Ok : Violated;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact proximity experiments for integer programs"};
    app.require_subcommand(1);
    app.fallthrough();
    Global g;
    app.add_option("--cap-box", g.cap_box, "Max lattice points scanned in a bounding box");
    app.add_option("--cap-subsets", g.cap_subsets, "Max row subsets enumerated");
    app.add_option("--seed", g.seed, "Seed for random generators");
    app.add_option("-o,--out", g.out, "Output file (default: stdout)");

    std::string path, csv, dseq, alpha, rows, kind;
    unsigned threads = 0;
    GenerateArgs ga;

    auto* measure = app.add_subcommand("measure", "Measure proximity and check all bounds");
    measure->add_option("instance", path, "Instance JSON")->required();

    auto* generate = app.add_subcommand("generate", "Generate an instance file");
    generate->add_option("kind", kind, "lowerbound | random | sdm")
        ->required()
        ->check(CLI::IsMember({"lowerbound", "random", "sdm"}));
    generate->add_option("--delta", ga.delta, "Delta (lowerbound, sdm)");
    generate->add_option("--n", ga.n, "Dimension")->required();
    generate->add_option("--m", ga.m, "Rows (random, sdm)");
    generate->add_option("--k", ga.k, "Cut count (lowerbound)");
    generate->add_option("--bound", ga.bound, "Entry bound (random)");

    auto* sweep = app.add_subcommand("sweep", "Run a batch sweep; no config runs the default grid");
    sweep->add_option("config", path, "Sweep config JSON");
    sweep->add_option("--csv", csv, "Per-instance CSV export");
    sweep->add_option("--threads", threads, "Worker threads (default: hardware)");

    auto* walk = app.add_subcommand("walk", "Template walk with per-step certification");
    walk->add_option("instance", path, "Instance JSON")->required();
    walk->add_option("--d-seq", dseq, "Comma-separated block sizes (default: twos and threes)");
    walk->add_option("--alpha", alpha, "Comma-separated integer direction (default: every +-e_i)");

    auto* lft = app.add_subcommand("lift", "Lift a slice to a full-dimensional instance");
    lft->add_option("instance", path, "Instance JSON")->required();
    lft->add_option("--rows", rows, "Comma-separated row indices I")->required();
    lft->add_option("--alpha", alpha, "Comma-separated integer direction")->required();

    auto* rays = app.add_subcommand("decompose-rays", "Decompose x* into spindle rays using the T, B witness");
    rays->add_option("instance", path, "Instance JSON with witness")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : BadInput;
    }

    try {
        if (*measure)
            return cmd_measure(g, path);
        if (*generate) {
            if (kind != "random" && !generate->count("--delta"))
                throw Error(ErrorKind::InvalidArgument, "generate " + kind + " needs --delta");
            if (kind != "lowerbound" && !generate->count("--m"))
                throw Error(ErrorKind::InvalidArgument, "generate " + kind + " needs --m");
            return cmd_generate(g, kind, ga);
        }
        if (*sweep)
            return cmd_sweep(g, path, csv, threads);
        if (*walk)
            return cmd_walk(g, path, dseq, alpha);
        if (*lft)
            return cmd_lift(g, path, rows, alpha);
        if (*rays)
            return cmd_rays(g, path);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return BadInput;
    }
    return Ok;
}
