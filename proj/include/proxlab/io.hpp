#ifndef PROXLAB_IO_HPP
#define PROXLAB_IO_HPP

#include "proxlab/generators.hpp"
#include "proxlab/lifting.hpp"
#include "proxlab/spindle.hpp"

#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace proxlab {

using Json = nlohmann::ordered_json;

inline constexpr int schema_version = 1;

// ---------------------------------------------------------------------------
// Scalars
// ---------------------------------------------------------------------------

/// "p/q", or "p" when integral.
inline std::string rational_string(const Rational& r)
{
    return r.get_den() == 1 ? r.get_num().get_str() : r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational parse_rational(const std::string& s)
{
    auto bad = [&] { return Error(ErrorKind::Parse, "not a rational: \"" + s + "\""); };
    auto is_int = [](const std::string& t) {
        std::size_t i = !t.empty() && (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i >= t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!num.empty() && num[0] == '+')
        num.erase(0, 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-' || den[0] == '+')
        throw bad();
    Integer d(den);
    if (d == 0)
        throw Error(ErrorKind::Parse, "zero denominator in \"" + s + "\"");
    Rational r{Integer(num), d};
    r.canonicalize();
    return r;
}

/// Integers as JSON numbers when they fit in 64 bits, as decimal strings otherwise.
inline Json integer_json(const Integer& z)
{
    if (z.fits_slong_p())
        return Json(z.get_si());
    return Json(z.get_str());
}

inline Json rational_json(const Rational& r) { return Json(rational_string(r)); }

inline Rational scalar_from_json(const Json& j, bool integral, const std::string& where)
{
    Rational r;
    if (j.is_number_integer())
        r = Rational(Integer(std::to_string(j.get<long long>())));
    else if (j.is_number_unsigned())
        r = Rational(Integer(std::to_string(j.get<unsigned long long>())));
    else if (j.is_string())
        r = parse_rational(j.get<std::string>());
    else
        throw Error(ErrorKind::Parse, where + ": expected an integer or a \"p/q\" string");
    if (integral && r.get_den() != 1)
        throw Error(ErrorKind::Parse, where + ": expected an integer, got " + rational_string(r));
    return r;
}

inline Json vector_json(const Vector& v, bool integral)
{
    Json out = Json::array();
    for (const auto& x : v)
        out.push_back(integral && x.get_den() == 1 ? integer_json(x.get_num()) : rational_json(x));
    return out;
}

inline Vector vector_from_json(const Json& j, bool integral, const std::string& where)
{
    if (!j.is_array())
        throw Error(ErrorKind::Parse, where + ": expected an array");
    Vector v;
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(scalar_from_json(j[i], integral, where + "[" + std::to_string(i) + "]"));
    return v;
}

inline Json matrix_json(const Matrix& M)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i)
        out.push_back(vector_json(M.row(i), true));
    return out;
}

inline Matrix matrix_from_json(const Json& j, const std::string& where, std::optional<std::size_t> cols = std::nullopt)
{
    if (!j.is_array())
        throw Error(ErrorKind::Parse, where + ": expected an array of rows");
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < j.size(); ++i) {
        rows.push_back(vector_from_json(j[i], true, where + "[" + std::to_string(i) + "]"));
        if (rows.back().size() != rows.front().size())
            throw Error(ErrorKind::Parse, where + ": ragged rows");
    }
    if (rows.empty() && !cols)
        throw Error(ErrorKind::Parse, where + ": empty matrix");
    return Matrix::from_rows(rows, cols.value_or(0));
}

inline Json index_set_json(const IndexSet& I)
{
    Json out = Json::array();
    for (auto i : I)
        out.push_back(i);
    return out;
}

inline IndexSet index_set_from_json(const Json& j, const std::string& where)
{
    if (!j.is_array())
        throw Error(ErrorKind::Parse, where + ": expected an array of row indices");
    std::vector<std::size_t> idx;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0)
            throw Error(ErrorKind::Parse, where + ": row indices must be nonnegative integers");
        idx.push_back(x.get<std::size_t>());
    }
    return IndexSet(idx);
}

// ---------------------------------------------------------------------------
// Instance files
// ---------------------------------------------------------------------------

struct InstanceFile {
    Instance instance;
    std::optional<DeltaModularWitness> witness;
    Metadata metadata;

    friend bool operator==(const InstanceFile& a, const InstanceFile& b)
    {
        auto wit_eq = [](const auto& x, const auto& y) {
            return x.has_value() == y.has_value() && (!x || (x->T == y->T && x->B == y->B));
        };
        return a.instance == b.instance && wit_eq(a.witness, b.witness) && a.metadata == b.metadata;
    }
};

inline Json to_json(const InstanceFile& f)
{
    Json j;
    j["schema_version"] = schema_version;
    j["A"] = matrix_json(f.instance.A());
    j["b"] = vector_json(f.instance.b(), true);
    Json c = Json::array();
    for (const auto& x : f.instance.c())
        c.push_back(rational_json(x));
    j["c"] = c;
    if (f.witness) {
        j["T"] = matrix_json(f.witness->T);
        j["B"] = matrix_json(f.witness->B);
    }
    Json meta = Json::object();
    for (const auto& [k, v] : f.metadata)
        meta[k] = v;
    j["metadata"] = meta;
    return j;
}

inline InstanceFile instance_from_json(const Json& j)
{
    if (!j.is_object())
        throw Error(ErrorKind::Parse, "instance: expected a JSON object");
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw Error(ErrorKind::Parse, "instance: missing schema_version");
    if (j["schema_version"].get<int>() != schema_version)
        throw Error(ErrorKind::Parse, "instance: unsupported schema_version " + j["schema_version"].dump());
    for (const char* key : {"A", "b", "c"})
        if (!j.contains(key))
            throw Error(ErrorKind::Parse, std::string("instance: missing field ") + key);
    InstanceFile f;
    Matrix A = matrix_from_json(j["A"], "A");
    Vector b = vector_from_json(j["b"], true, "b");
    Vector c = vector_from_json(j["c"], false, "c");
    try {
        f.instance = Instance(std::move(A), std::move(b), std::move(c));
    } catch (const Error& e) {
        throw Error(ErrorKind::Parse, e.what());
    }
    if (j.contains("T") != j.contains("B"))
        throw Error(ErrorKind::Parse, "instance: T and B must be given together");
    if (j.contains("T"))
        f.witness = DeltaModularWitness{matrix_from_json(j["T"], "T"), matrix_from_json(j["B"], "B")};
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object())
            throw Error(ErrorKind::Parse, "instance: metadata must be an object");
        for (const auto& [k, v] : j["metadata"].items())
            f.metadata[k] = v.is_string() ? v.get<std::string>() : v.dump();
    }
    return f;
}

inline Json parse_json_text(const std::string& text, const std::string& where)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::Parse, where + ": " + e.what());
    }
}

inline std::string read_text(const std::filesystem::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw Error(ErrorKind::Parse, "cannot read " + p.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline InstanceFile read_instance(const std::filesystem::path& p)
{
    return instance_from_json(parse_json_text(read_text(p), p.string()));
}

/// Writes through a temporary file in the same directory, then renames.
inline void write_atomic(const std::filesystem::path& p, const std::string& text)
{
    auto tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
        out << text;
        if (!out)
            throw Error(ErrorKind::InvalidArgument, "write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, p);
}

inline void write_json(const std::filesystem::path& p, const Json& j) { write_atomic(p, j.dump(2) + "\n"); }

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json to_json(const BoundCheck& b)
{
    return Json{{"name", b.name},
                {"flag", std::string(to_string(b.flag))},
                {"bound", b.flag == BoundFlag::NotApplicable ? Json(nullptr) : rational_json(b.bound)},
                {"strict", b.strict_required}};
}

inline Json to_json(const ProximityReport& r)
{
    Json deltas = Json::array();
    for (const auto& d : r.delta_table)
        deltas.push_back(rational_json(d));
    Json verts = Json::array();
    for (const auto& v : r.optimal_vertices)
        verts.push_back(vector_json(v, false));
    Json bounds = Json::array();
    for (auto* b : r.bounds())
        bounds.push_back(to_json(*b));
    return Json{{"proximity", rational_json(r.proximity)},
                {"proximity_feasible", rational_json(r.proximity_feasible)},
                {"lp_value", rational_json(r.lp_value)},
                {"ip_value", rational_json(r.ip_value)},
                {"optimal_vertices", verts},
                {"worst_vertex", vector_json(r.worst_vertex, false)},
                {"nearest_integral", vector_json(r.nearest_integral, true)},
                {"lattice_point_count", r.lattice_point_count},
                {"optimal_integral_count", r.optimal_integral_count},
                {"delta_table", deltas},
                {"bounds", bounds},
                {"all_hold", r.all_hold()}};
}

inline Json to_json(const WalkTrace& tr, const WalkCertificate& cert)
{
    Json steps = Json::array();
    for (const auto& s : tr.steps) {
        Json F = Json::array(), G = Json::array();
        for (const auto& v : s.F)
            F.push_back(vector_json(v, false));
        for (const auto& v : s.G)
            G.push_back(vector_json(v, false));
        steps.push_back(Json{{"from", vector_json(s.from, false)},
                             {"to", vector_json(s.to, false)},
                             {"block", s.block},
                             {"spindle_dim", s.spindle_dim},
                             {"terminal", s.terminal},
                             {"F", F},
                             {"F_dim", s.F_dim},
                             {"G", G},
                             {"G_dim", s.G_dim},
                             {"I", index_set_json(s.I)},
                             {"step_value", rational_json(s.step_value)},
                             {"face_max", rational_json(s.face_max)},
                             {"slice_max", rational_json(s.slice_max)},
                             {"delta", rational_json(s.delta)},
                             {"kappa", s.kappa ? rational_json(*s.kappa) : Json(nullptr)},
                             {"slice_dim", s.slice_dim}});
    }
    Json pts = Json::array();
    for (const auto& p : tr.points)
        pts.push_back(vector_json(p, false));
    return Json{{"alpha", vector_json(tr.alpha, true)},
                {"d_seq", tr.d_seq},
                {"objective", rational_json(tr.objective)},
                {"t", tr.t()},
                {"points", pts},
                {"steps", steps},
                {"certificate",
                 Json{{"telescoping", cert.telescoping},
                      {"step_bounds", cert.step_bounds},
                      {"count_bound", cert.count_bound},
                      {"dimension_decrease", cert.dimension_decrease},
                      {"last_face", cert.last_face},
                      {"slice_dims", cert.slice_dims},
                      {"all", cert.all()}}}};
}

inline Json to_json(const RayDecomposition& rd)
{
    Json terms = Json::array();
    for (const auto& t : rd.terms)
        terms.push_back(Json{{"ray", vector_json(t.ray, false)}, {"multiplicity", integer_json(t.multiplicity)}});
    Json chosen = Json::array();
    for (const auto& v : rd.chosen_vertices)
        chosen.push_back(vector_json(v, false));
    return Json{{"terms", terms},
                {"chosen_vertices", chosen},
                {"total_multiplicity", integer_json(rd.total_multiplicity)},
                {"rays_in_cone", rd.rays_in_cone},
                {"sums_in_spindle", rd.sums_in_spindle},
                {"sums_distinct", rd.sums_distinct},
                {"no_lattice_point", rd.no_lattice_point},
                {"sums_to_apex", rd.sums_to_apex}};
}

inline Json to_json(const LiftResult& L, const LiftVerification& v)
{
    Json order = Json::array();
    for (auto i : L.row_order)
        order.push_back(i);
    return Json{{"I", index_set_json(L.I)},
                {"row_order", order},
                {"d", L.d},
                {"U", matrix_json(L.U)},
                {"A_hat", matrix_json(L.A_hat)},
                {"b_hat", vector_json(L.b_hat, true)},
                {"alpha_hat", vector_json(L.alpha_hat, true)},
                {"verification",
                 Json{{"unimodular", v.unimodular},
                      {"block_shape", v.block_shape},
                      {"objective_transport", v.objective_transport},
                      {"vertex_bijection", v.vertex_bijection},
                      {"lattice_only_zero", v.lattice_only_zero},
                      {"delta_identity", v.delta_identity},
                      {"kappa_identity", v.kappa_identity},
                      {"delta_original", rational_json(v.delta_original)},
                      {"delta_lifted", rational_json(v.delta_lifted)},
                      {"max_original", rational_json(v.max_original)},
                      {"max_lifted", rational_json(v.max_lifted)}}}};
}

inline Json to_json(const LowerBoundCertificate& c)
{
    return Json{{"x_star_feasible", c.x_star_feasible},
                {"no_shared_facet", c.no_shared_facet},
                {"lattice_only_zero", c.lattice_only_zero},
                {"tu_factor", c.tu_factor},
                {"delta_n1_equals_delta", c.delta_n1_equals_delta ? Json(*c.delta_n1_equals_delta) : Json(nullptr)},
                {"full_dimensional", c.full_dimensional},
                {"parallelepiped_count", c.parallelepiped_count},
                {"parallelepiped_points", c.parallelepiped_points},
                {"binv_columns_integral", c.binv_columns_integral}};
}

// ---------------------------------------------------------------------------
// CSV
// ---------------------------------------------------------------------------

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

inline std::string csv_line(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i)
            out += ',';
        out += csv_field(fields[i]);
    }
    return out + "\n";
}

} // namespace proxlab

#endif
