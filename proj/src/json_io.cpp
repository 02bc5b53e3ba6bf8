#include "staudt/json_io.hpp"

namespace staudt::json_io {

namespace {

const json& require(const json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string("missing key \"") + key + "\"");
    return j.at(key);
}

const json& require_array(const json& j, const char* what)
{
    if (!j.is_array())
        throw ParseError(std::string(what) + " must be an array");
    return j;
}

int require_int(const json& j, const char* what)
{
    if (!j.is_number_integer())
        throw ParseError(std::string(what) + " must be an integer");
    return j.get<int>();
}

json vector_to_json(const std::vector<Scalar>& coords)
{
    json out = json::array();
    for (const auto& c : coords)
        out.push_back(to_json(c));
    return out;
}

std::vector<Scalar> vector_from_json(const json& j, const FieldSpec& field)
{
    require_array(j, "coordinate vector");
    std::vector<Scalar> out;
    for (const auto& c : j)
        out.push_back(scalar_from_json(c, field));
    return out;
}

template <class T>
std::vector<T> homogeneous_list(const json& j, const FieldSpec& field, const char* what)
{
    require_array(j, what);
    std::vector<T> out;
    for (const auto& row : j)
        out.emplace_back(vector_from_json(row, field));
    return out;
}

template <class T>
json homogeneous_list_to_json(const std::vector<T>& items)
{
    json out = json::array();
    for (const auto& item : items)
        out.push_back(vector_to_json(item.coords()));
    return out;
}

} // namespace

json to_json(const FieldSpec& field)
{
    if (field.is_rationals())
        return {{"kind", "rationals"}};
    return {{"kind", "prime"}, {"p", field.modulus()}};
}

FieldSpec field_from_json(const json& j)
{
    if (j.is_string())
        return FieldSpec::parse(j.get<std::string>());
    const auto& kind = require(j, "kind");
    if (kind == "rationals")
        return FieldSpec::rationals();
    if (kind == "prime") {
        const auto& p = require(j, "p");
        if (!p.is_number_unsigned() && !(p.is_number_integer() && p.get<long long>() > 0))
            throw ParseError("field modulus must be a positive integer");
        return FieldSpec::prime(p.get<std::uint64_t>());
    }
    throw ParseError("unknown field kind " + kind.dump());
}

json to_json(const Scalar& value)
{
    return value.to_string();
}

Scalar scalar_from_json(const json& j, const FieldSpec& field)
{
    if (j.is_string())
        return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer())
        return Scalar::parse(field, j.dump());
    throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

json to_json(const ParamPoint& q)
{
    return json::array({to_json(q.a()), to_json(q.b())});
}

ParamPoint param_from_json(const json& j, const FieldSpec& field)
{
    if (!j.is_array() || j.size() != 2)
        throw ParseError("parameter must be a pair [a, b]");
    return ParamPoint(scalar_from_json(j[0], field), scalar_from_json(j[1], field));
}

json to_json(const Configuration& config)
{
    return {{"field", to_json(config.field())},
            {"dim", config.dim()},
            {"points", homogeneous_list_to_json(config.points())}};
}

Configuration configuration_from_json(const json& j)
{
    const auto field = field_from_json(require(j, "field"));
    const int dim = require_int(require(j, "dim"), "dim");
    auto points = homogeneous_list<ProjectivePoint>(require(j, "points"), field, "points");
    if (points.empty())
        throw ParseError("configuration has no points");
    for (const auto& p : points)
        if (p.dim() != dim)
            throw DimensionMismatch("point " + p.to_string() + " is not in P^" + std::to_string(dim));
    return Configuration(std::move(points));
}

json to_json(const RNCModel& model)
{
    json frame = json::array();
    for (std::size_t r = 0; r < model.frame_map.rows(); ++r)
        frame.push_back(vector_to_json(model.frame_map.row(r)));
    return {{"dim", model.dim}, {"frame_map", frame}, {"alphas", vector_to_json(model.alphas)}};
}

RNCModel model_from_json(const json& j, const FieldSpec& field)
{
    RNCModel model;
    model.dim = require_int(require(j, "dim"), "dim");
    const auto size = static_cast<std::size_t>(model.dim + 1);
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row : require_array(require(j, "frame_map"), "frame_map"))
        rows.push_back(vector_from_json(row, field));
    if (rows.size() != size)
        throw DimensionMismatch("frame_map must be (d+1) x (d+1)");
    for (const auto& row : rows)
        if (row.size() != size)
            throw DimensionMismatch("frame_map must be (d+1) x (d+1)");
    model.frame_map = Matrix::from_rows(rows);
    model.alphas = vector_from_json(require(j, "alphas"), field);
    if (model.alphas.size() != size)
        throw DimensionMismatch("need d+1 alphas");
    return model;
}

json to_json(const PsiReport& report)
{
    return {{"J", report.index.J},
            {"I", report.index.I},
            {"m1", to_json(report.m1)},
            {"m2", to_json(report.m2)},
            {"value", to_json(report.value)}};
}

json factorization_record(int d, const SubsetSplit& split, bool ok)
{
    return {{"kind", "factorization"}, {"d", d}, {"K", split.K}, {"ok", ok}};
}

json psi_identity_record(const PsiIndex& idx, const PsiIdentityResult& result)
{
    json out{{"kind", "psi"},
             {"d", idx.d},
             {"J", idx.J},
             {"I", idx.I},
             {"factorizations_ok", result.factorizations_ok},
             {"multiset_ok", result.multiset_ok},
             {"sign_ok", result.sign_ok}};
    out["expansion_ok"] = result.expansion_ok ? json(*result.expansion_ok) : json(nullptr);
    out["ok"] = result.ok;
    return out;
}

json to_json(const VonStaudtInstance& inst)
{
    json Q = json::array();
    for (const auto& q : inst.Q)
        Q.push_back(to_json(q));
    json out{{"schema", "vonstaudt-instance/1"}, {"d", inst.d}, {"field", to_json(inst.field)}};
    out["seed"] = inst.seed ? json(*inst.seed) : json(nullptr);
    out["height"] = inst.height ? json(*inst.height) : json(nullptr);
    out["Q"] = Q;
    out["P"] = homogeneous_list_to_json(inst.P);
    out["planes"] = homogeneous_list_to_json(inst.planes);
    out["R"] = homogeneous_list_to_json(inst.R.points());
    return out;
}

VonStaudtInstance instance_from_json(const json& j)
{
    const int d = require_int(require(j, "d"), "d");
    const auto field = field_from_json(require(j, "field"));
    std::vector<ParamPoint> Q;
    for (const auto& q : require_array(require(j, "Q"), "Q"))
        Q.push_back(param_from_json(q, field));
    auto inst = build_instance(d, std::move(Q), field);

    if (j.contains("seed") && !j["seed"].is_null()) {
        if (!j["seed"].is_number_unsigned())
            throw ParseError("seed must be a non-negative integer");
        inst.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("height") && !j["height"].is_null())
        inst.height = require_int(j["height"], "height");
    if (j.contains("P") && homogeneous_list<ProjectivePoint>(j["P"], field, "P") != inst.P)
        throw ParseError("stored P does not match the parameters Q");
    if (j.contains("planes") && homogeneous_list<Hyperplane>(j["planes"], field, "planes") != inst.planes)
        throw ParseError("stored planes do not match the parameters Q");
    if (j.contains("R")) {
        auto R = homogeneous_list<ProjectivePoint>(j["R"], field, "R");
        if (R.size() != static_cast<std::size_t>(2 * d + 2))
            throw DimensionMismatch("R must hold 2d+2 points");
        for (const auto& p : R)
            if (p.dim() != d)
                throw DimensionMismatch("point " + p.to_string() + " is not in P^" + std::to_string(d));
        inst.R = Configuration(std::move(R));
    }
    return inst;
}

json to_json(const Certificate& cert)
{
    json failures = json::array();
    for (const auto& idx : cert.psi_failures)
        failures.push_back({{"J", idx.J}, {"I", idx.I}});
    json out{{"schema", "vonstaudt-cert/1"}, {"d", cert.d}, {"field", to_json(cert.field)}};
    out["seed"] = cert.seed ? json(*cert.seed) : json(nullptr);
    out["sampled"] = cert.sampled ? json(*cert.sampled) : json(nullptr);
    out["glp_ok"] = cert.glp_ok;
    out["psi_total"] = cert.psi_total;
    out["psi_zero"] = cert.psi_zero;
    out["psi_failures"] = failures;
    out["castelnuovo_ok"] = cert.castelnuovo_ok ? json(*cert.castelnuovo_ok) : json(nullptr);
    out["verdict"] = cert.verdict;
    return out;
}

} // namespace staudt::json_io
