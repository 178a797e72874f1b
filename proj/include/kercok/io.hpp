#pragma once

#include "kercok/abcat.hpp"
#include "kercok/repquiver.hpp"
#include "kercok/seqs.hpp"

#include <json.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kercok {

/// std::map-backed, so keys serialize sorted.
using Json = nlohmann::json;

inline constexpr const char* tool_version = "kercok/1.0.0";
inline constexpr const char* diagram_schema_id = "kercok-diagram/1";
inline constexpr const char* report_schema_id = "kercok-report/1";

/// Malformed input: bad JSON, unknown keys or references, ill-defined maps.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);
/// Two-space indented, sorted keys, trailing newline.
std::string dump_canonical(const Json& j);

const Json& require_key(const Json& j, const std::string& key, const std::string& where);
std::string require_string(const Json& j, const std::string& key, const std::string& where);
long long require_int(const Json& j, const std::string& key, const std::string& where);

template <class R>
typename R::Scalar scalar_from_json(const R& ring, const Json& j)
{
    std::string text;
    if (j.is_string())
        text = j.get<std::string>();
    else if (j.is_number_integer())
        text = std::to_string(j.get<long long>());
    else
        throw InputError("matrix entries must be integers or decimal strings");
    try {
        if constexpr (std::is_same_v<R, RationalField>) {
            const auto slash = text.find('/');
            if (slash == std::string::npos)
                return Rational(BigInt::parse(text));
            return Rational(BigInt::parse(text.substr(0, slash)), BigInt::parse(text.substr(slash + 1)));
        } else if constexpr (std::is_same_v<R, PrimeField>) {
            return ring.reduce(static_cast<std::int64_t>(std::stoll(text)));
        } else {
            return BigInt::parse(text);
        }
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        throw InputError("bad scalar '" + text + "': " + e.what());
    }
}

template <class R>
Json matrix_to_json(const Mat<R>& m)
{
    Json rows = Json::array();
    for (Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Index j = 0; j < m.cols(); ++j)
            row.push_back(scalar_to_string(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

/// Row-major array of rows; an empty array is accepted for any shape with a zero dimension.
template <class R>
Mat<R> matrix_from_json(const R& ring, const Json& j, Index rows, Index cols, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": matrix must be an array of rows");
    Mat<R> m = zeros(ring, rows, cols);
    if (rows == 0 || cols == 0) {
        if (!j.empty() && !(static_cast<Index>(j.size()) == rows && rows > 0))
            throw InputError(where + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
        return m;
    }
    if (static_cast<Index>(j.size()) != rows)
        throw InputError(where + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
    for (Index i = 0; i < rows; ++i) {
        const auto& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != cols)
            throw InputError(where + ": row " + std::to_string(i) + " must have " + std::to_string(cols) + " entries");
        for (Index c = 0; c < cols; ++c)
            m(i, c) = scalar_from_json(ring, row[static_cast<std::size_t>(c)]);
    }
    return reduced(ring, std::move(m));
}

template <class R>
Json object_to_json(const PresentedObject<R>& a)
{
    Json t = Json::array();
    for (const auto& d : a.torsion)
        t.push_back(scalar_to_string(d));
    return {{"str", a.str()}, {"torsion", t}, {"free", static_cast<long long>(a.free_rank)}};
}

/// An object as loaded: its canonical form plus the change of coordinates
/// from the generators named in the document.
template <class R>
struct LoadedObject {
    Canonical<R> canon;
    Index user_gens = 0;
    Mat<R> user_relations; ///< user_gens rows
};

/// Accepts {"dim": n} (fields), {"torsion": [...], "free": n}, or
/// {"generators": n, "relations": [[...]]}.
template <class R>
LoadedObject<R> object_from_json(const R& ring, const Json& j, const std::string& where)
{
    if (!j.is_object())
        throw InputError(where + ": object must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "dim" && it.key() != "torsion" && it.key() != "free" && it.key() != "generators" &&
            it.key() != "relations" && it.key() != "str")
            throw InputError(where + ": unknown key '" + it.key() + "'");
    if (j.contains("generators")) {
        const long long n = require_int(j, "generators", where);
        if (n < 0)
            throw InputError(where + ": negative generator count");
        const auto& rel = require_key(j, "relations", where);
        if (!rel.is_array())
            throw InputError(where + ": relations must be an array of rows");
        const Index cols = rel.empty() ? 0 : static_cast<Index>(rel[0].is_array() ? rel[0].size() : 0);
        Mat<R> y = matrix_from_json(ring, rel, static_cast<Index>(n), cols, where + ".relations");
        return {canonicalize(ring, static_cast<Index>(n), y), static_cast<Index>(n), y};
    }
    Index free = 0;
    if (j.contains("dim"))
        free = static_cast<Index>(require_int(j, "dim", where));
    if (j.contains("free"))
        free = static_cast<Index>(require_int(j, "free", where));
    if (free < 0)
        throw InputError(where + ": negative rank");
    std::vector<typename R::Scalar> cyclic;
    if (j.contains("torsion")) {
        const auto& t = j["torsion"];
        if (!t.is_array())
            throw InputError(where + ": torsion must be an array");
        for (const auto& d : t) {
            auto v = scalar_from_json(ring, d);
            if (ring.is_zero(v))
                throw InputError(where + ": torsion entry 0 (use the free rank)");
            cyclic.push_back(v);
        }
    }
    const Index gens = static_cast<Index>(cyclic.size()) + free;
    Mat<R> rel = zeros(ring, gens, static_cast<Index>(cyclic.size()));
    for (std::size_t i = 0; i < cyclic.size(); ++i)
        rel(static_cast<Index>(i), static_cast<Index>(i)) = cyclic[i];
    try {
        return {presented(ring, cyclic, free), gens, rel};
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
}

template <class R>
Json morphism_to_json(const Morphism<R>& f)
{
    return {{"source", object_to_json(f.source())}, {"target", object_to_json(f.target())}, {"matrix", matrix_to_json<R>(f.mat())}};
}

template <class R>
Json verdict_to_json(const ExactnessVerdict<R>& v)
{
    Json out = {{"exact", v.exact}};
    if (v.witness)
        out["witness"] = {{"kind", v.witness->kind_name()}, {"element", matrix_to_json<R>(v.witness->element)}};
    return out;
}

template <class R>
Json sequence_to_json(const std::string& name, const ExactSequence<R>& s)
{
    Json nodes = Json::array();
    for (std::size_t i = 0; i < s.nodes.size(); ++i)
        nodes.push_back({{"label", s.labels[i]}, {"object", s.nodes[i].str()}});
    Json maps = Json::array();
    for (const auto& m : s.maps)
        maps.push_back(matrix_to_json<R>(m.mat()));
    Json checks = Json::array();
    for (std::size_t k = 0; k < s.verdicts.size(); ++k) {
        Json v = verdict_to_json(s.verdicts[k]);
        v["node"] = static_cast<long long>(s.checked[k]);
        checks.push_back(std::move(v));
    }
    return {{"name", name}, {"cyclic", s.cyclic}, {"nodes", nodes}, {"maps", maps}, {"exactness", checks},
            {"exact", s.exact()}};
}

inline Json check_to_json(const Check& c)
{
    Json out = {{"name", c.name}, {"ok", c.ok}};
    if (!c.detail.empty())
        out["detail"] = c.detail;
    return out;
}

/// Named objects and morphisms of a diagram document over a fixed ring.
template <class R>
struct TypedDocument {
    R ring;
    std::map<std::string, LoadedObject<R>> objects;
    std::map<std::string, Morphism<R>> morphisms;
    Json task;

    const PresentedObject<R>& object(const std::string& name) const
    {
        auto it = objects.find(name);
        if (it == objects.end())
            throw InputError("unknown object '" + name + "'");
        return it->second.canon.object;
    }
    const Morphism<R>& morphism(const std::string& name) const
    {
        auto it = morphisms.find(name);
        if (it == morphisms.end())
            throw InputError("unknown morphism '" + name + "'");
        return it->second;
    }
    /// Morphism named by task argument key.
    const Morphism<R>& arg(const std::string& key) const { return morphism(require_string(task, key, "task")); }
};

template <class R>
TypedDocument<R> load_document(const R& ring, const Json& doc)
{
    TypedDocument<R> out{ring, {}, {}, require_key(doc, "task", "document")};
    if (doc.contains("objects")) {
        if (!doc["objects"].is_object())
            throw InputError("document.objects must be a JSON object");
        for (auto it = doc["objects"].begin(); it != doc["objects"].end(); ++it)
            out.objects.emplace(it.key(), object_from_json(ring, it.value(), "objects." + it.key()));
    }
    if (doc.contains("morphisms")) {
        if (!doc["morphisms"].is_object())
            throw InputError("document.morphisms must be a JSON object");
        for (auto it = doc["morphisms"].begin(); it != doc["morphisms"].end(); ++it) {
            const std::string where = "morphisms." + it.key();
            const auto& m = it.value();
            const auto src_name = require_string(m, "source", where);
            const auto tgt_name = require_string(m, "target", where);
            auto s = out.objects.find(src_name);
            auto t = out.objects.find(tgt_name);
            if (s == out.objects.end() || t == out.objects.end())
                throw InputError(where + ": unknown endpoint");
            Mat<R> user = matrix_from_json(ring, require_key(m, "matrix", where), t->second.user_gens,
                                           s->second.user_gens, where + ".matrix");
            const auto& tc = t->second.canon;
            // every relation of the source must land in the target's relation lattice
            if (!is_zero(ring, tc.object.reduce(mul(ring, tc.to_canon, mul(ring, user, s->second.user_relations)))))
                throw InputError(where + ": matrix does not respect the source relations");
            Mat<R> canon = mul(ring, mul(ring, tc.to_canon, user), s->second.canon.from_canon);
            try {
                out.morphisms.emplace(it.key(), Morphism<R>(s->second.canon.object, t->second.canon.object, canon));
            } catch (const IllDefinedMorphism& e) {
                throw InputError(where + ": " + e.what());
            }
        }
    }
    return out;
}

/// Quiver representations and Harada chains (over F_p).
Json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);
Json rep_to_json(const QuiverRep& x);
QuiverRep rep_from_json(const Quiver& q, const PrimeField& f, const Json& j, const std::string& where);
Json chain_to_json(const HaradaChain& ch);
HaradaChain chain_from_json(const Json& doc);

} // namespace kercok
