#include "kercok/io.hpp"

#include <fstream>
#include <sstream>

namespace kercok {

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

const Json& require_key(const Json& j, const std::string& key, const std::string& where)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(where + ": missing key '" + key + "'");
    return j[key];
}

std::string require_string(const Json& j, const std::string& key, const std::string& where)
{
    const auto& v = require_key(j, key, where);
    if (!v.is_string())
        throw InputError(where + "." + key + " must be a string");
    return v.get<std::string>();
}

long long require_int(const Json& j, const std::string& key, const std::string& where)
{
    const auto& v = require_key(j, key, where);
    if (!v.is_number_integer())
        throw InputError(where + "." + key + " must be an integer");
    return v.get<long long>();
}

Json quiver_to_json(const Quiver& q)
{
    Json arrows = Json::array();
    for (const auto& [s, t] : q.arrows)
        arrows.push_back({s, t});
    return {{"vertices", q.vertices}, {"arrows", arrows}};
}

Quiver quiver_from_json(const Json& j)
{
    const auto v = require_int(j, "vertices", "quiver");
    const auto& arr = require_key(j, "arrows", "quiver");
    if (!arr.is_array())
        throw InputError("quiver.arrows must be an array of [source, target] pairs");
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : arr) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() || !a[1].is_number_integer())
            throw InputError("quiver.arrows must be an array of [source, target] pairs");
        arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    try {
        return make_quiver(static_cast<int>(v), std::move(arrows));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Json rep_to_json(const QuiverRep& x)
{
    Json dims = Json::array();
    for (Index d : x.dims)
        dims.push_back(static_cast<long long>(d));
    Json maps = Json::array();
    for (const auto& m : x.maps)
        maps.push_back(matrix_to_json<PrimeField>(m));
    return {{"dims", dims}, {"arrows", maps}};
}

QuiverRep rep_from_json(const Quiver& q, const PrimeField& f, const Json& j, const std::string& where)
{
    const auto& dj = require_key(j, "dims", where);
    if (!dj.is_array() || dj.size() != static_cast<std::size_t>(q.vertices))
        throw InputError(where + ".dims must list one dimension per vertex");
    std::vector<Index> dims;
    for (const auto& d : dj) {
        if (!d.is_number_integer() || d.get<long long>() < 0)
            throw InputError(where + ".dims entries must be non-negative integers");
        dims.push_back(d.get<Index>());
    }
    const auto& mj = require_key(j, "arrows", where);
    if (!mj.is_array() || mj.size() != q.arrows.size())
        throw InputError(where + ".arrows must list one matrix per arrow");
    std::vector<FMat> maps;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto s = static_cast<std::size_t>(q.arrows[a].first);
        const auto t = static_cast<std::size_t>(q.arrows[a].second);
        maps.push_back(matrix_from_json(f, mj[a], dims[t], dims[s], where + ".arrows[" + std::to_string(a) + "]"));
    }
    return make_rep(q, f, std::move(dims), std::move(maps));
}

Json chain_to_json(const HaradaChain& ch)
{
    Json mods = Json::array();
    for (const auto& m : ch.modules)
        mods.push_back(rep_to_json(m));
    Json maps = Json::array();
    for (const auto& f : ch.maps) {
        Json comps = Json::array();
        for (const auto& c : f.comps)
            comps.push_back(matrix_to_json<PrimeField>(c));
        maps.push_back(comps);
    }
    const auto& first = ch.modules.front();
    return {{"field", static_cast<long long>(first.field.p)}, {"quiver", quiver_to_json(first.quiver)},
            {"n", ch.n}, {"modules", mods}, {"maps", maps}};
}

HaradaChain chain_from_json(const Json& doc)
{
    const auto p = require_int(doc, "field", "chain");
    PrimeField f;
    try {
        f = PrimeField(static_cast<std::uint32_t>(p));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    const Quiver q = quiver_from_json(require_key(doc, "quiver", "chain"));
    HaradaChain ch;
    ch.n = static_cast<int>(require_int(doc, "n", "chain"));
    const auto& mods = require_key(doc, "modules", "chain");
    const auto& maps = require_key(doc, "maps", "chain");
    if (!mods.is_array() || !maps.is_array() || mods.empty())
        throw InputError("chain.modules and chain.maps must be arrays, modules nonempty");
    try {
        for (std::size_t i = 0; i < mods.size(); ++i)
            ch.modules.push_back(rep_from_json(q, f, mods[i], "chain.modules[" + std::to_string(i) + "]"));
        for (std::size_t i = 0; i < maps.size(); ++i) {
            const std::string where = "chain.maps[" + std::to_string(i) + "]";
            if (i + 1 >= ch.modules.size())
                throw InputError(where + ": no target module");
            const auto& x = ch.modules[i];
            const auto& y = ch.modules[i + 1];
            if (!maps[i].is_array() || maps[i].size() != static_cast<std::size_t>(q.vertices))
                throw InputError(where + " must list one matrix per vertex");
            std::vector<FMat> comps;
            for (std::size_t v = 0; v < x.dims.size(); ++v)
                comps.push_back(matrix_from_json(f, maps[i][v], y.dims[v], x.dims[v], where));
            ch.maps.push_back(make_rep_morphism(x, y, std::move(comps)));
        }
    } catch (const QuiverMismatch& e) {
        throw InputError(e.what());
    } catch (const PreconditionFailure& e) {
        throw InputError(e.what());
    }
    return ch;
}

} // namespace kercok
