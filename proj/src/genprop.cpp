#include "kercok/gendoc.hpp"

#include <cstdio>
#include <variant>

namespace kercok {

const std::vector<std::string>& gen_kinds()
{
    static const std::vector<std::string> kinds = {"pair",   "triple", "square",   "snake",  "cubic",      "quartic",
                                                   "factored", "fredholm", "action", "ses-action", "complex", "harada"};
    return kinds;
}

namespace {

/// Names objects and morphisms in insertion order; each object is emitted
/// in canonical form so reloading it is the identity change of coordinates.
template <class R>
class DocBuilder {
public:
    explicit DocBuilder(Json& doc) : doc_(doc)
    {
        doc_["objects"] = Json::object();
        doc_["morphisms"] = Json::object();
    }

    std::string object(const PresentedObject<R>& a)
    {
        for (const auto& [name, obj] : seen_)
            if (obj == a)
                return name;
        const std::string name = "X" + std::to_string(seen_.size());
        Json t = Json::array();
        for (const auto& d : a.torsion)
            t.push_back(scalar_to_string(d));
        doc_["objects"][name] = {{"torsion", t}, {"free", static_cast<long long>(a.free_rank)}};
        seen_.emplace_back(name, a);
        return name;
    }

    std::string morphism(const std::string& name, const Morphism<R>& f)
    {
        doc_["morphisms"][name] = {{"source", object(f.source())},
                                   {"target", object(f.target())},
                                   {"matrix", matrix_to_json<R>(f.mat())}};
        return name;
    }

    /// Distinct node names even when two nodes are isomorphic copies.
    std::string fresh_object(const PresentedObject<R>& a)
    {
        const std::string name = "X" + std::to_string(seen_.size());
        Json t = Json::array();
        for (const auto& d : a.torsion)
            t.push_back(scalar_to_string(d));
        doc_["objects"][name] = {{"torsion", t}, {"free", static_cast<long long>(a.free_rank)}};
        seen_.emplace_back(name, a);
        return name;
    }

    std::string morphism_between(const std::string& name, const Morphism<R>& f, const std::string& src,
                                 const std::string& tgt)
    {
        doc_["morphisms"][name] = {{"source", src}, {"target", tgt}, {"matrix", matrix_to_json<R>(f.mat())}};
        return name;
    }

private:
    Json& doc_;
    std::vector<std::pair<std::string, PresentedObject<R>>> seen_;
};

template <class R>
void fill_document(const std::string& kind, const R& ring, Rng& rng, const GenConfig& cfg, Json& doc)
{
    DocBuilder<R> b(doc);
    Json task;
    if (kind == "pair") {
        auto p = gen_composable_pair(rng, ring, cfg);
        task = {{"op", "six-term"}, {"f", b.morphism("f", p.f)}, {"g", b.morphism("g", p.g)}};
    } else if (kind == "triple") {
        auto t = gen_triple(rng, ring, cfg);
        task = {{"op", "triple-braid"},
                {"f", b.morphism("f", t.f)},
                {"g", b.morphism("g", t.g)},
                {"h", b.morphism("h", t.h)}};
    } else if (kind == "square") {
        auto sq = gen_commutative_square(rng, ring, cfg);
        task = {{"op", "square-braid"},
                {"f", b.morphism("f", sq.f)},
                {"g", b.morphism("g", sq.g)},
                {"h", b.morphism("h", sq.h)},
                {"k", b.morphism("k", sq.k)}};
    } else if (kind == "snake") {
        auto sd = gen_snake_diagram(rng, ring, cfg);
        task = {{"op", "snake"}};
        const std::pair<const char*, const Morphism<R>*> maps[] = {{"i", &sd.i},   {"p", &sd.p}, {"i2", &sd.i2},
                                                                   {"p2", &sd.p2}, {"a", &sd.a}, {"b", &sd.b},
                                                                   {"c", &sd.c}};
        for (const auto& [name, m] : maps)
            task[name] = b.morphism(name, *m);
    } else if (kind == "cubic" || kind == "quartic") {
        auto s = kind == "cubic" ? gen_cubic_zero(rng, ring, cfg) : gen_quartic_zero(rng, ring, cfg);
        std::vector<std::string> nodes;
        for (std::size_t i = 0; i < s.size(); ++i)
            nodes.push_back(b.fresh_object(s.node(static_cast<long>(i))));
        Json names = Json::array();
        for (std::size_t i = 0; i < s.size(); ++i)
            names.push_back(b.morphism_between("d" + std::to_string(i), s.maps[i], nodes[i], nodes[(i + 1) % s.size()]));
        task = {{"op", kind == "cubic" ? "hexagon" : "quartic"}, {"maps", names}, {"cyclic", true}};
    } else if (kind == "factored") {
        auto fd = gen_factored_differential(rng, ring, cfg);
        task = {{"op", "quadratic"}, {"e", b.morphism("e", fd.e)}, {"f", b.morphism("f", fd.f)}};
    } else if (kind == "fredholm") {
        auto p = gen_fredholm_pair(rng, ring, cfg);
        task = {{"op", "index"}, {"f", b.morphism("f", p.f)}, {"g", b.morphism("g", p.g)}};
    } else if (kind == "action") {
        auto act = gen_cyclic_action(rng, ring, cfg);
        task = {{"op", "herbrand"}, {"sigma", b.morphism("sigma", act.sigma)}, {"n", act.n}};
    } else if (kind == "ses-action") {
        auto s = gen_equivariant_ses(rng, ring, cfg);
        task = {{"op", "herbrand"},
                {"i", b.morphism("i", s.i)},
                {"p", b.morphism("p", s.p)},
                {"sigma_sub", b.morphism("sigma_sub", s.sub.sigma)},
                {"sigma", b.morphism("sigma", s.mid.sigma)},
                {"sigma_quo", b.morphism("sigma_quo", s.quo.sigma)},
                {"n", s.mid.n}};
    } else if (kind == "complex") {
        if constexpr (std::is_same_v<R, IntegerRing>) {
            auto k = gen_free_complex(rng, ring, cfg);
            std::vector<std::string> nodes;
            Json objects = Json::array();
            for (const auto& o : k.objects) {
                nodes.push_back(b.fresh_object(o));
                objects.push_back(nodes.back());
            }
            Json diffs = Json::array();
            for (std::size_t i = 0; i < k.diffs.size(); ++i)
                diffs.push_back(b.morphism_between("d" + std::to_string(k.lo + static_cast<int>(i) + 1), k.diffs[i],
                                                   nodes[i + 1], nodes[i]));
            const long long primes[] = {2, 3, 5};
            task = {{"op", "couple"},
                    {"complex", {{"lo", k.lo}, {"objects", objects}, {"diffs", diffs}}},
                    {"p", primes[rng.index(3)]}};
        } else {
            throw InputError("kind 'complex' needs ring INT");
        }
    } else {
        throw InputError("unknown kind '" + kind + "'");
    }
    doc["task"] = task;
}

} // namespace

Json gen_document(const std::string& kind, const GenConfig& cfg)
{
    Rng rng(cfg.seed);
    Json doc = {{"schema", diagram_schema_id},
                {"generator_version", generator_version},
                {"kind", kind},
                {"seed", cfg.seed},
                {"ring", cfg.ring.str()}};
    if (kind == "harada") {
        if (cfg.ring.kind != RingKind::PrimeField)
            throw InputError("kind 'harada' needs a ring FP(p)");
        const PrimeField field(cfg.ring.p);
        const Quiver q = gen_quiver(rng);
        const int n = static_cast<int>(rng.uniform(2, 3));
        Json chain = chain_to_json(gen_harada_chain(rng, q, field, n));
        for (auto it = chain.begin(); it != chain.end(); ++it)
            doc[it.key()] = it.value();
        doc.erase("ring");
        return doc;
    }
    std::visit([&](const auto& ring) { fill_document(kind, ring, rng, cfg, doc); }, make_ring(cfg.ring));
    return doc;
}

std::vector<Json> gen_documents(const std::string& kind, const GenConfig& cfg, int count)
{
    std::vector<Json> out;
    for (int i = 0; i < count; ++i) {
        GenConfig c = cfg;
        c.seed = child_seed(cfg.seed, static_cast<std::uint64_t>(i));
        out.push_back(gen_document(kind, c));
    }
    return out;
}

std::uint64_t fnv1a64(const std::string& bytes, std::uint64_t h)
{
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string stream_digest(const std::string& kind, const GenConfig& cfg, int count)
{
    std::uint64_t h = fnv1a64(generator_version);
    for (const auto& d : gen_documents(kind, cfg, count))
        h = fnv1a64(dump_canonical(d), h);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace kercok
