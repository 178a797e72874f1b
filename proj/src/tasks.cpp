#include "kercok/tasks.hpp"

#include "kercok/fred.hpp"
#include "kercok/genprop.hpp"
#include "kercok/homol.hpp"
#include "kercok/oracle.hpp"
#include "kercok/repquiver.hpp"
#include "kercok/seqs.hpp"

#include <variant>

namespace kercok {

OracleMode parse_oracle_mode(const std::string& text)
{
    if (text == "on")
        return OracleMode::On;
    if (text == "off")
        return OracleMode::Off;
    if (text == "auto")
        return OracleMode::Auto;
    throw InputError("--oracle must be on, off or auto");
}

Json new_report(const std::string& command)
{
    return {{"schema", report_schema_id},
            {"tool_version", tool_version},
            {"generator_version", generator_version},
            {"command", command},
            {"checks", Json::array()}};
}

int finish_report(Json& report, bool pass)
{
    report["verdict"] = pass ? "pass" : "fail";
    return pass ? exit_pass : exit_fail;
}

Json error_report(const std::string& command, ExitCode code, const std::string& message)
{
    Json r = new_report(command);
    r["verdict"] = code == exit_input ? "input_error" : "internal_error";
    r["error"] = message;
    return r;
}

int exit_code_of(const Json& report)
{
    const auto v = report.value("verdict", std::string("internal_error"));
    if (v == "pass")
        return exit_pass;
    if (v == "fail")
        return exit_fail;
    if (v == "input_error")
        return exit_input;
    return exit_internal;
}

namespace {

/// Accumulates checks into the report and tracks the overall verdict.
struct Recorder {
    Json& report;
    bool pass = true;

    void check(const std::string& name, bool ok, const std::string& detail = "")
    {
        report["checks"].push_back(check_to_json({name, ok, detail}));
        pass = pass && ok;
    }
    void checks(const std::string& prefix, const std::vector<Check>& cs)
    {
        for (const auto& c : cs)
            check(prefix + c.name, c.ok, c.detail);
    }
    template <class R>
    void sequence(const std::string& name, const ExactSequence<R>& s, const RunOptions& opts)
    {
        report["sequences"].push_back(sequence_to_json(name, s));
        pass = pass && s.exact();
        if (opts.oracle == OracleMode::Off)
            return;
        for (const auto& node : s.nodes)
            if (!finite_within(node, opts.max_order)) {
                if (opts.oracle == OracleMode::On)
                    throw InputError("--oracle on: node " + node.str() + " of " + name + " exceeds --max-order");
                return;
            }
        const std::size_t n = s.maps.size();
        for (std::size_t k = 0; k < s.checked.size(); ++k) {
            const std::size_t at = s.checked[k];
            const auto& in = s.maps[(at + n - 1) % n];
            const auto& out = s.maps[at % n];
            const bool brute = exact_by_enumeration(in, out, opts.max_order);
            check(name + ": oracle agrees at " + s.labels[at], brute == s.verdicts[k].exact);
        }
    }
};

template <class R>
std::vector<Morphism<R>> morphism_list(const TypedDocument<R>& d, const std::string& key)
{
    const auto& arr = require_key(d.task, key, "task");
    if (!arr.is_array())
        throw InputError("task." + key + " must be an array of morphism names");
    std::vector<Morphism<R>> out;
    for (const auto& name : arr) {
        if (!name.is_string())
            throw InputError("task." + key + " must be an array of morphism names");
        out.push_back(d.morphism(name.template get<std::string>()));
    }
    return out;
}

template <class R>
std::vector<PresentedObject<R>> object_list(const TypedDocument<R>& d, const std::string& key, const Json& where)
{
    const auto& arr = require_key(where, key, "task");
    if (!arr.is_array())
        throw InputError("task." + key + " must be an array of object names");
    std::vector<PresentedObject<R>> out;
    for (const auto& name : arr) {
        if (!name.is_string())
            throw InputError("task." + key + " must be an array of object names");
        out.push_back(d.object(name.template get<std::string>()));
    }
    return out;
}

/// Name of the object a morphism starts at, as written in the document.
template <class R>
std::string source_name(const Json& doc, const std::string& morphism)
{
    return doc["morphisms"][morphism]["source"].get<std::string>();
}

template <class R>
Json six_term_json(const SixTermSequence<R>& s)
{
    return {{"ker f", s.ker_f.carrier.str()}, {"ker gf", s.ker_gf.carrier.str()}, {"ker g", s.ker_g.carrier.str()},
            {"cok f", s.cok_f.object.str()},  {"cok gf", s.cok_gf.object.str()},  {"cok g", s.cok_g.object.str()}};
}

template <class R>
Json couple_json(const ExactCouple<R>& c, const CoupleVerdict<R>& v)
{
    Json degrees = Json::array();
    for (int p = c.lo; p <= c.hi; ++p)
        degrees.push_back({{"degree", p}, {"D", c.Dp(p).str()}, {"E", c.Ep(p).str()}, {"d_zero", c.d_at(p).is_zero()}});
    Json entries = Json::array();
    for (const auto& e : v.entries) {
        Json j = verdict_to_json(e.verdict);
        j["position"] = e.where;
        j["degree"] = e.degree;
        entries.push_back(std::move(j));
    }
    return {{"lo", c.lo},       {"hi", c.hi},
            {"shifts", {{"alpha", c.da}, {"beta", c.db}, {"gamma", c.dc}}},
            {"degrees", degrees}, {"exactness", entries}, {"d_squared_zero", v.d_squared_zero}, {"exact", v.exact()}};
}

template <class R>
ExactCouple<R> couple_from_task(const TypedDocument<R>& d)
{
    const auto& t = d.task;
    if (t.contains("complex")) {
        if constexpr (std::is_same_v<R, IntegerRing>) {
            const auto& cx = t["complex"];
            const int lo = static_cast<int>(cx.value("lo", 0));
            auto objects = object_list(d, "objects", cx);
            std::vector<Morphism<R>> diffs;
            if (cx.contains("diffs"))
                for (const auto& name : cx["diffs"])
                    diffs.push_back(d.morphism(name.template get<std::string>()));
            ChainComplex<R> k;
            try {
                k = make_complex(d.ring, lo, std::move(diffs), std::move(objects));
            } catch (const std::invalid_argument& e) {
                throw InputError(std::string("complex: ") + e.what());
            }
            const long long p = require_int(t, "p", "task");
            try {
                return bockstein_couple(k, p);
            } catch (const std::invalid_argument& e) {
                throw InputError(e.what());
            }
        } else {
            throw InputError("Bockstein couples need ring INT");
        }
    }
    const int lo = static_cast<int>(t.value("lo", 0));
    int da = 0, db = 0, dc = -1;
    if (t.contains("shifts")) {
        da = static_cast<int>(t["shifts"].value("alpha", 0));
        db = static_cast<int>(t["shifts"].value("beta", 0));
        dc = static_cast<int>(t["shifts"].value("gamma", -1));
    }
    try {
        return make_couple(d.ring, lo, da, db, dc, object_list(d, "D", t), object_list(d, "E", t),
                           morphism_list(d, "alpha"), morphism_list(d, "beta"), morphism_list(d, "gamma"));
    } catch (const CompositionMismatch& e) {
        throw InputError(e.what());
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

template <class R>
void verify_typed(const std::string& op, const Json& doc, const TypedDocument<R>& d, const RunOptions& opts,
                  Recorder& rec)
{
    Json& rep = rec.report;
    if (op == "six-term") {
        auto s = kernel_cokernel_sequence(d.arg("f"), d.arg("g"));
        rec.sequence("six-term", s.seq, opts);
        rec.check("endpoints are zero", s.seq.starts_and_ends_with_zero());
        rec.checks("corollary: ", composition_corollaries(d.arg("f"), d.arg("g")).checks);
        rep["objects"] = six_term_json(s);
    } else if (op == "triple-braid") {
        auto br = triple_braid(d.arg("f"), d.arg("g"), d.arg("h"));
        const char* names[] = {"(f, g)", "(f, hg)", "(g, h)", "(gf, h)"};
        for (std::size_t i = 0; i < br.strands.size(); ++i) {
            rec.sequence(std::string("strand ") + (i < 4 ? names[i] : "?"), br.strands[i].seq, opts);
            rec.check(std::string("strand ") + (i < 4 ? names[i] : "?") + " endpoints are zero",
                      br.strands[i].seq.starts_and_ends_with_zero());
        }
        rec.checks("shared node: ", br.shared_nodes);
        rec.checks("commutes: ", br.commuting);
    } else if (op == "square-braid") {
        std::optional<SquareData<R>> sq;
        try {
            sq.emplace(d.arg("f"), d.arg("g"), d.arg("h"), d.arg("k"));
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("square: ") + e.what());
        }
        auto br = square_braid(*sq);
        rec.sequence("(f, h)", br.seq_B.seq, opts);
        rec.sequence("(g, k)", br.seq_C.seq, opts);
        rec.sequence("f-k strand", br.mv_fk, opts);
        rec.sequence("g-h strand", br.mv_gh, opts);
        rec.check("strand endpoints are zero", br.mv_fk.starts_and_ends_with_zero() && br.mv_gh.starts_and_ends_with_zero());
        rec.checks("shared node: ", br.shared_nodes);
        rec.checks("commutes: ", br.commuting);
        auto cor = corollary_checks(*sq, br);
        Json bullets = Json::array();
        for (const auto& b : cor.bullets) {
            bullets.push_back({{"name", b.name}, {"status", to_string(b.status)}});
            rec.check("bullet: " + b.name, b.status != BulletStatus::Violated, to_string(b.status));
        }
        const bool pb = is_pullback(*sq), po = is_pushout(*sq);
        rep["objects"] = {{"H1", br.H1().str()}, {"H2", br.H2().str()}, {"H3", br.H3().str()}};
        rep["square"] = {{"pullback", pb}, {"pushout", po}, {"bullets", bullets}};
        if (opts.oracle != OracleMode::Off) {
            bool finite = true;
            for (const auto* o : {&sq->f.source(), &sq->f.target(), &sq->g.target(), &sq->h.target()})
                finite = finite && finite_within(*o, opts.max_order);
            if (finite) {
                rec.check("oracle agrees on pullback", pb == pullback_by_enumeration(*sq, opts.max_order));
                rec.check("oracle agrees on pushout", po == pushout_by_enumeration(*sq, opts.max_order));
            } else if (opts.oracle == OracleMode::On) {
                throw InputError("--oracle on: square has an object beyond --max-order");
            }
        }
    } else if (op == "snake") {
        SnakeDiagram<R> sd{d.arg("i"), d.arg("p"), d.arg("i2"), d.arg("p2"), d.arg("a"), d.arg("b"), d.arg("c")};
        try {
            check_snake_preconditions(sd);
        } catch (const std::invalid_argument& e) {
            throw InputError(std::string("snake: ") + e.what());
        }
        auto sn = snake_sequence(sd, d.task.value("extend_left", false));
        rec.sequence("snake", sn.seq, opts);
        rep["objects"] = {{"ker a", sn.ker_a.carrier.str()}, {"ker b", sn.ker_b.carrier.str()},
                          {"ker c", sn.ker_c.carrier.str()}, {"cok a", sn.cok_a.object.str()},
                          {"cok b", sn.cok_b.object.str()},  {"cok c", sn.cok_c.object.str()}};
        rep["connecting"] = matrix_to_json<R>(sn.connecting.mat());
    } else if (op == "hexagon" || op == "quartic") {
        const int N = op == "hexagon" ? 3 : 4;
        auto maps = morphism_list(d, "maps");
        if (maps.empty())
            throw InputError("task.maps must be nonempty");
        std::vector<std::string> labels;
        for (const auto& name : d.task["maps"])
            labels.push_back(source_name<R>(doc, name.template get<std::string>()));
        NilpotentSequence<R> s;
        try {
            if (d.task.value("cyclic", true)) {
                s = make_cyclic_nilpotent(N, labels, maps);
            } else {
                labels.push_back(doc["morphisms"][d.task["maps"].back().template get<std::string>()]["target"].template get<std::string>());
                s = make_bounded_nilpotent(N, labels, maps);
            }
        } catch (const NilpotenceViolation& e) {
            throw InputError(e.what());
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        auto br = nilpotent_braid(s);
        for (std::size_t i = 0; i < br.strands.size(); ++i)
            rec.sequence("strand " + std::to_string(i), br.strands[i], opts);
        rec.checks("commutes: ", br.commuting);
        Json nodes = Json::object();
        for (const auto& [key, node] : br.nodes)
            nodes[node.name + "@" + std::to_string(key.first)] = node.data.object().str();
        rep["objects"] = nodes;
    } else if (op == "quadratic") {
        std::optional<QuadraticReport<R>> q;
        try {
            q.emplace(quadratic_zero_sequences<R>({d.arg("e"), d.arg("f")}));
        } catch (const PreconditionFailure& e) {
            throw InputError(e.what());
        }
        rec.sequence("H(C) -> ker f -> cok e", q->first, opts);
        rec.sequence("H(C) -> cok f -> ker e", q->second, opts);
        rep["objects"] = {{"H(C)", q->H.object().str()}, {"ker f", q->ker_f.carrier.str()},
                          {"ker e", q->ker_e.carrier.str()}, {"cok f", q->cok_f.object.str()},
                          {"cok e", q->cok_e.object.str()}};
    } else if (op == "couple") {
        auto c = couple_from_task(d);
        auto v = check_exact_couple(c);
        rep["couple"] = couple_json(c, v);
        rec.check("couple is exact", v.exact());
    } else if (op == "index") {
        const auto& f = d.arg("f");
        try {
            if (d.task.contains("g")) {
                auto a = index_additivity_check(f, d.arg("g"));
                rec.sequence("six-term", a.seq.seq, opts);
                rec.check("ind(gf) = ind(f) + ind(g)", a.additive());
                rec.check("alternating length sum is zero", a.euler.is_zero(), a.euler.str());
                rep["index"] = {{"f", a.f.ind.str()}, {"g", a.g.ind.str()}, {"gf", a.gf.ind.str()}};
            } else {
                auto r = fredholm_index(f);
                rep["index"] = {{"f", r.ind.str()}, {"len_ker", r.len_ker.str()}, {"len_cok", r.len_cok.str()}};
            }
        } catch (const NotFredholm& e) {
            throw InputError(e.what());
        }
    } else if (op == "herbrand") {
        const int n = static_cast<int>(require_int(d.task, "n", "task"));
        auto tate_json = [](const TateReport<R>& t) {
            Json j = {{"H0", t.H0.object.str()}, {"H-1", t.Hm1.object.str()}};
            j["h"] = t.h ? Json(to_string(*t.h)) : Json(nullptr);
            return j;
        };
        try {
            if (d.task.contains("i")) {
                const auto& i = d.arg("i");
                const auto& p = d.arg("p");
                EquivariantSES<R> ses{{i.source(), d.arg("sigma_sub"), n}, {i.target(), d.arg("sigma"), n},
                                      {p.target(), d.arg("sigma_quo"), n}, i, p};
                auto h = herbrand_multiplicativity_check(ses);
                rep["herbrand"] = {{"sub", tate_json(h.sub)}, {"mid", tate_json(h.mid)}, {"quo", tate_json(h.quo)},
                                   {"applicable", h.applicable}};
                rec.check("h(M) = h(M') h(M'')", h.holds);
            } else {
                const auto& s = d.arg("sigma");
                auto t = tate_cyclic(CyclicAction<R>{s.source(), s, n});
                rep["herbrand"] = tate_json(t);
                rec.check("H0 annihilated by n", annihilated_by(t.H0.object, n));
                rec.check("H-1 annihilated by n", annihilated_by(t.Hm1.object, n));
            }
        } catch (const InvalidAction& e) {
            throw InputError(e.what());
        } catch (const PreconditionFailure& e) {
            throw InputError(e.what());
        }
    } else {
        throw InputError("unknown operation '" + op + "'");
    }
}

template <class F>
auto with_ring(const Json& doc, F&& fn)
{
    RingTag tag;
    try {
        tag = RingTag::parse(require_string(doc, "ring", "document"));
    } catch (const InputError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    return std::visit([&](const auto& ring) { return fn(ring); }, make_ring(tag));
}

void require_op(const Json& doc, const std::string& op)
{
    const auto& task = require_key(doc, "task", "document");
    if (task.contains("op") && task["op"] != op)
        throw InputError("document task is '" + task["op"].get<std::string>() + "', not '" + op + "'");
}

} // namespace

Json run_verify(const std::string& op, const Json& doc, const RunOptions& opts)
{
    require_op(doc, op);
    Json report = new_report("verify " + op);
    report["sequences"] = Json::array();
    report["task"] = doc["task"];
    Recorder rec{report};
    with_ring(doc, [&](const auto& ring) {
        auto typed = load_document(ring, doc);
        report["ring"] = ring.tag().str();
        verify_typed(op, doc, typed, opts, rec);
        return 0;
    });
    finish_report(report, rec.pass);
    return report;
}

Json run_spectral(const Json& doc, int pages)
{
    require_op(doc, "couple");
    if (pages < 0)
        throw InputError("--pages must be non-negative");
    Json report = new_report("spectral");
    report["task"] = doc["task"];
    Recorder rec{report};
    with_ring(doc, [&](const auto& ring) {
        using R = std::decay_t<decltype(ring)>;
        auto typed = load_document(ring, doc);
        report["ring"] = ring.tag().str();
        ExactCouple<R> c = couple_from_task(typed);
        Json out = Json::array();
        for (int page = 0; page <= pages; ++page) {
            auto v = check_exact_couple(c);
            Json j = couple_json(c, v);
            j["page"] = page;
            out.push_back(std::move(j));
            rec.check("page " + std::to_string(page) + " is exact", v.exact());
            if (!v.exact() || page == pages)
                break;
            c = derived_couple(c);
        }
        report["pages"] = out;
        return 0;
    });
    finish_report(report, rec.pass);
    return report;
}

Json run_harada_document(const Json& doc)
{
    auto ch = chain_from_json(doc);
    Json report = new_report("harada-sai");
    Recorder rec{report};
    HaradaReport h;
    try {
        h = harada_sai_check(ch);
    } catch (const PreconditionFailure& e) {
        throw InputError(e.what());
    }
    Json bounds = Json::array();
    for (const auto& b : h.bounds) {
        bounds.push_back({{"m", b.m}, {"length", b.length}, {"bound", b.bound}});
        const int last = (1 << b.m) - 1;
        const std::string composite = last == 1 ? "f_1" : "f_" + std::to_string(last) + "...f_1";
        rec.check("l(im " + composite + ") <= n - " + std::to_string(b.m), b.ok());
    }
    for (const auto& s : h.splits) {
        const std::string at = "split m = " + std::to_string(s.m);
        rec.check(at + ": six-term sequence exact at every vertex", s.vertexwise_exact);
        rec.check(at + ": six-term maps intertwine arrows", s.arrows_commute);
        rec.check(at + ": case analysis", s.case_ok);
    }
    if (h.full_composite_zero)
        rec.check("full composite is zero", *h.full_composite_zero);
    report["prefix_lengths"] = h.prefix_lengths;
    report["bounds"] = bounds;
    finish_report(report, rec.pass);
    return report;
}

} // namespace kercok
