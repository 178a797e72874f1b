#include "kercok/suites.hpp"

#include "kercok/fred.hpp"
#include "kercok/genprop.hpp"
#include "kercok/homol.hpp"
#include "kercok/oracle.hpp"
#include "kercok/repquiver.hpp"
#include "kercok/seqs.hpp"

#include <functional>
#include <variant>

namespace kercok {

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = {
        "six-term", "oracle",   "triple-braid", "square-braid", "square-oracle", "snake",    "index",
        "index-field", "herbrand", "herbrand-ses", "hexagon",     "quartic",       "quadratic", "mutation",
        "couple",   "harada-sai", "harada-sweep"};
    return names;
}

namespace {

const RingTag int_tag{RingKind::Integers, 0};
const RingTag rat_tag{RingKind::Rationals, 0};
RingTag fp(std::uint32_t p) { return {RingKind::PrimeField, p}; }

/// Ring of case i: the requested one, else cycled from the given list.
RingTag ring_for(const std::optional<RingTag>& fixed, const std::vector<RingTag>& cycle, long long i)
{
    return fixed ? *fixed : cycle[static_cast<std::size_t>(i) % cycle.size()];
}

void require_ring_in(const std::string& suite, const std::optional<RingTag>& fixed, const std::vector<RingTag>& allowed)
{
    if (!fixed)
        return;
    for (const auto& t : allowed)
        if (t.kind == fixed->kind && (t.kind != RingKind::PrimeField || t.p == 0 || t.p == fixed->p))
            return;
    throw InputError("suite '" + suite + "' does not run over " + fixed->str());
}

/// Runs body for every case; a non-empty return or an exception is a failure.
SuiteResult run_cases(const std::string& name, long long cases, std::uint64_t seed,
                      const std::function<std::string(Rng&, long long, SuiteResult&)>& body)
{
    SuiteResult r;
    r.name = name;
    for (long long i = 0; i < cases; ++i) {
        const std::uint64_t s = child_seed(seed, static_cast<std::uint64_t>(i));
        Rng rng(s);
        std::string failure;
        try {
            failure = body(rng, i, r);
        } catch (const std::exception& e) {
            failure = std::string("exception: ") + e.what();
        }
        ++r.cases;
        if (!failure.empty()) {
            ++r.failures;
            if (r.witnesses.size() < max_witnesses)
                r.witnesses.push_back("case " + std::to_string(i) + " (seed " + std::to_string(s) + "): " + failure);
        }
    }
    return r;
}

template <class F>
std::string on_ring(const RingTag& tag, F&& fn)
{
    return std::visit([&](const auto& ring) { return fn(ring); }, make_ring(tag));
}

std::string first_failed(const std::vector<Check>& checks)
{
    for (const auto& c : checks)
        if (!c.ok)
            return c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
    return "";
}

template <class R>
std::string sequence_failure(const std::string& what, const ExactSequence<R>& s)
{
    for (std::size_t k = 0; k < s.verdicts.size(); ++k)
        if (!s.verdicts[k].exact)
            return what + " not exact at " + s.labels[s.checked[k]];
    return "";
}

GenConfig finite_config(const RingTag& tag, int max_factor)
{
    GenConfig c;
    c.ring = tag;
    c.max_free = 0;
    c.max_factor = max_factor;
    c.max_dim = 3;
    return c;
}

const std::vector<RingTag> all_rings = {int_tag, rat_tag, fp(2), fp(97)};

SuiteResult six_term(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    return run_cases("six-term", cases, seed, [&](Rng& rng, long long i, SuiteResult& r) {
        GenConfig cfg;
        cfg.ring = ring_for(fixed, all_rings, i);
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            auto p = gen_composable_pair(rng, ring, cfg);
            auto s = kernel_cokernel_sequence(p.f, p.g);
            for (const auto& node : s.seq.nodes)
                r.counters["nonzero_nodes"] += !node.is_zero();
            r.counters["nonzero_delta"] += !s.delta.is_zero();
            if (auto f = sequence_failure("six-term", s.seq); !f.empty())
                return f;
            if (!s.seq.starts_and_ends_with_zero())
                return "endpoints not zero";
            return first_failed(composition_corollaries(p.f, p.g).checks);
        });
    });
}

/// Rank-based exactness against element enumeration on finite INT objects
/// of order at most 512.
SuiteResult oracle(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    require_ring_in("oracle", fixed, {int_tag});
    return run_cases("oracle", cases, seed, [&](Rng& rng, long long, SuiteResult& r) -> std::string {
        const IntegerRing Z;
        GenConfig cfg = finite_config(int_tag, 8);
        auto p = rng.chance(1, 2) ? gen_complex_pair(rng, Z, cfg) : gen_composable_pair(rng, Z, cfg);
        for (const auto* o : {&p.f.source(), &p.f.target(), &p.g.target()})
            if (!finite_within(*o, 512))
                return "generated object exceeds order 512";
        auto compare = [&](const Morphism<IntegerRing>& f, const Morphism<IntegerRing>& g) {
            const bool rank = is_exact_at(f, g).exact;
            ++r.counters["comparisons"];
            ++r.counters[rank ? "exact" : "not_exact"];
            return rank == exact_by_enumeration(f, g, 512);
        };
        if (!compare(p.f, p.g))
            return "verdicts differ on (f, g)";
        auto s = kernel_cokernel_sequence(p.f, p.g);
        const auto n = s.seq.maps.size();
        for (std::size_t at : s.seq.checked)
            if (!compare(s.seq.maps[(at + n - 1) % n], s.seq.maps[at % n]))
                return "verdicts differ at six-term node " + s.seq.labels[at];
        return "";
    });
}

SuiteResult triple(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    return run_cases("triple-braid", cases, seed, [&](Rng& rng, long long i, SuiteResult& r) {
        GenConfig cfg;
        cfg.ring = ring_for(fixed, all_rings, i);
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            auto t = gen_triple(rng, ring, cfg);
            auto br = triple_braid(t.f, t.g, t.h);
            for (const auto& strand : br.strands)
                for (const auto& node : strand.seq.nodes)
                    r.counters["nonzero_nodes"] += !node.is_zero();
            for (std::size_t k = 0; k < br.strands.size(); ++k) {
                if (auto f = sequence_failure("strand " + std::to_string(k), br.strands[k].seq); !f.empty())
                    return f;
                if (!br.strands[k].seq.starts_and_ends_with_zero())
                    return "strand " + std::to_string(k) + " endpoints not zero";
            }
            if (auto f = first_failed(br.shared_nodes); !f.empty())
                return "shared node " + f;
            return first_failed(br.commuting);
        });
    });
}

template <class R>
std::string square_case(const SquareData<R>& sq, SuiteResult& r, bool with_oracle)
{
    auto br = square_braid(sq);
    for (const auto* s : {&br.seq_B.seq, &br.seq_C.seq, &br.mv_fk, &br.mv_gh})
        if (auto f = sequence_failure("strand", *s); !f.empty())
            return f;
    if (auto f = first_failed(br.shared_nodes); !f.empty())
        return "shared node " + f;
    if (auto f = first_failed(br.commuting); !f.empty())
        return f;
    for (const auto& b : corollary_checks(sq, br).bullets) {
        ++r.counters[std::string("bullet ") + to_string(b.status)];
        if (b.status == BulletStatus::Violated)
            return "bullet violated: " + b.name;
    }
    if (with_oracle) {
        const bool pb = is_pullback(sq), po = is_pushout(sq);
        r.counters["pullbacks"] += pb;
        r.counters["pushouts"] += po;
        if (pb != pullback_by_enumeration(sq, 256))
            return "pullback verdict differs from enumeration";
        if (po != pushout_by_enumeration(sq, 256))
            return "pushout verdict differs from enumeration";
    }
    return "";
}

SuiteResult square(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    return run_cases("square-braid", cases, seed, [&](Rng& rng, long long i, SuiteResult& r) {
        GenConfig cfg;
        cfg.ring = ring_for(fixed, all_rings, i);
        return on_ring(cfg.ring, [&](const auto& ring) {
            return square_case(gen_commutative_square(rng, ring, cfg), r, false);
        });
    });
}

/// Squares whose four objects have orders summing to at most 256.
SuiteResult square_oracle(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    require_ring_in("square-oracle", fixed, {int_tag, fp(0)});
    const std::vector<RingTag> rings = {int_tag, int_tag, fp(2), fp(3)};
    return run_cases("square-oracle", cases, seed, [&](Rng& rng, long long i, SuiteResult& r) {
        GenConfig cfg = finite_config(ring_for(fixed, rings, i), 6);
        cfg.max_summands = 2;
        cfg.max_dim = 2;
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            for (int attempt = 0; attempt < 16; ++attempt) {
                auto sq = gen_commutative_square(rng, ring, cfg);
                BigInt total = 0;
                bool finite = true;
                for (const auto* o : {&sq.f.source(), &sq.f.target(), &sq.g.target(), &sq.h.target()}) {
                    auto n = order(*o);
                    finite = finite && !n.infinite;
                    total = total + n.value;
                }
                if (!finite || total > BigInt(256))
                    continue;
                return square_case(sq, r, true);
            }
            return "no square with total order at most 256 in 16 draws";
        });
    });
}

SuiteResult snake(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    return run_cases("snake", cases, seed, [&](Rng& rng, long long i, SuiteResult&) {
        GenConfig cfg;
        cfg.ring = ring_for(fixed, all_rings, i);
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            auto sn = snake_sequence(gen_snake_diagram(rng, ring, cfg));
            if (auto f = sequence_failure("snake", sn.seq); !f.empty())
                return f;
            auto p = gen_composable_pair(rng, ring, cfg);
            auto from_proof = snake_sequence(composition_snake_diagram(p.f, p.g), true);
            if (auto f = first_failed(compare_snake_with_six_term(from_proof, kernel_cokernel_sequence(p.f, p.g)));
                !f.empty())
                return "composition snake differs: " + f;
            return "";
        });
    });
}

SuiteResult index_int(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    require_ring_in("index", fixed, {int_tag});
    return run_cases("index", cases, seed, [&](Rng& rng, long long, SuiteResult& r) -> std::string {
        const IntegerRing Z;
        GenConfig cfg;
        cfg.ring = int_tag;
        auto p = gen_fredholm_pair(rng, Z, cfg);
        auto a = index_additivity_check(p.f, p.g);
        r.counters["nonzero_index"] += !a.gf.ind.is_zero();
        if (!a.additive())
            return "ind(gf) = " + a.gf.ind.str() + " but ind f + ind g = " + (a.f.ind + a.g.ind).str();
        if (!a.euler.is_zero())
            return "alternating length sum " + a.euler.str();
        return sequence_failure("six-term", a.seq.seq);
    });
}

/// Over a field every map between finite-dimensional spaces is Fredholm
/// with index dim W − dim V.
SuiteResult index_field(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    require_ring_in("index-field", fixed, {rat_tag, fp(0)});
    const std::vector<RingTag> rings = {rat_tag, fp(2), fp(3), fp(97)};
    return run_cases("index-field", cases, seed, [&](Rng& rng, long long i, SuiteResult&) {
        GenConfig cfg;
        cfg.ring = ring_for(fixed, rings, i);
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            using R = std::decay_t<decltype(ring)>;
            if constexpr (!R::is_field) {
                return "not a field";
            } else {
                auto v = free_object(ring, rng.uniform(0, cfg.max_dim));
                auto w = free_object(ring, rng.uniform(0, cfg.max_dim));
                auto u = free_object(ring, rng.uniform(0, cfg.max_dim));
                auto f = gen_morphism(rng, v, w, cfg);
                auto g = gen_morphism(rng, w, u, cfg);
                const BigInt expected = BigInt(static_cast<long long>(w.free_rank - v.free_rank));
                auto ind = fredholm_index(f).ind;
                if (!(ind == expected))
                    return "ind f = " + ind.str() + ", dim W - dim V = " + expected.str();
                if (!index_additivity_check(f, g).ok())
                    return "additivity fails";
                return "";
            }
        });
    });
}

SuiteResult herbrand_finite(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    require_ring_in("herbrand", fixed, {int_tag, fp(0)});
    const std::vector<RingTag> rings = {int_tag, int_tag, fp(2), fp(3)};
    return run_cases("herbrand", cases, seed, [&](Rng& rng, long long i, SuiteResult& r) {
        GenConfig cfg = finite_config(ring_for(fixed, rings, i), 8);
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            auto act = gen_cyclic_action(rng, ring, cfg);
            if (!finite_within(act.M, 512))
                return "module exceeds order 512";
            r.counters["nontrivial_actions"] += !(act.sigma == Morphism<std::decay_t<decltype(ring)>>::identity(act.M));
            auto t = tate_cyclic(act);
            if (!t.h)
                return "Herbrand quotient undefined on a finite module";
            if (!(*t.h == Rational(1)))
                return "h = " + to_string(*t.h);
            return "";
        });
    });
}

SuiteResult herbrand_ses(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    const std::vector<RingTag> rings = {int_tag, int_tag, fp(2), fp(3)};
    return run_cases("herbrand-ses", cases, seed, [&](Rng& rng, long long i, SuiteResult& r) {
        GenConfig cfg;
        cfg.ring = ring_for(fixed, rings, i);
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            auto h = herbrand_multiplicativity_check(gen_equivariant_ses(rng, ring, cfg));
            r.counters["applicable"] += h.applicable;
            if (!h.holds)
                return "h(M) = " + to_string(*h.mid.h) + ", h(M')h(M'') = " + to_string(*h.sub.h * *h.quo.h);
            return "";
        });
    });
}

template <class R>
std::string braid_failure(const PeriodicBraid<R>& br)
{
    for (std::size_t k = 0; k < br.strands.size(); ++k)
        if (auto f = sequence_failure("strand " + std::to_string(k), br.strands[k]); !f.empty())
            return f;
    return first_failed(br.commuting);
}

SuiteResult nilpotent(const std::string& name, int N, long long cases, std::uint64_t seed,
                      const std::optional<RingTag>& fixed)
{
    return run_cases(name, cases, seed, [&](Rng& rng, long long i, SuiteResult& r) {
        GenConfig cfg;
        cfg.ring = ring_for(fixed, all_rings, i);
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            auto s = N == 3 ? gen_cubic_zero(rng, ring, cfg) : gen_quartic_zero(rng, ring, cfg);
            check_nilpotent(s);
            auto br = nilpotent_braid(s);
            r.counters["nonzero_nodes"] += std::count_if(br.nodes.begin(), br.nodes.end(), [](const auto& kv) {
                return !kv.second.data.object().is_zero();
            });
            return braid_failure(br);
        });
    });
}

SuiteResult quadratic(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    return run_cases("quadratic", cases, seed, [&](Rng& rng, long long i, SuiteResult& r) {
        GenConfig cfg;
        cfg.ring = ring_for(fixed, all_rings, i);
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            auto q = quadratic_zero_sequences(gen_factored_differential(rng, ring, cfg));
            r.counters["nonzero_homology"] += !q.H.object().is_zero();
            if (auto f = sequence_failure("H -> ker f -> cok e", q.first); !f.empty())
                return f;
            return sequence_failure("H -> cok f -> ker e", q.second);
        });
    });
}

/// Broken cubic/quartic-zero sequences must be rejected before any braid is built.
SuiteResult mutation(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    return run_cases("mutation", cases, seed, [&](Rng& rng, long long i, SuiteResult& r) {
        GenConfig cfg;
        cfg.ring = ring_for(fixed, all_rings, i);
        return on_ring(cfg.ring, [&](const auto& ring) -> std::string {
            for (int attempt = 0; attempt < 16; ++attempt) {
                const int N = rng.chance(1, 2) ? 3 : 4;
                auto s = N == 3 ? gen_cubic_zero(rng, ring, cfg) : gen_quartic_zero(rng, ring, cfg);
                auto broken = mutate_nilpotent(rng, s, cfg);
                if (!broken)
                    continue;
                try {
                    make_cyclic_nilpotent(N, broken->labels, broken->maps);
                } catch (const NilpotenceViolation&) {
                    ++r.counters["rejected"];
                    return "";
                }
                return "broken sequence accepted";
            }
            return "no mutation found in 16 draws";
        });
    });
}

/// Bockstein couples of random free complexes, derived four times.
SuiteResult couple(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    require_ring_in("couple", fixed, {int_tag});
    return run_cases("couple", cases, seed, [&](Rng& rng, long long, SuiteResult& r) -> std::string {
        const IntegerRing Z;
        GenConfig cfg;
        cfg.ring = int_tag;
        auto k = gen_free_complex(rng, Z, cfg, 5, 4);
        const long long primes[] = {2, 3, 5};
        auto c = bockstein_couple(k, primes[rng.index(3)]);
        for (int page = 0; page <= 4; ++page) {
            auto v = check_exact_couple(c);
            if (!v.exact())
                return "page " + std::to_string(page) + " not exact";
            for (int p = c.lo; p <= c.hi; ++p)
                r.counters["nonzero_d"] += !c.d_at(p).is_zero();
            if (page < 4)
                c = derived_couple(c);
        }
        return "";
    });
}

SuiteResult harada_random(long long cases, std::uint64_t seed, const std::optional<RingTag>& fixed)
{
    require_ring_in("harada-sai", fixed, {fp(2)});
    return harada_random_chains(linear_quiver(3), PrimeField(2), 3, cases, seed);
}

} // namespace

SuiteResult harada_random_chains(const Quiver& q, const PrimeField& field, int n, long long cases, std::uint64_t seed)
{
    if (n < 1 || n > 6)
        throw InputError("--n must be between 1 and 6");
    return run_cases("harada-sai", cases, seed, [&](Rng& rng, long long, SuiteResult& r) -> std::string {
        auto ch = gen_harada_chain(rng, q, field, n);
        auto rep = harada_sai_check(ch);
        r.counters["nonzero_prefix_2"] += rep.prefix_lengths.size() > 1 && rep.prefix_lengths[1] > 0;
        if (!rep.full_composite_zero || !*rep.full_composite_zero)
            return "composite of " + std::to_string((1 << n) - 1) + " non-isomorphisms is not zero";
        if (!rep.ok())
            return "length bound or case analysis fails";
        return "";
    });
}

SuiteResult harada_a2_sweep()
{
    const PrimeField f2(2);
    const Quiver q = linear_quiver(2);
    FMat one(1, 1);
    one(0, 0) = 1;
    const std::vector<QuiverRep> inds = {simple_rep(q, f2, 0), simple_rep(q, f2, 1), make_rep(q, f2, {1, 1}, {one})};
    SuiteResult r;
    r.name = "harada-sweep";
    std::vector<QuiverRep> mods;
    std::vector<RepMorphism> maps;
    std::function<void()> grow = [&]() {
        if (maps.size() == 3) {
            ++r.cases;
            auto rep = harada_sai_check({mods, maps, 2});
            if (!rep.ok() || !rep.full_composite_zero || !*rep.full_composite_zero) {
                ++r.failures;
                if (r.witnesses.size() < max_witnesses)
                    r.witnesses.push_back("chain " + std::to_string(r.cases - 1) + ": bound or composite fails");
            }
            return;
        }
        for (const auto& next : inds)
            for (const auto& f : hom_elements(mods.back(), next)) {
                if (rep_is_iso(f))
                    continue;
                r.counters["nonzero_maps"] += !f.is_zero();
                mods.push_back(next);
                maps.push_back(f);
                grow();
                mods.pop_back();
                maps.pop_back();
            }
    };
    for (const auto& start : inds) {
        mods = {start};
        grow();
    }
    return r;
}

SuiteResult run_suite(const std::string& name, long long cases, std::uint64_t seed, std::optional<RingTag> ring)
{
    if (cases < 0)
        throw InputError("--cases must be non-negative");
    if (name == "six-term")
        return six_term(cases, seed, ring);
    if (name == "oracle")
        return oracle(cases, seed, ring);
    if (name == "triple-braid")
        return triple(cases, seed, ring);
    if (name == "square-braid")
        return square(cases, seed, ring);
    if (name == "square-oracle")
        return square_oracle(cases, seed, ring);
    if (name == "snake")
        return snake(cases, seed, ring);
    if (name == "index")
        return index_int(cases, seed, ring);
    if (name == "index-field")
        return index_field(cases, seed, ring);
    if (name == "herbrand")
        return herbrand_finite(cases, seed, ring);
    if (name == "herbrand-ses")
        return herbrand_ses(cases, seed, ring);
    if (name == "hexagon")
        return nilpotent("hexagon", 3, cases, seed, ring);
    if (name == "quartic")
        return nilpotent("quartic", 4, cases, seed, ring);
    if (name == "quadratic")
        return quadratic(cases, seed, ring);
    if (name == "mutation")
        return mutation(cases, seed, ring);
    if (name == "couple")
        return couple(cases, seed, ring);
    if (name == "harada-sai")
        return harada_random(cases, seed, ring);
    if (name == "harada-sweep")
        return harada_a2_sweep();
    throw InputError("unknown suite '" + name + "'");
}

Json suite_to_json(const SuiteResult& r)
{
    Json counters = Json::object();
    for (const auto& [k, v] : r.counters)
        counters[k] = v;
    return {{"suite", r.name},        {"cases", r.cases},         {"failures", r.failures},
            {"witnesses", r.witnesses}, {"counters", counters}, {"pass", r.ok()}};
}

} // namespace kercok
