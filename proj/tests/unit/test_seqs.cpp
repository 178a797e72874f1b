#include "kercok/genprop.hpp"
#include "kercok/oracle.hpp"
#include "kercok/seqs.hpp"

#include <catch_amalgamated.hpp>

using namespace kercok;

namespace {

using ZMor = Morphism<IntegerRing>;
using ZObj = PresentedObject<IntegerRing>;
const IntegerRing Z;

ZObj cyclic(long long d) { return presented(Z, {BigInt(d)}, 0).object; }
ZObj integers() { return free_object(Z, 1); }
ZMor scalar(const ZObj& a, const ZObj& b, long long v) { return ZMor(a, b, from_ints(Z, 1, 1, {v})); }

std::vector<std::string> node_strings(const auto& seq)
{
    std::vector<std::string> out;
    for (const auto& n : seq.nodes)
        out.push_back(n.str());
    return out;
}

template <class F>
void for_each_ring(F&& body)
{
    body(IntegerRing{});
    body(RationalField{});
    body(PrimeField(2));
    body(PrimeField(97));
}

std::string failures(const std::vector<Check>& checks)
{
    std::string out;
    for (const auto& c : checks)
        if (!c.ok)
            out += c.name + " [" + c.detail + "]; ";
    return out;
}

} // namespace

TEST_CASE("six-term sequence of multiplication by 2 then 3", "[seqs]")
{
    auto zz = integers();
    auto st = kernel_cokernel_sequence(scalar(zz, zz, 2), scalar(zz, zz, 3));
    CHECK(st.exact());
    CHECK(node_strings(st.seq) == std::vector<std::string>{"0", "0", "0", "0", "Z/2", "Z/6", "Z/3", "0"});
    // enumeration over the finite part: Z/2 → Z/6 → Z/3 → 0
    CHECK(exact_by_enumeration(st.seq.maps[4], st.seq.maps[5]));
    CHECK(exact_by_enumeration(st.seq.maps[5], st.seq.maps[6]));
    CHECK(mono_by_enumeration(st.seq.maps[4]));
    CHECK(st.delta.source().is_zero());
}

TEST_CASE("six-term sequence with g the identity", "[seqs]")
{
    auto a = presented(Z, {BigInt(4)}, 1).object;
    auto b = presented(Z, {BigInt(2), BigInt(6)}, 0).object;
    GenConfig cfg;
    Rng rng(3);
    auto f = gen_morphism(rng, a, b, cfg);
    auto st = kernel_cokernel_sequence(f, ZMor::identity(b));
    CHECK(st.exact());
    CHECK(st.ker_g.carrier.is_zero());
    CHECK(st.cok_g.object.is_zero());
    CHECK(is_iso(st.seq.maps[1]));
    CHECK(is_iso(st.seq.maps[4]));
}

TEST_CASE("six-term sequence of F2 row and column", "[seqs]")
{
    const PrimeField F2(2);
    auto k1 = free_object(F2, 1), k2 = free_object(F2, 2);
    Morphism<PrimeField> f(k2, k1, from_ints(F2, 1, 2, {1, 0}));
    Morphism<PrimeField> g(k1, k2, from_ints(F2, 2, 1, {0, 1}));
    auto st = kernel_cokernel_sequence(f, g);
    CHECK(st.exact());
    CHECK(node_strings(st.seq) == std::vector<std::string>{"0", "F2", "F2", "0", "0", "F2", "F2", "0"});
}

TEST_CASE("composition corollaries fixtures", "[seqs]")
{
    auto zz = integers();
    auto two = scalar(zz, zz, 2);
    CHECK(composition_corollaries(two, two).ok());
    auto proj = scalar(zz, cyclic(2), 1);
    CHECK(composition_corollaries(two, proj).ok());
    CHECK_THROWS_AS(kernel_cokernel_sequence(proj, two), CompositionMismatch);
}

TEST_CASE("triple braid of 2, 3, 5", "[seqs]")
{
    auto zz = integers();
    auto rep = triple_braid(scalar(zz, zz, 2), scalar(zz, zz, 3), scalar(zz, zz, 5));
    CHECK(rep.ok());
    INFO(failures(rep.shared_nodes) << failures(rep.commuting));
    REQUIRE(rep.strands.size() == 4);
    std::set<std::string> coks;
    for (const auto& s : rep.strands)
        for (const auto* q : {&s.cok_f, &s.cok_gf, &s.cok_g})
            coks.insert(q->object.str());
    CHECK(coks == std::set<std::string>{"Z/2", "Z/3", "Z/5", "Z/6", "Z/15", "Z/30"});
    CHECK(rep.commuting.size() == 4 * 5);
    const auto& s4 = rep.strands[3];
    CHECK(exact_by_enumeration(s4.seq.maps[4], s4.seq.maps[5]));
    CHECK(exact_by_enumeration(s4.seq.maps[5], s4.seq.maps[6]));
}

TEST_CASE("triple braid with identities", "[seqs]")
{
    auto a = presented(Z, {BigInt(3)}, 1).object;
    auto b = presented(Z, {BigInt(6)}, 1).object;
    Rng rng(8);
    auto f = gen_morphism(rng, a, b, GenConfig{});
    auto id = ZMor::identity(b);
    auto rep = triple_braid(f, id, id);
    CHECK(rep.ok());
    CHECK(rep.strands[1].seq.nodes[3].is_zero());
    CHECK(rep.strands[1].seq.nodes[4].is_zero());
}

TEST_CASE("square braid with 2, 2, 3, 3", "[seqs]")
{
    auto zz = integers();
    SquareData<IntegerRing> sq(scalar(zz, zz, 2), scalar(zz, zz, 2), scalar(zz, zz, 3), scalar(zz, zz, 3));
    auto br = square_braid(sq);
    INFO(failures(br.shared_nodes) << failures(br.commuting));
    CHECK(br.ok());
    CHECK(br.H1().is_zero());
    CHECK(br.H2() == cyclic(2));
    CHECK(br.H3() == cyclic(3));
    CHECK(node_strings(br.mv_gh) ==
          std::vector<std::string>{"0", "0", "0", "0", "Z/2", "Z/2", "Z/3", "Z/3", "0"});
    CHECK(exact_by_enumeration(br.mv_gh.maps[4], br.mv_gh.maps[5]));
    CHECK(exact_by_enumeration(br.mv_gh.maps[5], br.mv_gh.maps[6]));
    CHECK_FALSE(is_pullback(sq));
    CHECK_FALSE(is_pushout(sq));
    CHECK(corollary_checks(sq, br).ok());
}

TEST_CASE("non-commuting square is rejected", "[seqs]")
{
    auto zz = integers();
    CHECK_THROWS_AS(
        SquareData<IntegerRing>(scalar(zz, zz, 2), scalar(zz, zz, 3), scalar(zz, zz, 3), scalar(zz, zz, 3)),
        PreconditionFailure);
}

TEST_CASE("degenerate and identity squares", "[seqs]")
{
    auto a = presented(Z, {BigInt(4)}, 1).object;
    auto b = presented(Z, {BigInt(2)}, 1).object;
    Rng rng(21);
    auto f = gen_morphism(rng, a, b, GenConfig{});
    SquareData<IntegerRing> deg(f, ZMor::identity(a), ZMor::identity(b), f);
    auto br = square_braid(deg);
    CHECK(br.ok());
    CHECK(br.H1().is_zero());
    CHECK(is_pullback(deg));
    CHECK(is_pushout(deg));

    auto id = ZMor::identity(a);
    SquareData<IntegerRing> ids(id, id, id, id);
    CHECK(is_pullback(ids));
    CHECK(is_pushout(ids));
    auto cor = corollary_checks(ids, square_braid(ids));
    CHECK(cor.ok());
    for (const auto& b : cor.bullets)
        CHECK(b.status == BulletStatus::Satisfied);
}

TEST_CASE("fiber product over Z/2 is a pullback", "[seqs]")
{
    // A = {(x, y) in Z^2 : x = y mod 2} on the basis (1,1), (0,2)
    auto a = free_object(Z, 2);
    auto zz = integers();
    ZMor f(a, zz, from_ints(Z, 1, 2, {1, 0}));
    ZMor g(a, zz, from_ints(Z, 1, 2, {1, 2}));
    auto h = scalar(zz, cyclic(2), 1);
    SquareData<IntegerRing> sq(f, g, h, h);
    auto br = square_braid(sq);
    CHECK(br.ok());
    CHECK(br.H1().is_zero());
    CHECK(br.H2().is_zero());
    CHECK(br.H3().is_zero());
    CHECK(is_pullback(sq));
    auto cor = corollary_checks(sq, br);
    CHECK(cor.ok());
    CHECK(cor.bullets[0].status == BulletStatus::Satisfied);
    CHECK(is_iso(br.mv_fk.maps[2]));
}

TEST_CASE("snake fixtures", "[seqs]")
{
    auto zz = integers();
    auto z2 = cyclic(2);
    auto two = scalar(zz, zz, 2);
    auto proj = scalar(zz, z2, 1);
    auto zero2 = scalar(z2, z2, 0);
    SnakeDiagram<IntegerRing> d{two, proj, two, proj, two, two, zero2};
    auto sn = snake_sequence(d);
    CHECK(sn.seq.exact());
    CHECK(sn.leading_zero);
    CHECK(sn.trailing_zero);
    CHECK(node_strings(sn.seq) == std::vector<std::string>{"0", "0", "0", "Z/2", "Z/2", "Z/2", "Z/2", "0"});
    CHECK(is_iso(sn.connecting));
    CHECK(exact_by_enumeration(sn.seq.maps[3], sn.seq.maps[4]));
    CHECK(exact_by_enumeration(sn.seq.maps[4], sn.seq.maps[5]));

    auto id = ZMor::identity(zz);
    auto idq = ZMor::identity(z2);
    SnakeDiagram<IntegerRing> ids{two, proj, two, proj, id, id, idq};
    auto s2 = snake_sequence(ids);
    CHECK(s2.seq.exact());
    for (const auto& n : s2.seq.nodes)
        CHECK(n.is_zero());

    SnakeDiagram<IntegerRing> bad{two, proj, two, proj, two, id, idq};
    CHECK_THROWS_AS(snake_sequence(bad), PreconditionFailure);
    SnakeDiagram<IntegerRing> not_epi{two, scalar(zz, cyclic(4), 2), two, proj, two, two, ZMor::zero(cyclic(4), z2)};
    CHECK_THROWS_AS(snake_sequence(not_epi), PreconditionFailure);
}

TEST_CASE("snake of the composition diagram recovers the six-term sequence", "[seqs]")
{
    auto zz = integers();
    auto f = scalar(zz, zz, 2), g = scalar(zz, zz, 3);
    auto sn = snake_sequence(composition_snake_diagram(f, g), true);
    auto cmp = compare_snake_with_six_term(sn, kernel_cokernel_sequence(f, g));
    INFO(failures(cmp));
    CHECK(all_ok(cmp));
}

TEST_CASE("six-term sequences and corollaries on random pairs", "[seqs][property]")
{
    for_each_ring([](auto ring) {
        Rng rng(77 + ring.tag().p);
        GenConfig cfg;
        for (int t = 0; t < 150; ++t) {
            INFO(ring.tag().str() << " case " << t);
            auto pr = gen_composable_pair(rng, ring, cfg);
            auto st = kernel_cokernel_sequence(pr.f, pr.g);
            REQUIRE(st.exact());
            REQUIRE(st.seq.verdicts.size() == 6);
            REQUIRE(composition_corollaries(pr.f, pr.g).ok());
            auto sn = snake_sequence(composition_snake_diagram(pr.f, pr.g), true);
            auto cmp = compare_snake_with_six_term(sn, st);
            INFO(failures(cmp));
            REQUIRE(all_ok(cmp));
        }
    });
}

TEST_CASE("triple braids on random triples", "[seqs][property]")
{
    for_each_ring([](auto ring) {
        Rng rng(5 + ring.tag().p);
        GenConfig cfg;
        for (int t = 0; t < 40; ++t) {
            INFO(ring.tag().str() << " case " << t);
            auto tr = gen_triple(rng, ring, cfg);
            auto rep = triple_braid(tr.f, tr.g, tr.h);
            INFO(failures(rep.shared_nodes) << failures(rep.commuting));
            REQUIRE(rep.ok());
        }
    });
}

TEST_CASE("square braids and corollaries on random squares", "[seqs][property]")
{
    for_each_ring([](auto ring) {
        Rng rng(91 + ring.tag().p);
        GenConfig cfg;
        int k_mono = 0, f_epi = 0;
        for (int t = 0; t < 80; ++t) {
            INFO(ring.tag().str() << " case " << t);
            auto sq = gen_commutative_square(rng, ring, cfg);
            auto br = square_braid(sq);
            INFO(failures(br.shared_nodes) << failures(br.commuting));
            REQUIRE(br.ok());
            auto cor = corollary_checks(sq, br);
            for (const auto& b : cor.bullets) {
                INFO(b.name << ": " << b.detail);
                REQUIRE(b.status != BulletStatus::Violated);
            }
            k_mono += cor.bullets[4].status == BulletStatus::Satisfied;
            f_epi += cor.bullets[5].status == BulletStatus::Satisfied;
        }
        CHECK(k_mono > 5);
        CHECK(f_epi > 5);
    });
}

TEST_CASE("pullback and pushout agree with enumeration", "[seqs][property]")
{
    Rng rng(404);
    GenConfig cfg;
    cfg.max_free = 0;
    cfg.max_factor = 6;
    cfg.max_summands = 2;
    int checked = 0, pb = 0, po = 0;
    for (int t = 0; t < 2000 && checked < 100; ++t) {
        auto sq = gen_commutative_square(rng, Z, cfg);
        long long total = 1;
        for (const auto* o : {&sq.f.source(), &sq.f.target(), &sq.g.target(), &sq.h.target()})
            total *= order(*o).value.to_int64();
        if (total > 256)
            continue;
        ++checked;
        const bool p = is_pullback(sq), q = is_pushout(sq);
        pb += p;
        po += q;
        REQUIRE(p == pullback_by_enumeration(sq));
        REQUIRE(q == pushout_by_enumeration(sq));
    }
    CHECK(checked == 100);
    CHECK(pb > 0);
    CHECK(po > 0);
    CHECK(po < checked);
}

TEST_CASE("snake sequences on random diagrams", "[seqs][property]")
{
    for_each_ring([](auto ring) {
        Rng rng(13 + ring.tag().p);
        GenConfig cfg;
        for (int t = 0; t < 60; ++t) {
            INFO(ring.tag().str() << " case " << t);
            auto d = gen_snake_diagram(rng, ring, cfg);
            auto sn = snake_sequence(d, rng.chance(1, 2));
            REQUIRE(sn.seq.exact());
        }
    });
}
