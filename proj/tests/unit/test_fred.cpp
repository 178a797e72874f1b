#include "kercok/fred.hpp"
#include "kercok/genprop.hpp"
#include "kercok/oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace kercok;

namespace {

using ZMor = Morphism<IntegerRing>;
using ZObj = PresentedObject<IntegerRing>;
const IntegerRing Z;

ZObj cyclic(long long d) { return presented(Z, {BigInt(d)}, 0).object; }
ZObj integers() { return free_object(Z, 1); }
ZMor scalar(const ZObj& a, const ZObj& b, long long v) { return ZMor(a, b, from_ints(Z, 1, 1, {v})); }

CyclicAction<IntegerRing> trivial(const ZObj& m, int n) { return {m, ZMor::identity(m), n}; }

/// Tate groups by brute force on a finite module.
Rational herbrand_by_enumeration(const CyclicAction<IntegerRing>& act)
{
    auto N = norm_map(act);
    auto t = act.sigma - ZMor::identity(act.M);
    auto fixed = kernel_codes(t);
    auto norms = image_codes(N);
    auto ker_n = kernel_codes(N);
    auto boundaries = image_codes(t);
    return Rational(BigInt(static_cast<long long>(fixed.size() / norms.size())),
                    BigInt(static_cast<long long>(ker_n.size() / boundaries.size())));
}

} // namespace

TEST_CASE("Fredholm predicate", "[fred]")
{
    auto zz = integers();
    CHECK(is_fredholm(scalar(zz, zz, 6)));
    CHECK_FALSE(is_fredholm(scalar(zz, zz, 0)));
    const PrimeField F3(3);
    Rng rng(2);
    auto v = free_object(F3, 3), w = free_object(F3, 2);
    CHECK(is_fredholm(gen_morphism(rng, v, w, GenConfig{})));
    CHECK_THROWS_AS(fredholm_index(scalar(zz, zz, 0)), NotFredholm);
}

TEST_CASE("index fixtures", "[fred]")
{
    auto zz = integers();
    auto r = fredholm_index(scalar(zz, zz, 6));
    CHECK(r.ind == BigInt(2));
    CHECK(r.len_cok == BigInt(2));
    CHECK(r.len_ker == BigInt(0));
    CHECK(fredholm_index(ZMor::identity(cyclic(12))).ind == BigInt(0));

    const RationalField Q;
    Rng rng(6);
    auto v = free_object(Q, 3), w = free_object(Q, 2);
    for (int i = 0; i < 20; ++i)
        CHECK(fredholm_index(gen_morphism(rng, v, w, GenConfig{})).ind == BigInt(-1));
    CHECK(fredholm_index(Morphism<RationalField>::zero(v, w)).ind == BigInt(-1));
}

TEST_CASE("index additivity fixtures", "[fred]")
{
    auto zz = integers();
    auto rep = index_additivity_check(scalar(zz, zz, 2), scalar(zz, zz, 3));
    CHECK(rep.f.ind == BigInt(1));
    CHECK(rep.g.ind == BigInt(1));
    CHECK(rep.gf.ind == BigInt(2));
    CHECK(rep.ok());
    auto id = ZMor::identity(cyclic(5));
    auto r2 = index_additivity_check(id, id);
    CHECK(r2.gf.ind == BigInt(0));
    CHECK(r2.ok());
    try {
        index_additivity_check(scalar(zz, zz, 0), scalar(zz, zz, 1));
        FAIL("expected NotFredholm");
    } catch (const NotFredholm& e) {
        CHECK(std::string(e.what()).rfind("f:", 0) == 0);
    }
}

TEST_CASE("Tate fixtures", "[fred]")
{
    auto t = tate_cyclic(trivial(integers(), 3));
    CHECK(t.H0.object == cyclic(3));
    CHECK(t.Hm1.object.is_zero());
    REQUIRE(t.h);
    CHECK(*t.h == Rational(3));

    auto t5 = tate_cyclic(trivial(cyclic(5), 2));
    CHECK(t5.H0.object.is_zero());
    CHECK(t5.Hm1.object.is_zero());
    CHECK(*t5.h == Rational(1));

    auto v = presented(Z, {BigInt(2), BigInt(2)}, 0).object;
    ZMor swap(v, v, from_ints(Z, 2, 2, {0, 1, 1, 0}));
    auto ts = tate_cyclic(CyclicAction<IntegerRing>{v, swap, 2});
    CHECK(ts.H0.object.is_zero());
    CHECK(ts.Hm1.object.is_zero());
    CHECK(*ts.h == Rational(1));
    CHECK(herbrand_by_enumeration({v, swap, 2}) == Rational(1));

    for (int n = 1; n <= 12; ++n) {
        auto tn = tate_cyclic(trivial(integers(), n));
        REQUIRE(tn.h);
        CHECK(*tn.h == Rational(n));
    }

    // Z with sigma = -1, n = 2: H0 = 0, Hm1 = Z/2
    auto zz = integers();
    auto tneg = tate_cyclic(CyclicAction<IntegerRing>{zz, scalar(zz, zz, -1), 2});
    CHECK(tneg.H0.object.is_zero());
    CHECK(tneg.Hm1.object == cyclic(2));
    CHECK(*tneg.h == Rational(BigInt(1), BigInt(2)));
}

TEST_CASE("invalid actions are rejected", "[fred]")
{
    auto zz = integers();
    CHECK_THROWS_AS(tate_cyclic(CyclicAction<IntegerRing>{zz, scalar(zz, zz, 2), 1}), InvalidAction);
    CHECK_THROWS_AS(tate_cyclic(CyclicAction<IntegerRing>{zz, scalar(zz, zz, -1), 3}), InvalidAction);
    CHECK_THROWS_AS(tate_cyclic(CyclicAction<IntegerRing>{zz, scalar(zz, zz, 1), 0}), InvalidAction);
}

TEST_CASE("Herbrand multiplicativity fixtures", "[fred]")
{
    auto zz = integers();
    auto z2 = free_object(Z, 2);
    ZMor inj(zz, z2, from_ints(Z, 2, 1, {1, 0}));
    ZMor proj(z2, zz, from_ints(Z, 1, 2, {0, 1}));
    EquivariantSES<IntegerRing> split{trivial(zz, 2), trivial(z2, 2), trivial(zz, 2), inj, proj};
    auto rep = herbrand_multiplicativity_check(split);
    CHECK(rep.applicable);
    CHECK(rep.holds);
    CHECK(*rep.mid.h == Rational(4));

    // Z → Z[C2] → Z(sign): diagonal, then difference of coordinates
    ZMor swap(z2, z2, from_ints(Z, 2, 2, {0, 1, 1, 0}));
    ZMor diag(zz, z2, from_ints(Z, 2, 1, {1, 1}));
    ZMor diff(z2, zz, from_ints(Z, 1, 2, {1, -1}));
    EquivariantSES<IntegerRing> regular{trivial(zz, 2), {z2, swap, 2}, {zz, scalar(zz, zz, -1), 2}, diag, diff};
    auto r2 = herbrand_multiplicativity_check(regular);
    CHECK(*r2.mid.h == Rational(1));
    CHECK(*r2.sub.h == Rational(2));
    CHECK(*r2.quo.h == Rational(BigInt(1), BigInt(2)));
    CHECK(r2.holds);

    EquivariantSES<IntegerRing> not_equivariant{trivial(zz, 2), {z2, swap, 2}, trivial(zz, 2), inj, proj};
    CHECK_THROWS_AS(herbrand_multiplicativity_check(not_equivariant), PreconditionFailure);
}

TEST_CASE("index additivity on random Fredholm pairs", "[fred][property]")
{
    Rng rng(55);
    GenConfig cfg;
    for (int t = 0; t < 200; ++t) {
        INFO("case " << t);
        auto pr = gen_fredholm_pair(rng, Z, cfg);
        auto rep = index_additivity_check(pr.f, pr.g);
        REQUIRE(rep.additive());
        REQUIRE(rep.euler.is_zero());
    }
    const PrimeField F97(97);
    for (int t = 0; t < 200; ++t) {
        auto pr = gen_composable_pair(rng, F97, cfg);
        auto rep = index_additivity_check(pr.f, pr.g);
        REQUIRE(rep.ok());
        REQUIRE(rep.f.ind == BigInt(pr.f.target().gens() - pr.f.source().gens()));
    }
}

TEST_CASE("Herbrand quotient on random actions", "[fred][property]")
{
    Rng rng(9);
    GenConfig cfg;
    cfg.max_free = 0;
    cfg.max_factor = 8;
    int checked = 0;
    for (int t = 0; t < 300 && checked < 60; ++t) {
        auto act = gen_cyclic_action(rng, Z, cfg);
        if (!finite_within(act.M, 512))
            continue;
        ++checked;
        auto rep = tate_cyclic(act);
        REQUIRE(rep.h);
        REQUIRE(*rep.h == Rational(1));
        REQUIRE(herbrand_by_enumeration(act) == Rational(1));
        REQUIRE(annihilated_by(rep.H0.object, act.n));
        REQUIRE(annihilated_by(rep.Hm1.object, act.n));
    }
    CHECK(checked == 60);

    GenConfig wide;
    int nontrivial = 0;
    for (int t = 0; t < 60; ++t) {
        auto ses = gen_equivariant_ses(rng, Z, wide);
        auto rep = herbrand_multiplicativity_check(ses);
        REQUIRE(rep.applicable);
        REQUIRE(rep.holds);
        REQUIRE(annihilated_by(rep.mid.H0.object, ses.mid.n));
        nontrivial += !(*rep.mid.h == Rational(1));
    }
    CHECK(nontrivial > 0);
}
