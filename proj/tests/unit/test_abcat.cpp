#include "kercok/genprop.hpp"
#include "kercok/oracle.hpp"

#include <catch_amalgamated.hpp>

using namespace kercok;

namespace {

const IntegerRing Z;

PresentedObject<IntegerRing> cyclic(long long d)
{
    return presented(Z, {BigInt(d)}, 0).object;
}

PresentedObject<IntegerRing> integers() { return free_object(Z, 1); }

Morphism<IntegerRing> scalar_map(const PresentedObject<IntegerRing>& a, const PresentedObject<IntegerRing>& b,
                                 long long v)
{
    return Morphism<IntegerRing>(a, b, from_ints(Z, 1, 1, {v}));
}

template <class F>
void for_each_ring(F&& body)
{
    body(IntegerRing{});
    body(RationalField{});
    body(PrimeField(2));
    body(PrimeField(97));
}

} // namespace

TEST_CASE("kernel fixtures", "[abcat]")
{
    auto z6 = cyclic(6);
    CHECK(kernel(Morphism<IntegerRing>::identity(z6)).carrier.is_zero());

    auto a = presented(Z, {BigInt(2), BigInt(3)}, 1).object;
    auto b = cyclic(5);
    auto k0 = kernel(Morphism<IntegerRing>::zero(a, b));
    CHECK(k0.carrier == a);
    CHECK(k0.embed == Morphism<IntegerRing>::identity(a));

    auto reduction = scalar_map(cyclic(4), cyclic(2), 1);
    auto k = kernel(reduction);
    CHECK(k.carrier == cyclic(2));
    CHECK(k.embed.mat() == from_ints(Z, 1, 1, {2}));
    CHECK(kernel_codes(reduction) == std::set<long long>{0, 2});
}

TEST_CASE("cokernel fixtures", "[abcat]")
{
    CHECK(cokernel(scalar_map(integers(), integers(), 2)).object == cyclic(2));
    CHECK(cokernel(Morphism<IntegerRing>::identity(cyclic(6))).object.is_zero());
    auto a = cyclic(3), b = presented(Z, {BigInt(4)}, 2).object;
    auto q = cokernel(Morphism<IntegerRing>::zero(a, b));
    CHECK(q.object == b);
    CHECK(q.proj == Morphism<IntegerRing>::identity(b));
}

TEST_CASE("image fixtures", "[abcat]")
{
    auto mono = scalar_map(integers(), integers(), 5);
    CHECK(image(mono).carrier == integers());
    CHECK(image(Morphism<IntegerRing>::zero(cyclic(3), cyclic(9))).carrier.is_zero());
    auto f = scalar_map(integers(), cyclic(4), 2);
    auto im = image(f);
    CHECK(im.carrier == cyclic(2));
    std::set<long long> hit;
    for (long long x = 0; x < 8; ++x)
        hit.insert(element_code(f.target(), f.apply(from_ints(Z, 1, 1, {x}))));
    CHECK(hit.size() == 2);
    CHECK(compose(im.embed, coimage_epi(f, im)) == f);
}

TEST_CASE("exactness fixtures", "[abcat]")
{
    auto zz = integers();
    auto two = scalar_map(zz, zz, 2);
    auto proj = scalar_map(zz, cyclic(2), 1);
    CHECK(is_exact_at(zero_into(zz), two).exact);
    CHECK(is_exact_at(two, proj).exact);
    CHECK(is_exact_at(proj, zero_out_of(cyclic(2))).exact);
    // Z/2 node: the image of the projection hits both elements
    std::set<long long> hit;
    for (long long x = 0; x < 4; ++x)
        hit.insert(element_code(cyclic(2), proj.apply(from_ints(Z, 1, 1, {x}))));
    CHECK(hit.size() == 2);

    auto a = cyclic(3);
    auto id = Morphism<IntegerRing>::identity(a);
    auto v = is_exact_at(id, id);
    CHECK_FALSE(v.exact);
    REQUIRE(v.witness);
    CHECK(v.witness->kind_name() == "image_not_in_kernel");

    auto zero = zero_object(Z);
    auto z0 = Morphism<IntegerRing>::identity(zero);
    CHECK(is_exact_at(z0, z0).exact);

    auto w = is_exact_at(zero_into(a), id);
    CHECK(w.exact);
    auto u = is_exact_at(zero_into(a), Morphism<IntegerRing>::zero(a, cyclic(2)));
    CHECK_FALSE(u.exact);
    REQUIRE(u.witness);
    CHECK(u.witness->kind_name() == "kernel_not_in_image");

    CHECK_THROWS_AS(is_exact_at(two, id), CompositionMismatch);
}

TEST_CASE("mono epi iso", "[abcat]")
{
    auto zz = integers();
    CHECK(is_iso(Morphism<IntegerRing>::identity(zz)));
    auto two = scalar_map(zz, zz, 2);
    CHECK(is_mono(two));
    CHECK_FALSE(is_epi(two));
    auto to_zero = zero_out_of(cyclic(2));
    CHECK(is_epi(to_zero));
    CHECK_FALSE(is_mono(to_zero));
}

TEST_CASE("length and order", "[abcat]")
{
    CHECK(length(cyclic(6)) == ExtendedCount{false, 2});
    CHECK(order(cyclic(6)) == ExtendedCount{false, 6});
    CHECK(length(zero_object(Z)) == ExtendedCount{false, 0});
    CHECK(order(zero_object(Z)) == ExtendedCount{false, 1});
    CHECK(length(integers()).infinite);
    CHECK(order(integers()).infinite);
    CHECK(length(cyclic(360)) == ExtendedCount{false, 6});
    CHECK(length(free_object(PrimeField(3), 4)) == ExtendedCount{false, 4});
    CHECK(order(free_object(PrimeField(3), 4)) == ExtendedCount{false, 81});
    CHECK(length(free_object(RationalField{}, 2)) == ExtendedCount{false, 2});
}

TEST_CASE("direct sums", "[abcat]")
{
    auto a = presented(Z, {BigInt(4)}, 1).object;
    CHECK(direct_sum(a, zero_object(Z)).object == a);
    auto s = direct_sum(cyclic(2), cyclic(3));
    CHECK(s.object == cyclic(6));
    auto x = cyclic(4), y = presented(Z, {BigInt(2)}, 1).object;
    auto bp = direct_sum(x, y);
    CHECK(compose(bp.proj1, bp.inj1) == Morphism<IntegerRing>::identity(x));
    CHECK(compose(bp.proj2, bp.inj2) == Morphism<IntegerRing>::identity(y));
    CHECK(compose(bp.proj2, bp.inj1).is_zero());
    CHECK(compose(bp.proj1, bp.inj2).is_zero());
    CHECK(compose(bp.inj1, bp.proj1) + compose(bp.inj2, bp.proj2) == Morphism<IntegerRing>::identity(bp.object));
    CHECK_THROWS_AS(direct_sum(free_object(PrimeField(2), 1), free_object(PrimeField(3), 1)), RingMismatch);
}

TEST_CASE("element enumeration", "[abcat]")
{
    CHECK(enumerate_elements(zero_object(Z)).size() == 1);
    CHECK(enumerate_elements(cyclic(4)).size() == 4);
    auto v = presented(Z, {BigInt(2), BigInt(2)}, 0).object;
    auto elems = enumerate_elements(v);
    REQUIRE(elems.size() == 4);
    std::set<long long> codes;
    for (const auto& e : elems)
        codes.insert(element_code(v, e));
    CHECK(codes.size() == 4);
    CHECK_THROWS_AS(enumerate_elements(integers()), EnumerationError);
    CHECK_THROWS_AS(enumerate_elements(cyclic(2048)), EnumerationError);
}

TEST_CASE("ill-defined morphisms are rejected", "[abcat]")
{
    CHECK_THROWS_AS(scalar_map(cyclic(2), integers(), 1), IllDefinedMorphism);
    CHECK_THROWS_AS(scalar_map(cyclic(4), cyclic(6), 1), IllDefinedMorphism);
    CHECK_NOTHROW(scalar_map(cyclic(4), cyclic(6), 3));
    CHECK_THROWS_AS(compose(scalar_map(integers(), cyclic(2), 1), scalar_map(integers(), cyclic(3), 1)),
                    CompositionMismatch);
}

TEST_CASE("universal properties on random morphisms", "[abcat][property]")
{
    for_each_ring([](auto ring) {
        Rng rng(1000 + ring.tag().p);
        GenConfig cfg;
        for (int trial = 0; trial < 250; ++trial) {
            INFO(ring.tag().str() << " trial " << trial);
            auto a = gen_object(rng, ring, cfg);
            auto b = gen_object(rng, ring, cfg);
            auto f = gen_morphism(rng, a, b, cfg);

            auto k = kernel(f);
            REQUIRE(compose(f, k.embed).is_zero());
            REQUIRE(is_mono(k.embed));
            auto t_obj = gen_object(rng, ring, cfg);
            auto through = compose(k.embed, gen_morphism(rng, t_obj, k.carrier, cfg));
            auto u = factor_through_mono(through, k.embed);
            REQUIRE(u);
            REQUIRE(compose(k.embed, *u) == through);
            auto t = gen_morphism(rng, t_obj, a, cfg);
            REQUIRE(factor_through_mono(t, k.embed).has_value() == compose(f, t).is_zero());

            auto q = cokernel(f);
            REQUIRE(compose(q.proj, f).is_zero());
            REQUIRE(is_epi(q.proj));
            auto s = gen_morphism(rng, q.object, t_obj, cfg);
            auto killed = compose(s, q.proj);
            REQUIRE(factor_through_quotient(killed, q) == s);

            auto im = image(f);
            REQUIRE(is_mono(im.embed));
            auto e = coimage_epi(f, im);
            REQUIRE(is_epi(e));
            REQUIRE(compose(im.embed, e) == f);
        }
    });
}

TEST_CASE("rank-based exactness agrees with enumeration", "[abcat][property]")
{
    Rng rng(512);
    GenConfig cfg;
    cfg.max_free = 0;
    cfg.max_factor = 8;
    int checked = 0, exact = 0;
    for (int trial = 0; trial < 400 && checked < 200; ++trial) {
        auto pair = rng.chance(1, 4) ? gen_composable_pair(rng, Z, cfg) : gen_complex_pair(rng, Z, cfg);
        if (!finite_within(pair.f.source(), 512) || !finite_within(pair.f.target(), 512) ||
            !finite_within(pair.g.target(), 512))
            continue;
        ++checked;
        bool fast = is_exact_at(pair.f, pair.g).exact;
        exact += fast;
        REQUIRE(fast == exact_by_enumeration(pair.f, pair.g, 512));
        REQUIRE(is_mono(pair.f) == mono_by_enumeration(pair.f, 512));
        REQUIRE(is_epi(pair.g) == epi_by_enumeration(pair.g, 512));
    }
    CHECK(checked == 200);
    CHECK(exact > 20);
    CHECK(exact < checked);
}

TEST_CASE("length is additive on image-cokernel sequences", "[abcat][property]")
{
    Rng rng(31);
    GenConfig cfg;
    cfg.max_free = 0;
    for (int trial = 0; trial < 200; ++trial) {
        auto a = gen_object(rng, Z, cfg);
        auto b = gen_object(rng, Z, cfg);
        auto f = gen_morphism(rng, a, b, cfg);
        auto im = image(f);
        auto q = cokernel(f);
        auto k = kernel(f);
        REQUIRE(length(im.carrier).value + length(q.object).value == length(b).value);
        REQUIRE(length(k.carrier).value + length(im.carrier).value == length(a).value);
    }
}
