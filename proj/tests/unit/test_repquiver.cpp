#include "kercok/genprop.hpp"
#include "kercok/repquiver.hpp"

#include <catch_amalgamated.hpp>

using namespace kercok;

namespace {

const PrimeField F2(2);
const PrimeField F3(3);

FMat fm(Index r, Index c, std::initializer_list<long long> v) { return from_ints(F2, r, c, v); }

struct A2 {
    Quiver q = linear_quiver(2);
    QuiverRep s1 = simple_rep(q, F2, 0);
    QuiverRep s2 = simple_rep(q, F2, 1);
    QuiverRep p = make_rep(q, F2, {1, 1}, {fm(1, 1, {1})});
    RepMorphism incl = make_rep_morphism(s2, p, {fm(1, 0, {}), fm(1, 1, {1})});
    RepMorphism proj = make_rep_morphism(p, s1, {fm(1, 1, {1}), fm(0, 1, {})});
};

/// Counts intertwiners by trying every tuple of vertex matrices.
long long count_homs_by_enumeration(const QuiverRep& x, const QuiverRep& y)
{
    std::vector<Index> sizes;
    Index entries = 0;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        sizes.push_back(y.dims[v] * x.dims[v]);
        entries += sizes.back();
    }
    const long long p = x.field.p;
    long long total = 1;
    for (Index i = 0; i < entries; ++i)
        total *= p;
    long long count = 0;
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        std::vector<FMat> comps;
        for (std::size_t v = 0; v < x.dims.size(); ++v) {
            FMat m(y.dims[v], x.dims[v]);
            for (Index j = 0; j < m.cols(); ++j)
                for (Index i = 0; i < m.rows(); ++i) {
                    m(i, j) = c % p;
                    c /= p;
                }
            comps.push_back(m);
        }
        try {
            make_rep_morphism(x, y, comps);
            ++count;
        } catch (const PreconditionFailure&) {
        }
    }
    return count;
}

} // namespace

TEST_CASE("quivers must be acyclic", "[repquiver]")
{
    CHECK_NOTHROW(make_quiver(3, {{0, 1}, {1, 2}, {0, 2}}));
    CHECK_THROWS_AS(make_quiver(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_quiver(1, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_quiver(2, {{0, 2}}), std::invalid_argument);
    auto q = linear_quiver(2);
    CHECK_THROWS_AS(make_rep(q, F2, {1, 1}, {fm(2, 1, {1, 0})}), QuiverMismatch);
}

TEST_CASE("Hom space fixtures on A2", "[repquiver]")
{
    A2 a;
    CHECK(hom_basis(a.s1, a.p).empty());
    CHECK(hom_basis(a.s2, a.p).size() == 1);
    CHECK(hom_basis(a.p, a.s1).size() == 1);
    CHECK(hom_basis(a.p, a.p).size() == 1);
    auto end = hom_basis(a.p, a.p);
    CHECK(end[0] == rep_identity(a.p));
    CHECK_THROWS_AS(make_rep_morphism(a.s1, a.p, {fm(1, 1, {1}), fm(1, 0, {})}), PreconditionFailure);
    CHECK_THROWS_AS(hom_basis(a.p, simple_rep(linear_quiver(3), F2, 0)), QuiverMismatch);
}

TEST_CASE("indecomposability fixtures", "[repquiver]")
{
    A2 a;
    CHECK(is_indecomposable(a.s1).verdict == Decomposability::Indecomposable);
    CHECK(is_indecomposable(a.s2).verdict == Decomposability::Indecomposable);
    CHECK(is_indecomposable(a.p).verdict == Decomposability::Indecomposable);
    auto sum = direct_sum(a.s1, a.s2);
    auto v = is_indecomposable(sum);
    REQUIRE(v.verdict == Decomposability::Decomposable);
    REQUIRE(v.idempotent);
    CHECK(rep_compose(*v.idempotent, *v.idempotent) == *v.idempotent);
    REQUIRE(v.splitting);
    CHECK(v.splitting->first.carrier.length() + v.splitting->second.carrier.length() == 2);
    CHECK(is_indecomposable(zero_rep(a.q, F2)).verdict == Decomposability::Decomposable);

    auto big = direct_sum(a.p, a.p);
    CHECK(is_indecomposable(big, 4).verdict == Decomposability::Unknown);
    CHECK(is_indecomposable(big).verdict == Decomposability::Decomposable);
}

TEST_CASE("image length fixtures", "[repquiver]")
{
    A2 a;
    CHECK(rep_length_of_image(rep_identity(a.p)) == 2);
    CHECK(rep_length_of_image(rep_zero(a.p, a.s1)) == 0);
    CHECK(rep_length_of_image(a.proj) == 1);
    auto k = rep_kernel(a.proj);
    CHECK(k.carrier == a.s2);
    auto c = rep_cokernel(a.incl);
    CHECK(c.object == a.s1);
    CHECK(rep_compose(a.proj, a.incl).is_zero());
}

TEST_CASE("Harada-Sai fixtures", "[repquiver]")
{
    A2 a;
    HaradaChain ch{{a.s2, a.p, a.s1}, {a.incl, a.proj}, 2};
    auto rep = harada_sai_check(ch);
    CHECK(rep.ok());
    CHECK(rep.prefix_lengths == std::vector<long long>{1, 0});
    REQUIRE(rep.bounds.size() == 1);
    CHECK(rep.bounds[0].length == 1);
    CHECK(rep.bounds[0].bound == 1);
    CHECK_FALSE(rep.full_composite_zero);

    HaradaChain with_zero{{a.p, a.p, a.s1, a.s1}, {rep_zero(a.p, a.p), a.proj, rep_zero(a.s1, a.s1)}, 2};
    auto rz = harada_sai_check(with_zero);
    CHECK(rz.ok());
    REQUIRE(rz.full_composite_zero);
    CHECK(*rz.full_composite_zero);
}

TEST_CASE("Harada-Sai preconditions", "[repquiver]")
{
    A2 a;
    try {
        harada_sai_check({{a.p, a.p}, {rep_identity(a.p)}, 2});
        FAIL("expected PreconditionFailure");
    } catch (const PreconditionFailure& e) {
        CHECK(std::string(e.what()).find("f_1 is an isomorphism") != std::string::npos);
    }
    auto sum = direct_sum(a.s1, a.s2);
    try {
        harada_sai_check({{a.s1, sum}, {rep_zero(a.s1, sum)}, 2});
        FAIL("expected PreconditionFailure");
    } catch (const PreconditionFailure& e) {
        CHECK(std::string(e.what()).find("M_2") != std::string::npos);
    }
    CHECK_THROWS_AS(harada_sai_check({{a.p}, {}, 1}), PreconditionFailure);
    CHECK_THROWS_AS(harada_sai_check({{a.s2, a.p}, {a.proj}, 2}), PreconditionFailure);
}

TEST_CASE("exhaustive A2 sweep over F2 with n = 2", "[repquiver][property]")
{
    A2 a;
    const std::vector<QuiverRep> inds = {a.s1, a.s2, a.p};
    long long chains = 0, nonzero_steps = 0;
    std::function<void(std::vector<QuiverRep>&, std::vector<RepMorphism>&)> grow =
        [&](std::vector<QuiverRep>& mods, std::vector<RepMorphism>& maps) {
            if (maps.size() == 3) {
                auto rep = harada_sai_check({mods, maps, 2});
                REQUIRE(rep.ok());
                REQUIRE(rep.full_composite_zero);
                REQUIRE(*rep.full_composite_zero);
                ++chains;
                return;
            }
            for (const auto& next : inds)
                for (const auto& f : hom_elements(mods.back(), next)) {
                    if (rep_is_iso(f))
                        continue;
                    nonzero_steps += !f.is_zero();
                    mods.push_back(next);
                    maps.push_back(f);
                    grow(mods, maps);
                    mods.pop_back();
                    maps.pop_back();
                }
        };
    for (const auto& start : inds) {
        std::vector<QuiverRep> mods{start};
        std::vector<RepMorphism> maps;
        grow(mods, maps);
    }
    CHECK(chains > 50);
    CHECK(chains < 1000);
    CHECK(nonzero_steps > 0);
}

TEST_CASE("Hom dimensions agree with brute force", "[repquiver][property]")
{
    Rng rng(17);
    for (int t = 0; t < 60; ++t) {
        INFO("case " << t);
        auto q = linear_quiver(2);
        auto x = gen_quiver_rep(rng, q, F2, 2);
        auto y = gen_quiver_rep(rng, q, F2, 2);
        const auto dim = hom_basis(x, y).size();
        REQUIRE(count_homs_by_enumeration(x, y) == (1LL << dim));
    }
}

TEST_CASE("kernel, image and cokernel lengths are additive", "[repquiver][property]")
{
    Rng rng(5);
    for (int t = 0; t < 100; ++t) {
        INFO("case " << t);
        const auto& field = (t % 2) ? F3 : F2;
        auto q = gen_quiver(rng);
        auto x = gen_quiver_rep(rng, q, field, 3);
        auto y = gen_quiver_rep(rng, q, field, 3);
        auto f = gen_non_iso(rng, x, y);
        auto k = rep_kernel(f);
        auto im = rep_image(f);
        auto c = rep_cokernel(f);
        REQUIRE(rep_length_of_image(f) + k.carrier.length() == x.length());
        REQUIRE(im.carrier.length() == rep_length_of_image(f));
        REQUIRE(c.object.length() + im.carrier.length() == y.length());
        REQUIRE(rep_compose(f, k.embed).is_zero());
        REQUIRE(rep_compose(c.proj, f).is_zero());
        REQUIRE(rep_is_mono(k.embed));
        REQUIRE(rep_is_epi(c.proj));
    }
}

TEST_CASE("random Harada-Sai chains", "[repquiver][property]")
{
    Rng rng(2024);
    int nonzero_prefix = 0, star_noniso = 0, dstar_noniso = 0;
    for (int t = 0; t < 60; ++t) {
        INFO("case " << t);
        const auto& field = (t % 3 == 2) ? F3 : F2;
        auto q = gen_quiver(rng);
        const int n = 2 + t % 2;
        auto ch = gen_harada_chain(rng, q, field, n);
        auto rep = harada_sai_check(ch);
        REQUIRE(rep.ok());
        REQUIRE(rep.full_composite_zero);
        REQUIRE(*rep.full_composite_zero);
        nonzero_prefix += rep.prefix_lengths.size() > 1 && rep.prefix_lengths[1] > 0;
        for (const auto& s : rep.splits) {
            star_noniso += !s.star_iso;
            dstar_noniso += !s.dstar_iso;
        }
        auto smuggled = ch;
        smuggled.maps[0] = rep_identity(ch.modules[0]);
        smuggled.modules[1] = ch.modules[0];
        smuggled.maps[1] = rep_zero(ch.modules[0], ch.modules[2]);
        REQUIRE_THROWS_AS(harada_sai_check(smuggled), PreconditionFailure);
    }
    CHECK(nonzero_prefix > 0);
    CHECK(star_noniso > 0);
    CHECK(dstar_noniso > 0);
}
