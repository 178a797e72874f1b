#pragma once

#include "kercok/abcat.hpp"
#include "kercok/rng.hpp"
#include "kercok/fred.hpp"
#include "kercok/homol.hpp"
#include "kercok/repquiver.hpp"
#include "kercok/seqs.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kercok {

inline constexpr const char* generator_version = "kercok-gen/1";

struct GenConfig {
    std::uint64_t seed = 0;
    RingTag ring;
    int max_summands = 3;   ///< cyclic summands of a random INT object
    int max_factor = 12;    ///< largest modulus of a cyclic summand
    int max_free = 2;       ///< free rank of a random INT object
    int max_dim = 4;        ///< dimension of a random vector space
    int entry_bound = 4;    ///< |entry| of free-to-free integer entries
    int cases = 100;
};

template <class R>
typename R::Scalar random_scalar(Rng& rng, const R& ring, int bound)
{
    if constexpr (std::is_same_v<R, PrimeField>) {
        (void)bound;
        return rng.uniform(0, static_cast<std::int64_t>(ring.p) - 1);
    } else if constexpr (std::is_same_v<R, RationalField>) {
        BigInt num = rng.uniform(-bound, bound);
        BigInt den = rng.chance(3, 4) ? BigInt(1) : BigInt(rng.uniform(2, 3));
        return Rational(num, den);
    } else {
        return BigInt(rng.uniform(-bound, bound));
    }
}

template <class R>
Mat<R> random_matrix(Rng& rng, const R& ring, Index rows, Index cols, int bound)
{
    Mat<R> m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j)
            m(i, j) = random_scalar(rng, ring, bound);
    return m;
}

/// Random object in canonical form. Over INT: a handful of cyclic summands
/// plus a free part; over a field: a dimension.
template <class R>
PresentedObject<R> gen_object(Rng& rng, const R& ring, const GenConfig& cfg)
{
    if constexpr (R::is_field) {
        return free_object(ring, rng.uniform(0, cfg.max_dim));
    } else {
        std::vector<BigInt> cyclic;
        const int k = static_cast<int>(rng.uniform(0, cfg.max_summands));
        for (int i = 0; i < k; ++i)
            cyclic.emplace_back(rng.uniform(2, cfg.max_factor));
        return presented(ring, cyclic, rng.uniform(0, cfg.max_free)).object;
    }
}

/// Uniform element of Hom(A, B) (free-to-free integer entries bounded).
/// Entry (i, j) between summands of moduli d_j → d_i ranges over the
/// multiples of d_i / gcd(d_i, d_j) in [0, d_i).
template <class R>
Morphism<R> gen_morphism(Rng& rng, const PresentedObject<R>& a, const PresentedObject<R>& b, const GenConfig& cfg)
{
    const R& ring = a.ring;
    Mat<R> m = zeros(ring, b.gens(), a.gens());
    for (Index i = 0; i < b.gens(); ++i)
        for (Index j = 0; j < a.gens(); ++j) {
            if constexpr (R::is_field) {
                m(i, j) = random_scalar(rng, ring, cfg.entry_bound);
            } else {
                const bool src_torsion = j < a.torsion_count();
                const bool dst_torsion = i < b.torsion_count();
                if (src_torsion && dst_torsion) {
                    const BigInt& dj = a.torsion[static_cast<std::size_t>(j)];
                    const BigInt& di = b.torsion[static_cast<std::size_t>(i)];
                    BigInt g = gcd(di, dj);
                    m(i, j) = (di / g) * BigInt(rng.uniform(0, g.to_int64() - 1));
                } else if (dst_torsion) {
                    m(i, j) = rng.uniform(0, b.torsion[static_cast<std::size_t>(i)].to_int64() - 1);
                } else if (!src_torsion) {
                    m(i, j) = rng.uniform(-cfg.entry_bound, cfg.entry_bound);
                }
            }
        }
    return Morphism<R>(a, b, std::move(m));
}

template <class R>
struct ComposablePair {
    Morphism<R> f, g;
};

template <class R>
struct ComposableTriple {
    Morphism<R> f, g, h;
};

template <class R>
ComposablePair<R> gen_composable_pair(Rng& rng, const R& ring, const GenConfig& cfg)
{
    auto a = gen_object(rng, ring, cfg);
    auto b = gen_object(rng, ring, cfg);
    auto c = gen_object(rng, ring, cfg);
    auto f = gen_morphism(rng, a, b, cfg);
    auto g = gen_morphism(rng, b, c, cfg);
    return {std::move(f), std::move(g)};
}

template <class R>
ComposableTriple<R> gen_triple(Rng& rng, const R& ring, const GenConfig& cfg)
{
    auto a = gen_object(rng, ring, cfg);
    auto b = gen_object(rng, ring, cfg);
    auto c = gen_object(rng, ring, cfg);
    auto d = gen_object(rng, ring, cfg);
    auto f = gen_morphism(rng, a, b, cfg);
    auto g = gen_morphism(rng, b, c, cfg);
    auto h = gen_morphism(rng, c, d, cfg);
    return {std::move(f), std::move(g), std::move(h)};
}

/// f: A → B, g: B → C with g∘f = 0: g factors through a random map out of
/// cok f. With probability 1/3 g is the projection onto cok f itself, which
/// makes the pair exact at B.
template <class R>
ComposablePair<R> gen_complex_pair(Rng& rng, const R& ring, const GenConfig& cfg)
{
    auto a = gen_object(rng, ring, cfg);
    auto b = gen_object(rng, ring, cfg);
    auto f = gen_morphism(rng, a, b, cfg);
    auto q = cokernel(f);
    if (rng.chance(1, 3))
        return {std::move(f), q.proj};
    auto c = gen_object(rng, ring, cfg);
    auto s = gen_morphism(rng, q.object, c, cfg);
    return {std::move(f), compose(s, q.proj)};
}

/// Source-side variation for squares: plain random, an epimorphism onto a
/// quotient of A, or a monomorphism out of a subobject of B.
template <class R>
Morphism<R> gen_biased_map(Rng& rng, const R& ring, const GenConfig& cfg)
{
    const auto roll = rng.index(4);
    if (roll == 0) {
        auto a = gen_object(rng, ring, cfg);
        auto x = gen_object(rng, ring, cfg);
        return cokernel(gen_morphism(rng, x, a, cfg)).proj;
    }
    if (roll == 1) {
        auto b = gen_object(rng, ring, cfg);
        auto y = gen_object(rng, ring, cfg);
        return kernel(gen_morphism(rng, b, y, cfg)).embed;
    }
    auto a = gen_object(rng, ring, cfg);
    auto b = gen_object(rng, ring, cfg);
    return gen_morphism(rng, a, b, cfg);
}

/// f: A → B, g: A → C, then (h, k) = λ∘q with q the cokernel of (f, −g):
/// A → B⊕C and λ: cok → D. λ is the identity a quarter of the time
/// (pushout squares) and zero occasionally.
template <class R>
SquareData<R> gen_commutative_square(Rng& rng, const R& ring, const GenConfig& cfg)
{
    auto f = gen_biased_map(rng, ring, cfg);
    const auto& a = f.source();
    auto c = gen_object(rng, ring, cfg);
    auto g = gen_morphism(rng, a, c, cfg);
    auto bc = direct_sum(f.target(), c);
    auto m = compose(bc.inj1, f) - compose(bc.inj2, g);
    auto q = cokernel(m);
    Morphism<R> lambda = Morphism<R>::identity(q.object);
    const auto roll = rng.index(8);
    if (roll == 0) {
        lambda = Morphism<R>::zero(q.object, gen_object(rng, ring, cfg));
    } else if (roll >= 3) {
        lambda = gen_morphism(rng, q.object, gen_object(rng, ring, cfg), cfg);
    }
    auto n = compose(lambda, q.proj);
    return SquareData<R>(std::move(f), std::move(g), compose(n, bc.inj1), compose(n, bc.inj2));
}

/// Two-row diagram satisfying the snake preconditions by construction:
/// top row A →i B ↠ cok i; b: B → B' random; p2 kills b∘i; bottom row
/// ker p2 ↪ B' →p2 C'; a and c are the induced maps.
template <class R>
SnakeDiagram<R> gen_snake_diagram(Rng& rng, const R& ring, const GenConfig& cfg)
{
    auto a_obj = gen_object(rng, ring, cfg);
    auto b_obj = gen_object(rng, ring, cfg);
    auto i = gen_morphism(rng, a_obj, b_obj, cfg);
    auto top = cokernel(i);
    auto b = gen_morphism(rng, b_obj, gen_object(rng, ring, cfg), cfg);
    auto bi = compose(b, i);
    auto qbi = cokernel(bi);
    Morphism<R> p2 = qbi.proj;
    if (!rng.chance(1, 3))
        p2 = compose(gen_morphism(rng, qbi.object, gen_object(rng, ring, cfg), cfg), qbi.proj);
    auto bottom = kernel(p2);
    auto a = factor_through_mono(bi, bottom.embed);
    auto c = factor_through_quotient(compose(p2, b), top);
    return {i, top.proj, bottom.embed, p2, *a, b, c};
}

/// Random INT object with a prescribed free rank.
template <class R>
PresentedObject<R> gen_object_with_free(Rng& rng, const R& ring, const GenConfig& cfg, Index free_rank)
{
    if constexpr (R::is_field) {
        return free_object(ring, free_rank);
    } else {
        std::vector<BigInt> cyclic;
        const int k = static_cast<int>(rng.uniform(0, cfg.max_summands));
        for (int i = 0; i < k; ++i)
            cyclic.emplace_back(rng.uniform(2, cfg.max_factor));
        return presented(ring, cyclic, free_rank).object;
    }
}

/// Map between objects of equal free rank whose free block is the identity.
template <class R>
Morphism<R> free_identity_map(const PresentedObject<R>& a, const PresentedObject<R>& b)
{
    Mat<R> m = zeros(a.ring, b.gens(), a.gens());
    for (Index i = 0; i < a.free_rank; ++i)
        m(b.torsion_count() + i, a.torsion_count() + i) = a.ring.one();
    return Morphism<R>(a, b, std::move(m));
}

/// Composable pair with f and g Fredholm: all three objects share a free
/// rank and free blocks are resampled (at most 64 times) until nonsingular.
template <class R>
ComposablePair<R> gen_fredholm_pair(Rng& rng, const R& ring, const GenConfig& cfg)
{
    const Index r = rng.uniform(0, cfg.max_free);
    auto a = gen_object_with_free(rng, ring, cfg, r);
    auto b = gen_object_with_free(rng, ring, cfg, r);
    auto c = gen_object_with_free(rng, ring, cfg, r);
    auto sample = [&](const PresentedObject<R>& x, const PresentedObject<R>& y) {
        for (int attempt = 0; attempt < 64; ++attempt) {
            auto m = gen_morphism(rng, x, y, cfg);
            if (is_fredholm(m))
                return m;
        }
        return free_identity_map(x, y);
    };
    auto f = sample(a, b);
    auto g = sample(b, c);
    return {std::move(f), std::move(g)};
}

/// Signed permutation of the summands of M, permuting only summands with
/// equal modulus.
template <class R>
Morphism<R> gen_signed_permutation(Rng& rng, const PresentedObject<R>& m)
{
    const R& ring = m.ring;
    Mat<R> p = zeros(ring, m.gens(), m.gens());
    Index start = 0;
    while (start < m.gens()) {
        Index end = start + 1;
        while (end < m.gens() && m.modulus(end) == m.modulus(start) &&
               (end < m.torsion_count()) == (start < m.torsion_count()))
            ++end;
        std::vector<Index> perm;
        for (Index i = start; i < end; ++i)
            perm.push_back(i);
        for (std::size_t i = perm.size(); i > 1; --i)
            std::swap(perm[i - 1], perm[rng.index(i)]);
        for (Index i = start; i < end; ++i)
            p(perm[static_cast<std::size_t>(i - start)], i) = rng.chance(1, 2) ? ring.one() : ring.neg(ring.one());
        start = end;
    }
    return Morphism<R>(m, m, std::move(p));
}

/// Random cyclic action: a random automorphism of finite order ≤ 12 found by
/// at most 64 draws from End(M), else a signed permutation of summands.
/// n is the automorphism's order, doubled half the time.
template <class R>
CyclicAction<R> gen_cyclic_action(Rng& rng, const R& ring, const GenConfig& cfg)
{
    auto m = gen_object(rng, ring, cfg);
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto s = gen_morphism(rng, m, m, cfg);
        if (!is_iso(s))
            continue;
        const int k = automorphism_order(s, 12);
        if (k > 0)
            return {m, s, k * static_cast<int>(rng.uniform(1, 2))};
    }
    auto s = gen_signed_permutation(rng, m);
    const int k = automorphism_order(s, 1 << 12);
    return {m, s, k * static_cast<int>(rng.uniform(1, 2))};
}

/// Equivariant short exact sequence: M′ is the submodule generated by the
/// orbits of one or two random elements, M″ the quotient.
template <class R>
EquivariantSES<R> gen_equivariant_ses(Rng& rng, const R& ring, const GenConfig& cfg)
{
    auto act = gen_cyclic_action(rng, ring, cfg);
    const Index seeds = rng.uniform(1, 2);
    auto x = act.M.reduce(random_matrix(rng, ring, act.M.gens(), seeds, cfg.entry_bound));
    Mat<R> gens(act.M.gens(), 0);
    Mat<R> orbit = x;
    for (int i = 0; i < act.n; ++i) {
        gens = hstack(ring, gens, orbit);
        orbit = act.sigma.apply(orbit);
    }
    auto sub = submodule(act.M, gens);
    auto quo = quotient(act.M, gens);
    auto s_sub = factor_through_mono(compose(act.sigma, sub.embed), sub.embed);
    auto s_quo = factor_through_quotient(compose(quo.proj, act.sigma), quo);
    return {{sub.carrier, *s_sub, act.n}, act, {quo.object, s_quo, act.n}, sub.embed, quo.proj};
}

/// Random element of the kernel of an integer/field matrix, as one column.
template <class R>
Mat<R> random_kernel_vector(Rng& rng, const R& ring, const Mat<R>& m, int bound)
{
    Mat<R> k = kernel_basis(ring, m);
    Mat<R> coeff = zeros(ring, k.cols(), 1);
    for (Index i = 0; i < k.cols(); ++i)
        coeff(i, 0) = random_scalar(rng, ring, bound);
    return mul(ring, k, coeff);
}

/// Cyclic sequence of N objects with d^N = 0. The first N−1 maps are drawn
/// freely (each zero with probability 1/4); the closing map X is drawn from
/// the solutions of the congruences "every window of N maps vanishes" and
/// "X is well defined", which are linear in X.
template <class R>
NilpotentSequence<R> gen_nilpotent_sequence(Rng& rng, const R& ring, const GenConfig& cfg, int n)
{
    static const char* names = "ABCDEFGH";
    std::vector<PresentedObject<R>> obj;
    for (int i = 0; i < n; ++i)
        obj.push_back(gen_object(rng, ring, cfg));
    std::vector<Morphism<R>> maps;
    for (int i = 0; i + 1 < n; ++i)
        maps.push_back(rng.chance(1, 4) ? Morphism<R>::zero(obj[static_cast<std::size_t>(i)], obj[static_cast<std::size_t>(i) + 1])
                                        : gen_morphism(rng, obj[static_cast<std::size_t>(i)], obj[static_cast<std::size_t>(i) + 1], cfg));
    const auto& src = obj.back();
    const auto& tgt = obj.front();
    const Index nx = tgt.gens() * src.gens();

    // rows: one block per constraint; columns: vec(X) then one slack block per constraint
    std::vector<Mat<R>> coeff_blocks, slack_blocks;
    auto chain = [&](int from, int to) { // maps[from..to) composed, as a matrix
        Mat<R> m = identity(ring, obj[static_cast<std::size_t>(from)].gens());
        for (int i = from; i < to; ++i)
            m = mul(ring, maps[static_cast<std::size_t>(i)].mat(), m);
        return m;
    };
    for (int s0 = 0; s0 < n; ++s0) {
        // window from node s0 back to node s0: L·X·Rm with Rm = maps[s0..n−1), L = maps[0..s0)
        const auto& node = obj[static_cast<std::size_t>(s0)];
        Mat<R> rm = chain(s0, n - 1);
        Mat<R> l = chain(0, s0);
        coeff_blocks.push_back(kron(ring, Mat<R>(rm.transpose()), l));
        slack_blocks.push_back(kron(ring, identity(ring, node.gens()), node.relations()));
    }
    coeff_blocks.push_back(kron(ring, Mat<R>(src.relations().transpose()), identity(ring, tgt.gens())));
    slack_blocks.push_back(kron(ring, identity(ring, src.torsion_count()), tgt.relations()));

    Index rows = 0, slack_cols = 0;
    for (std::size_t b = 0; b < coeff_blocks.size(); ++b) {
        rows += coeff_blocks[b].rows();
        slack_cols += slack_blocks[b].cols();
    }
    Mat<R> system = zeros(ring, rows, nx + slack_cols);
    Index r = 0, c = nx;
    for (std::size_t b = 0; b < coeff_blocks.size(); ++b) {
        const Index h = coeff_blocks[b].rows();
        if (h > 0) {
            system.block(r, 0, h, nx) = coeff_blocks[b];
            system.block(r, c, h, slack_blocks[b].cols()) = neg(ring, slack_blocks[b]);
        }
        r += h;
        c += slack_blocks[b].cols();
    }
    Mat<R> x = zeros(ring, nx, 1);
    if (nx > 0) {
        Mat<R> sol = random_kernel_vector(rng, ring, system, 2);
        x = sol.topRows(nx);
    }
    maps.emplace_back(src, tgt, unvec<R>(x, tgt.gens(), src.gens()));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i)
        labels.emplace_back(1, names[i]);
    return make_cyclic_nilpotent(n, std::move(labels), std::move(maps));
}

template <class R>
NilpotentSequence<R> gen_cubic_zero(Rng& rng, const R& ring, const GenConfig& cfg)
{
    return gen_nilpotent_sequence(rng, ring, cfg, 3);
}

template <class R>
NilpotentSequence<R> gen_quartic_zero(Rng& rng, const R& ring, const GenConfig& cfg)
{
    return gen_nilpotent_sequence(rng, ring, cfg, 4);
}

/// Breaks nilpotence by adding a random morphism to one map; absent when 64
/// attempts all stay nilpotent. The result bypasses validation on purpose.
template <class R>
std::optional<NilpotentSequence<R>> mutate_nilpotent(Rng& rng, const NilpotentSequence<R>& s, const GenConfig& cfg)
{
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto t = s;
        const std::size_t i = rng.index(t.size());
        auto& m = t.maps[i];
        m = m + gen_morphism(rng, m.source(), m.target(), cfg);
        for (std::size_t p = 0; p < t.size(); ++p)
            if (!t.from(static_cast<long>(p), t.N).is_zero())
                return t;
    }
    return std::nullopt;
}

/// e: C → D random, f = ker(e) ∘ s with s: D ↠ ker e. s is drawn at most 64
/// times; the fallback replaces D by D ⊕ ker e and s by (s, id).
template <class R>
FactoredDifferential<R> gen_factored_differential(Rng& rng, const R& ring, const GenConfig& cfg)
{
    auto c = gen_object(rng, ring, cfg);
    auto d = gen_object(rng, ring, cfg);
    auto e = gen_morphism(rng, c, d, cfg);
    auto k = kernel(e);
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto s = gen_morphism(rng, d, k.carrier, cfg);
        if (is_epi(s))
            return {e, compose(k.embed, s)};
    }
    auto sum = direct_sum(d, k.carrier);
    auto s = compose(gen_morphism(rng, d, k.carrier, cfg), sum.proj1) + sum.proj2;
    return {compose(sum.inj1, e), compose(k.embed, s)};
}

/// Complex of free modules C_0 … C_{len−1} with ranks ≤ max_rank; each
/// differential's columns are random vectors in the kernel of the next one
/// down, so d∘d = 0 by construction.
template <class R>
ChainComplex<R> gen_free_complex(Rng& rng, const R& ring, const GenConfig& cfg, int max_len = 5, int max_rank = 4)
{
    const int len = static_cast<int>(rng.uniform(1, max_len));
    std::vector<PresentedObject<R>> objs;
    for (int i = 0; i < len; ++i)
        objs.push_back(free_object(ring, rng.uniform(0, max_rank)));
    std::vector<Morphism<R>> diffs;
    for (int i = 1; i < len; ++i) {
        const auto& src = objs[static_cast<std::size_t>(i)];
        const auto& tgt = objs[static_cast<std::size_t>(i) - 1];
        Mat<R> m = zeros(ring, tgt.gens(), src.gens());
        if (i == 1) {
            m = random_matrix(rng, ring, tgt.gens(), src.gens(), cfg.entry_bound);
        } else {
            const Mat<R> below = diffs.back().mat();
            for (Index j = 0; j < src.gens(); ++j)
                m.col(j) = random_kernel_vector(rng, ring, below, 2).col(0);
        }
        diffs.emplace_back(src, tgt, reduced(ring, std::move(m)));
    }
    return make_complex(ring, 0, std::move(diffs), std::move(objs));
}

/// Subcomplex generated by random elements (closed under ∂ from the top
/// down) and the quotient complex.
template <class R>
ShortExactComplexes<R> gen_ses_of_complexes(Rng& rng, const R& ring, const GenConfig& cfg)
{
    auto b = gen_free_complex(rng, ring, cfg, 4, 3);
    const int lo = b.lo, hi = b.hi();
    std::vector<Mat<R>> gens(static_cast<std::size_t>(hi - lo + 1));
    Mat<R> pushed;
    for (int n = hi; n >= lo; --n) {
        const auto& obj = b.object(n);
        Mat<R> g = random_matrix(rng, ring, obj.gens(), rng.uniform(0, 2), 2);
        if (n < hi)
            g = hstack(ring, g, pushed);
        gens[static_cast<std::size_t>(n - lo)] = obj.reduce(reduced(ring, std::move(g)));
        pushed = mul(ring, b.diff(n).mat(), gens[static_cast<std::size_t>(n - lo)]);
    }
    std::vector<Subobject<R>> subs;
    std::vector<Quotient<R>> quos;
    for (int n = lo; n <= hi; ++n) {
        subs.push_back(submodule(b.object(n), gens[static_cast<std::size_t>(n - lo)]));
        quos.push_back(quotient(b.object(n), gens[static_cast<std::size_t>(n - lo)]));
    }
    std::vector<PresentedObject<R>> ao, co;
    std::vector<Morphism<R>> ad, cd;
    ChainMap<R> i, p;
    for (int n = lo; n <= hi; ++n) {
        const auto k = static_cast<std::size_t>(n - lo);
        ao.push_back(subs[k].carrier);
        co.push_back(quos[k].object);
        i.comps.push_back(subs[k].embed);
        p.comps.push_back(quos[k].proj);
        if (n > lo) {
            ad.push_back(*factor_through_mono(compose(b.diff(n), subs[k].embed), subs[k - 1].embed));
            cd.push_back(factor_through_quotient(compose(quos[k - 1].proj, b.diff(n)), quos[k]));
        }
    }
    return {make_complex(ring, lo, std::move(ad), std::move(ao)), b, make_complex(ring, lo, std::move(cd), std::move(co)),
            std::move(i), std::move(p)};
}

/// One of: A2, A3, 0 → 1 ← 2, A3 with the middle arrow reversed.
inline Quiver gen_quiver(Rng& rng)
{
    switch (rng.index(4)) {
    case 0:
        return linear_quiver(2);
    case 1:
        return linear_quiver(3);
    case 2:
        return make_quiver(3, {{0, 1}, {2, 1}});
    default:
        return make_quiver(3, {{1, 0}, {1, 2}});
    }
}

inline QuiverRep gen_quiver_rep(Rng& rng, const Quiver& q, const PrimeField& field, int max_dim)
{
    std::vector<Index> dims;
    for (int v = 0; v < q.vertices; ++v)
        dims.push_back(rng.uniform(0, max_dim));
    std::vector<FMat> maps;
    for (const auto& [s, t] : q.arrows)
        maps.push_back(random_matrix(rng, field, dims[static_cast<std::size_t>(t)], dims[static_cast<std::size_t>(s)], 0));
    return make_rep(q, field, std::move(dims), std::move(maps));
}

/// Indecomposable of length ≤ max_len; falls back to a simple after 64 draws.
inline QuiverRep gen_indecomposable(Rng& rng, const Quiver& q, const PrimeField& field, int max_len)
{
    for (int attempt = 0; attempt < 64; ++attempt) {
        auto x = gen_quiver_rep(rng, q, field, 2);
        if (x.length() == 0 || x.length() > max_len)
            continue;
        if (is_indecomposable(x).verdict == Decomposability::Indecomposable)
            return x;
    }
    return simple_rep(q, field, static_cast<int>(rng.index(static_cast<std::size_t>(q.vertices))));
}

/// Random non-isomorphism x → y, nonzero whenever a draw finds one; zero
/// when Hom is zero or every draw is iso or zero.
inline RepMorphism gen_non_iso(Rng& rng, const QuiverRep& x, const QuiverRep& y)
{
    auto basis = hom_basis(x, y);
    for (int attempt = 0; attempt < 16 && !basis.empty(); ++attempt) {
        std::vector<long long> coeffs;
        for (std::size_t i = 0; i < basis.size(); ++i)
            coeffs.push_back(rng.uniform(0, static_cast<std::int64_t>(x.field.p) - 1));
        auto f = hom_combination(x, y, basis, coeffs);
        if (!f.is_zero() && !rep_is_iso(f))
            return f;
    }
    return rep_zero(x, y);
}

/// Dimension vectors in {0, 1} with every possible arrow map 1, kept when
/// indecomposable (connected support). On type A quivers these are all the
/// indecomposables.
inline std::vector<QuiverRep> thin_indecomposables(const Quiver& q, const PrimeField& field)
{
    std::vector<QuiverRep> out;
    for (unsigned mask = 1; mask < (1u << q.vertices); ++mask) {
        std::vector<Index> dims;
        for (int v = 0; v < q.vertices; ++v)
            dims.push_back((mask >> v) & 1u);
        std::vector<FMat> maps;
        for (const auto& [s, t] : q.arrows) {
            FMat m = zeros(field, dims[static_cast<std::size_t>(t)], dims[static_cast<std::size_t>(s)]);
            if (m.size() == 1)
                m(0, 0) = 1;
            maps.push_back(m);
        }
        auto x = make_rep(q, field, std::move(dims), std::move(maps));
        if (is_indecomposable(x).verdict == Decomposability::Indecomposable)
            out.push_back(std::move(x));
    }
    return out;
}

/// Chain of 2^n modules of length ≤ n from a pool of indecomposables; the
/// next module is preferred (7/8) among those receiving a nonzero map.
inline HaradaChain gen_harada_chain(Rng& rng, const Quiver& q, const PrimeField& field, int n)
{
    std::vector<QuiverRep> pool = thin_indecomposables(q, field);
    for (int k = 0; k < 8; ++k)
        pool.push_back(gen_indecomposable(rng, q, field, n));
    std::erase_if(pool, [&](const QuiverRep& x) { return x.length() > n; });
    HaradaChain ch;
    ch.n = n;
    ch.modules.push_back(pool[rng.index(pool.size())]);
    const std::size_t count = (std::size_t{1} << n) - 1;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& cur = ch.modules.back();
        std::vector<std::size_t> receivers;
        for (std::size_t j = 0; j < pool.size(); ++j)
            if (!hom_basis(cur, pool[j]).empty() && !(pool[j] == cur))
                receivers.push_back(j);
        const auto& next = (!receivers.empty() && !rng.chance(1, 8)) ? pool[receivers[rng.index(receivers.size())]]
                                                                     : pool[rng.index(pool.size())];
        ch.maps.push_back(gen_non_iso(rng, cur, next));
        ch.modules.push_back(next);
    }
    return ch;
}

} // namespace kercok
