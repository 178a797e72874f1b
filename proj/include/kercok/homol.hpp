#pragma once

#include "kercok/seqs.hpp"

#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace kercok {

class NilpotenceViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Solution X of A·X ≡ B modulo the columns of rel.
template <class R>
Mat<R> solve_mod(const R& ring, const Mat<R>& a, const Mat<R>& rel, const Mat<R>& b)
{
    auto w = solve(ring, rel.cols() ? hstack(ring, a, rel) : a, b);
    if (!w)
        throw PreconditionFailure("element does not lie in the expected subobject");
    return Mat<R>(w->topRows(a.cols()));
}

/// ker(out) / im(in) for W →in X →out Y with out∘in = 0.
template <class R>
struct Homology {
    Subobject<R> cycles;
    Quotient<R> H;

    const PresentedObject<R>& object() const { return H.object; }
};

template <class R>
Homology<R> homology_of(const Morphism<R>& out, const Morphism<R>& in)
{
    auto cycles = kernel(out);
    auto u = factor_through_mono(in, cycles.embed);
    if (!u)
        throw PreconditionFailure("homology: consecutive maps do not compose to zero");
    auto h = cokernel(*u);
    return {std::move(cycles), std::move(h)};
}

/// Map of homologies induced by t on the ambient objects.
template <class R>
Morphism<R> induced_on_homology(const Morphism<R>& t, const Homology<R>& src, const Homology<R>& dst)
{
    auto u = factor_through_mono(compose(t, src.cycles.embed), dst.cycles.embed);
    if (!u)
        throw IllDefinedMorphism("map does not carry cycles to cycles");
    return factor_through_quotient(compose(dst.H.proj, *u), src.H);
}

/// Bounded chain complex C_lo … C_hi, ∂_n: C_n → C_{n−1}; zero outside.
template <class R>
struct ChainComplex {
    R ring;
    int lo = 0;
    std::vector<PresentedObject<R>> objects;  ///< objects[k] = C_{lo+k}
    std::vector<Morphism<R>> diffs;           ///< diffs[k] = ∂_{lo+k+1}

    int hi() const { return lo + static_cast<int>(objects.size()) - 1; }
    bool in_range(int n) const { return n >= lo && n <= hi(); }

    PresentedObject<R> object(int n) const
    {
        return in_range(n) ? objects[static_cast<std::size_t>(n - lo)] : zero_object(ring);
    }

    Morphism<R> diff(int n) const
    {
        if (in_range(n) && in_range(n - 1))
            return diffs[static_cast<std::size_t>(n - lo - 1)];
        return Morphism<R>::zero(object(n), object(n - 1));
    }
};

template <class R>
ChainComplex<R> make_complex(const R& ring, int lo, std::vector<Morphism<R>> diffs, std::vector<PresentedObject<R>> objects)
{
    if (objects.empty())
        throw std::invalid_argument("chain complex needs at least one object");
    if (diffs.size() + 1 != objects.size())
        throw std::invalid_argument("chain complex needs one differential between each pair of objects");
    for (std::size_t k = 0; k < diffs.size(); ++k)
        if (!(diffs[k].source() == objects[k + 1]) || !(diffs[k].target() == objects[k]))
            throw CompositionMismatch("differential " + std::to_string(lo + static_cast<int>(k) + 1) +
                                      " has the wrong endpoints");
    ChainComplex<R> c{ring, lo, std::move(objects), std::move(diffs)};
    for (int n = c.lo + 2; n <= c.hi(); ++n)
        if (!compose(c.diff(n - 1), c.diff(n)).is_zero())
            throw PreconditionFailure("d∘d is not zero at degree " + std::to_string(n));
    return c;
}

template <class R>
Homology<R> homology_data(const ChainComplex<R>& k, int n)
{
    return homology_of(k.diff(n), k.diff(n + 1));
}

template <class R>
PresentedObject<R> homology(const ChainComplex<R>& k, int n)
{
    return homology_data(k, n).object();
}

/// Sequence of maps in which every N consecutive maps compose to zero.
/// Bounded sequences are padded with N zero objects and closed into a cycle,
/// which leaves every window and every homology at the original nodes
/// unchanged.
template <class R>
struct NilpotentSequence {
    int N = 3;
    std::vector<std::string> labels;
    std::vector<Morphism<R>> maps; ///< maps[i]: node i → node i+1 (mod size)

    std::size_t size() const { return maps.size(); }
    std::size_t wrap(long i) const
    {
        const long m = static_cast<long>(size());
        return static_cast<std::size_t>(((i % m) + m) % m);
    }
    const PresentedObject<R>& node(long i) const { return maps[wrap(i)].source(); }
    const std::string& label(long i) const { return labels[wrap(i)]; }

    /// d^k leaving node p.
    Morphism<R> from(long p, int k) const
    {
        auto out = Morphism<R>::identity(node(p));
        for (int s = 0; s < k; ++s)
            out = compose(maps[wrap(p + s)], out);
        return out;
    }
    /// d^k arriving at node p.
    Morphism<R> into(long p, int k) const { return from(p - k, k); }
};

template <class R>
void check_nilpotent(const NilpotentSequence<R>& s)
{
    for (std::size_t p = 0; p < s.size(); ++p)
        if (!s.from(static_cast<long>(p), s.N).is_zero()) {
            std::string window;
            for (int k = 0; k <= s.N; ++k)
                window += (k ? " -> " : "") + s.label(static_cast<long>(p) + k);
            throw NilpotenceViolation("d^" + std::to_string(s.N) + " is not zero on " + window);
        }
}

template <class R>
NilpotentSequence<R> make_cyclic_nilpotent(int n, std::vector<std::string> labels, std::vector<Morphism<R>> maps)
{
    if (maps.empty() || labels.size() != maps.size())
        throw std::invalid_argument("cyclic sequence needs one label per map");
    for (std::size_t i = 0; i < maps.size(); ++i)
        if (!(maps[i].target() == maps[(i + 1) % maps.size()].source()))
            throw CompositionMismatch("maps " + std::to_string(i) + " and " +
                                      std::to_string((i + 1) % maps.size()) + " are not composable");
    NilpotentSequence<R> s{n, std::move(labels), std::move(maps)};
    check_nilpotent(s);
    return s;
}

/// labels.size() == maps.size() + 1.
template <class R>
NilpotentSequence<R> make_bounded_nilpotent(int n, std::vector<std::string> labels, std::vector<Morphism<R>> maps)
{
    if (maps.empty() || labels.size() != maps.size() + 1)
        throw std::invalid_argument("bounded sequence needs one more label than maps");
    const auto& ring = maps.front().ring();
    auto zero = zero_object(ring);
    maps.push_back(zero_out_of(maps.back().target()));
    for (int k = 1; k < n; ++k) {
        maps.push_back(Morphism<R>::identity(zero));
        labels.push_back("0");
    }
    maps.push_back(zero_into(maps.front().source()));
    labels.push_back("0");
    return make_cyclic_nilpotent(n, std::move(labels), std::move(maps));
}

/// Pair homology H_(j) at node p: ker d^j / im d^(N−j). With Y the node j
/// steps after X this is the homology at X of … → Y → X → Y → ….
template <class R>
struct PairHomology {
    long pos;
    int j;
    std::string name; ///< "H^X_Y"
    Homology<R> data;
};

template <class R>
PairHomology<R> pair_homology(const NilpotentSequence<R>& s, long p, int j)
{
    auto out = s.from(p, j);
    auto in = s.into(p, s.N - j);
    if (!compose(out, in).is_zero())
        throw NilpotenceViolation("pair complex at " + s.label(p) + " does not square to zero");
    return {static_cast<long>(s.wrap(p)), j, "H^" + s.label(p) + "_" + s.label(p + j), homology_of(out, in)};
}

/// Periodic exact sequences of pair homologies sharing nodes.
///
/// Each strand follows the six-step pattern (i = inclusion-induced,
/// d^k = induced by k consecutive maps):
///   H_(1)(p) →i H_(2)(p) →d H_(1)(p+1) →i^(N−2) H_(N−1)(p+1)
///            →d H_(N−2)(p+2) →i H_(N−1)(p+2) →d^(N−2) H_(1)(p+N)
/// and runs until it closes up. For N = 3 this is the hexagon.
template <class R>
struct PeriodicBraid {
    std::map<std::pair<long, int>, PairHomology<R>> nodes;
    std::vector<ExactSequence<R>> strands;
    std::vector<std::vector<std::pair<long, int>>> strand_keys;
    std::vector<Check> commuting;

    bool ok() const
    {
        for (const auto& s : strands)
            if (!s.exact())
                return false;
        return all_ok(commuting);
    }
};

namespace detail {

struct BraidEdge {
    std::pair<long, int> from, to;
    int advance; ///< number of sequence maps the edge is induced by
};

} // namespace detail

template <class R>
PeriodicBraid<R> nilpotent_braid(const NilpotentSequence<R>& s)
{
    check_nilpotent(s);
    const int N = s.N;
    if (N < 3)
        throw std::invalid_argument("nilpotence order must be at least 3");
    PeriodicBraid<R> br;
    auto node = [&](long p, int j) -> const PairHomology<R>& {
        std::pair<long, int> key{static_cast<long>(s.wrap(p)), j};
        auto it = br.nodes.find(key);
        if (it == br.nodes.end())
            it = br.nodes.emplace(key, pair_homology(s, p, j)).first;
        return it->second;
    };
    // (subscript, position offset, advance of the outgoing edge, is inclusion)
    const std::vector<std::tuple<int, int, int, bool>> pattern = {
        {1, 0, 0, true}, {2, 0, 1, false}, {1, 1, 0, true}, {N - 1, 1, 1, false}, {N - 2, 2, 0, true}, {N - 1, 2, N - 2, false}};
    auto subscript_after = [&](std::size_t phase) { return std::get<0>(pattern[(phase + 1) % 6]); };

    std::set<std::tuple<long, int, int, int>> visited; // (pos, subscript, next subscript, advance)
    std::vector<detail::BraidEdge> edges;
    const long m = static_cast<long>(s.size());
    for (long start = 0; start < m; ++start) {
        auto key0 = std::make_tuple(start, 1, subscript_after(0), 0);
        if (visited.count(key0))
            continue;
        std::vector<std::string> labels;
        std::vector<Morphism<R>> maps;
        std::vector<std::pair<long, int>> keys;
        long base = start;
        std::size_t phase = 0;
        do {
            const auto [j, off, adv, incl] = pattern[phase];
            const long p = base + off;
            const int j_next = subscript_after(phase);
            visited.insert({static_cast<long>(s.wrap(p)), j, j_next, incl ? 0 : adv});
            const auto& here = node(p, j);
            const long p_next = p + (incl ? 0 : adv);
            const auto& there = node(p_next, j_next);
            Morphism<R> t = incl ? Morphism<R>::identity(s.node(p)) : s.from(p, adv);
            maps.push_back(induced_on_homology(t, here.data, there.data));
            labels.push_back(here.name);
            keys.push_back({here.pos, here.j});
            edges.push_back({{here.pos, here.j}, {there.pos, there.j}, incl ? 0 : adv});
            if (++phase == 6) {
                phase = 0;
                base += N;
            }
        } while (!(phase == 0 && s.wrap(base) == s.wrap(start)));
        br.strands.push_back(make_sequence<R>(std::move(labels), std::move(maps), true));
        br.strand_keys.push_back(std::move(keys));
    }

    // Every composite of two strand maps equals the map induced directly by
    // the corresponding composite of sequence maps; this covers every square
    // where strands cross.
    std::set<std::tuple<long, int, long, int, long, int>> seen;
    for (const auto& e1 : edges)
        for (const auto& e2 : edges) {
            if (e1.to != e2.from)
                continue;
            if (!seen.insert({e1.from.first, e1.from.second, e1.to.first, e1.to.second, e2.to.first, e2.to.second}).second)
                continue;
            const auto& a = br.nodes.at(e1.from);
            const auto& b = br.nodes.at(e1.to);
            const auto& c = br.nodes.at(e2.to);
            auto t1 = e1.advance ? s.from(a.pos, e1.advance) : Morphism<R>::identity(s.node(a.pos));
            auto t2 = e2.advance ? s.from(b.pos, e2.advance) : Morphism<R>::identity(s.node(b.pos));
            auto path = compose(induced_on_homology(t2, b.data, c.data), induced_on_homology(t1, a.data, b.data));
            const int total = e1.advance + e2.advance;
            auto direct = induced_on_homology(
                total ? s.from(a.pos, total) : Morphism<R>::identity(s.node(a.pos)), a.data, c.data);
            br.commuting.push_back({a.name + " -> " + b.name + " -> " + c.name, path == direct, ""});
        }
    return br;
}

template <class R>
PeriodicBraid<R> cubic_zero_hexagon(const NilpotentSequence<R>& s)
{
    if (s.N != 3)
        throw std::invalid_argument("cubic_zero_hexagon needs a sequence with d^3 = 0");
    return nilpotent_braid(s);
}

template <class R>
PeriodicBraid<R> quartic_zero_braid(const NilpotentSequence<R>& s)
{
    if (s.N != 4)
        throw std::invalid_argument("quartic_zero_braid needs a sequence with d^4 = 0");
    return nilpotent_braid(s);
}

/// C →e D →f C with im f = ker e; d = f∘e squares to zero.
template <class R>
struct FactoredDifferential {
    Morphism<R> e, f;
};

/// Both three-periodic sequences
///   H(C) → ker f → cok e → H(C)     and     H(C) → cok f → ker e → H(C).
template <class R>
struct QuadraticReport {
    Homology<R> H;
    Subobject<R> ker_f, ker_e;
    Quotient<R> cok_f, cok_e;
    ExactSequence<R> first, second;

    bool ok() const { return first.exact() && second.exact(); }
};

template <class R>
QuadraticReport<R> quadratic_zero_sequences(const FactoredDifferential<R>& fd)
{
    const auto& e = fd.e;
    const auto& f = fd.f;
    if (!(e.target() == f.source()) || !(f.target() == e.source()))
        throw CompositionMismatch("factored differential: e and f do not form C -> D -> C");
    auto v = is_exact_at(f, e);
    if (!v.exact)
        throw PreconditionFailure("factored differential: im f != ker e");
    auto d = compose(f, e);
    auto H = homology_of(d, d);
    auto kf = kernel(f), ke = kernel(e);
    auto qf = cokernel(f), qe = cokernel(e);

    // H → ker f, [x] ↦ e x
    auto to_kf = factor_through_quotient(*factor_through_mono(compose(e, H.cycles.embed), kf.embed), H.H);
    auto kf_to_qe = compose(qe.proj, kf.embed);
    // cok e → H, [y] ↦ [f y]
    auto qe_to_h = factor_through_quotient(compose(H.H.proj, *factor_through_mono(f, H.cycles.embed)), qe);
    auto first = make_sequence<R>({"H(C)", "ker f", "cok e"}, {to_kf, kf_to_qe, qe_to_h}, true);

    auto h_to_qf = factor_through_quotient(compose(qf.proj, H.cycles.embed), H.H);
    // cok f → ker e, [x] ↦ d x
    auto qf_to_ke = factor_through_quotient(*factor_through_mono(d, ke.embed), qf);
    auto ke_to_h = compose(H.H.proj, *factor_through_mono(ke.embed, H.cycles.embed));
    auto second = make_sequence<R>({"H(C)", "cok f", "ker e"}, {h_to_qf, qf_to_ke, ke_to_h}, true);
    return {std::move(H), std::move(kf), std::move(ke), std::move(qf), std::move(qe), std::move(first), std::move(second)};
}

/// Chain map given degreewise; components outside the common range are zero.
template <class R>
struct ChainMap {
    std::vector<Morphism<R>> comps; ///< comps[k] at degree lo + k
};

template <class R>
struct ShortExactComplexes {
    ChainComplex<R> A, B, C;
    ChainMap<R> i, p;
};

/// 0 → H_hi(A) → H_hi(B) → H_hi(C) →∂ H_{hi−1}(A) → … → H_lo(C) → 0.
template <class R>
struct LongExactSequence {
    int lo = 0, hi = 0;
    std::vector<Homology<R>> HA, HB, HC;           ///< index n − lo
    std::vector<Morphism<R>> i_star, p_star, conn;  ///< conn[n − lo]: H_n(C) → H_{n−1}(A)
    ExactSequence<R> seq;
};

template <class R>
void check_short_exact_complexes(const ShortExactComplexes<R>& s)
{
    auto fail = [](const std::string& what) { throw PreconditionFailure("short exact sequence of complexes: " + what); };
    const int lo = s.B.lo, hi = s.B.hi();
    if (s.A.lo != lo || s.C.lo != lo || s.A.hi() != hi || s.C.hi() != hi)
        fail("complexes have different degree ranges");
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    if (s.i.comps.size() != len || s.p.comps.size() != len)
        fail("chain maps do not cover every degree");
    for (int n = lo; n <= hi; ++n) {
        const auto& in = s.i.comps[static_cast<std::size_t>(n - lo)];
        const auto& pn = s.p.comps[static_cast<std::size_t>(n - lo)];
        if (!(in.source() == s.A.object(n)) || !(in.target() == s.B.object(n)) || !(pn.source() == s.B.object(n)) ||
            !(pn.target() == s.C.object(n)))
            fail("chain map component at degree " + std::to_string(n) + " has the wrong endpoints");
        if (!is_mono(in) || !is_epi(pn) || !is_exact_at(in, pn).exact)
            fail("not exact at degree " + std::to_string(n));
        if (n > lo) {
            const auto& in1 = s.i.comps[static_cast<std::size_t>(n - lo - 1)];
            const auto& pn1 = s.p.comps[static_cast<std::size_t>(n - lo - 1)];
            if (!(compose(s.B.diff(n), in) == compose(in1, s.A.diff(n))) ||
                !(compose(s.C.diff(n), pn) == compose(pn1, s.B.diff(n))))
                fail("maps do not commute with the differentials at degree " + std::to_string(n));
        }
    }
}

template <class R>
LongExactSequence<R> les_of_ses(const ShortExactComplexes<R>& s)
{
    check_short_exact_complexes(s);
    const int lo = s.B.lo, hi = s.B.hi();
    LongExactSequence<R> les;
    les.lo = lo;
    les.hi = hi;
    for (int n = lo; n <= hi; ++n) {
        les.HA.push_back(homology_data(s.A, n));
        les.HB.push_back(homology_data(s.B, n));
        les.HC.push_back(homology_data(s.C, n));
    }
    auto at = [&](const auto& v, int n) -> const auto& { return v[static_cast<std::size_t>(n - lo)]; };
    for (int n = lo; n <= hi; ++n) {
        les.i_star.push_back(induced_on_homology(at(s.i.comps, n), at(les.HA, n), at(les.HB, n)));
        les.p_star.push_back(induced_on_homology(at(s.p.comps, n), at(les.HB, n), at(les.HC, n)));
    }
    // Snake of  A_n/B_n → B_n/B_n → C_n/B_n → 0  over  0 → Z_{n−1}A → Z_{n−1}B → Z_{n−1}C.
    for (int n = lo; n <= hi; ++n) {
        if (n == lo) {
            les.conn.push_back(Morphism<R>::zero(at(les.HC, n).object(), zero_object(s.B.ring)));
            continue;
        }
        auto top = [&](const ChainComplex<R>& k) { return cokernel(k.diff(n + 1)); };
        auto bottom = [&](const ChainComplex<R>& k) { return kernel(k.diff(n - 1)); };
        auto qa = top(s.A), qb = top(s.B), qc = top(s.C);
        auto za = bottom(s.A), zb = bottom(s.B), zc = bottom(s.C);
        auto vertical = [&](const ChainComplex<R>& k, const Quotient<R>& q, const Subobject<R>& z) {
            return factor_through_quotient(*factor_through_mono(k.diff(n), z.embed), q);
        };
        SnakeDiagram<R> d{induced_on_cokernels(at(s.i.comps, n), qa, qb),
                          induced_on_cokernels(at(s.p.comps, n), qb, qc),
                          induced_on_kernels(at(s.i.comps, n - 1), za, zb),
                          induced_on_kernels(at(s.p.comps, n - 1), zb, zc),
                          vertical(s.A, qa, za),
                          vertical(s.B, qb, zb),
                          vertical(s.C, qc, zc)};
        auto sn = snake_sequence(d);
        const auto& hc = at(les.HC, n);
        const auto& ha = at(les.HA, n - 1);
        // H_n(C) → ker c: cycles of C_n pushed into C_n / boundaries
        auto phi = factor_through_quotient(*factor_through_mono(compose(qc.proj, hc.cycles.embed), sn.ker_c.embed), hc.H);
        auto psi = factor_through_quotient(ha.H.proj, sn.cok_a);
        les.conn.push_back(compose(psi, compose(sn.connecting, phi)));
    }
    std::vector<std::string> labels{"0"};
    std::vector<Morphism<R>> maps{zero_into(at(les.HA, hi).object())};
    for (int n = hi; n >= lo; --n) {
        const std::string deg = std::to_string(n);
        labels.insert(labels.end(), {"H" + deg + "(A)", "H" + deg + "(B)", "H" + deg + "(C)"});
        maps.push_back(at(les.i_star, n));
        maps.push_back(at(les.p_star, n));
        maps.push_back(n > lo ? at(les.conn, n) : zero_out_of(at(les.HC, n).object()));
    }
    labels.push_back("0");
    les.seq = make_sequence<R>(std::move(labels), std::move(maps));
    return les;
}

/// Graded exact couple on degrees lo..hi (zero elsewhere):
///   alpha: D_p → D_{p+da},  beta: D_p → E_{p+db},  gamma: E_p → D_{p+dc}.
template <class R>
struct ExactCouple {
    R ring;
    int lo = 0, hi = -1;
    int da = 0, db = 0, dc = -1;
    std::vector<PresentedObject<R>> D, E;
    std::vector<Morphism<R>> alpha, beta, gamma; ///< indexed by source degree − lo

    bool in_range(int p) const { return p >= lo && p <= hi; }
    PresentedObject<R> Dp(int p) const { return in_range(p) ? D[static_cast<std::size_t>(p - lo)] : zero_object(ring); }
    PresentedObject<R> Ep(int p) const { return in_range(p) ? E[static_cast<std::size_t>(p - lo)] : zero_object(ring); }
    Morphism<R> alpha_at(int p) const { return pick(alpha, p, Dp(p), Dp(p + da)); }
    Morphism<R> beta_at(int p) const { return pick(beta, p, Dp(p), Ep(p + db)); }
    Morphism<R> gamma_at(int p) const { return pick(gamma, p, Ep(p), Dp(p + dc)); }
    /// d = beta∘gamma: E_p → E_{p+dc+db}
    Morphism<R> d_at(int p) const { return compose(beta_at(p + dc), gamma_at(p)); }

private:
    Morphism<R> pick(const std::vector<Morphism<R>>& v, int p, const PresentedObject<R>& s,
                     const PresentedObject<R>& t) const
    {
        if (in_range(p)) {
            const auto& m = v[static_cast<std::size_t>(p - lo)];
            if (m.target() == t)
                return m;
        }
        return Morphism<R>::zero(s, t);
    }
};

template <class R>
struct CoupleEntry {
    std::string where; ///< "D" (im alpha = ker beta), "E" (im beta = ker gamma), "D'" (im gamma = ker alpha)
    int degree;
    ExactnessVerdict<R> verdict;
};

template <class R>
struct CoupleVerdict {
    std::vector<CoupleEntry<R>> entries;
    bool d_squared_zero = true;

    bool exact() const
    {
        for (const auto& e : entries)
            if (!e.verdict.exact)
                return false;
        return d_squared_zero;
    }
};

template <class R>
ExactCouple<R> make_couple(const R& ring, int lo, int da, int db, int dc, std::vector<PresentedObject<R>> D,
                           std::vector<PresentedObject<R>> E, std::vector<Morphism<R>> alpha,
                           std::vector<Morphism<R>> beta, std::vector<Morphism<R>> gamma)
{
    const std::size_t n = D.size();
    if (E.size() != n || alpha.size() != n || beta.size() != n || gamma.size() != n)
        throw std::invalid_argument("exact couple: one object and one map of each kind per degree");
    ExactCouple<R> c{ring, lo, lo + static_cast<int>(n) - 1, da, db, dc, std::move(D), std::move(E),
                     std::move(alpha), std::move(beta), std::move(gamma)};
    for (int p = c.lo; p <= c.hi; ++p) {
        const auto k = static_cast<std::size_t>(p - lo);
        auto bad = [&](const char* name) {
            throw CompositionMismatch(std::string("exact couple: ") + name + " at degree " + std::to_string(p) +
                                      " has the wrong endpoints");
        };
        if (!(c.alpha[k].source() == c.Dp(p)) || !(c.alpha[k].target() == c.Dp(p + da)))
            bad("alpha");
        if (!(c.beta[k].source() == c.Dp(p)) || !(c.beta[k].target() == c.Ep(p + db)))
            bad("beta");
        if (!(c.gamma[k].source() == c.Ep(p)) || !(c.gamma[k].target() == c.Dp(p + dc)))
            bad("gamma");
    }
    return c;
}

template <class R>
CoupleVerdict<R> check_exact_couple(const ExactCouple<R>& c)
{
    CoupleVerdict<R> v;
    for (int p = c.lo; p <= c.hi; ++p) {
        v.entries.push_back({"D", p, is_exact_at(c.alpha_at(p - c.da), c.beta_at(p))});
        v.entries.push_back({"E", p, is_exact_at(c.beta_at(p - c.db), c.gamma_at(p))});
        v.entries.push_back({"D'", p, is_exact_at(c.gamma_at(p - c.dc), c.alpha_at(p))});
        if (!compose(c.d_at(p + c.dc + c.db), c.d_at(p)).is_zero())
            v.d_squared_zero = false;
    }
    return v;
}

/// D' = im alpha, E' = H(E, beta∘gamma); alpha' restricts alpha, beta'
/// sends alpha(x) to [beta(x)], gamma' sends [e] to gamma(e).
template <class R>
ExactCouple<R> derived_couple(const ExactCouple<R>& c)
{
    if (!check_exact_couple(c).exact())
        throw PreconditionFailure("derived_couple: input couple is not exact");
    const R& ring = c.ring;
    std::map<int, Subobject<R>> dsub;
    std::map<int, Homology<R>> ehom;
    auto Dsub = [&](int p) -> const Subobject<R>& {
        auto it = dsub.find(p);
        if (it == dsub.end())
            it = dsub.emplace(p, image(c.alpha_at(p - c.da))).first;
        return it->second;
    };
    auto Ehom = [&](int p) -> const Homology<R>& {
        auto it = ehom.find(p);
        if (it == ehom.end())
            it = ehom.emplace(p, homology_of(c.d_at(p), c.d_at(p - c.dc - c.db))).first;
        return it->second;
    };
    const int db2 = c.db - c.da;
    std::vector<PresentedObject<R>> D2, E2;
    std::vector<Morphism<R>> a2, b2, g2;
    for (int p = c.lo; p <= c.hi; ++p) {
        D2.push_back(Dsub(p).carrier);
        E2.push_back(Ehom(p).object());
    }
    auto D2p = [&](int p) { return c.in_range(p) ? Dsub(p).carrier : zero_object(ring); };
    auto E2p = [&](int p) { return c.in_range(p) ? Ehom(p).object() : zero_object(ring); };
    for (int p = c.lo; p <= c.hi; ++p) {
        const auto& sub = Dsub(p);
        // alpha'
        if (c.in_range(p + c.da)) {
            a2.push_back(*factor_through_mono(compose(c.alpha_at(p), sub.embed), Dsub(p + c.da).embed));
        } else {
            a2.push_back(Morphism<R>::zero(sub.carrier, D2p(p + c.da)));
        }
        // beta': lift along alpha, apply beta, read off the class
        if (c.in_range(p + db2) && !sub.carrier.is_zero()) {
            const auto& alpha_in = c.alpha_at(p - c.da);
            Mat<R> x = solve_mod(ring, alpha_in.mat(), c.Dp(p).relations(), sub.embed.mat());
            const auto& target = Ehom(p + db2);
            Mat<R> y = mul(ring, c.beta_at(p - c.da).mat(), x);
            Mat<R> z = solve_mod(ring, target.cycles.embed.mat(), c.Ep(p + db2).relations(), y);
            b2.push_back(Morphism<R>(sub.carrier, target.object(), mul(ring, target.H.proj.mat(), z)));
        } else {
            b2.push_back(Morphism<R>::zero(sub.carrier, E2p(p + db2)));
        }
        // gamma'
        const auto& eh = Ehom(p);
        if (c.in_range(p + c.dc)) {
            auto into = factor_through_mono(compose(c.gamma_at(p), eh.cycles.embed), Dsub(p + c.dc).embed);
            if (!into)
                throw PreconditionFailure("derived_couple: gamma of a d-cycle is not in the image of alpha");
            g2.push_back(factor_through_quotient(*into, eh.H));
        } else {
            g2.push_back(Morphism<R>::zero(eh.object(), D2p(p + c.dc)));
        }
    }
    return make_couple(ring, c.lo, c.da, db2, c.dc, std::move(D2), std::move(E2), std::move(a2), std::move(b2),
                       std::move(g2));
}

/// Couple of the coefficient sequence 0 → K →p K → K/p → 0 for a complex
/// of free INT modules: D = H(K), E = H(K/p), alpha = ·p, beta = reduction,
/// gamma = connecting map (degree −1).
inline ExactCouple<IntegerRing> bockstein_couple(const ChainComplex<IntegerRing>& k, long long p)
{
    const IntegerRing Z;
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("bockstein_couple: p must be prime");
    for (const auto& o : k.objects)
        if (o.torsion_count() != 0)
            throw PreconditionFailure("bockstein_couple: complex has a non-free term");
    std::vector<PresentedObject<IntegerRing>> mod_objects;
    for (const auto& o : k.objects)
        mod_objects.push_back(presented(Z, std::vector<BigInt>(static_cast<std::size_t>(o.gens()), BigInt(p)), 0).object);
    std::vector<Morphism<IntegerRing>> mod_diffs;
    for (std::size_t i = 0; i < k.diffs.size(); ++i)
        mod_diffs.emplace_back(mod_objects[i + 1], mod_objects[i], k.diffs[i].mat());
    auto kp = make_complex(Z, k.lo, std::move(mod_diffs), mod_objects);
    ChainMap<IntegerRing> times_p, reduce;
    for (std::size_t i = 0; i < k.objects.size(); ++i) {
        const auto& o = k.objects[i];
        times_p.comps.emplace_back(o, o, scaled(Z, BigInt(p), identity(Z, o.gens())));
        reduce.comps.emplace_back(o, mod_objects[i], identity(Z, o.gens()));
    }
    auto les = les_of_ses(ShortExactComplexes<IntegerRing>{k, k, kp, times_p, reduce});
    std::vector<PresentedObject<IntegerRing>> D, E;
    for (int n = les.lo; n <= les.hi; ++n) {
        D.push_back(les.HB[static_cast<std::size_t>(n - les.lo)].object());
        E.push_back(les.HC[static_cast<std::size_t>(n - les.lo)].object());
    }
    return make_couple(Z, les.lo, 0, 0, -1, std::move(D), std::move(E), les.i_star, les.p_star, les.conn);
}

} // namespace kercok
