#pragma once

#include "kercok/seqs.hpp"

#include <optional>
#include <string>

namespace kercok {

class NotFredholm : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class InvalidAction : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

template <class R>
bool is_fredholm(const Morphism<R>& f)
{
    return !length(kernel(f).carrier).infinite && !length(cokernel(f).object).infinite;
}

/// ind = len_cok − len_ker.
struct IndexReport {
    BigInt ind;
    BigInt len_ker;
    BigInt len_cok;
};

template <class R>
IndexReport fredholm_index(const Morphism<R>& f)
{
    auto lk = length(kernel(f).carrier);
    auto lc = length(cokernel(f).object);
    if (lk.infinite || lc.infinite)
        throw NotFredholm(std::string("morphism is not Fredholm: ") + (lk.infinite ? "kernel" : "cokernel") +
                          " has infinite length");
    return {lc.value - lk.value, lk.value, lc.value};
}

template <class R>
struct AdditivityReport {
    IndexReport f, g, gf;
    SixTermSequence<R> seq;
    BigInt euler; ///< alternating length sum over the six interior nodes

    bool additive() const { return gf.ind == f.ind + g.ind; }
    bool ok() const { return additive() && euler.is_zero() && seq.exact(); }
};

template <class R>
AdditivityReport<R> index_additivity_check(const Morphism<R>& f, const Morphism<R>& g)
{
    auto gf = compose(g, f);
    auto index_of = [](const Morphism<R>& m, const char* name) {
        try {
            return fredholm_index(m);
        } catch (const NotFredholm& e) {
            throw NotFredholm(std::string(name) + ": " + e.what());
        }
    };
    auto rf = index_of(f, "f");
    auto rg = index_of(g, "g");
    auto rgf = index_of(gf, "gf");
    auto seq = kernel_cokernel_sequence(f, g);
    BigInt euler = 0;
    for (std::size_t i = 1; i + 1 < seq.seq.nodes.size(); ++i) {
        BigInt l = length(seq.seq.nodes[i]).value;
        euler = (i % 2 == 1) ? euler + l : euler - l;
    }
    return {rf, rg, rgf, std::move(seq), euler};
}

/// Finite cyclic group of order n acting on M through sigma.
template <class R>
struct CyclicAction {
    PresentedObject<R> M;
    Morphism<R> sigma;
    int n = 1;
};

template <class R>
Morphism<R> power(const Morphism<R>& s, int k)
{
    auto out = Morphism<R>::identity(s.source());
    for (int i = 0; i < k; ++i)
        out = compose(s, out);
    return out;
}

/// Smallest k in [1, cap] with s^k = id, or 0 when there is none.
template <class R>
int automorphism_order(const Morphism<R>& s, int cap)
{
    auto id = Morphism<R>::identity(s.source());
    auto p = s;
    for (int k = 1; k <= cap; ++k) {
        if (p == id)
            return k;
        p = compose(s, p);
    }
    return 0;
}

template <class R>
void validate_action(const CyclicAction<R>& act)
{
    if (act.n < 1)
        throw InvalidAction("group order must be positive");
    if (!(act.sigma.source() == act.M) || !(act.sigma.target() == act.M))
        throw InvalidAction("sigma is not an endomorphism of M");
    if (!is_iso(act.sigma))
        throw InvalidAction("sigma is not an automorphism");
    if (!(power(act.sigma, act.n) == Morphism<R>::identity(act.M)))
        throw InvalidAction("sigma^n is not the identity");
}

template <class R>
Morphism<R> norm_map(const CyclicAction<R>& act)
{
    auto out = Morphism<R>::zero(act.M, act.M);
    auto p = Morphism<R>::identity(act.M);
    for (int i = 0; i < act.n; ++i) {
        out = out + p;
        p = compose(act.sigma, p);
    }
    return out;
}

/// Tate groups of a cyclic action:
///   H0  = M^G / N M,   Hm1 = ker N / (sigma − 1) M,   h = #H0 / #Hm1.
template <class R>
struct TateReport {
    Morphism<R> norm;
    Subobject<R> fixed;   ///< M^G = ker(sigma − 1)
    Quotient<R> coinv;    ///< M_G = cok(sigma − 1)
    Quotient<R> H0;
    Quotient<R> Hm1;
    std::optional<Rational> h; ///< absent when either group is infinite
};

template <class R>
TateReport<R> tate_cyclic(const CyclicAction<R>& act)
{
    validate_action(act);
    auto id = Morphism<R>::identity(act.M);
    auto t = act.sigma - id;
    auto N = norm_map(act);
    auto fixed = kernel(t);
    auto coinv = cokernel(t);
    auto n_into_fixed = factor_through_mono(N, fixed.embed);
    auto ker_n = kernel(N);
    auto t_into_ker = factor_through_mono(t, ker_n.embed);
    if (!n_into_fixed || !t_into_ker)
        throw InvalidAction("norm map does not land in the invariants");
    auto h0 = cokernel(*n_into_fixed);
    auto hm1 = cokernel(*t_into_ker);
    std::optional<Rational> h;
    auto o0 = order(h0.object), o1 = order(hm1.object);
    if (!o0.infinite && !o1.infinite)
        h = Rational(o0.value, o1.value);
    return {N, fixed, coinv, h0, hm1, h};
}

/// True when n · id is zero on A.
template <class R>
bool annihilated_by(const PresentedObject<R>& a, int n)
{
    auto id = Morphism<R>::identity(a);
    return Morphism<R>(a, a, scaled(a.ring, a.ring.from_int(n), id.mat())).is_zero();
}

/// 0 → M′ →i M →p M″ → 0 with i and p commuting with the actions.
template <class R>
struct EquivariantSES {
    CyclicAction<R> sub, mid, quo;
    Morphism<R> i, p;
};

template <class R>
struct HerbrandReport {
    TateReport<R> sub, mid, quo;
    bool applicable = false; ///< all three quotients defined
    bool holds = false;      ///< h(M) = h(M′)·h(M″); true when not applicable
};

template <class R>
HerbrandReport<R> herbrand_multiplicativity_check(const EquivariantSES<R>& s)
{
    auto fail = [](const std::string& what) { throw PreconditionFailure("equivariant sequence: " + what); };
    if (s.sub.n != s.mid.n || s.mid.n != s.quo.n)
        fail("actions have different group orders");
    if (!is_mono(s.i) || !is_epi(s.p) || !is_exact_at(s.i, s.p).exact)
        fail("sequence is not short exact");
    if (!(compose(s.mid.sigma, s.i) == compose(s.i, s.sub.sigma)))
        fail("i does not commute with the actions");
    if (!(compose(s.quo.sigma, s.p) == compose(s.p, s.mid.sigma)))
        fail("p does not commute with the actions");
    HerbrandReport<R> rep{tate_cyclic(s.sub), tate_cyclic(s.mid), tate_cyclic(s.quo), false, true};
    if (rep.sub.h && rep.mid.h && rep.quo.h) {
        rep.applicable = true;
        rep.holds = *rep.mid.h == *rep.sub.h * *rep.quo.h;
    }
    return rep;
}

} // namespace kercok
