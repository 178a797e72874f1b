#pragma once

#include "kercok/abcat.hpp"
#include "kercok/seqs.hpp"

#include <map>

#include <set>
#include <vector>

namespace kercok {

/// Element-enumeration counterparts of the lattice computations. Only for
/// finite objects within the enumeration bound.
template <class R>
std::set<long long> image_codes(const Morphism<R>& f, long long bound = default_enumeration_bound)
{
    std::set<long long> out;
    for (const auto& x : enumerate_elements(f.source(), bound))
        out.insert(element_code(f.target(), f.apply(x)));
    return out;
}

template <class R>
std::set<long long> kernel_codes(const Morphism<R>& f, long long bound = default_enumeration_bound)
{
    std::set<long long> out;
    for (const auto& x : enumerate_elements(f.source(), bound))
        if (kercok::is_zero(f.ring(), f.apply(x)))
            out.insert(element_code(f.source(), x));
    return out;
}

template <class R>
bool exact_by_enumeration(const Morphism<R>& f, const Morphism<R>& g, long long bound = default_enumeration_bound)
{
    return image_codes(f, bound) == kernel_codes(g, bound);
}

template <class R>
bool mono_by_enumeration(const Morphism<R>& f, long long bound = default_enumeration_bound)
{
    return kernel_codes(f, bound).size() == 1;
}

template <class R>
bool epi_by_enumeration(const Morphism<R>& f, long long bound = default_enumeration_bound)
{
    return static_cast<long long>(image_codes(f, bound).size()) == order(f.target()).value.to_int64();
}

template <class R>
bool finite_within(const PresentedObject<R>& a, long long bound)
{
    auto n = order(a);
    return !n.infinite && n.value <= BigInt(bound);
}

/// Pullback by cones from the free rank-one object: every compatible pair
/// (b, c) with h b = k c is (f a, g a) for exactly one a.
template <class R>
bool pullback_by_enumeration(const SquareData<R>& sq, long long bound = default_enumeration_bound)
{
    const auto& B = sq.f.target();
    const auto& C = sq.g.target();
    const auto& D = sq.h.target();
    std::map<std::pair<long long, long long>, int> hits;
    for (const auto& a : enumerate_elements(sq.f.source(), bound))
        ++hits[{element_code(B, sq.f.apply(a)), element_code(C, sq.g.apply(a))}];
    std::vector<std::pair<long long, long long>> hb, kc;
    auto bs = enumerate_elements(B, bound);
    auto cs = enumerate_elements(C, bound);
    std::size_t compatible = 0;
    for (const auto& b : bs) {
        const long long db = element_code(D, sq.h.apply(b));
        const long long cb = element_code(B, b);
        for (const auto& c : cs) {
            if (db != element_code(D, sq.k.apply(c)))
                continue;
            ++compatible;
            auto it = hits.find({cb, element_code(C, c)});
            if (it == hits.end() || it->second != 1)
                return false;
        }
    }
    return compatible == hits.size();
}

/// Pushout by counting: (h, k) is onto D and its kernel is exactly the
/// image of a ↦ (f a, −g a).
template <class R>
bool pushout_by_enumeration(const SquareData<R>& sq, long long bound = default_enumeration_bound)
{
    const auto& B = sq.f.target();
    const auto& C = sq.g.target();
    const auto& D = sq.h.target();
    const R& ring = sq.f.ring();
    std::set<std::pair<long long, long long>> im_m;
    for (const auto& a : enumerate_elements(sq.f.source(), bound))
        im_m.insert({element_code(B, sq.f.apply(a)), element_code(C, sq.g.apply(neg(ring, a)))});
    std::set<long long> reached;
    std::size_t kernel_size = 0;
    auto cs = enumerate_elements(C, bound);
    for (const auto& b : enumerate_elements(B, bound)) {
        const Mat<R> hb = mul(ring, sq.h.mat(), b);
        for (const auto& c : cs) {
            const long long code = element_code(D, D.reduce(add(ring, hb, mul(ring, sq.k.mat(), c))));
            reached.insert(code);
            kernel_size += code == 0;
        }
    }
    return static_cast<long long>(reached.size()) == order(D).value.to_int64() && kernel_size == im_m.size();
}

} // namespace kercok
