#pragma once

#include "kercok/object.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace kercok {

/// R^n / (column lattice of Y) in canonical form, with coordinate transport.
/// to_canon: canonical gens × n, from_canon: n × canonical gens;
/// to_canon·from_canon = I and from_canon·to_canon ≡ I modulo Y.
template <class R>
struct Canonical {
    PresentedObject<R> object;
    Mat<R> to_canon;
    Mat<R> from_canon;
};

template <class R>
Canonical<R> canonicalize(const R& ring, Index n, const Mat<R>& y)
{
    if (y.rows() != n)
        throw DimensionMismatch("canonicalize: relation matrix has " + std::to_string(y.rows()) +
                                " rows for " + std::to_string(n) + " generators");
    auto snf = smith(ring, y);
    const Index r = snf.rank();
    Index units = 0;
    while (units < r && ring.is_unit(snf.diag[static_cast<std::size_t>(units)]))
        ++units;
    PresentedObject<R> obj{ring, {}, n - r};
    for (Index i = units; i < r; ++i)
        obj.torsion.push_back(snf.diag[static_cast<std::size_t>(i)]);
    Mat<R> to = obj.reduce(Mat<R>(snf.U.bottomRows(n - units)));
    Mat<R> from = snf.Uinv.rightCols(n - units);
    return {std::move(obj), std::move(to), std::move(from)};
}

/// Canonical form of R/(c_0) ⊕ ... ⊕ R^free for arbitrary moduli c_i.
template <class R>
Canonical<R> presented(const R& ring, const std::vector<typename R::Scalar>& cyclic, Index free_rank)
{
    const Index k = static_cast<Index>(cyclic.size());
    Mat<R> rel = zeros(ring, k + free_rank, k);
    for (Index i = 0; i < k; ++i)
        rel(i, i) = cyclic[static_cast<std::size_t>(i)];
    return canonicalize(ring, k + free_rank, rel);
}

/// A subobject given by a monomorphism into an ambient object.
template <class R>
struct Subobject {
    PresentedObject<R> carrier;
    Morphism<R> embed;
};

/// A quotient B ↠ Q with a coordinate section of the projection.
template <class R>
struct Quotient {
    PresentedObject<R> object;
    Morphism<R> proj;
    Mat<R> lift; ///< B.gens × Q.gens; proj·lift = I
};

/// Submodule of A generated by the columns of g.
template <class R>
Subobject<R> submodule(const PresentedObject<R>& a, const Mat<R>& g)
{
    const R& ring = a.ring;
    if (g.rows() != a.gens())
        throw DimensionMismatch("submodule generators have the wrong height");
    const Index s = g.cols();
    Mat<R> rel;
    if (a.torsion_count() == 0) {
        rel = kernel_basis(ring, g);
    } else {
        Mat<R> k = kernel_basis(ring, hstack(ring, g, a.relations()));
        rel = k.topRows(s);
    }
    auto canon = canonicalize(ring, s, rel);
    Morphism<R> embed(canon.object, a, mul(ring, g, canon.from_canon));
    return {std::move(canon.object), std::move(embed)};
}

/// Generators (as columns in source coordinates) of the kernel of f.
template <class R>
Mat<R> kernel_generators(const Morphism<R>& f)
{
    const R& ring = f.ring();
    const Index n = f.source().gens();
    if (f.target().torsion_count() == 0)
        return kernel_basis(ring, f.mat());
    Mat<R> k = kernel_basis(ring, hstack(ring, f.mat(), f.target().relations()));
    return k.topRows(n);
}

template <class R>
Subobject<R> kernel(const Morphism<R>& f)
{
    if (f.is_zero())
        return {f.source(), Morphism<R>::identity(f.source())};
    return submodule(f.source(), kernel_generators(f));
}

/// Quotient of a by the submodule generated by the columns of g.
template <class R>
Quotient<R> quotient(const PresentedObject<R>& a, const Mat<R>& g)
{
    const R& ring = a.ring;
    auto canon = canonicalize(ring, a.gens(), hstack(ring, a.relations(), g));
    Morphism<R> proj(a, canon.object, canon.to_canon);
    return {std::move(canon.object), std::move(proj), std::move(canon.from_canon)};
}

template <class R>
Quotient<R> cokernel(const Morphism<R>& f)
{
    if (f.is_zero())
        return {f.target(), Morphism<R>::identity(f.target()), identity(f.ring(), f.target().gens())};
    return quotient(f.target(), f.mat());
}

template <class R>
Subobject<R> image(const Morphism<R>& f)
{
    if (f.is_zero())
        return submodule(f.target(), zeros(f.ring(), f.target().gens(), 0));
    return submodule(f.target(), f.mat());
}

/// The unique u with embed∘u = t, when t lands in the subobject.
template <class R>
std::optional<Morphism<R>> factor_through_mono(const Morphism<R>& t, const Morphism<R>& embed)
{
    if (!(t.target() == embed.target()))
        throw CompositionMismatch("factor_through_mono: targets differ");
    const R& ring = t.ring();
    const Index s = embed.source().gens();
    auto w = solve(ring, hstack(ring, embed.mat(), embed.target().relations()), t.mat());
    if (!w)
        return std::nullopt;
    return Morphism<R>(t.source(), embed.source(), Mat<R>(w->topRows(s)));
}

/// The map Q → T induced by t: B → T on a quotient Q of B. t must kill the
/// kernel of the projection.
template <class R>
Morphism<R> factor_through_quotient(const Morphism<R>& t, const Quotient<R>& q)
{
    if (!(t.source() == q.proj.source()))
        throw CompositionMismatch("factor_through_quotient: sources differ");
    Morphism<R> induced(q.object, t.target(), mul(t.ring(), t.mat(), q.lift));
    if (!(compose(induced, q.proj) == t))
        throw IllDefinedMorphism("map does not vanish on the kernel of the quotient");
    return induced;
}

/// Epi part of the epi–mono factorization: f = im.embed ∘ coimage_epi.
template <class R>
Morphism<R> coimage_epi(const Morphism<R>& f, const Subobject<R>& im)
{
    auto u = factor_through_mono(f, im.embed);
    if (!u)
        throw IllDefinedMorphism("morphism does not land in the given image");
    return *u;
}

/// Witness of a failed exactness check at the middle object of A → B → C.
template <class R>
struct ExactnessWitness {
    enum class Kind { ImageNotInKernel, KernelNotInImage };
    Kind kind;
    Mat<R> element; ///< column in the middle object's coordinates

    std::string kind_name() const
    {
        return kind == Kind::ImageNotInKernel ? "image_not_in_kernel" : "kernel_not_in_image";
    }
};

template <class R>
struct ExactnessVerdict {
    bool exact = true;
    std::optional<ExactnessWitness<R>> witness;
    explicit operator bool() const { return exact; }
};

/// im f = ker g as subobjects of the middle object, by mutual factorization.
template <class R>
ExactnessVerdict<R> is_exact_at(const Morphism<R>& f, const Morphism<R>& g)
{
    if (!(f.target() == g.source()))
        throw CompositionMismatch("is_exact_at: target of f is not the source of g");
    const R& ring = f.ring();
    using Kind = typename ExactnessWitness<R>::Kind;

    Mat<R> gf = compose(g, f).mat();
    for (Index j = 0; j < gf.cols(); ++j)
        if (!kercok::is_zero(ring, Mat<R>(gf.col(j))))
            return {false, ExactnessWitness<R>{Kind::ImageNotInKernel, Mat<R>(f.mat().col(j))}};

    Mat<R> kg = kernel_generators(g);
    if (kg.cols() == 0)
        return {};
    const PresentedObject<R>& b = f.target();
    auto snf = smith(ring, b.torsion_count() ? hstack(ring, f.mat(), b.relations()) : f.mat());
    auto sols = solve_each(snf, kg);
    for (Index j = 0; j < kg.cols(); ++j)
        if (!sols[static_cast<std::size_t>(j)])
            return {false, ExactnessWitness<R>{Kind::KernelNotInImage, b.reduce(Mat<R>(kg.col(j)))}};
    return {};
}

template <class R>
bool is_mono(const Morphism<R>& f)
{
    return f.source().is_zero() || kernel(f).carrier.is_zero();
}

template <class R>
bool is_epi(const Morphism<R>& f)
{
    return f.target().is_zero() || cokernel(f).object.is_zero();
}

template <class R>
bool is_iso(const Morphism<R>& f)
{
    return is_mono(f) && is_epi(f);
}

template <class R>
Morphism<R> zero_into(const PresentedObject<R>& a)
{
    return Morphism<R>::zero(zero_object(a.ring), a);
}

template <class R>
Morphism<R> zero_out_of(const PresentedObject<R>& a)
{
    return Morphism<R>::zero(a, zero_object(a.ring));
}

/// Non-negative count or infinity.
struct ExtendedCount {
    bool infinite = false;
    BigInt value = 0;

    static ExtendedCount inf() { return {true, 0}; }
    std::string str() const { return infinite ? "infinite" : value.str(); }
    friend bool operator==(const ExtendedCount&, const ExtendedCount&) = default;
};

/// Number of prime factors of n counted with multiplicity.
inline long prime_factor_count(BigInt n)
{
    n = abs(n);
    long count = 0;
    for (BigInt d = 2; d * d <= n; d += (d == BigInt(2) ? 1 : 2))
        while ((n % d).is_zero()) {
            n /= d;
            ++count;
        }
    if (n > BigInt(1))
        ++count;
    return count;
}

/// Composition length: dimension over a field, total prime multiplicity of
/// the torsion over INT, infinite when a free summand is present over INT.
template <class R>
ExtendedCount length(const PresentedObject<R>& a)
{
    if constexpr (R::is_field) {
        return {false, BigInt(static_cast<long long>(a.free_rank))};
    } else {
        if (a.free_rank > 0)
            return ExtendedCount::inf();
        long total = 0;
        for (const auto& d : a.torsion)
            total += prime_factor_count(d);
        return {false, BigInt(total)};
    }
}

/// Number of elements.
template <class R>
ExtendedCount order(const PresentedObject<R>& a)
{
    if constexpr (std::is_same_v<R, PrimeField>) {
        BigInt n = 1;
        for (Index i = 0; i < a.free_rank; ++i)
            n *= BigInt(static_cast<long long>(a.ring.p));
        return {false, n};
    } else if constexpr (std::is_same_v<R, RationalField>) {
        return a.free_rank > 0 ? ExtendedCount::inf() : ExtendedCount{false, 1};
    } else {
        if (a.free_rank > 0)
            return ExtendedCount::inf();
        BigInt n = 1;
        for (const auto& d : a.torsion)
            n *= d;
        return {false, n};
    }
}

template <class R>
struct Biproduct {
    PresentedObject<R> object;
    Morphism<R> inj1, inj2, proj1, proj2;
};

template <class R>
Biproduct<R> direct_sum(const PresentedObject<R>& a, const PresentedObject<R>& b)
{
    if (!(a.ring == b.ring))
        throw RingMismatch("direct sum of objects over different rings");
    const R& ring = a.ring;
    const Index na = a.gens(), nb = b.gens();
    auto canon = canonicalize(ring, na + nb, block_diag(ring, a.relations(), b.relations()));
    const auto& s = canon.object;
    return {s,
            Morphism<R>(a, s, Mat<R>(canon.to_canon.leftCols(na))),
            Morphism<R>(b, s, Mat<R>(canon.to_canon.rightCols(nb))),
            Morphism<R>(s, a, Mat<R>(canon.from_canon.topRows(na))),
            Morphism<R>(s, b, Mat<R>(canon.from_canon.bottomRows(nb)))};
}

class EnumerationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr long long default_enumeration_bound = 1024;

/// Every element once, as canonical coordinate columns in mixed-radix order.
template <class R>
std::vector<Mat<R>> enumerate_elements(const PresentedObject<R>& a, long long bound = default_enumeration_bound)
{
    auto ord = order(a);
    if (ord.infinite)
        throw EnumerationError("cannot enumerate the infinite object " + a.str());
    if (ord.value > BigInt(bound))
        throw EnumerationError("object " + a.str() + " has " + ord.value.str() + " elements, bound is " +
                               std::to_string(bound));
    const R& ring = a.ring;
    const Index n = a.gens();
    std::vector<long long> radix(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) {
        if constexpr (std::is_same_v<R, IntegerRing>)
            radix[static_cast<std::size_t>(i)] = a.torsion[static_cast<std::size_t>(i)].to_int64();
        else if constexpr (std::is_same_v<R, PrimeField>)
            radix[static_cast<std::size_t>(i)] = ring.p;
        else
            radix[static_cast<std::size_t>(i)] = 1;
    }
    const long long total = ord.value.to_int64();
    std::vector<Mat<R>> out;
    out.reserve(static_cast<std::size_t>(total));
    for (long long code = 0; code < total; ++code) {
        Mat<R> x(n, 1);
        long long rest = code;
        for (Index i = 0; i < n; ++i) {
            x(i, 0) = ring.from_int(rest % radix[static_cast<std::size_t>(i)]);
            rest /= radix[static_cast<std::size_t>(i)];
        }
        out.push_back(std::move(x));
    }
    return out;
}

/// Mixed-radix code of a reduced element of a finite object.
template <class R>
long long element_code(const PresentedObject<R>& a, const Mat<R>& x)
{
    long long code = 0, scale = 1;
    for (Index i = 0; i < a.gens(); ++i) {
        long long digit, radix;
        if constexpr (std::is_same_v<R, IntegerRing>) {
            digit = x(i, 0).to_int64();
            radix = a.torsion[static_cast<std::size_t>(i)].to_int64();
        } else if constexpr (std::is_same_v<R, PrimeField>) {
            digit = x(i, 0);
            radix = a.ring.p;
        } else {
            digit = 0;
            radix = 1;
        }
        code += digit * scale;
        scale *= radix;
    }
    return code;
}

} // namespace kercok
