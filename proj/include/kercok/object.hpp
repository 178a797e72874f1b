#pragma once

#include "kercok/smith.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace kercok {

class IllDefinedMorphism : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class CompositionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finitely presented module in canonical form:
///   R/(d_0) ⊕ ... ⊕ R/(d_{k-1}) ⊕ R^free,   d_0 | d_1 | ... , no d_i a unit.
/// Over a field k is always 0 and the object is just a dimension.
template <class R>
struct PresentedObject {
    using Scalar = typename R::Scalar;

    R ring;
    std::vector<Scalar> torsion;
    Index free_rank = 0;

    Index torsion_count() const { return static_cast<Index>(torsion.size()); }
    Index gens() const { return torsion_count() + free_rank; }
    bool is_zero() const { return gens() == 0; }

    /// Modulus of generator i; zero for a free generator.
    Scalar modulus(Index i) const
    {
        return i < torsion_count() ? torsion[static_cast<std::size_t>(i)] : ring.zero();
    }

    /// gens × torsion_count diagonal relation matrix.
    Mat<R> relations() const
    {
        Mat<R> rel = zeros(ring, gens(), torsion_count());
        for (Index i = 0; i < torsion_count(); ++i)
            rel(i, i) = torsion[static_cast<std::size_t>(i)];
        return rel;
    }

    /// Reduces element columns to canonical residues.
    Mat<R> reduce(Mat<R> x) const
    {
        if constexpr (std::is_same_v<R, IntegerRing>) {
            for (Index i = 0; i < torsion_count(); ++i)
                for (Index j = 0; j < x.cols(); ++j)
                    x(i, j) = ring.residue(x(i, j), torsion[static_cast<std::size_t>(i)]);
            return x;
        } else {
            return reduced(ring, std::move(x));
        }
    }

    friend bool operator==(const PresentedObject& a, const PresentedObject& b)
    {
        return a.ring == b.ring && a.torsion == b.torsion && a.free_rank == b.free_rank;
    }

    std::string str() const
    {
        if (is_zero())
            return "0";
        std::string out;
        auto append = [&](const std::string& part) { out += (out.empty() ? "" : " + ") + part; };
        if constexpr (std::is_same_v<R, IntegerRing>) {
            for (const auto& d : torsion)
                append("Z/" + d.str());
            if (free_rank == 1)
                append("Z");
            else if (free_rank > 1)
                append("Z^" + std::to_string(free_rank));
        } else {
            std::string base = std::is_same_v<R, RationalField> ? "Q" : "F" + std::to_string(ring.tag().p);
            out = free_rank == 1 ? base : base + "^" + std::to_string(free_rank);
        }
        return out;
    }
};

template <class R>
PresentedObject<R> zero_object(const R& ring)
{
    return PresentedObject<R>{ring, {}, 0};
}

template <class R>
PresentedObject<R> free_object(const R& ring, Index rank)
{
    return PresentedObject<R>{ring, {}, rank};
}

/// Matrix map between presented objects. Columns are images of source
/// generators, reduced to canonical residues in the target.
template <class R>
class Morphism {
public:
    using Scalar = typename R::Scalar;

    Morphism(PresentedObject<R> source, PresentedObject<R> target, Mat<R> mat)
        : source_(std::move(source)), target_(std::move(target)), mat_(std::move(mat))
    {
        if (!(source_.ring == target_.ring))
            throw RingMismatch("morphism between objects over " + source_.ring.tag().str() + " and " +
                               target_.ring.tag().str());
        if (mat_.rows() != target_.gens() || mat_.cols() != source_.gens())
            throw DimensionMismatch("morphism matrix is " + std::to_string(mat_.rows()) + "x" +
                                    std::to_string(mat_.cols()) + ", expected " +
                                    std::to_string(target_.gens()) + "x" + std::to_string(source_.gens()));
        mat_ = target_.reduce(std::move(mat_));
        check_relations();
    }

    static Morphism identity(const PresentedObject<R>& a)
    {
        return Morphism(a, a, kercok::identity(a.ring, a.gens()));
    }

    static Morphism zero(const PresentedObject<R>& a, const PresentedObject<R>& b)
    {
        return Morphism(a, b, zeros(a.ring, b.gens(), a.gens()));
    }

    const PresentedObject<R>& source() const { return source_; }
    const PresentedObject<R>& target() const { return target_; }
    const Mat<R>& mat() const { return mat_; }
    const R& ring() const { return source_.ring; }

    bool is_zero() const { return kercok::is_zero(ring(), mat_); }

    /// Image of element columns given in source coordinates.
    Mat<R> apply(const Mat<R>& x) const { return target_.reduce(mul(ring(), mat_, x)); }

    friend bool operator==(const Morphism& a, const Morphism& b)
    {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.mat_ == b.mat_;
    }

private:
    // Relations are diagonal, so lattice membership of mat·R_source in the
    // target relation lattice is entrywise divisibility.
    void check_relations() const
    {
        const R& r = ring();
        for (Index j = 0; j < source_.torsion_count(); ++j) {
            const Scalar& dj = source_.torsion[static_cast<std::size_t>(j)];
            for (Index i = 0; i < target_.gens(); ++i) {
                Scalar v = r.mul(mat_(i, j), dj);
                if (!r.is_zero(r.residue(v, target_.modulus(i))))
                    throw IllDefinedMorphism("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                             ") = " + scalar_to_string(mat_(i, j)) +
                                             " does not respect the relation of order " +
                                             scalar_to_string(dj));
            }
        }
    }

    PresentedObject<R> source_, target_;
    Mat<R> mat_;
};

/// g∘f.
template <class R>
Morphism<R> compose(const Morphism<R>& g, const Morphism<R>& f)
{
    if (!(f.ring() == g.ring()))
        throw RingMismatch("composing morphisms over different rings");
    if (!(f.target() == g.source()))
        throw CompositionMismatch("cannot compose: target " + f.target().str() + " differs from source " +
                                  g.source().str());
    return Morphism<R>(f.source(), g.target(), mul(f.ring(), g.mat(), f.mat()));
}

template <class R>
void require_parallel(const Morphism<R>& f, const Morphism<R>& g)
{
    if (!(f.source() == g.source()) || !(f.target() == g.target()))
        throw CompositionMismatch("morphisms are not parallel");
}

template <class R>
Morphism<R> operator+(const Morphism<R>& f, const Morphism<R>& g)
{
    require_parallel(f, g);
    return Morphism<R>(f.source(), f.target(), add(f.ring(), f.mat(), g.mat()));
}

template <class R>
Morphism<R> operator-(const Morphism<R>& f, const Morphism<R>& g)
{
    require_parallel(f, g);
    return Morphism<R>(f.source(), f.target(), sub(f.ring(), f.mat(), g.mat()));
}

template <class R>
Morphism<R> operator-(const Morphism<R>& f)
{
    return Morphism<R>(f.source(), f.target(), neg(f.ring(), f.mat()));
}

} // namespace kercok
