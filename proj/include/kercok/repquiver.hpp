#pragma once

#include "kercok/seqs.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kercok {

using FMat = Mat<PrimeField>;

class QuiverMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Finite acyclic quiver; arrows[a] = (source, target).
struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> arrows;

    friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// Throws std::invalid_argument on an out-of-range endpoint or an oriented cycle.
Quiver make_quiver(int vertices, std::vector<std::pair<int, int>> arrows);
/// 1 → 2 → … → n.
Quiver linear_quiver(int n);

struct QuiverRep {
    Quiver quiver;
    PrimeField field;
    std::vector<Index> dims;
    std::vector<FMat> maps; ///< maps[a]: dims[source] → dims[target], shape (dims[t], dims[s])

    long long length() const;
    friend bool operator==(const QuiverRep& a, const QuiverRep& b);
};

QuiverRep make_rep(const Quiver& q, const PrimeField& field, std::vector<Index> dims, std::vector<FMat> maps);
QuiverRep simple_rep(const Quiver& q, const PrimeField& field, int v);
QuiverRep zero_rep(const Quiver& q, const PrimeField& field);
QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b);

struct RepMorphism {
    QuiverRep source, target;
    std::vector<FMat> comps; ///< comps[v]: source.dims[v] → target.dims[v]

    bool is_zero() const;
    friend bool operator==(const RepMorphism& a, const RepMorphism& b);
};

/// Validates shapes and intertwining; entries are reduced mod p.
RepMorphism make_rep_morphism(const QuiverRep& x, const QuiverRep& y, std::vector<FMat> comps);
RepMorphism rep_identity(const QuiverRep& x);
RepMorphism rep_zero(const QuiverRep& x, const QuiverRep& y);
RepMorphism rep_compose(const RepMorphism& g, const RepMorphism& f);
RepMorphism rep_add(const RepMorphism& f, const RepMorphism& g);
RepMorphism rep_scale(long long s, const RepMorphism& f);
bool rep_is_iso(const RepMorphism& f);
bool rep_is_mono(const RepMorphism& f);
bool rep_is_epi(const RepMorphism& f);

/// Basis of Hom(X, Y): the solutions of phi_t·X(a) = Y(a)·phi_s for every arrow.
std::vector<RepMorphism> hom_basis(const QuiverRep& x, const QuiverRep& y);
/// sum coeffs[i]·basis[i]; coeffs.size() == basis.size().
RepMorphism hom_combination(const QuiverRep& x, const QuiverRep& y, const std::vector<RepMorphism>& basis,
                            const std::vector<long long>& coeffs);
/// Every element of Hom(X, Y), in coefficient order; throws when there are more than cap.
std::vector<RepMorphism> hom_elements(const QuiverRep& x, const QuiverRep& y, long long cap = 1 << 16);

/// Vertex-wise kernel, image and cokernel with the induced arrow maps.
struct RepSubobject {
    QuiverRep carrier;
    RepMorphism embed;
};
struct RepQuotient {
    QuiverRep object;
    RepMorphism proj;
};
RepSubobject rep_kernel(const RepMorphism& f);
RepSubobject rep_image(const RepMorphism& f);
RepQuotient rep_cokernel(const RepMorphism& f);

/// Σ_v rank(phi_v).
long long rep_length_of_image(const RepMorphism& f);

enum class Decomposability { Indecomposable, Decomposable, Unknown };
std::string to_string(Decomposability d);

struct IndecomposabilityVerdict {
    Decomposability verdict = Decomposability::Unknown;
    std::optional<RepMorphism> idempotent;          ///< e ∉ {0, id} with e² = e
    std::optional<std::pair<RepSubobject, RepSubobject>> splitting; ///< im e, im (id − e)
    long long end_dim = 0;
};

/// Largest p^dim End searched exhaustively.
inline constexpr long long idempotent_search_cap = 1LL << 20;

/// The zero representation counts as decomposable (it is not indecomposable).
IndecomposabilityVerdict is_indecomposable(const QuiverRep& x, long long cap = idempotent_search_cap);

struct HaradaChain {
    std::vector<QuiverRep> modules; ///< M_1 … M_{L+1}
    std::vector<RepMorphism> maps;  ///< f_i: M_i → M_{i+1}
    int n = 1;                      ///< length bound
};

struct HaradaBound {
    int m;            ///< prefix f_{2^m − 1} ∘ … ∘ f_1
    long long length; ///< ℓ of its image
    long long bound;  ///< n − m
    bool ok() const { return length <= bound; }
};

/// Half split g = M_1 → M_{2^{m−1}}, h = M_{2^{m−1}} → M_{2^m}: the six-term
/// sequence of (g, h) with (*) = ker g → ker hg and (**) = cok hg → cok h.
struct HaradaSplit {
    int m;
    long long len_im_g, len_im_h, len_im_hg;
    bool star_iso, dstar_iso;
    bool vertexwise_exact; ///< the six-term sequence at every vertex
    bool arrows_commute;   ///< its maps intertwine the induced arrow maps
    bool case_ok;          ///< the length drop (or vanishing) its case predicts
};

struct HaradaReport {
    std::vector<long long> prefix_lengths; ///< ℓ(im f_k ∘ … ∘ f_1), k = 1..L
    std::vector<HaradaBound> bounds;
    std::vector<HaradaSplit> splits;
    std::optional<bool> full_composite_zero; ///< present when L ≥ 2^n − 1

    bool ok() const;
};

/// Throws PreconditionFailure naming the offending module or map.
HaradaReport harada_sai_check(const HaradaChain& ch);

} // namespace kercok
