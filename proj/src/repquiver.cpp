#include "kercok/repquiver.hpp"

#include <algorithm>
#include <functional>

namespace kercok {

namespace {

FMat fzeros(const PrimeField& f, Index r, Index c) { return zeros(f, r, c); }

FMat fmul(const PrimeField& f, const FMat& a, const FMat& b) { return mul(f, a, b); }

void require_same_quiver(const QuiverRep& x, const QuiverRep& y, const char* what)
{
    if (!(x.quiver == y.quiver) || !(x.field == y.field))
        throw QuiverMismatch(std::string(what) + ": representations live on different quivers or fields");
}

/// M with target_basis·M = image, for a basis with independent columns.
FMat coordinates(const PrimeField& f, const FMat& basis, const FMat& image)
{
    auto m = solve(f, basis, image);
    if (!m)
        throw std::logic_error("induced arrow map does not exist");
    return *m;
}

/// Rows spanning the annihilator of the column span of m (a projection onto cok m).
FMat cokernel_projection(const PrimeField& f, const FMat& m, Index rows)
{
    if (m.cols() == 0)
        return identity(f, rows);
    FMat t = m.transpose();
    FMat k = kernel_basis(f, t);
    return k.transpose();
}

} // namespace

Quiver make_quiver(int vertices, std::vector<std::pair<int, int>> arrows)
{
    if (vertices < 0)
        throw std::invalid_argument("quiver: negative vertex count");
    for (const auto& [s, t] : arrows)
        if (s < 0 || t < 0 || s >= vertices || t >= vertices)
            throw std::invalid_argument("quiver: arrow endpoint out of range");
    // Kahn's algorithm: every vertex must be removable
    std::vector<int> indeg(static_cast<std::size_t>(vertices), 0);
    for (const auto& a : arrows)
        ++indeg[static_cast<std::size_t>(a.second)];
    std::vector<int> ready;
    for (int v = 0; v < vertices; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0)
            ready.push_back(v);
    int removed = 0;
    while (!ready.empty()) {
        const int v = ready.back();
        ready.pop_back();
        ++removed;
        for (const auto& a : arrows)
            if (a.first == v && --indeg[static_cast<std::size_t>(a.second)] == 0)
                ready.push_back(a.second);
    }
    if (removed != vertices)
        throw std::invalid_argument("quiver: has an oriented cycle");
    return {vertices, std::move(arrows)};
}

Quiver linear_quiver(int n)
{
    std::vector<std::pair<int, int>> arrows;
    for (int v = 0; v + 1 < n; ++v)
        arrows.emplace_back(v, v + 1);
    return make_quiver(n, std::move(arrows));
}

long long QuiverRep::length() const
{
    long long total = 0;
    for (Index d : dims)
        total += d;
    return total;
}

bool operator==(const QuiverRep& a, const QuiverRep& b)
{
    return a.quiver == b.quiver && a.field == b.field && a.dims == b.dims && a.maps == b.maps;
}

QuiverRep make_rep(const Quiver& q, const PrimeField& field, std::vector<Index> dims, std::vector<FMat> maps)
{
    if (dims.size() != static_cast<std::size_t>(q.vertices))
        throw QuiverMismatch("representation: one dimension per vertex required");
    if (maps.size() != q.arrows.size())
        throw QuiverMismatch("representation: one matrix per arrow required");
    for (std::size_t a = 0; a < maps.size(); ++a) {
        const auto [s, t] = q.arrows[a];
        if (maps[a].rows() != dims[static_cast<std::size_t>(t)] || maps[a].cols() != dims[static_cast<std::size_t>(s)])
            throw QuiverMismatch("representation: arrow " + std::to_string(a) + " has the wrong shape");
        maps[a] = reduced(field, std::move(maps[a]));
    }
    for (Index d : dims)
        if (d < 0)
            throw QuiverMismatch("representation: negative dimension");
    return {q, field, std::move(dims), std::move(maps)};
}

QuiverRep simple_rep(const Quiver& q, const PrimeField& field, int v)
{
    std::vector<Index> dims(static_cast<std::size_t>(q.vertices), 0);
    dims.at(static_cast<std::size_t>(v)) = 1;
    std::vector<FMat> maps;
    for (const auto& [s, t] : q.arrows)
        maps.push_back(fzeros(field, dims[static_cast<std::size_t>(t)], dims[static_cast<std::size_t>(s)]));
    return make_rep(q, field, std::move(dims), std::move(maps));
}

QuiverRep zero_rep(const Quiver& q, const PrimeField& field)
{
    std::vector<FMat> maps(q.arrows.size(), FMat(0, 0));
    return make_rep(q, field, std::vector<Index>(static_cast<std::size_t>(q.vertices), 0), std::move(maps));
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b)
{
    require_same_quiver(a, b, "direct_sum");
    std::vector<Index> dims;
    for (std::size_t v = 0; v < a.dims.size(); ++v)
        dims.push_back(a.dims[v] + b.dims[v]);
    std::vector<FMat> maps;
    for (std::size_t k = 0; k < a.maps.size(); ++k)
        maps.push_back(block_diag(a.field, a.maps[k], b.maps[k]));
    return make_rep(a.quiver, a.field, std::move(dims), std::move(maps));
}

bool RepMorphism::is_zero() const
{
    for (const auto& c : comps)
        if (!kercok::is_zero(source.field, c))
            return false;
    return true;
}

bool operator==(const RepMorphism& a, const RepMorphism& b)
{
    return a.source == b.source && a.target == b.target && a.comps == b.comps;
}

RepMorphism make_rep_morphism(const QuiverRep& x, const QuiverRep& y, std::vector<FMat> comps)
{
    require_same_quiver(x, y, "morphism");
    const auto& f = x.field;
    if (comps.size() != x.dims.size())
        throw QuiverMismatch("morphism: one matrix per vertex required");
    for (std::size_t v = 0; v < comps.size(); ++v) {
        if (comps[v].rows() != y.dims[v] || comps[v].cols() != x.dims[v])
            throw QuiverMismatch("morphism: component at vertex " + std::to_string(v) + " has the wrong shape");
        comps[v] = reduced(f, std::move(comps[v]));
    }
    for (std::size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        const auto [s, t] = x.quiver.arrows[a];
        const auto lhs = fmul(f, comps[static_cast<std::size_t>(t)], x.maps[a]);
        const auto rhs = fmul(f, y.maps[a], comps[static_cast<std::size_t>(s)]);
        if (lhs != rhs)
            throw PreconditionFailure("morphism does not intertwine arrow " + std::to_string(a));
    }
    return {x, y, std::move(comps)};
}

RepMorphism rep_identity(const QuiverRep& x)
{
    std::vector<FMat> comps;
    for (Index d : x.dims)
        comps.push_back(identity(x.field, d));
    return {x, x, std::move(comps)};
}

RepMorphism rep_zero(const QuiverRep& x, const QuiverRep& y)
{
    require_same_quiver(x, y, "zero morphism");
    std::vector<FMat> comps;
    for (std::size_t v = 0; v < x.dims.size(); ++v)
        comps.push_back(fzeros(x.field, y.dims[v], x.dims[v]));
    return {x, y, std::move(comps)};
}

RepMorphism rep_compose(const RepMorphism& g, const RepMorphism& f)
{
    if (!(f.target == g.source))
        throw CompositionMismatch("rep_compose: target of f differs from source of g");
    std::vector<FMat> comps;
    for (std::size_t v = 0; v < f.comps.size(); ++v)
        comps.push_back(fmul(f.source.field, g.comps[v], f.comps[v]));
    return {f.source, g.target, std::move(comps)};
}

RepMorphism rep_add(const RepMorphism& f, const RepMorphism& g)
{
    if (!(f.source == g.source) || !(f.target == g.target))
        throw CompositionMismatch("rep_add: morphisms have different endpoints");
    std::vector<FMat> comps;
    for (std::size_t v = 0; v < f.comps.size(); ++v)
        comps.push_back(add(f.source.field, f.comps[v], g.comps[v]));
    return {f.source, f.target, std::move(comps)};
}

RepMorphism rep_scale(long long s, const RepMorphism& f)
{
    const auto& F = f.source.field;
    std::vector<FMat> comps;
    for (const auto& c : f.comps)
        comps.push_back(scaled(F, F.from_int(s), c));
    return {f.source, f.target, std::move(comps)};
}

bool rep_is_mono(const RepMorphism& f)
{
    for (const auto& c : f.comps)
        if (rank(f.source.field, c) != c.cols())
            return false;
    return true;
}

bool rep_is_epi(const RepMorphism& f)
{
    for (const auto& c : f.comps)
        if (rank(f.source.field, c) != c.rows())
            return false;
    return true;
}

bool rep_is_iso(const RepMorphism& f) { return rep_is_mono(f) && rep_is_epi(f); }

std::vector<RepMorphism> hom_basis(const QuiverRep& x, const QuiverRep& y)
{
    require_same_quiver(x, y, "hom_basis");
    const auto& f = x.field;
    // unknowns: vec(phi_v) stacked over v
    std::vector<Index> offset;
    Index unknowns = 0;
    for (std::size_t v = 0; v < x.dims.size(); ++v) {
        offset.push_back(unknowns);
        unknowns += x.dims[v] * y.dims[v];
    }
    Index rows = 0;
    for (const auto& [s, t] : x.quiver.arrows)
        rows += y.dims[static_cast<std::size_t>(t)] * x.dims[static_cast<std::size_t>(s)];
    FMat system = fzeros(f, rows, unknowns);
    Index r = 0;
    for (std::size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        const auto s = static_cast<std::size_t>(x.quiver.arrows[a].first);
        const auto t = static_cast<std::size_t>(x.quiver.arrows[a].second);
        const Index h = y.dims[t] * x.dims[s];
        if (h == 0)
            continue;
        // vec(phi_t·X_a) = (X_aᵀ ⊗ I)·vec phi_t,  vec(Y_a·phi_s) = (I ⊗ Y_a)·vec phi_s
        FMat xt = x.maps[a].transpose();
        FMat lhs = kron(f, xt, identity(f, y.dims[t]));
        FMat rhs = kron(f, identity(f, x.dims[s]), y.maps[a]);
        if (lhs.cols() > 0)
            system.block(r, offset[t], h, lhs.cols()) += lhs;
        if (rhs.cols() > 0)
            system.block(r, offset[s], h, rhs.cols()) -= rhs;
        r += h;
    }
    system = reduced(f, std::move(system));
    FMat k = unknowns ? kernel_basis(f, system) : FMat(0, 0);
    std::vector<RepMorphism> out;
    for (Index j = 0; j < k.cols(); ++j) {
        std::vector<FMat> comps;
        for (std::size_t v = 0; v < x.dims.size(); ++v) {
            FMat seg = k.block(offset[v], j, x.dims[v] * y.dims[v], 1);
            comps.push_back(unvec<PrimeField>(seg, y.dims[v], x.dims[v]));
        }
        out.push_back(make_rep_morphism(x, y, std::move(comps)));
    }
    return out;
}

RepMorphism hom_combination(const QuiverRep& x, const QuiverRep& y, const std::vector<RepMorphism>& basis,
                            const std::vector<long long>& coeffs)
{
    if (basis.size() != coeffs.size())
        throw std::invalid_argument("hom_combination: one coefficient per basis element");
    auto out = rep_zero(x, y);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (coeffs[i] % static_cast<long long>(x.field.p) != 0)
            out = rep_add(out, rep_scale(coeffs[i], basis[i]));
    return out;
}

std::vector<RepMorphism> hom_elements(const QuiverRep& x, const QuiverRep& y, long long cap)
{
    auto basis = hom_basis(x, y);
    const auto p = static_cast<long long>(x.field.p);
    long long total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        total *= p;
        if (total > cap)
            throw std::invalid_argument("hom_elements: Hom space exceeds the enumeration cap");
    }
    std::vector<RepMorphism> out;
    std::vector<long long> coeffs(basis.size());
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (auto& k : coeffs) {
            k = c % p;
            c /= p;
        }
        out.push_back(hom_combination(x, y, basis, coeffs));
    }
    return out;
}

namespace {

/// Subrepresentation spanned vertex-wise by the columns of bases[v].
RepSubobject sub_from_bases(const QuiverRep& x, std::vector<FMat> bases)
{
    const auto& f = x.field;
    std::vector<Index> dims;
    for (const auto& b : bases)
        dims.push_back(b.cols());
    std::vector<FMat> maps;
    for (std::size_t a = 0; a < x.quiver.arrows.size(); ++a) {
        const auto s = static_cast<std::size_t>(x.quiver.arrows[a].first);
        const auto t = static_cast<std::size_t>(x.quiver.arrows[a].second);
        maps.push_back(coordinates(f, bases[t], fmul(f, x.maps[a], bases[s])));
    }
    auto carrier = make_rep(x.quiver, f, std::move(dims), std::move(maps));
    auto embed = make_rep_morphism(carrier, x, std::move(bases));
    return {std::move(carrier), std::move(embed)};
}

} // namespace

RepSubobject rep_kernel(const RepMorphism& f)
{
    std::vector<FMat> bases;
    for (const auto& c : f.comps)
        bases.push_back(c.cols() ? kernel_basis(f.source.field, c) : FMat(0, 0));
    return sub_from_bases(f.source, std::move(bases));
}

RepSubobject rep_image(const RepMorphism& f)
{
    std::vector<FMat> bases;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        const auto& c = f.comps[v];
        bases.push_back(c.cols() && c.rows() ? column_span_basis(f.source.field, c)
                                             : FMat(f.target.dims[v], 0));
    }
    return sub_from_bases(f.target, std::move(bases));
}

RepQuotient rep_cokernel(const RepMorphism& f)
{
    const auto& F = f.source.field;
    const auto& y = f.target;
    std::vector<FMat> projs;
    std::vector<Index> dims;
    for (std::size_t v = 0; v < f.comps.size(); ++v) {
        projs.push_back(y.dims[v] ? cokernel_projection(F, f.comps[v], y.dims[v]) : FMat(0, 0));
        dims.push_back(projs.back().rows());
    }
    std::vector<FMat> maps;
    for (std::size_t a = 0; a < y.quiver.arrows.size(); ++a) {
        const auto s = static_cast<std::size_t>(y.quiver.arrows[a].first);
        const auto t = static_cast<std::size_t>(y.quiver.arrows[a].second);
        // M·P_s = P_t·Y_a, solved transposed
        FMat rhs = fmul(F, projs[t], y.maps[a]);
        FMat pst = projs[s].transpose();
        FMat rt = rhs.transpose();
        FMat m = dims[s] == 0 ? fzeros(F, dims[t], 0) : FMat(coordinates(F, pst, rt).transpose());
        maps.push_back(m);
    }
    auto object = make_rep(y.quiver, F, std::move(dims), std::move(maps));
    auto proj = make_rep_morphism(y, object, std::move(projs));
    return {std::move(object), std::move(proj)};
}

long long rep_length_of_image(const RepMorphism& f)
{
    long long total = 0;
    for (const auto& c : f.comps)
        total += rank(f.source.field, c);
    return total;
}

std::string to_string(Decomposability d)
{
    switch (d) {
    case Decomposability::Indecomposable:
        return "yes";
    case Decomposability::Decomposable:
        return "no";
    case Decomposability::Unknown:
        break;
    }
    return "unknown";
}

IndecomposabilityVerdict is_indecomposable(const QuiverRep& x, long long cap)
{
    IndecomposabilityVerdict out;
    if (x.length() == 0) {
        out.verdict = Decomposability::Decomposable;
        return out;
    }
    auto basis = hom_basis(x, x);
    out.end_dim = static_cast<long long>(basis.size());
    const long long p = x.field.p;
    long long total = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (total > cap / p) {
            out.verdict = Decomposability::Unknown;
            return out;
        }
        total *= p;
    }
    const auto id = rep_identity(x);
    const auto zero = rep_zero(x, x);
    std::vector<long long> coeffs(basis.size(), 0);
    for (long long code = 0; code < total; ++code) {
        long long c = code;
        for (auto& k : coeffs) {
            k = c % p;
            c /= p;
        }
        auto e = hom_combination(x, x, basis, coeffs);
        if (e == zero || e == id)
            continue;
        if (rep_compose(e, e) == e) {
            out.verdict = Decomposability::Decomposable;
            auto complement = rep_add(id, rep_scale(-1, e));
            out.splitting.emplace(rep_image(e), rep_image(complement));
            out.idempotent = std::move(e);
            return out;
        }
    }
    out.verdict = Decomposability::Indecomposable;
    return out;
}

bool HaradaReport::ok() const
{
    for (const auto& b : bounds)
        if (!b.ok())
            return false;
    for (const auto& s : splits)
        if (!s.vertexwise_exact || !s.arrows_commute || !s.case_ok)
            return false;
    return !full_composite_zero || *full_composite_zero;
}

namespace {

using FObj = PresentedObject<PrimeField>;
using FMor = Morphism<PrimeField>;

FMor vertex_map(const QuiverRep& x, const QuiverRep& y, const FMat& m, std::size_t u, std::size_t v)
{
    return FMor(free_object(x.field, x.dims[u]), free_object(y.field, y.dims[v]), m);
}

/// Six-term sequence of (g, h) at every vertex, plus the arrow maps it must intertwine.
std::pair<bool, bool> six_term_by_vertex(const RepMorphism& g, const RepMorphism& h)
{
    const auto& q = g.source.quiver;
    std::vector<SixTermSequence<PrimeField>> seqs;
    bool exact = true;
    for (std::size_t v = 0; v < g.comps.size(); ++v) {
        seqs.push_back(kernel_cokernel_sequence(vertex_map(g.source, g.target, g.comps[v], v, v),
                                                vertex_map(h.source, h.target, h.comps[v], v, v)));
        exact = exact && seqs.back().exact();
    }
    bool commute = true;
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        const auto s = static_cast<std::size_t>(q.arrows[a].first);
        const auto t = static_cast<std::size_t>(q.arrows[a].second);
        const auto& ss = seqs[s];
        const auto& st = seqs[t];
        auto m1 = vertex_map(g.source, g.source, g.source.maps[a], s, t);
        auto m2 = vertex_map(g.target, g.target, g.target.maps[a], s, t);
        auto m3 = vertex_map(h.target, h.target, h.target.maps[a], s, t);
        // arrow maps on the six interior nodes
        std::vector<FMor> arrow = {
            induced_on_kernels(m1, ss.ker_f, st.ker_f),       induced_on_kernels(m1, ss.ker_gf, st.ker_gf),
            induced_on_kernels(m2, ss.ker_g, st.ker_g),       induced_on_cokernels(m2, ss.cok_f, st.cok_f),
            induced_on_cokernels(m3, ss.cok_gf, st.cok_gf),   induced_on_cokernels(m3, ss.cok_g, st.cok_g)};
        for (std::size_t k = 0; k + 1 < arrow.size(); ++k) {
            const auto& step_s = ss.seq.maps[k + 1];
            const auto& step_t = st.seq.maps[k + 1];
            if (!(compose(step_t, arrow[k]) == compose(arrow[k + 1], step_s)))
                commute = false;
        }
    }
    return {exact, commute};
}

} // namespace

HaradaReport harada_sai_check(const HaradaChain& ch)
{
    const std::size_t L = ch.maps.size();
    if (ch.modules.size() != L + 1)
        throw PreconditionFailure("harada chain: needs one more module than maps");
    if (ch.n < 1)
        throw PreconditionFailure("harada chain: length bound must be positive");
    for (std::size_t i = 0; i < ch.modules.size(); ++i) {
        const auto& m = ch.modules[i];
        const std::string name = "M_" + std::to_string(i + 1);
        if (m.length() > ch.n)
            throw PreconditionFailure("harada chain: " + name + " has length " + std::to_string(m.length()) +
                                      " > n = " + std::to_string(ch.n));
        const auto v = is_indecomposable(m);
        if (v.verdict != Decomposability::Indecomposable)
            throw PreconditionFailure("harada chain: " + name + " indecomposability is " + to_string(v.verdict));
    }
    for (std::size_t i = 0; i < L; ++i) {
        const std::string name = "f_" + std::to_string(i + 1);
        const auto& f = ch.maps[i];
        if (!(f.source == ch.modules[i]) || !(f.target == ch.modules[i + 1]))
            throw PreconditionFailure("harada chain: " + name + " has the wrong endpoints");
        make_rep_morphism(f.source, f.target, f.comps);
        if (rep_is_iso(f))
            throw PreconditionFailure("harada chain: " + name + " is an isomorphism");
    }

    HaradaReport rep;
    // prefix[k] = f_k ∘ … ∘ f_1 (prefix[0] = id)
    std::vector<RepMorphism> prefix{rep_identity(ch.modules[0])};
    for (std::size_t i = 0; i < L; ++i) {
        prefix.push_back(rep_compose(ch.maps[i], prefix.back()));
        rep.prefix_lengths.push_back(rep_length_of_image(prefix.back()));
    }
    auto segment = [&](std::size_t from, std::size_t to) { // f_to ∘ … ∘ f_{from+1}: M_{from+1} → M_{to+1}
        auto out = rep_identity(ch.modules[from]);
        for (std::size_t i = from; i < to; ++i)
            out = rep_compose(ch.maps[i], out);
        return out;
    };
    for (int m = 1; (std::size_t{1} << m) - 1 <= L; ++m) {
        const std::size_t top = (std::size_t{1} << m) - 1;
        rep.bounds.push_back({m, rep.prefix_lengths[top - 1], ch.n - m});

        const std::size_t mid = (std::size_t{1} << (m - 1)) - 1;
        const auto& g = prefix[mid];
        auto h = segment(mid, top);
        auto hg = prefix[top];
        HaradaSplit s{};
        s.m = m;
        s.len_im_g = rep_length_of_image(g);
        s.len_im_h = rep_length_of_image(h);
        s.len_im_hg = rep_length_of_image(hg);
        const long long len_ker_g = g.source.length() - s.len_im_g;
        const long long len_ker_hg = hg.source.length() - s.len_im_hg;
        const long long len_cok_hg = hg.target.length() - s.len_im_hg;
        const long long len_cok_h = h.target.length() - s.len_im_h;
        // (*) is mono and (**) is epi, so each is iso exactly when lengths agree
        s.star_iso = len_ker_g == len_ker_hg;
        s.dstar_iso = len_cok_hg == len_cok_h;
        const auto [exact, commute] = six_term_by_vertex(g, h);
        s.vertexwise_exact = exact;
        s.arrows_commute = commute;
        if (!s.star_iso)
            s.case_ok = s.len_im_hg < s.len_im_g;
        else if (!s.dstar_iso)
            s.case_ok = s.len_im_hg < s.len_im_h;
        else {
            // delta iso: the middle module is ker h ⊕ im g, so one summand vanishes
            const long long len_ker_h = h.source.length() - s.len_im_h;
            s.case_ok = len_ker_h + s.len_im_g == h.source.length() && (len_ker_h == 0 || s.len_im_g == 0);
        }
        rep.splits.push_back(s);
    }
    const std::size_t full = (std::size_t{1} << std::min(ch.n, 62)) - 1;
    if (L >= full)
        rep.full_composite_zero = prefix[full].is_zero();
    return rep;
}

} // namespace kercok
