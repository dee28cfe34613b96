#include "slab/balg.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace slab {

namespace {

std::uint64_t full_mask(std::uint32_t n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

void sort_unique(std::vector<Index>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<Index> set_union(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::vector<Index> r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}
std::vector<Index> set_inter(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::vector<Index> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}
std::vector<Index> set_diff(const std::vector<Index>& a, const std::vector<Index>& b) {
    std::vector<Index> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

void check_same(const Shape& a, const Shape& b) {
    if (a != b) throw ShapeError("shape mismatch: " + shape_str(a) + " vs " + shape_str(b));
}

}  // namespace

std::string shape_str(const Shape& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        switch (s[i].kind) {
            case Kind::FinBlock: out += "fin " + std::to_string(s[i].n); break;
            case Kind::CompactSeq: out += "conv"; break;
            case Kind::DiscreteSeq: out += "disc"; break;
        }
    }
    return out;
}

// ---- SeqSet ----

SeqSet SeqSet::fin(std::vector<Index> v) {
    sort_unique(v);
    return {false, std::move(v)};
}
SeqSet SeqSet::cofin(std::vector<Index> v) {
    sort_unique(v);
    return {true, std::move(v)};
}
SeqSet SeqSet::range(Index lo, Index hi) {
    SeqSet s;
    for (Index i = lo; i < hi; ++i) s.pts.push_back(i);
    return s;
}
SeqSet SeqSet::cofin_below(Index k) {
    SeqSet s = range(0, k);
    s.cof = true;
    return s;
}

bool SeqSet::contains(Index i) const {
    bool listed = std::binary_search(pts.begin(), pts.end(), i);
    return cof ? !listed : listed;
}

bool SeqSet::subset_of(const SeqSet& o) const {
    return (*this - o).empty();
}

SeqSet operator|(const SeqSet& a, const SeqSet& b) {
    if (!a.cof && !b.cof) return {false, set_union(a.pts, b.pts)};
    if (a.cof && b.cof) return {true, set_inter(a.pts, b.pts)};
    const SeqSet& c = a.cof ? a : b;
    const SeqSet& f = a.cof ? b : a;
    return {true, set_diff(c.pts, f.pts)};
}

SeqSet operator&(const SeqSet& a, const SeqSet& b) {
    if (!a.cof && !b.cof) return {false, set_inter(a.pts, b.pts)};
    if (a.cof && b.cof) return {true, set_union(a.pts, b.pts)};
    const SeqSet& c = a.cof ? a : b;
    const SeqSet& f = a.cof ? b : a;
    return {false, set_diff(f.pts, c.pts)};
}

// ---- Elem ----

Elem Elem::zero(const Shape& s) {
    Elem e{s, std::vector<Part>(s.size())};
    return e;
}

Elem Elem::top(const Shape& s) {
    Elem e = zero(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i].is_seq()) e.parts[i].set = SeqSet::all();
        else e.parts[i].mask = full_mask(s[i].n);
    }
    return e;
}

Elem Elem::atom(const Shape& s, std::size_t block, Index i) {
    Elem e = zero(s);
    if (block >= s.size() || i < 0) throw ShapeError("atom out of range");
    if (s[block].is_seq()) e.parts[block].set = SeqSet::fin({i});
    else {
        if (i >= static_cast<Index>(s[block].n)) throw ShapeError("atom out of range");
        e.parts[block].mask = 1ULL << i;
    }
    return e;
}

Elem Elem::block_top(const Shape& s, std::size_t block) {
    Elem e = zero(s);
    if (s[block].is_seq()) e.parts[block].set = SeqSet::all();
    else e.parts[block].mask = full_mask(s[block].n);
    return e;
}

Elem Elem::tail(const Shape& s, std::size_t block, Index k) {
    return seq(s, block, SeqSet::cofin_below(k));
}

Elem Elem::seq(const Shape& s, std::size_t block, SeqSet set) {
    if (block >= s.size() || !s[block].is_seq()) throw ShapeError("not a sequence block");
    Elem e = zero(s);
    e.parts[block].set = std::move(set);
    return e;
}

bool Elem::is_zero() const {
    for (std::size_t i = 0; i < shape.size(); ++i) {
        if (shape[i].is_seq() ? !parts[i].set.empty() : parts[i].mask != 0) return false;
    }
    return true;
}

bool Elem::is_top() const { return *this == top(shape); }

Index Elem::bound() const {
    Index b = 0;
    for (std::size_t i = 0; i < shape.size(); ++i)
        if (shape[i].is_seq()) b = std::max(b, parts[i].set.bound());
    return b;
}

Elem meet(const Elem& a, const Elem& b) {
    check_same(a.shape, b.shape);
    Elem r = Elem::zero(a.shape);
    for (std::size_t i = 0; i < a.shape.size(); ++i) {
        if (a.shape[i].is_seq()) r.parts[i].set = a.parts[i].set & b.parts[i].set;
        else r.parts[i].mask = a.parts[i].mask & b.parts[i].mask;
    }
    return r;
}

Elem join(const Elem& a, const Elem& b) {
    check_same(a.shape, b.shape);
    Elem r = Elem::zero(a.shape);
    for (std::size_t i = 0; i < a.shape.size(); ++i) {
        if (a.shape[i].is_seq()) r.parts[i].set = a.parts[i].set | b.parts[i].set;
        else r.parts[i].mask = a.parts[i].mask | b.parts[i].mask;
    }
    return r;
}

Elem complement(const Elem& a) {
    Elem r = Elem::zero(a.shape);
    for (std::size_t i = 0; i < a.shape.size(); ++i) {
        if (a.shape[i].is_seq()) r.parts[i].set = a.parts[i].set.complement();
        else r.parts[i].mask = ~a.parts[i].mask & full_mask(a.shape[i].n);
    }
    return r;
}

Elem minus(const Elem& a, const Elem& b) { return meet(a, complement(b)); }

bool leq(const Elem& a, const Elem& b) {
    check_same(a.shape, b.shape);
    for (std::size_t i = 0; i < a.shape.size(); ++i) {
        if (a.shape[i].is_seq()) {
            if (!a.parts[i].set.subset_of(b.parts[i].set)) return false;
        } else if (a.parts[i].mask & ~b.parts[i].mask) {
            return false;
        }
    }
    return true;
}

bool holds_index(const Elem& a, std::size_t block, Index i) {
    if (a.shape[block].is_seq()) return a.parts[block].set.contains(i);
    return i >= 0 && i < 64 && ((a.parts[block].mask >> i) & 1ULL);
}

bool holds_limit(const Elem& a, std::size_t block) { return a.parts[block].set.cof; }

bool in_ideal(const Elem& a) {
    for (std::size_t i = 0; i < a.shape.size(); ++i)
        if (a.shape[i].kind == Kind::DiscreteSeq && a.parts[i].set.cof) return false;
    return true;
}

bool is_complete_algebra(const BlockAlgebra& A) {
    return std::none_of(A.blocks.begin(), A.blocks.end(), [](const Block& b) { return b.is_seq(); });
}

// ---- atoms ----

Elem AtomDescriptor::elem(const Shape& s) const { return Elem::atom(s, block, index); }

std::vector<AtomDescriptor> described_atoms(const Shape& s, Index n) {
    std::vector<AtomDescriptor> out;
    for (std::size_t b = 0; b < s.size(); ++b) {
        if (s[b].is_seq()) {
            for (Index i = 0; i < n; ++i) out.push_back({b, i, false});
            out.push_back({b, n, true});
        } else {
            for (Index i = 0; i < static_cast<Index>(s[b].n); ++i) out.push_back({b, i, false});
        }
    }
    return out;
}

std::optional<AtomDescriptor> atom_below(const Elem& a) {
    for (std::size_t b = 0; b < a.shape.size(); ++b) {
        if (a.shape[b].is_seq()) {
            const SeqSet& s = a.parts[b].set;
            if (s.empty()) continue;
            if (!s.cof) return AtomDescriptor{b, s.pts.front(), false};
            Index i = 0;
            while (!s.contains(i)) ++i;
            return AtomDescriptor{b, i, false};
        }
        if (a.parts[b].mask) return AtomDescriptor{b, std::countr_zero(a.parts[b].mask), false};
    }
    return std::nullopt;
}

bool is_atom(const Elem& a) {
    int seen = 0;
    for (std::size_t b = 0; b < a.shape.size(); ++b) {
        if (a.shape[b].is_seq()) {
            const SeqSet& s = a.parts[b].set;
            if (s.cof) return false;
            seen += static_cast<int>(s.pts.size());
        } else {
            seen += std::popcount(a.parts[b].mask);
        }
    }
    return seen == 1;
}

Elem compact_cover(const Shape& s, Index m) {
    Elem e = Elem::zero(s);
    for (std::size_t b = 0; b < s.size(); ++b) {
        if (s[b].kind == Kind::DiscreteSeq) e.parts[b].set = SeqSet::range(0, m);
        else if (s[b].kind == Kind::CompactSeq) e.parts[b].set = SeqSet::all();
        else e.parts[b].mask = full_mask(s[b].n);
    }
    return e;
}

std::vector<Elem> ideal_generators(const Shape& s, Index m) {
    std::vector<Elem> out;
    for (std::size_t b = 0; b < s.size(); ++b) {
        if (s[b].kind == Kind::DiscreteSeq) {
            for (Index i = 0; i < m; ++i) out.push_back(Elem::atom(s, b, i));
        } else {
            out.push_back(Elem::block_top(s, b));
        }
    }
    return out;
}

// ---- representable ideals ----

RepIdeal RepIdeal::zero(const Shape& s) { return {s, std::vector<IdealPart>(s.size())}; }

RepIdeal RepIdeal::whole(const Shape& s) {
    RepIdeal J = zero(s);
    for (std::size_t b = 0; b < s.size(); ++b) {
        switch (s[b].kind) {
            case Kind::FinBlock: J.parts[b].mask = full_mask(s[b].n); break;
            case Kind::CompactSeq: J.parts[b].set = SeqSet::all(); break;
            case Kind::DiscreteSeq: J.parts[b] = {IdealPart::FinOf, 0, SeqSet::all()}; break;
        }
    }
    return J;
}

RepIdeal RepIdeal::down(const Elem& a) {
    if (!in_ideal(a)) throw ShapeError("down-set generator outside the ideal");
    RepIdeal J = zero(a.shape);
    for (std::size_t b = 0; b < a.shape.size(); ++b) {
        J.parts[b].mask = a.parts[b].mask;
        J.parts[b].set = a.parts[b].set;
    }
    return J;
}

RepIdeal RepIdeal::fin_of(const Shape& s, std::size_t block, SeqSet S) {
    RepIdeal J = zero(s);
    J.parts[block] = {IdealPart::FinOf, 0, std::move(S)};
    return normalize(J);
}

RepIdeal normalize(RepIdeal J) {
    for (std::size_t b = 0; b < J.shape.size(); ++b) {
        IdealPart& p = J.parts[b];
        if (!J.shape[b].is_seq()) {
            p.form = IdealPart::Down;
            p.mask &= full_mask(J.shape[b].n);
            p.set = {};
        } else {
            p.mask = 0;
            if (p.form == IdealPart::FinOf && p.set.finite()) p.form = IdealPart::Down;
            if (p.form == IdealPart::Down && J.shape[b].kind == Kind::DiscreteSeq && p.set.cof)
                throw ShapeError("cofinite down-set on a discrete block is not in the ideal");
        }
    }
    return J;
}

bool RepIdeal::contains(const Elem& a) const {
    check_same(shape, a.shape);
    if (!in_ideal(a)) return false;
    for (std::size_t b = 0; b < shape.size(); ++b) {
        const IdealPart& p = parts[b];
        if (!shape[b].is_seq()) {
            if (a.parts[b].mask & ~p.mask) return false;
        } else if (p.form == IdealPart::Down) {
            if (!a.parts[b].set.subset_of(p.set)) return false;
        } else {
            if (a.parts[b].set.cof || !a.parts[b].set.subset_of(p.set)) return false;
        }
    }
    return true;
}

namespace {

IdealPart part_join(const Block& blk, const IdealPart& x, const IdealPart& y) {
    if (!blk.is_seq()) return {IdealPart::Down, x.mask | y.mask, {}};
    if (x.form == IdealPart::Down && y.form == IdealPart::Down) return {IdealPart::Down, 0, x.set | y.set};
    if (x.form == IdealPart::FinOf && y.form == IdealPart::FinOf) return {IdealPart::FinOf, 0, x.set | y.set};
    const IdealPart& d = x.form == IdealPart::Down ? x : y;
    const IdealPart& f = x.form == IdealPart::Down ? y : x;
    // finite generator: absorbed into the index set; cofinite generator (with limit) swallows the rest
    if (d.set.finite()) return {IdealPart::FinOf, 0, f.set | d.set};
    return {IdealPart::Down, 0, d.set | f.set};
}

IdealPart part_meet(const Block& blk, const IdealPart& x, const IdealPart& y) {
    if (!blk.is_seq()) return {IdealPart::Down, x.mask & y.mask, {}};
    if (x.form == IdealPart::Down && y.form == IdealPart::Down) return {IdealPart::Down, 0, x.set & y.set};
    return {IdealPart::FinOf, 0, x.set & y.set};
}

IdealPart part_neg(const Block& blk, const IdealPart& x) {
    if (!blk.is_seq()) return {IdealPart::Down, ~x.mask & full_mask(blk.n), {}};
    if (x.form == IdealPart::FinOf) return {IdealPart::Down, 0, x.set.complement()};
    if (x.set.cof) return {IdealPart::Down, 0, x.set.complement()};
    if (blk.kind == Kind::CompactSeq) return {IdealPart::Down, 0, x.set.complement()};
    return {IdealPart::FinOf, 0, x.set.complement()};
}

template <class F>
RepIdeal zip_parts(const RepIdeal& J, const RepIdeal& K, F f) {
    check_same(J.shape, K.shape);
    RepIdeal R = RepIdeal::zero(J.shape);
    for (std::size_t b = 0; b < J.shape.size(); ++b) R.parts[b] = f(J.shape[b], J.parts[b], K.parts[b]);
    return normalize(R);
}

}  // namespace

RepIdeal ideal_join(const RepIdeal& J, const RepIdeal& K) { return zip_parts(J, K, part_join); }
RepIdeal ideal_meet(const RepIdeal& J, const RepIdeal& K) { return zip_parts(J, K, part_meet); }

RepIdeal neg_ideal(const RepIdeal& J) {
    RepIdeal R = RepIdeal::zero(J.shape);
    for (std::size_t b = 0; b < J.shape.size(); ++b) R.parts[b] = part_neg(J.shape[b], J.parts[b]);
    return normalize(R);
}

bool ideal_leq(const RepIdeal& J, const RepIdeal& K) { return ideal_meet(J, K) == normalize(J); }

bool is_simple_ideal(const RepIdeal& J) {
    return ideal_join(J, neg_ideal(J)) == RepIdeal::whole(J.shape);
}

bool is_normal_ideal(const RepIdeal& J) { return neg_ideal(neg_ideal(J)) == normalize(J); }

bool is_principal_ideal(const RepIdeal& J) {
    RepIdeal N = normalize(J);
    return std::all_of(N.parts.begin(), N.parts.end(), [](const IdealPart& p) { return p.form == IdealPart::Down; });
}

Elem sigma_iso(const RepIdeal& J) {
    if (!is_simple_ideal(J)) throw NoRepresentableResult("sigma: ideal is not simple");
    RepIdeal N = normalize(J);
    Elem e = Elem::zero(J.shape);
    for (std::size_t b = 0; b < J.shape.size(); ++b) {
        if (!J.shape[b].is_seq()) e.parts[b].mask = N.parts[b].mask;
        else e.parts[b].set = N.parts[b].form == IdealPart::Down ? N.parts[b].set : SeqSet{true, N.parts[b].set.pts};
    }
    return e;
}

RepIdeal e_embed(const Elem& a) { return RepIdeal::down(a); }

RepIdeal sigma_inverse(const Elem& b) {
    RepIdeal J = RepIdeal::zero(b.shape);
    for (std::size_t i = 0; i < b.shape.size(); ++i) {
        if (!b.shape[i].is_seq()) J.parts[i].mask = b.parts[i].mask;
        else if (b.shape[i].kind == Kind::DiscreteSeq && b.parts[i].set.cof) J.parts[i] = {IdealPart::FinOf, 0, b.parts[i].set};
        else J.parts[i].set = b.parts[i].set;
    }
    return normalize(J);
}

// ---- sup of singleton families ----

bool IndexPattern::contains(Index i) const {
    if (std::find(finite.begin(), finite.end(), i) != finite.end()) return true;
    for (const Prog& p : progs)
        if (i >= p.offset && (i - p.offset) % p.stride == 0) return true;
    return false;
}

std::optional<SeqSet> IndexPattern::as_seqset() const {
    Index period = 1, start = 0;
    for (const Prog& p : progs) {
        period = std::lcm(period, p.stride);
        start = std::max(start, p.offset + 1);
    }
    for (Index f : finite) start = std::max(start, f + 1);
    int hits = 0;
    for (Index i = start; i < start + period; ++i) hits += contains(i) ? 1 : 0;
    std::vector<Index> listed;
    if (hits == 0 || progs.empty()) {
        for (Index i = 0; i < start; ++i)
            if (contains(i)) listed.push_back(i);
        return SeqSet::fin(listed);
    }
    if (hits != period) return std::nullopt;
    for (Index i = 0; i < start; ++i)
        if (!contains(i)) listed.push_back(i);
    return SeqSet::cofin(listed);
}

std::optional<Elem> sup_of_singletons(const Shape& s, std::size_t block, const IndexPattern& p) {
    auto u = p.as_seqset();
    if (!u) return std::nullopt;
    return Elem::seq(s, block, *u);
}

}  // namespace slab
