#include "slab/duality.hpp"

#include <algorithm>

namespace slab {

BlockAlgebra theta_t_obj(const BlockSpace& X) { return BlockAlgebra{X.blocks}; }

Hom theta_t_map(const GenMap& f) {
    MapCheck c = validate_map(f);
    if (!c) throw ShapeError("not a continuous map: " + c.message);
    return hom_of(normalize(f));
}

bool Ultrafilter::contains(const Elem& a) const {
    if (cofinite) return a.parts.at(block).set.cof;
    return holds_index(a, block, index);
}

bool is_bounded(const Shape& s, const Ultrafilter& u) { return !u.cofinite || s.at(u.block).kind == Kind::CompactSeq; }

ExtPoint point_of(const Shape& s, const Ultrafilter& u) {
    if (!u.cofinite) return ExtPoint::iso(u.block, u.index);
    return s.at(u.block).kind == Kind::CompactSeq ? ExtPoint::limit(u.block) : ExtPoint::virt(u.block);
}

Ultrafilter ultrafilter_of(const ExtPoint& p) {
    return p.type == ExtPoint::Iso ? Ultrafilter::principal(p.block, p.index) : Ultrafilter::cofin(p.block);
}

BlockSpace theta_a_obj(const BlockAlgebra& A) {
    // Bounded ultrafilters: principal ones everywhere, cofinite ones on
    // CompactSeq blocks. The block list is therefore unchanged.
    return BlockSpace{A.blocks};
}

Ultrafilter pull_back(const Hom& phi, const Ultrafilter& u, Index limit) {
    const Shape& s = phi.src.blocks;
    auto in = [&](const Elem& b) { return u.contains(phi.apply(b)); };
    for (std::size_t b = 0; b < s.size(); ++b) {
        if (!in(Elem::block_top(s, b))) continue;
        if (!s[b].is_seq()) {
            for (Index i = 0; i < static_cast<Index>(s[b].n); ++i)
                if (in(Elem::atom(s, b, i))) return Ultrafilter::principal(b, i);
            throw ShapeError("pull back is not an ultrafilter");
        }
        Index hi = limit;
        if (!in(Elem::seq(s, b, SeqSet::range(0, hi)))) return Ultrafilter::cofin(b);
        Index lo = 0;  // in(range(0, lo)) false, in(range(0, hi)) true
        while (hi - lo > 1) {
            Index mid = lo + (hi - lo) / 2;
            (in(Elem::seq(s, b, SeqSet::range(0, mid))) ? hi : lo) = mid;
        }
        return Ultrafilter::principal(b, lo);
    }
    throw ShapeError("pull back contains no block");
}

SpectralResult theta_a_map(const Hom& phi) {
    const Shape& X = phi.dst.blocks;
    const Shape& Y = phi.src.blocks;
    SpectralResult res;
    res.map = GenMap{X, Y, std::vector<BlockRule>(X.size())};
    Window w = window_of(phi.spectral);
    const Index limit = w.stride * (w.x + 2) + w.c + 2;
    auto classify = [&](const Ultrafilter& u) {
        Ultrafilter v = pull_back(phi, u, limit);
        if (is_bounded(X, u) && !is_bounded(Y, v)) res.generalized = true;
        return point_of(Y, v);
    };
    for (std::size_t b = 0; b < X.size(); ++b) {
        BlockRule& r = res.map.rules[b];
        if (!X[b].is_seq()) {
            for (Index i = 0; i < static_cast<Index>(X[b].n); ++i) r.except[i] = classify(Ultrafilter::principal(b, i));
            continue;
        }
        const Index W = w.x + 2;
        std::vector<ExtPoint> v;
        for (Index n = 0; n < W; ++n) v.push_back(classify(Ultrafilter::principal(b, n)));
        const ExtPoint& last = v[W - 1];
        const ExtPoint& prev = v[W - 2];
        Index t = W - 1;
        if (last == prev) {
            while (t > 0 && v[t - 1] == last) --t;
            r.tail = TailRule::constant(last);
        } else if (last.type == ExtPoint::Iso && prev.type == ExtPoint::Iso && last.block == prev.block && last.index > prev.index) {
            Index s = last.index - prev.index;
            auto on_line = [&](Index n) {
                return v[n].type == ExtPoint::Iso && v[n].block == last.block && v[n].index == last.index - s * (W - 1 - n);
            };
            while (t > 0 && on_line(t - 1)) --t;
            r.tail = TailRule::affine(last.block, s, v[t].index, t);
        } else {
            throw ShapeError("tail does not settle inside the window");
        }
        for (Index n = 0; n < t; ++n) r.except[n] = v[n];
        if (X[b].kind == Kind::CompactSeq) {
            ExtPoint lim = classify(Ultrafilter::cofin(b));
            if (lim != eval_limit(res.map, b)) throw ShapeError("limit behaviour contradicts the fitted tail");
        }
    }
    res.map = normalize(res.map);
    return res;
}

namespace {

std::vector<ExtPoint> sample_points(const Shape& s, Index w) {
    std::vector<ExtPoint> pts;
    for (std::size_t b = 0; b < s.size(); ++b) {
        Index n = s[b].is_seq() ? w : static_cast<Index>(s[b].n);
        for (Index i = 0; i < n; ++i) pts.push_back(ExtPoint::iso(b, i));
        if (s[b].kind == Kind::CompactSeq) pts.push_back(ExtPoint::limit(b));
    }
    return pts;
}

void law(IsoWitness& w, const std::string& name, bool ok) {
    w.laws.push_back(name);
    if (!ok) w.failures.push_back(name);
}

}  // namespace

IsoWitness nat_iso_tC(const BlockSpace& X) {
    IsoWitness w;
    BlockAlgebra A = theta_t_obj(X);
    BlockSpace X2 = theta_a_obj(A);
    w.forward = identity_map(X.blocks);
    w.forward.dst = X2.blocks;
    w.backward = identity_map(X2.blocks);
    w.backward.dst = X.blocks;
    const Index W = 10;
    auto elems = shape_elements(A.blocks, W);
    auto pts = sample_points(X.blocks, W + 2);
    bool agree = true, bounded = true;
    for (const ExtPoint& x : pts) {
        ExtPoint y = eval_ext(w.forward, x);
        Ultrafilter u = ultrafilter_of(y);
        bounded &= is_bounded(X2.blocks, u);
        for (const Elem& a : elems) agree &= contains_point(a, x) == u.contains(a);
    }
    law(w, "point ultrafilters classify to the image point", agree);
    law(w, "images are bounded ultrafilters", bounded);
    law(w, "backward after forward is the identity", normalize(compose(w.backward, w.forward)) == normalize(identity_map(X.blocks)));
    law(w, "forward after backward is the identity", normalize(compose(w.forward, w.backward)) == normalize(identity_map(X2.blocks)));
    law(w, "forward is a homeomorphism", validate_map(w.forward) && is_embedding(w.forward) && is_surjective(w.forward) && is_open(w.forward));
    return w;
}

namespace {

// lambda(a): the bounded ultrafilters containing a, read off by probing.
Elem lambda_of(const Shape& s, const Elem& a) {
    Elem e = Elem::zero(s);
    for (std::size_t b = 0; b < s.size(); ++b) {
        if (!s[b].is_seq()) {
            for (Index i = 0; i < static_cast<Index>(s[b].n); ++i)
                if (Ultrafilter::principal(b, i).contains(a)) e.parts[b].mask |= 1ULL << i;
            continue;
        }
        Index bound = a.parts[b].set.bound();
        bool cof = Ultrafilter::cofin(b).contains(a);
        std::vector<Index> listed;
        for (Index i = 0; i < bound; ++i)
            if (Ultrafilter::principal(b, i).contains(a) != cof) listed.push_back(i);
        e.parts[b].set = cof ? SeqSet::cofin(listed) : SeqSet::fin(listed);
    }
    return e;
}

}  // namespace

IsoWitness nat_iso_lambdaC(const BlockAlgebra& A) {
    IsoWitness w;
    BlockSpace X = theta_a_obj(A);
    w.forward = identity_map(A.blocks);
    w.backward = identity_map(X.blocks);
    auto elems = shape_elements(A.blocks, 8);
    bool exact = true, hom = true, ideal = true;
    for (const Elem& a : elems) {
        Elem la = lambda_of(X.blocks, a);
        exact &= la == a;
        ideal &= in_ideal(a) == set_is_compact(PointSet::of(la));
        hom &= lambda_of(X.blocks, complement(a)) == complement(la);
    }
    for (std::size_t i = 0; i < elems.size(); i += 2)
        for (std::size_t j = 1; j < elems.size(); j += 3) {
            hom &= lambda_of(X.blocks, meet(elems[i], elems[j])) == meet(lambda_of(X.blocks, elems[i]), lambda_of(X.blocks, elems[j]));
            hom &= lambda_of(X.blocks, join(elems[i], elems[j])) == join(lambda_of(X.blocks, elems[i]), lambda_of(X.blocks, elems[j]));
        }
    law(w, "lambda is bijective onto clopens", exact);
    law(w, "lambda is a Boolean homomorphism", hom);
    law(w, "lambda carries the ideal onto compact clopens", ideal);
    return w;
}

GBPL E_a(const BlockAlgebra& A) { return GBPL{A.blocks}; }

BlockAlgebra E_b(const GBPL& I) {
    // Simple ideals per block: all down-sets on compact blocks, FinOf(S)
    // with S finite or cofinite on DiscreteSeq blocks. Sigma sends them to
    // the matching element of the same block shape.
    return BlockAlgebra{I.shape};
}

IsoWitness sigma_round_trip(const BlockAlgebra& A) {
    IsoWitness w;
    w.forward = identity_map(A.blocks);
    w.backward = identity_map(A.blocks);
    bool simple = true, inverse = true, embed = true, order = true;
    auto elems = shape_elements(A.blocks, 8);
    for (const Elem& a : elems) {
        RepIdeal J = sigma_inverse(a);
        simple &= is_simple_ideal(J);
        try {
            inverse &= sigma_iso(J) == a;
        } catch (const NoRepresentableResult&) {
            inverse = false;
        }
        if (in_ideal(a)) embed &= e_embed(a) == J;
    }
    for (std::size_t i = 0; i < elems.size(); i += 2)
        for (std::size_t j = 1; j < elems.size(); j += 3)
            order &= leq(elems[i], elems[j]) == ideal_leq(sigma_inverse(elems[i]), sigma_inverse(elems[j]));
    law(w, "sigma inverse lands in simple ideals", simple);
    law(w, "sigma after sigma inverse is the identity", inverse);
    law(w, "principal ideals agree with e", embed);
    law(w, "sigma inverse is an order embedding", order);
    return w;
}

ExtensionResult E_b_map(const PseudoHom& psi) { return extend_pseudolattice_hom(psi); }

GBPL theta_g(const BlockSpace& X) { return GBPL{X.blocks}; }

PointSet iota_ideal(const RepIdeal& J) {
    PointSet U = PointSet::empty(J.shape);
    for (std::size_t b = 0; b < J.shape.size(); ++b) {
        const IdealPart& p = J.parts[b];
        PointSet::Part& u = U.parts[b];
        if (!J.shape[b].is_seq()) {
            u.mask = p.mask;
            continue;
        }
        u.nat = p.set;
        u.limit = p.form == IdealPart::Down && p.set.cof && J.shape[b].kind == Kind::CompactSeq;
    }
    return U;
}

GMapResult theta_g_map(const GenMap& f) {
    GMapResult r;
    MapCheck c = validate_map(f);
    if (!c) throw ShapeError("not a continuous map: " + c.message);
    if (auto w = noncompact_preimage_witness(f)) {
        r.witness = *w;
        return r;
    }
    if (!is_closed_map(f)) throw ShapeError("closed-map test and witness search disagree");
    r.psi = PseudoHom{BlockAlgebra{f.dst}, BlockAlgebra{f.src}, normalize(f)};
    return r;
}

}  // namespace slab
