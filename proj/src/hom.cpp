#include "slab/hom.hpp"

#include <algorithm>
#include <numeric>

namespace slab {

Hom hom_of(const GenMap& f) { return {BlockAlgebra{f.dst}, BlockAlgebra{f.src}, f}; }

Hom identity_hom(const BlockAlgebra& A) { return hom_of(identity_map(A.blocks)); }

Hom compose(const Hom& psi, const Hom& phi) {
    if (!(phi.dst == psi.src)) throw ShapeError("homomorphisms are not composable");
    return {phi.src, psi.dst, compose(phi.spectral, psi.spectral)};
}

Window window_of(const GenMap& f) {
    Window w;
    Index c = 0;
    auto see = [&](Index v) { c = std::max(c, v); };
    auto see_point = [&](const ExtPoint& p) {
        if (p.type == ExtPoint::Iso) see(p.index);
    };
    for (const BlockRule& r : f.rules) {
        for (const auto& [n, p] : r.except) {
            see(n);
            see_point(p);
        }
        if (r.tail.type == TailRule::Const) see_point(r.tail.point);
        if (r.tail.type == TailRule::Affine) {
            see(r.tail.threshold);
            see(r.tail.offset);
            w.stride = std::max(w.stride, r.tail.stride);
            w.period = std::lcm(w.period, r.tail.stride);
        }
    }
    w.c = c + 1;
    w.x = w.c + 2 * w.period + 2;
    w.y = w.stride * w.x + w.c + 2;
    return w;
}

std::vector<Elem> shape_elements(const Shape& s, Index w, bool ideal_only) {
    std::vector<Elem> out{Elem::zero(s)};
    std::vector<std::vector<Part>> local(s.size());
    for (std::size_t b = 0; b < s.size(); ++b) {
        const Block& B = s[b];
        auto& v = local[b];
        if (!B.is_seq()) {
            std::uint64_t full = B.n >= 64 ? ~0ULL : (1ULL << B.n) - 1;
            if (B.n <= 4) {
                for (std::uint64_t m = 1; m <= full; ++m) v.push_back({m, {}});
            } else {
                for (std::uint32_t i = 0; i < B.n; ++i) v.push_back({1ULL << i, {}});
                v.push_back({full, {}});
            }
            continue;
        }
        for (Index i = 0; i < w; ++i) v.push_back({0, SeqSet::fin({i})});
        v.push_back({0, SeqSet::fin({0, 1})});
        v.push_back({0, SeqSet::range(0, w)});
        if (ideal_only && B.kind == Kind::DiscreteSeq) continue;
        for (Index k = 0; k <= w; ++k) v.push_back({0, SeqSet::cofin_below(k)});
        v.push_back({0, SeqSet::cofin({1})});
        v.push_back({0, SeqSet::cofin({0, 2})});
    }
    for (std::size_t b = 0; b < s.size(); ++b)
        for (const Part& p : local[b]) {
            Elem e = Elem::zero(s);
            e.parts[b] = p;
            out.push_back(e);
        }
    // a few cross-block combinations
    for (std::size_t b = 0; b < s.size(); ++b)
        for (std::size_t c = b + 1; c < s.size(); ++c) {
            if (local[b].empty() || local[c].empty()) continue;
            for (std::size_t i = 0; i < local[b].size(); i += 3)
                for (std::size_t j = 0; j < local[c].size(); j += 3) {
                    Elem e = Elem::zero(s);
                    e.parts[b] = local[b][i];
                    e.parts[c] = local[c][j];
                    out.push_back(e);
                }
        }
    Elem all = Elem::zero(s);
    for (std::size_t b = 0; b < s.size(); ++b)
        if (!local[b].empty()) all.parts[b] = local[b].back();
    out.push_back(all);
    if (!ideal_only || std::none_of(s.begin(), s.end(), [](const Block& B) { return B.kind == Kind::DiscreteSeq; }))
        out.push_back(Elem::top(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

RelativeAlgebra relative_algebra(const BlockAlgebra& A, const Elem& a) {
    if (a.shape != A.blocks) throw ShapeError("element does not belong to the algebra");
    Subspace sub = clopen_subspace(A.blocks, a);
    BlockAlgebra R{sub.space.blocks};
    return {R, Hom{A, R, sub.embedding}, sub.embedding};
}

std::optional<Elem> zlba_witness(const Hom& phi) {
    Window w = window_of(phi.spectral);
    Elem big = phi.apply(compact_cover(phi.src.blocks, w.y));
    for (const Elem& a : ideal_generators(phi.dst.blocks, w.x))
        if (!leq(a, big)) return a;
    return std::nullopt;
}

Elem PseudoHom::apply(const Elem& c) const {
    if (!in_ideal(c)) throw ShapeError("argument lies outside the ideal");
    return preimage(carrier, c);
}

std::optional<Elem> sup_of_images(const PseudoHom& psi, const Elem& b) {
    // The chain psi(b & K_m) grows to the set of points whose carrier image
    // is real and lies in b; its least clopen bound keeps the same indices.
    const GenMap& g = psi.carrier;
    Elem e = preimage(g, b);
    for (std::size_t s = 0; s < g.src.size(); ++s) {
        const BlockRule& r = g.rules[s];
        if (!g.src[s].is_seq()) {
            for (const auto& [n, p] : r.except)
                if (p.type == ExtPoint::Virtual) e.parts[s].mask &= ~(1ULL << n);
            continue;
        }
        std::vector<Index> drop, keys, keep;
        for (const auto& [n, p] : r.except) {
            keys.push_back(n);
            if (p.type == ExtPoint::Virtual) drop.push_back(n);
            else if (contains_point(b, p)) keep.push_back(n);
        }
        SeqSet& set = e.parts[s].set;
        if (r.tail.type == TailRule::Const && r.tail.point.type == ExtPoint::Virtual) set = SeqSet::fin(keep);
        else set = set - SeqSet::fin(drop);
    }
    return e;
}

ExtensionResult extend_pseudolattice_hom(const PseudoHom& psi) {
    ExtensionResult res;
    if (psi.carrier.src != psi.dst.blocks || psi.carrier.dst != psi.src.blocks) {
        res.error = "carrier shape does not match the algebras";
        return res;
    }
    MapCheck shape = check_shape(psi.carrier);
    if (!shape) {
        res.error = "malformed carrier: " + shape.message;
        return res;
    }
    Window w = window_of(psi.carrier);
    auto sample = shape_elements(psi.src.blocks, std::min<Index>(w.y, 12), true);
    if (!psi.apply(Elem::zero(psi.src.blocks)).is_zero()) {
        res.error = "psi(0) is not 0";
        return res;
    }
    for (const Elem& c : sample)
        for (const Elem& d : sample) {
            if (psi.apply(meet(c, d)) != meet(psi.apply(c), psi.apply(d)) ||
                psi.apply(join(c, d)) != join(psi.apply(c), psi.apply(d))) {
                res.error = "psi is not a pseudolattice homomorphism";
                res.witness = {c, d};
                return res;
            }
        }
    Elem big = psi.apply(compact_cover(psi.src.blocks, w.y));
    for (const Elem& a : ideal_generators(psi.dst.blocks, w.x))
        if (!leq(a, big)) {
            res.error = "psi violates the covering condition";
            res.witness = {a};
            return res;
        }
    Hom phi{psi.src, psi.dst, normalize(psi.carrier)};
    for (const Elem& b : shape_elements(psi.src.blocks, std::min<Index>(w.y, 12))) {
        auto s = sup_of_images(psi, b);
        if (!s || *s != phi.apply(b)) {
            res.error = "sup construction disagrees with the spectral action";
            res.witness = {b};
            return res;
        }
    }
    res.phi = phi;
    return res;
}

}  // namespace slab
