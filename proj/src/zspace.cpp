#include "slab/zspace.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace slab {

namespace {

constexpr Index kMaxIndex = Index{1} << 40;

Index ceil_div(Index a, Index b) { return (a + b - 1) / b; }

void guard(Index v) {
    if (v < 0 || v > kMaxIndex) throw ShapeError("index arithmetic out of range");
}

// Finite part of a map: explicit (source, image) pairs. Tail pieces cover
// every index >= n0 of a sequence block with one uniform rule.
struct Piece {
    ExtPoint src, img;
};
struct TailPiece {
    std::size_t block;
    Index n0;
    TailRule rule;
};
struct Anatomy {
    std::vector<Piece> pieces;
    std::vector<TailPiece> tails;
};

Index tail_start(const BlockRule& r) {
    Index n0 = r.tail.type == TailRule::Affine ? r.tail.threshold : 0;
    if (!r.except.empty()) n0 = std::max(n0, r.except.rbegin()->first + 1);
    return n0;
}

Anatomy anatomy(const GenMap& f) {
    Anatomy a;
    for (std::size_t b = 0; b < f.src.size(); ++b) {
        const BlockRule& r = f.rules[b];
        if (!f.src[b].is_seq()) {
            for (const auto& [n, p] : r.except) a.pieces.push_back({ExtPoint::iso(b, n), p});
            continue;
        }
        for (const auto& [n, p] : r.except) a.pieces.push_back({ExtPoint::iso(b, n), p});
        Index n0 = tail_start(r);
        if (r.tail.type == TailRule::Affine) {
            for (Index n = r.tail.threshold; n < n0; ++n)
                if (!r.except.count(n)) a.pieces.push_back({ExtPoint::iso(b, n), ExtPoint::iso(r.tail.block, r.tail.at(n))});
        }
        a.tails.push_back({b, n0, r.tail});
        if (f.src[b].kind == Kind::CompactSeq) a.pieces.push_back({ExtPoint::limit(b), eval_limit(f, b)});
    }
    return a;
}

bool prog_has(Index stride, Index first, Index i) { return i >= first && (i - first) % stride == 0; }

bool progs_meet(Index s1, Index f1, Index s2, Index f2) {
    Index g = std::gcd(s1, s2);
    return ((f2 - f1) % g + g) % g == 0;
}

}  // namespace

bool is_compact(const BlockSpace& X) {
    return std::none_of(X.blocks.begin(), X.blocks.end(), [](const Block& b) { return b.kind == Kind::DiscreteSeq; });
}

std::string point_str(const ExtPoint& p) {
    switch (p.type) {
        case ExtPoint::Iso: return std::to_string(p.block) + "." + std::to_string(p.index);
        case ExtPoint::Limit: return std::to_string(p.block) + ".inf";
        case ExtPoint::Virtual: return std::to_string(p.block) + ".vlim";
    }
    return "?";
}

// ---- validation ----

namespace {

MapCheck fail(MapCheck::Status s, std::size_t b, std::optional<Index> i, std::string msg) {
    MapCheck c;
    c.status = s;
    c.block = b;
    c.index = i;
    c.message = std::move(msg);
    return c;
}

bool point_ok(const Shape& dst, const ExtPoint& p) {
    if (p.block >= dst.size()) return false;
    const Block& B = dst[p.block];
    switch (p.type) {
        case ExtPoint::Iso: return p.index >= 0 && (B.is_seq() ? p.index <= kMaxIndex : p.index < static_cast<Index>(B.n));
        case ExtPoint::Limit: return B.kind == Kind::CompactSeq;
        case ExtPoint::Virtual: return B.kind == Kind::DiscreteSeq;
    }
    return false;
}

}  // namespace

MapCheck check_shape(const GenMap& f) {
    if (f.rules.size() != f.src.size()) return fail(MapCheck::ShapeError, 0, {}, "rule count differs from source block count");
    for (std::size_t b = 0; b < f.src.size(); ++b) {
        const BlockRule& r = f.rules[b];
        for (const auto& [n, p] : r.except) {
            if (n < 0) return fail(MapCheck::ShapeError, b, n, "negative index");
            if (!point_ok(f.dst, p)) return fail(MapCheck::ShapeError, b, n, "target point out of range: " + point_str(p));
        }
        if (!f.src[b].is_seq()) {
            if (r.tail.type != TailRule::None) return fail(MapCheck::ShapeError, b, {}, "finite block takes no tail rule");
            for (Index n = 0; n < static_cast<Index>(f.src[b].n); ++n)
                if (!r.except.count(n)) return fail(MapCheck::ShapeError, b, n, "finite block table is not total");
            if (!r.except.empty() && r.except.rbegin()->first >= static_cast<Index>(f.src[b].n))
                return fail(MapCheck::ShapeError, b, r.except.rbegin()->first, "index beyond finite block");
            continue;
        }
        const TailRule& t = r.tail;
        if (t.type == TailRule::None) return fail(MapCheck::ShapeError, b, {}, "sequence block needs a tail rule");
        if (t.type == TailRule::Const && !point_ok(f.dst, t.point))
            return fail(MapCheck::ShapeError, b, {}, "tail point out of range: " + point_str(t.point));
        if (t.type == TailRule::Affine) {
            if (t.block >= f.dst.size() || !f.dst[t.block].is_seq())
                return fail(MapCheck::ShapeError, b, {}, "affine tail must land in a sequence block");
            if (t.stride < 1 || t.offset < 0 || t.threshold < 0)
                return fail(MapCheck::ShapeError, b, {}, "affine tail needs stride >= 1, offset >= 0, threshold >= 0");
            if (t.stride > kMaxIndex || t.offset > kMaxIndex || t.threshold > kMaxIndex)
                return fail(MapCheck::ShapeError, b, {}, "affine tail constant out of range");
            for (Index n = 0; n < t.threshold; ++n)
                if (!r.except.count(n)) return fail(MapCheck::ShapeError, b, n, "index below the tail threshold has no entry");
        }
    }
    return {};
}

MapCheck validate_map(const GenMap& f) {
    MapCheck c = check_shape(f);
    if (!c) return c;
    for (std::size_t b = 0; b < f.src.size(); ++b) {
        const BlockRule& r = f.rules[b];
        for (const auto& [n, p] : r.except)
            if (p.type == ExtPoint::Virtual) return fail(MapCheck::RealnessError, b, n, "point sent to a virtual limit");
        if (r.tail.type == TailRule::Const && r.tail.point.type == ExtPoint::Virtual)
            return fail(MapCheck::RealnessError, b, {}, "tail sent to a virtual limit");
        if (f.src[b].kind == Kind::CompactSeq && r.tail.type == TailRule::Affine && f.dst[r.tail.block].kind == Kind::DiscreteSeq)
            return fail(MapCheck::ContinuityError, b, {}, "convergent sequence sent onto a discrete progression");
    }
    return {};
}

bool is_real(const GenMap& f) { return static_cast<bool>(validate_map(f)); }

GenMap normalize(GenMap f) {
    for (std::size_t b = 0; b < f.src.size() && b < f.rules.size(); ++b) {
        BlockRule& r = f.rules[b];
        if (!f.src[b].is_seq()) {
            r.tail = {};
            continue;
        }
        if (r.tail.type == TailRule::Const) {
            for (auto it = r.except.begin(); it != r.except.end();)
                it = it->second == r.tail.point ? r.except.erase(it) : std::next(it);
        } else if (r.tail.type == TailRule::Affine && r.tail.stride >= 1) {
            TailRule& t = r.tail;
            Index c = t.offset - t.stride * t.threshold;  // value of the line at 0
            Index n_star = c >= 0 ? 0 : ceil_div(-c, t.stride);
            n_star = std::min(n_star, t.threshold);
            t.offset = t.stride * n_star + c;
            t.threshold = n_star;
            for (auto it = r.except.begin(); it != r.except.end();) {
                bool same = it->first >= t.threshold && it->second == ExtPoint::iso(t.block, t.at(it->first));
                it = same ? r.except.erase(it) : std::next(it);
            }
        }
    }
    return f;
}

GenMap identity_map(const Shape& s) {
    GenMap f{s, s, std::vector<BlockRule>(s.size())};
    for (std::size_t b = 0; b < s.size(); ++b) {
        if (s[b].is_seq()) f.rules[b].tail = TailRule::affine(b, 1, 0, 0);
        else
            for (Index i = 0; i < static_cast<Index>(s[b].n); ++i) f.rules[b].except[i] = ExtPoint::iso(b, i);
    }
    return f;
}

ExtPoint eval(const GenMap& f, std::size_t b, Index n) {
    const BlockRule& r = f.rules.at(b);
    auto it = r.except.find(n);
    if (it != r.except.end()) return it->second;
    if (!f.src[b].is_seq()) throw ShapeError("finite block table has no entry for " + std::to_string(n));
    if (r.tail.type == TailRule::Const) return r.tail.point;
    if (r.tail.type == TailRule::Affine && n >= r.tail.threshold) return ExtPoint::iso(r.tail.block, r.tail.at(n));
    throw ShapeError("map undefined at " + std::to_string(b) + "." + std::to_string(n));
}

ExtPoint eval_limit(const GenMap& f, std::size_t b) {
    const BlockRule& r = f.rules.at(b);
    if (r.tail.type == TailRule::Const) return r.tail.point;
    if (r.tail.type == TailRule::Affine)
        return f.dst[r.tail.block].kind == Kind::CompactSeq ? ExtPoint::limit(r.tail.block) : ExtPoint::virt(r.tail.block);
    throw ShapeError("no limit behaviour on block " + std::to_string(b));
}

ExtPoint eval_ext(const GenMap& f, const ExtPoint& p) {
    if (p.type == ExtPoint::Iso) return eval(f, p.block, p.index);
    return eval_limit(f, p.block);
}

GenMap compose(const GenMap& g, const GenMap& f) {
    if (f.dst != g.src) throw ShapeError("maps are not composable");
    GenMap h{f.src, g.dst, std::vector<BlockRule>(f.src.size())};
    for (std::size_t b = 0; b < f.src.size(); ++b) {
        const BlockRule& r = f.rules[b];
        BlockRule& out = h.rules[b];
        for (const auto& [n, p] : r.except) out.except[n] = eval_ext(g, p);
        if (!f.src[b].is_seq()) continue;
        if (r.tail.type == TailRule::Const) {
            out.tail = TailRule::constant(eval_ext(g, r.tail.point));
            continue;
        }
        const TailRule& t = r.tail;
        const BlockRule& q = g.rules.at(t.block);
        for (const auto& [m, v] : q.except) {
            if (!prog_has(t.stride, t.offset, m)) continue;
            Index n = t.threshold + (m - t.offset) / t.stride;
            if (!r.except.count(n)) out.except[n] = v;
        }
        if (q.tail.type == TailRule::Const) {
            out.tail = TailRule::constant(q.tail.point);
            out.tail.threshold = 0;
            // indices below the old threshold are all listed already
            continue;
        }
        const TailRule& u = q.tail;
        Index np = t.threshold + (u.threshold > t.offset ? ceil_div(u.threshold - t.offset, t.stride) : 0);
        for (Index n = t.threshold; n < np; ++n)
            if (!out.except.count(n)) out.except[n] = eval(g, t.block, t.at(n));
        Index m0 = t.at(np);
        Index stride = u.stride * t.stride;
        Index offset = u.stride * (m0 - u.threshold) + u.offset;
        guard(stride);
        guard(offset);
        out.tail = TailRule::affine(u.block, stride, offset, np);
    }
    return normalize(h);
}

// ---- preimage ----

bool contains_point(const Elem& G, const ExtPoint& p) {
    switch (p.type) {
        case ExtPoint::Iso: return holds_index(G, p.block, p.index);
        case ExtPoint::Limit:
        case ExtPoint::Virtual: return G.parts[p.block].set.cof;
    }
    return false;
}

Elem preimage(const GenMap& f, const Elem& G) {
    if (G.shape != f.dst) throw ShapeError("preimage: element does not live on the target");
    Elem out = Elem::zero(f.src);
    for (std::size_t b = 0; b < f.src.size(); ++b) {
        const BlockRule& r = f.rules[b];
        if (!f.src[b].is_seq()) {
            for (const auto& [n, p] : r.except)
                if (contains_point(G, p)) out.parts[b].mask |= 1ULL << n;
            continue;
        }
        SeqSet tail;
        if (r.tail.type == TailRule::Const) {
            tail = contains_point(G, r.tail.point) ? SeqSet::all() : SeqSet::none();
        } else {
            const TailRule& t = r.tail;
            const SeqSet& g = G.parts[t.block].set;
            std::vector<Index> hits;
            for (Index m : g.pts)
                if (prog_has(t.stride, t.offset, m)) hits.push_back(t.threshold + (m - t.offset) / t.stride);
            tail = SeqSet{g.cof, hits};
            tail = tail & SeqSet::cofin_below(t.threshold);
        }
        std::vector<Index> keys, in;
        for (const auto& [n, p] : r.except) {
            keys.push_back(n);
            if (contains_point(G, p)) in.push_back(n);
        }
        out.parts[b].set = (tail - SeqSet::fin(keys)) | SeqSet::fin(in);
    }
    return out;
}

// ---- descriptors ----

SetDescriptor SetDescriptor::empty(const Shape& s) { return {s, std::vector<Part>(s.size())}; }

void SetDescriptor::add(const ExtPoint& p) {
    Part& q = parts.at(p.block);
    switch (p.type) {
        case ExtPoint::Iso:
            if (std::find(q.finite.begin(), q.finite.end(), p.index) == q.finite.end()) {
                q.finite.push_back(p.index);
                std::sort(q.finite.begin(), q.finite.end());
            }
            break;
        case ExtPoint::Limit: q.limit = true; break;
        case ExtPoint::Virtual: q.virt = true; break;
    }
}

void SetDescriptor::add_prog(std::size_t b, Index stride, Index first) {
    Prog p{stride, first};
    auto& v = parts.at(b).progs;
    if (std::find(v.begin(), v.end(), p) == v.end()) v.push_back(p);
}

bool SetDescriptor::contains(const ExtPoint& p) const {
    const Part& q = parts.at(p.block);
    switch (p.type) {
        case ExtPoint::Iso:
            if (std::find(q.finite.begin(), q.finite.end(), p.index) != q.finite.end()) return true;
            return std::any_of(q.progs.begin(), q.progs.end(), [&](const Prog& g) { return prog_has(g.stride, g.first, p.index); });
        case ExtPoint::Limit: return q.limit;
        case ExtPoint::Virtual: return q.virt;
    }
    return false;
}

bool SetDescriptor::is_empty() const {
    return std::all_of(parts.begin(), parts.end(), [](const Part& q) { return q.finite.empty() && q.progs.empty() && !q.limit && !q.virt; });
}

IndexPattern SetDescriptor::pattern(std::size_t b) const {
    IndexPattern p;
    p.finite = parts.at(b).finite;
    for (const Prog& g : parts.at(b).progs) p.progs.push_back({g.stride, g.first});
    return p;
}

std::optional<SeqSet> SetDescriptor::nat_set(std::size_t b) const { return pattern(b).as_seqset(); }

SetDescriptor image_clopen(const GenMap& f, const Elem& U) {
    if (U.shape != f.src) throw ShapeError("image: element does not live on the source");
    SetDescriptor S = SetDescriptor::empty(f.dst);
    for (std::size_t b = 0; b < f.src.size(); ++b) {
        const BlockRule& r = f.rules[b];
        if (!f.src[b].is_seq()) {
            for (const auto& [n, p] : r.except)
                if ((U.parts[b].mask >> n) & 1ULL) S.add(p);
            continue;
        }
        const SeqSet& u = U.parts[b].set;
        if (u.empty()) continue;
        Index n0 = tail_start(r);
        for (const auto& [n, p] : r.except)
            if (u.contains(n)) S.add(p);
        const TailRule& t = r.tail;
        if (t.type == TailRule::Affine)
            for (Index n = t.threshold; n < n0; ++n)
                if (!r.except.count(n) && u.contains(n)) S.add(ExtPoint::iso(t.block, t.at(n)));
        if (!u.cof) {
            for (Index n : u.pts)
                if (!r.except.count(n)) S.add(eval(f, b, n));
            continue;
        }
        if (t.type == TailRule::Const) {
            S.add(t.point);
        } else {
            Index n1 = std::max(n0, u.bound());
            for (Index n = n0; n < n1; ++n)
                if (u.contains(n)) S.add(ExtPoint::iso(t.block, t.at(n)));
            S.add_prog(t.block, t.stride, t.at(n1));
        }
        if (f.src[b].kind == Kind::CompactSeq) S.add(eval_limit(f, b));
    }
    return S;
}

SetDescriptor image_point(const GenMap& f, std::size_t b, Index n) {
    SetDescriptor S = SetDescriptor::empty(f.dst);
    S.add(n < 0 ? eval_limit(f, b) : eval(f, b, n));
    return S;
}

Hull clopen_hull(const SetDescriptor& S) {
    Hull h;
    Elem e = Elem::zero(S.shape);
    bool nonrep = false;
    for (std::size_t b = 0; b < S.shape.size(); ++b) {
        const auto& q = S.parts[b];
        if (q.virt) return {Hull::None, std::nullopt, b};
        if (!S.shape[b].is_seq()) {
            for (Index i : q.finite) e.parts[b].mask |= 1ULL << i;
            continue;
        }
        auto nat = S.nat_set(b);
        if (S.shape[b].kind == Kind::DiscreteSeq) {
            if (!nat) {
                nonrep = true;
                h.block = b;
                continue;
            }
            e.parts[b].set = *nat;
            continue;
        }
        if (!nat) return {Hull::None, std::nullopt, b};
        if (nat->finite() && q.limit) return {Hull::None, std::nullopt, b};
        e.parts[b].set = *nat;
    }
    if (nonrep) return {Hull::NonRepresentable, std::nullopt, h.block};
    return {Hull::Ok, e, 0};
}

bool interior_nonempty(const SetDescriptor& S) {
    return std::any_of(S.parts.begin(), S.parts.end(), [](const auto& q) { return !q.finite.empty() || !q.progs.empty(); });
}

bool closure_interior_nonempty(const SetDescriptor& S) {
    for (std::size_t b = 0; b < S.shape.size(); ++b) {
        const auto& q = S.parts[b];
        if (!q.finite.empty() || !q.progs.empty()) return true;
        // the closure of a limit point alone is itself, never a neighbourhood
    }
    return false;
}

// ---- map predicates ----

bool maps_isolated_to_isolated(const GenMap& f) {
    Anatomy a = anatomy(f);
    for (const Piece& p : a.pieces)
        if (p.src.type == ExtPoint::Iso && p.img.type != ExtPoint::Iso) return false;
    for (const TailPiece& t : a.tails)
        if (t.rule.type == TailRule::Const && t.rule.point.type != ExtPoint::Iso) return false;
    return true;
}

namespace {

// Basic open sets: singletons of the listed isolated points, one
// representative per tail, and the tail neighbourhoods of limits.
template <class Pred>
bool every_basic_open(const GenMap& f, Pred pred) {
    Anatomy a = anatomy(f);
    for (const Piece& p : a.pieces)
        if (p.src.type == ExtPoint::Iso && !pred(image_point(f, p.src.block, p.src.index))) return false;
    for (const TailPiece& t : a.tails) {
        if (!pred(image_point(f, t.block, t.n0))) return false;
        if (f.src[t.block].kind == Kind::CompactSeq && !pred(image_clopen(f, Elem::tail(f.src, t.block, t.n0)))) return false;
    }
    return true;
}

}  // namespace

bool is_quasi_open(const GenMap& f) { return every_basic_open(f, interior_nonempty); }
bool is_skeletal(const GenMap& f) { return every_basic_open(f, closure_interior_nonempty); }

bool is_open(const GenMap& f) {
    if (!maps_isolated_to_isolated(f)) return false;
    for (std::size_t b = 0; b < f.src.size(); ++b) {
        if (f.src[b].kind != Kind::CompactSeq) continue;
        const TailRule& t = f.rules[b].tail;
        if (t.type == TailRule::Affine && t.stride != 1) return false;
    }
    return true;
}

bool is_closed_map(const GenMap& f) {
    for (std::size_t b = 0; b < f.src.size(); ++b) {
        const TailRule& t = f.rules[b].tail;
        if (f.src[b].kind == Kind::DiscreteSeq && t.type == TailRule::Affine && f.dst[t.block].kind == Kind::CompactSeq)
            return false;
    }
    return true;
}

std::optional<Elem> noncompact_preimage_witness(const GenMap& f) {
    for (std::size_t b = 0; b < f.src.size(); ++b) {
        if (f.src[b].kind != Kind::DiscreteSeq) continue;
        const TailRule& t = f.rules[b].tail;
        if (t.type == TailRule::Const) {
            const ExtPoint& p = t.point;
            if (f.dst[p.block].kind == Kind::DiscreteSeq) {
                if (p.type == ExtPoint::Iso) return Elem::atom(f.dst, p.block, p.index);
                continue;
            }
            return Elem::block_top(f.dst, p.block);
        }
        if (t.type == TailRule::Affine && f.dst[t.block].kind == Kind::CompactSeq) return Elem::block_top(f.dst, t.block);
    }
    return std::nullopt;
}

bool is_perfect(const GenMap& f) { return is_closed_map(f) && !noncompact_preimage_witness(f); }

bool is_injective(const GenMap& f) {
    Anatomy a = anatomy(f);
    for (const TailPiece& t : a.tails)
        if (t.rule.type == TailRule::Const) return false;
    for (std::size_t i = 0; i < a.pieces.size(); ++i)
        for (std::size_t j = i + 1; j < a.pieces.size(); ++j)
            if (a.pieces[i].img == a.pieces[j].img) return false;
    for (std::size_t i = 0; i < a.tails.size(); ++i) {
        const TailRule& t = a.tails[i].rule;
        Index first = t.at(a.tails[i].n0);
        for (const Piece& p : a.pieces)
            if (p.img.type == ExtPoint::Iso && p.img.block == t.block && prog_has(t.stride, first, p.img.index)) return false;
        for (std::size_t j = i + 1; j < a.tails.size(); ++j) {
            const TailRule& u = a.tails[j].rule;
            if (u.block == t.block && progs_meet(t.stride, first, u.stride, u.at(a.tails[j].n0))) return false;
        }
    }
    return true;
}

namespace {

bool covers_isolated(const GenMap& f, bool need_limits) {
    SetDescriptor S = image_clopen(f, Elem::top(f.src));
    for (std::size_t b = 0; b < f.dst.size(); ++b) {
        if (!f.dst[b].is_seq()) {
            if (S.parts[b].finite.size() != f.dst[b].n) return false;
            continue;
        }
        auto nat = S.nat_set(b);
        if (!nat || !nat->full()) return false;
        if (need_limits && f.dst[b].kind == Kind::CompactSeq && !S.parts[b].limit) return false;
    }
    return true;
}

}  // namespace

bool is_surjective(const GenMap& f) { return covers_isolated(f, true); }
bool has_dense_image(const GenMap& f) { return covers_isolated(f, false); }

bool is_semi_open(const GenMap& f) {
    Anatomy a = anatomy(f);
    for (std::size_t beta = 0; beta < f.dst.size(); ++beta) {
        if (f.dst[beta].kind != Kind::CompactSeq) continue;
        bool hit = false;
        for (const Piece& p : a.pieces) hit |= p.img == ExtPoint::limit(beta);
        for (const TailPiece& t : a.tails) hit |= t.rule.type == TailRule::Const && t.rule.point == ExtPoint::limit(beta);
        if (!hit) continue;
        std::vector<const TailPiece*> into;
        for (const TailPiece& t : a.tails)
            if (t.rule.type == TailRule::Affine && t.rule.block == beta) into.push_back(&t);
        if (into.empty()) continue;  // the limit is isolated in the image
        bool good = false;
        for (const TailPiece* s : into) {
            if (f.src[s->block].kind != Kind::CompactSeq) continue;
            Index s1 = s->rule.stride, f1 = s->rule.at(s->n0);
            bool absorbs = std::all_of(into.begin(), into.end(), [&](const TailPiece* o) {
                Index s2 = o->rule.stride, f2 = o->rule.at(o->n0);
                return s2 % s1 == 0 && ((f2 - f1) % s1 + s1) % s1 == 0;
            });
            good |= absorbs;
        }
        if (!good) return false;
    }
    return true;
}

bool is_embedding(const GenMap& f) {
    if (!is_injective(f)) return false;
    Anatomy a = anatomy(f);
    for (const Piece& p : a.pieces) {
        if (p.img.type != ExtPoint::Limit) continue;
        std::size_t beta = p.img.block;
        for (const TailPiece& t : a.tails) {
            if (t.rule.type != TailRule::Affine || t.rule.block != beta) continue;
            if (p.src.type == ExtPoint::Iso || t.block != p.src.block) return false;
        }
    }
    return true;
}

bool is_closed_embedding(const GenMap& f) { return is_embedding(f) && is_closed_map(f); }
bool is_dense_embedding(const GenMap& f) { return is_embedding(f) && has_dense_image(f); }

// ---- point sets ----

PointSet PointSet::of(const Elem& a) {
    PointSet S{a.shape, std::vector<Part>(a.shape.size())};
    for (std::size_t b = 0; b < a.shape.size(); ++b) {
        S.parts[b].mask = a.parts[b].mask;
        if (a.shape[b].is_seq()) {
            S.parts[b].nat = a.parts[b].set;
            S.parts[b].limit = a.shape[b].kind == Kind::CompactSeq && a.parts[b].set.cof;
        }
    }
    return S;
}

PointSet PointSet::empty(const Shape& s) { return {s, std::vector<Part>(s.size())}; }
PointSet PointSet::whole(const Shape& s) { return of(Elem::top(s)); }

PointSet interior(const PointSet& S) {
    PointSet R = S;
    for (std::size_t b = 0; b < S.shape.size(); ++b)
        if (S.shape[b].kind == Kind::CompactSeq && R.parts[b].limit && !R.parts[b].nat.cof) R.parts[b].limit = false;
    return R;
}

PointSet closure(const PointSet& S) {
    PointSet R = S;
    for (std::size_t b = 0; b < S.shape.size(); ++b)
        if (S.shape[b].kind == Kind::CompactSeq && R.parts[b].nat.cof) R.parts[b].limit = true;
    return R;
}

PointSet set_union(const PointSet& a, const PointSet& b) {
    PointSet R = a;
    for (std::size_t i = 0; i < a.shape.size(); ++i) {
        R.parts[i].mask |= b.parts[i].mask;
        R.parts[i].nat = a.parts[i].nat | b.parts[i].nat;
        R.parts[i].limit = a.parts[i].limit || b.parts[i].limit;
    }
    return R;
}

PointSet set_inter(const PointSet& a, const PointSet& b) {
    PointSet R = a;
    for (std::size_t i = 0; i < a.shape.size(); ++i) {
        R.parts[i].mask &= b.parts[i].mask;
        R.parts[i].nat = a.parts[i].nat & b.parts[i].nat;
        R.parts[i].limit = a.parts[i].limit && b.parts[i].limit;
    }
    return R;
}

bool set_is_open(const PointSet& S) { return interior(S) == S; }
bool set_is_closed(const PointSet& S) { return closure(S) == S; }
bool set_is_clopen(const PointSet& S) { return set_is_open(S) && set_is_closed(S); }
bool set_is_regular_open(const PointSet& S) { return interior(closure(S)) == S; }
bool set_is_regular_closed(const PointSet& S) { return closure(interior(S)) == S; }

bool set_is_compact(const PointSet& S) {
    for (std::size_t b = 0; b < S.shape.size(); ++b) {
        if (S.shape[b].kind == Kind::DiscreteSeq && S.parts[b].nat.cof) return false;
        if (S.shape[b].kind == Kind::CompactSeq && S.parts[b].nat.cof && !S.parts[b].limit) return false;
    }
    return true;
}

bool set_is_compact_open(const PointSet& S) { return set_is_open(S) && set_is_compact(S); }

std::optional<Elem> as_clopen(const PointSet& S) {
    if (!set_is_clopen(S)) return std::nullopt;
    Elem e = Elem::zero(S.shape);
    for (std::size_t b = 0; b < S.shape.size(); ++b) {
        e.parts[b].mask = S.parts[b].mask;
        e.parts[b].set = S.parts[b].nat;
    }
    return e;
}

SetDescriptor isolated_points(const BlockSpace& X) {
    SetDescriptor S = SetDescriptor::empty(X.blocks);
    for (std::size_t b = 0; b < X.blocks.size(); ++b) {
        if (X.blocks[b].is_seq()) S.add_prog(b, 1, 0);
        else
            for (Index i = 0; i < static_cast<Index>(X.blocks[b].n); ++i) S.add(ExtPoint::iso(b, i));
    }
    return S;
}

bool is_discrete(const BlockSpace& X) {
    return std::none_of(X.blocks.begin(), X.blocks.end(), [](const Block& b) { return b.kind == Kind::CompactSeq; });
}

bool is_extremally_disconnected(const BlockSpace& X) { return is_discrete(X); }

// ---- subspaces ----

namespace {

// Re-presents a representable set with limit <=> cofinite on CompactSeq
// blocks as a block space; indices ascend within each surviving block.
Subspace build_subspace(const Shape& s, const PointSet& S) {
    Subspace out;
    std::vector<BlockRule> rules;
    for (std::size_t b = 0; b < s.size(); ++b) {
        const PointSet::Part& q = S.parts[b];
        BlockRule r;
        if (!s[b].is_seq()) {
            std::uint32_t k = 0;
            for (Index i = 0; i < static_cast<Index>(s[b].n); ++i)
                if ((q.mask >> i) & 1ULL) r.except[k++] = ExtPoint::iso(b, i);
            if (k == 0) continue;
            out.space.blocks.push_back(Block::fin(k));
            rules.push_back(r);
            continue;
        }
        if (!q.nat.cof) {
            if (q.limit) throw SubspaceError("finite set with a limit point is not a representable subspace");
            if (q.nat.pts.empty()) continue;
            std::uint32_t k = 0;
            for (Index i : q.nat.pts) r.except[k++] = ExtPoint::iso(b, i);
            if (k > 64) throw SubspaceError("finite part too large for a finite block");
            out.space.blocks.push_back(Block::fin(k));
            rules.push_back(r);
            continue;
        }
        bool conv = s[b].kind == Kind::CompactSeq && q.limit;
        const std::vector<Index>& E = q.nat.pts;
        if (E.empty()) {
            r.tail = TailRule::affine(b, 1, 0, 0);
        } else {
            Index M = E.back() + 1;
            Index N = M - static_cast<Index>(E.size());
            Index k = 0;
            for (Index i = 0; i < M; ++i)
                if (!std::binary_search(E.begin(), E.end(), i)) r.except[k++] = ExtPoint::iso(b, i);
            r.tail = TailRule::affine(b, 1, M, N);
        }
        out.space.blocks.push_back(conv ? Block::conv() : Block::disc());
        rules.push_back(r);
    }
    out.embedding = normalize(GenMap{out.space.blocks, s, rules});
    return out;
}

}  // namespace

Subspace open_subspace(const BlockSpace& X, const PointSet& U) {
    if (U.shape != X.blocks) throw SubspaceError("set does not live on the space");
    if (!set_is_open(U)) throw SubspaceError("set is not open");
    return build_subspace(X.blocks, U);
}

Subspace regular_closed_subspace(const BlockSpace& X, const PointSet& F) {
    if (F.shape != X.blocks) throw SubspaceError("set does not live on the space");
    if (!set_is_closed(F) || !set_is_regular_closed(F)) throw SubspaceError("set is not regular closed");
    return build_subspace(X.blocks, F);
}

Subspace clopen_subspace(const Shape& s, const Elem& a) { return build_subspace(s, PointSet::of(a)); }

}  // namespace slab
