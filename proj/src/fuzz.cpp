#include "slab/fuzz.hpp"

namespace slab {

Shape Fuzzer::shape() {
    Shape s;
    std::size_t n = 1 + static_cast<std::size_t>(below(static_cast<Index>(bounds_.max_blocks)));
    for (std::size_t i = 0; i < n; ++i) {
        switch (below(3)) {
            case 0: s.push_back(Block::fin(static_cast<std::uint32_t>(1 + below(3)))); break;
            case 1: s.push_back(Block::conv()); break;
            default: s.push_back(Block::disc()); break;
        }
    }
    return s;
}

ExtPoint Fuzzer::real_point(const Shape& s) {
    std::size_t b = static_cast<std::size_t>(below(static_cast<Index>(s.size())));
    switch (s[b].kind) {
        case Kind::FinBlock: return ExtPoint::iso(b, below(s[b].n));
        case Kind::CompactSeq:
            if (coin(1, 4)) return ExtPoint::limit(b);
            return ExtPoint::iso(b, below(bounds_.max_const + 1));
        case Kind::DiscreteSeq: return ExtPoint::iso(b, below(bounds_.max_const + 1));
    }
    return {};
}

GenMap Fuzzer::real_map(const Shape& src, const Shape& dst) {
    GenMap f{src, dst, std::vector<BlockRule>(src.size())};
    std::vector<std::size_t> conv, seq;
    for (std::size_t b = 0; b < dst.size(); ++b) {
        if (dst[b].kind == Kind::CompactSeq) conv.push_back(b);
        if (dst[b].is_seq()) seq.push_back(b);
    }
    std::size_t budget = bounds_.max_except;
    for (std::size_t b = 0; b < src.size(); ++b) {
        BlockRule& r = f.rules[b];
        if (!src[b].is_seq()) {
            for (Index i = 0; i < static_cast<Index>(src[b].n); ++i) r.except[i] = real_point(dst);
            continue;
        }
        const auto& targets = src[b].kind == Kind::CompactSeq ? conv : seq;
        if (!targets.empty() && !coin(1, 3)) {
            std::size_t t = targets[static_cast<std::size_t>(below(static_cast<Index>(targets.size())))];
            Index stride = coin() ? 1 : 1 + below(bounds_.max_stride);
            Index threshold = std::min<Index>(below(3), static_cast<Index>(budget));
            r.tail = TailRule::affine(t, stride, below(bounds_.max_const + 1), threshold);
            for (Index i = 0; i < threshold; ++i) r.except[i] = real_point(dst);
            budget -= static_cast<std::size_t>(threshold);
        } else {
            r.tail = TailRule::constant(real_point(dst));
        }
        Index extra = std::min<Index>(below(3), static_cast<Index>(budget));
        for (Index i = 0; i < extra; ++i) {
            Index key = below(r.tail.threshold + 4);
            if (!r.except.count(key)) --budget;
            r.except[key] = real_point(dst);
        }
    }
    return normalize(f);
}

GenMap Fuzzer::real_map() {
    Shape x = shape();
    if (coin(1, 3)) {
        GenMap f = identity_map(x);
        GenMap g = real_map(x, x);
        std::size_t b = static_cast<std::size_t>(below(static_cast<Index>(x.size())));
        f.rules[b] = g.rules[b];
        return normalize(f);
    }
    return real_map(x, shape());
}

Elem Fuzzer::elem(const Shape& s, bool ideal_only) {
    Elem e = Elem::zero(s);
    for (std::size_t b = 0; b < s.size(); ++b) {
        if (!s[b].is_seq()) {
            e.parts[b].mask = static_cast<std::uint64_t>(below(Index{1} << s[b].n));
            continue;
        }
        std::vector<Index> pts;
        Index k = below(4);
        for (Index i = 0; i < k; ++i) pts.push_back(below(8));
        bool cof = coin() && !(ideal_only && s[b].kind == Kind::DiscreteSeq);
        e.parts[b].set = cof ? SeqSet::cofin(pts) : SeqSet::fin(pts);
    }
    return e;
}

RepIdeal Fuzzer::ideal(const Shape& s) {
    RepIdeal J = RepIdeal::zero(s);
    for (std::size_t b = 0; b < s.size(); ++b) {
        IdealPart& p = J.parts[b];
        if (!s[b].is_seq()) {
            p.mask = static_cast<std::uint64_t>(below(Index{1} << s[b].n));
            continue;
        }
        std::vector<Index> pts;
        Index k = below(4);
        for (Index i = 0; i < k; ++i) pts.push_back(below(8));
        bool cof = coin();
        SeqSet S = cof ? SeqSet::cofin(pts) : SeqSet::fin(pts);
        if (s[b].kind == Kind::CompactSeq && coin()) p = {IdealPart::Down, 0, S};
        else if (!cof) p = {IdealPart::Down, 0, S};
        else p = {IdealPart::FinOf, 0, S};
    }
    return normalize(J);
}

GenMap Fuzzer::non_zlba_map(const Shape& src, const Shape& dst) {
    GenMap f = real_map(src, dst);
    std::size_t d = dst.size();
    for (std::size_t b = 0; b < dst.size(); ++b)
        if (dst[b].kind == Kind::DiscreteSeq) d = b;
    if (d == dst.size()) throw ShapeError("target needs a discrete sequence block");
    std::size_t b = static_cast<std::size_t>(below(static_cast<Index>(src.size())));
    if (!src[b].is_seq()) {
        f.rules[b].except[below(src[b].n)] = ExtPoint::virt(d);
    } else {
        f.rules[b].except.clear();
        f.rules[b].tail = TailRule::constant(ExtPoint::virt(d));
    }
    return f;
}

GenMap Fuzzer::non_perfect_map() {
    Shape x = shape(), y = shape();
    x.push_back(Block::disc());
    y.push_back(Block::conv());
    GenMap f = real_map(x, y);
    BlockRule& r = f.rules.back();
    r.except.clear();
    r.tail = coin() ? TailRule::affine(y.size() - 1, 1 + below(2), below(3)) : TailRule::constant(real_point(y));
    return normalize(f);
}

}  // namespace slab
