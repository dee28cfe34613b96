#include "oracle.hpp"

#include <algorithm>
#include <set>

#include "slab/duality.hpp"
#include "slab/theorems.hpp"

namespace oracle {

namespace {

using slab::Block;
using slab::Shape;

std::vector<Shape> small_shapes(int n) {
    std::vector<Shape> out = {{Block::fin(3)}, {Block::conv()}, {Block::disc()}, {Block::fin(2), Block::conv()},
                              {Block::fin(1), Block::disc()}};
    if (n <= 4) out.push_back({Block::conv(), Block::disc()});
    return out;
}

std::string describe(const Shape& s, int n) { return slab::shape_str(s) + " at N=" + std::to_string(n); }

// Membership vector of a predicate over all elements of the universe.
template <class P>
std::vector<bool> members(const Universe& u, P&& pred) {
    std::vector<bool> v(u.size());
    for (Bits m = 0; m < u.size(); ++m) v[m] = pred(m);
    return v;
}

}  // namespace

Tally ultrafilter_classification(int n_max) {
    Tally t{"fc-ultrafilter-classification"};
    for (int n = 1; n <= n_max; ++n)
        for (const Shape& s : small_shapes(n)) {
            Universe u(s, n);
            // Two-valued homomorphisms, each fixed by the atoms it sends to 1.
            std::set<std::vector<bool>> brute;
            for (Bits atoms = 0; atoms < u.size(); ++atoms) {
                auto h = [&](Bits a) { return (a & atoms) != 0; };
                if (!h(u.full())) continue;
                bool ok = true;
                for (Bits a = 0; ok && a < u.size(); ++a) ok = h(~a & u.full()) != h(a);
                for (Bits a = 0; ok && a < u.size(); ++a)
                    for (Bits b = a; ok && b < u.size(); ++b) ok = h(a & b) == (h(a) && h(b));
                if (ok) brute.insert(members(u, h));
            }
            std::set<std::vector<bool>> lib;
            std::vector<slab::Elem> elems;
            for (Bits m = 0; m < u.size(); ++m) elems.push_back(u.elem(m));
            auto add = [&](const slab::Ultrafilter& f) {
                lib.insert(members(u, [&](Bits m) { return f.contains(elems[m]); }));
            };
            for (std::size_t b = 0; b < s.size(); ++b) {
                slab::Index top = s[b].is_seq() ? n + 3 : static_cast<slab::Index>(s[b].n);
                for (slab::Index i = 0; i < top; ++i) add(slab::Ultrafilter::principal(b, i));
                if (s[b].is_seq()) add(slab::Ultrafilter::cofin(b));
            }
            ++t.cases;
            if (brute != lib || brute.size() != static_cast<std::size_t>(u.bits))
                t.fail(describe(s, n) + ": " + std::to_string(brute.size()) + " ultrafilters by brute force, " +
                       std::to_string(lib.size()) + " classified");
        }
    return t;
}

Tally prime_ideal_classification(int n_max) {
    Tally t{"prime-ideal-classification"};
    for (int n = 1; n <= n_max; ++n)
        for (const Shape& s : small_shapes(n)) {
            Universe u(s, n);
            std::vector<Bits> part;
            for (Bits m = 0; m < u.size(); ++m)
                if (u.in_ideal(m)) part.push_back(m);
            // Ideals of a finite lattice are principal; keep the prime ones.
            std::set<std::vector<bool>> brute;
            for (Bits g : part) {
                auto in = [&](Bits a) { return (a & ~g) == 0; };
                bool prime = true;
                for (std::size_t i = 0; prime && i < part.size(); ++i)
                    for (std::size_t j = i; prime && j < part.size(); ++j)
                        if (in(part[i] & part[j]) && !in(part[i]) && !in(part[j])) prime = false;
                if (prime) brute.insert(members(u, [&](Bits a) { return u.in_ideal(a) && in(a); }));
            }
            std::set<std::vector<bool>> lib;
            for (const slab::RepIdeal& P : slab::prime_ideals(s, n))
                lib.insert(members(u, [&](Bits a) { return u.in_ideal(a) && P.contains(u.elem(a)); }));
            ++t.cases;
            if (brute != lib)
                t.fail(describe(s, n) + ": " + std::to_string(brute.size()) + " prime ideals by brute force, " +
                       std::to_string(lib.size()) + " classified");
        }
    return t;
}

namespace {

// Least upper bound of the singletons of p among elements of the one-block
// universe at level m, found by enumeration.
slab::Elem least_bound(const Shape& s, int m, const slab::IndexPattern& p) {
    Universe u(s, m);
    bool beyond = false;
    for (slab::Index i = m; i < m + 64; ++i) beyond |= p.contains(i);
    std::vector<Bits> bounds;
    for (Bits a = 0; a < u.size(); ++a) {
        bool ok = !beyond || (a >> u.tail_bit(0) & 1);
        for (int i = 0; ok && i < m; ++i) ok = !p.contains(i) || (a >> i & 1);
        if (ok) bounds.push_back(a);
    }
    for (Bits a : bounds)
        if (std::all_of(bounds.begin(), bounds.end(), [&](Bits b) { return (a & ~b) == 0; })) return u.elem(a);
    throw std::logic_error("no least bound in a finite lattice");
}

}  // namespace

Tally sup_existence(int n_max) {
    Tally t{"sup-existence-rule"};
    for (int n = 1; n <= n_max; ++n) {
        int k = std::max(1, n / 2);
        slab::Index smax = std::max(1, n - k - 1);
        std::vector<slab::IndexPattern::Prog> progs;
        for (slab::Index st = 1; st <= smax; ++st)
            for (slab::Index off = 0; off < k; ++off) progs.push_back({st, off});
        std::vector<slab::IndexPattern> patterns;
        for (Bits fin = 0; fin < (Bits(1) << k); ++fin) {
            slab::IndexPattern base;
            for (int i = 0; i < k; ++i)
                if (fin >> i & 1) base.finite.push_back(i);
            patterns.push_back(base);
            for (std::size_t a = 0; a < progs.size(); ++a) {
                slab::IndexPattern p = base;
                p.progs = {progs[a]};
                patterns.push_back(p);
                for (std::size_t b = a + 1; b < progs.size(); ++b) {
                    p.progs = {progs[a], progs[b]};
                    patterns.push_back(p);
                }
            }
        }
        for (const Shape& s : {Shape{Block::conv()}, Shape{Block::disc()}})
            for (const slab::IndexPattern& p : patterns) {
                // A sup exists iff the least bound stops moving as the level grows.
                slab::Elem first = least_bound(s, k, p);
                bool stable = true;
                for (int m = k + 1; stable && m <= n; ++m) stable = least_bound(s, m, p) == first;
                auto sup = slab::sup_of_singletons(s, 0, p);
                ++t.cases;
                t.negative += !stable;
                if (stable != sup.has_value() || (sup && *sup != first))
                    t.fail(describe(s, n) + ": pattern with " + std::to_string(p.finite.size()) + " points and " +
                           std::to_string(p.progs.size()) + " progressions");
            }
    }
    return t;
}

namespace {

// Small real maps: one exception at index 0 and a constant or affine tail.
std::vector<slab::GenMap> small_maps(const Shape& x, const Shape& y) {
    using slab::ExtPoint;
    using slab::TailRule;
    std::vector<ExtPoint> pts;
    for (std::size_t b = 0; b < y.size(); ++b) {
        slab::Index top = y[b].is_seq() ? 3 : static_cast<slab::Index>(y[b].n);
        for (slab::Index i = 0; i < top; ++i) pts.push_back(ExtPoint::iso(b, i));
        if (y[b].kind == slab::Kind::CompactSeq) pts.push_back(ExtPoint::limit(b));
    }
    std::vector<TailRule> tails;
    for (const ExtPoint& p : pts) tails.push_back(TailRule::constant(p));
    for (std::size_t b = 0; b < y.size(); ++b)
        if (y[b].is_seq())
            for (slab::Index st = 1; st <= 2; ++st)
                for (slab::Index off = 0; off <= 2; ++off) tails.push_back(TailRule::affine(b, st, off));
    std::vector<slab::GenMap> out;
    if (!x[0].is_seq()) {
        // every total table on a finite source
        std::size_t n = x[0].n, total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= pts.size();
        for (std::size_t code = 0; code < total; ++code) {
            slab::GenMap f{x, y, {slab::BlockRule{}}};
            std::size_t c = code;
            for (std::size_t i = 0; i < n; ++i, c /= pts.size()) f.rules[0].except[i] = pts[c % pts.size()];
            out.push_back(f);
        }
        return out;
    }
    for (const TailRule& tr : tails) {
        slab::GenMap f{x, y, {slab::BlockRule{{}, tr}}};
        if (slab::validate_map(f)) out.push_back(f);
        for (const ExtPoint& p : pts) {
            slab::GenMap g = f;
            g.rules[0].except[0] = p;
            if (slab::validate_map(g)) out.push_back(g);
        }
    }
    return out;
}

}  // namespace

Tally cep_atom_reduction(int n_max) {
    Tally t{"cep-atom-reduction"};
    std::vector<Shape> shapes = {{Block::fin(2)}, {Block::conv()}, {Block::disc()}};
    for (const Shape& x : shapes)
        for (const Shape& y : shapes)
            for (const slab::GenMap& f : small_maps(x, y)) {
                slab::Hom phi = slab::hom_of(f);
                bool symbolic = slab::check_CEP(phi).pass;
                for (int n = 4; n <= n_max; ++n) {
                    // Source points below nx land below n - 1 in the target.
                    int nx = (n - 3) / 2;
                    if (x[0].is_seq() && nx < 2) continue;
                    if (!x[0].is_seq()) nx = n;
                    Universe ux(x, nx), uy(y, n);
                    // x <= phi(c), read off the bits of phi(c) in the source universe
                    std::vector<Bits> img(uy.size());
                    for (Bits c = 0; c < uy.size(); ++c) {
                        slab::Elem e = phi.apply(uy.elem(c));
                        Bits enc = 0;
                        if (!x[0].is_seq()) {
                            enc = static_cast<Bits>(e.parts[0].mask);
                        } else {
                            const slab::SeqSet& set = e.parts[0].set;
                            for (int i = 0; i < nx; ++i)
                                if (set.contains(i)) enc |= Bits(1) << i;
                            if (set.cof && set.bound() <= nx) enc |= Bits(1) << ux.tail_bit(0);
                        }
                        img[c] = enc;
                    }
                    bool brute = true;
                    for (Bits a = 1; brute && a < ux.size(); ++a) {
                        Bits meet = uy.full();
                        for (Bits c = 0; c < uy.size(); ++c)
                            if ((a & ~img[c]) == 0) meet &= c;
                        Bits real = y[0].is_seq() ? meet & ~(Bits(1) << uy.tail_bit(0)) : meet;
                        brute = real != 0;
                    }
                    ++t.cases;
                    t.negative += !brute;
                    if (brute != symbolic)
                        t.fail(slab::shape_str(x) + " -> " + slab::shape_str(y) + " at N=" + std::to_string(n) +
                               ": brute force " + (brute ? "holds" : "fails"));
                }
            }
    return t;
}

}  // namespace oracle
