#include "slab/contact.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace slab {

namespace {

bool has(ElemSet s, Mask a) { return (s >> a) & 1ULL; }
ElemSet single(Mask a) { return 1ULL << a; }
bool is_atom(Mask a) { return std::popcount(a) == 1; }
unsigned atom_index(Mask a) { return static_cast<unsigned>(std::countr_zero(a)); }

// Compact the bits of a that lie inside support; expand undoes it.
Mask compress(Mask a, Mask support) {
    Mask out = 0;
    unsigned k = 0;
    for (unsigned i = 0; i < 32; ++i) {
        if (!((support >> i) & 1U)) continue;
        if ((a >> i) & 1U) out |= 1U << k;
        ++k;
    }
    return out;
}

Mask expand(Mask a, Mask support) {
    Mask out = 0;
    unsigned k = 0;
    for (unsigned i = 0; i < 32; ++i) {
        if (!((support >> i) & 1U)) continue;
        if ((a >> k) & 1U) out |= 1U << i;
        ++k;
    }
    return out;
}

std::vector<Mask> nbhd_table(const FinContactAlg& A) {
    std::vector<Mask> nb(A.size());
    for (Mask a = 0; a < A.size(); ++a) nb[a] = A.nbhd(a);
    return nb;
}

Verdict verdict(std::string name) { return Verdict{std::move(name), true, {}, {}}; }

void fail(Verdict& v, std::vector<Mask> w, std::string note = {}) {
    if (!v.pass) return;
    v.pass = false;
    v.witness = std::move(w);
    v.note = std::move(note);
}

void check_size(unsigned n) {
    if (n > kMaxAtoms) throw std::invalid_argument("contact algebras are limited to " + std::to_string(kMaxAtoms) + " atoms");
}

// Calls visit(f) for every map from n points to m points.
void for_each_map(unsigned n, unsigned m, const std::function<void(const std::vector<unsigned>&)>& visit) {
    if (m == 0 && n > 0) return;
    std::vector<unsigned> f(n, 0);
    while (true) {
        visit(f);
        unsigned i = 0;
        while (i < n && ++f[i] == m) f[i++] = 0;
        if (i == n) return;
    }
}

// Every map 2^m -> 2^n preserving 0 and binary meets.
void for_each_meet_hom(const FinContactAlg& dom, const FinContactAlg& cod, const std::function<void(const FinHom&)>& visit) {
    FinHom h{dom, cod, std::vector<Mask>(dom.size(), 0)};
    std::function<void(Mask)> go = [&](Mask a) {
        if (a == dom.size()) {
            visit(h);
            return;
        }
        for (Mask v = 0; v < cod.size(); ++v) {
            h.table[a] = v;
            bool ok = true;
            for (Mask b = 0; b < a && ok; ++b) ok = h.table[a & b] == (v & h.table[b]);
            if (ok) go(a + 1);
        }
    };
    if (dom.size() == 1) visit(h);
    else go(1);
}

std::optional<std::vector<int>> dual_points_map(const FinHom& phi) {
    auto f = spectral(phi);
    if (!f) return std::nullopt;
    auto cd = cluster_of_atom(phi.dom);
    auto cc = cluster_of_atom(phi.cod);
    std::vector<int> g(bounded_clusters(phi.cod).size(), -2);
    for (unsigned y = 0; y < phi.cod.n; ++y) {
        if (cc[y] < 0) continue;
        int p = cd[(*f)[y]];
        int& slot = g[static_cast<std::size_t>(cc[y])];
        if (slot != -2 && slot != p) return std::nullopt;
        slot = p;
    }
    return g;
}

Mask image_of(const std::vector<int>& g, Mask u) {
    Mask out = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (((u >> i) & 1U) && g[i] >= 0) out |= 1U << g[i];
    return out;
}

}  // namespace

std::string mask_string(Mask a) {
    std::string s = "{";
    bool first = true;
    for (unsigned i = 0; i < 32; ++i) {
        if (!((a >> i) & 1U)) continue;
        if (!first) s += ",";
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

FinContactAlg FinContactAlg::standard(unsigned n) {
    check_size(n);
    FinContactAlg A;
    A.n = n;
    for (unsigned i = 0; i < n; ++i) A.adj.push_back(1U << i);
    A.bound = A.top();
    return A;
}

FinContactAlg FinContactAlg::from_edges(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges, Mask bound) {
    FinContactAlg A = standard(n);
    for (auto [i, j] : edges) {
        if (i >= n || j >= n) throw std::invalid_argument("edge endpoint out of range");
        A.adj[i] |= 1U << j;
        A.adj[j] |= 1U << i;
    }
    if (bound & ~A.top()) throw std::invalid_argument("bound mentions a missing atom");
    A.bound = bound;
    return A;
}

Mask FinContactAlg::nbhd(Mask a) const {
    Mask out = 0;
    for (unsigned i = 0; i < n; ++i)
        if ((a >> i) & 1U) out |= adj[i];
    return out;
}

bool FinContactAlg::edgeless() const {
    for (unsigned i = 0; i < n; ++i)
        if (adj[i] != (1U << i)) return false;
    return true;
}

bool all_pass(const std::vector<Verdict>& vs) {
    return std::all_of(vs.begin(), vs.end(), [](const Verdict& v) { return v.pass; });
}

const Verdict& find_verdict(const std::vector<Verdict>& vs, const std::string& name) {
    for (const Verdict& v : vs)
        if (v.name == name) return v;
    throw std::out_of_range("no verdict named " + name);
}

std::vector<Verdict> check_clca_axioms(const FinContactAlg& A) {
    check_size(A.n);
    const Mask N = A.size();
    auto nb = nbhd_table(A);
    auto rho = [&](Mask a, Mask b) { return (nb[a] & b) != 0; };
    auto ll = [&](Mask a, Mask b) { return !rho(a, A.star(b)); };
    Verdict c1 = verdict("C1"), c2 = verdict("C2"), c3 = verdict("C3"), c4 = verdict("C4");
    Verdict bc1 = verdict("BC1"), bc2 = verdict("BC2"), bc3 = verdict("BC3"), dens = verdict("density");
    for (Mask a = 0; a < N; ++a) {
        if (a != 0 && !rho(a, a)) fail(c1, {a});
        for (Mask b = 0; b < N; ++b) {
            bool ab = rho(a, b);
            if (ab && (a == 0 || b == 0)) fail(c2, {a, b});
            if (ab != rho(b, a)) fail(c3, {a, b});
            if (c4.pass)
                for (Mask c = 0; c < N; ++c)
                    if (rho(a, b | c) != (ab || rho(a, c))) fail(c4, {a, b, c});
            if (ab && bc2.pass) {
                bool found = false;
                for (Mask c = a; !found; c = (c - 1) & a) {
                    if (A.bounded(c))
                        for (Mask d = b; !found; d = (d - 1) & b) {
                            found = A.bounded(d) && rho(c, d);
                            if (d == 0) break;
                        }
                    if (c == 0) break;
                }
                if (!found) fail(bc2, {a, b});
            }
            if (A.bounded(a) && ll(a, b) && bc1.pass) {
                bool found = false;
                for (Mask d = 0; d < N && !found; ++d) found = A.bounded(d) && ll(a, d) && ll(d, b);
                if (!found) fail(bc1, {a, b});
            }
        }
        if (a != 0) {
            bool found = false;
            for (Mask b = 1; b < N && !found; ++b) found = A.bounded(b) && ll(b, a);
            if (!found) fail(bc3, {a});
        }
        Mask j = 0;
        for (Mask b = 0; b < N; ++b)
            if (A.bounded(b) && ll(b, a)) j |= b;
        if (j != a) fail(dens, {a, j}, "join of bounded elements way below a is " + mask_string(j));
    }
    return {c1, c2, c3, c4, bc1, bc2, bc3, dens};
}

bool is_clca(const FinContactAlg& A) { return all_pass(check_clca_axioms(A)); }

FiniteTopology FiniteTopology::discrete(unsigned k) {
    FiniteTopology T;
    T.points = k;
    for (Mask u = 0; u <= T.all(); ++u) {
        T.opens.push_back(u);
        if (u == T.all()) break;
    }
    return T;
}

bool FiniteTopology::is_open(Mask u) const { return std::find(opens.begin(), opens.end(), u) != opens.end(); }

Mask FiniteTopology::interior(Mask u) const {
    Mask out = 0;
    for (Mask o : opens)
        if ((o & ~u) == 0) out |= o;
    return out;
}

Mask FiniteTopology::isolated() const {
    Mask out = 0;
    for (unsigned p = 0; p < points; ++p)
        if (is_open(1U << p)) out |= 1U << p;
    return out;
}

std::vector<Mask> clusters(const FinContactAlg& A) {
    std::vector<Mask> out;
    for (unsigned i = 0; i < A.n; ++i)
        if (std::find(out.begin(), out.end(), A.adj[i]) == out.end()) out.push_back(A.adj[i]);
    return out;
}

std::vector<Mask> bounded_clusters(const FinContactAlg& A) {
    std::vector<Mask> out;
    for (Mask c : clusters(A))
        if (c & A.bound) out.push_back(c);
    return out;
}

std::vector<int> cluster_of_atom(const FinContactAlg& A) {
    auto bc = bounded_clusters(A);
    std::vector<int> out(A.n, -1);
    for (unsigned i = 0; i < A.n; ++i) {
        auto it = std::find(bc.begin(), bc.end(), A.adj[i]);
        if (it != bc.end()) out[i] = static_cast<int>(it - bc.begin());
    }
    return out;
}

Shape psi_a(const FinContactAlg& A) {
    auto k = static_cast<std::uint32_t>(bounded_clusters(A).size());
    if (k == 0) return {};
    return {Block::fin(k)};
}

FiniteTopology dual_topology(const FinContactAlg& A) {
    return FiniteTopology::discrete(static_cast<unsigned>(bounded_clusters(A).size()));
}

Mask lambda_g(const FinContactAlg& A, Mask a) {
    auto bc = bounded_clusters(A);
    Mask out = 0;
    for (std::size_t p = 0; p < bc.size(); ++p)
        if (bc[p] & a) out |= 1U << p;
    return out;
}

FinHom FinHom::of_map(const FinContactAlg& dom, const FinContactAlg& cod, const std::vector<unsigned>& f) {
    if (f.size() != cod.n) throw std::invalid_argument("map must be defined on every atom of the codomain");
    FinHom h{dom, cod, std::vector<Mask>(dom.size(), 0)};
    for (Mask a = 0; a < dom.size(); ++a)
        for (unsigned y = 0; y < cod.n; ++y) {
            if (f[y] >= dom.n) throw std::invalid_argument("map value out of range");
            if ((a >> f[y]) & 1U) h.table[a] |= 1U << y;
        }
    return h;
}

FinHom FinHom::identity(const FinContactAlg& A) {
    std::vector<unsigned> f(A.n);
    for (unsigned i = 0; i < A.n; ++i) f[i] = i;
    return of_map(A, A, f);
}

bool is_boolean_hom(const FinHom& phi) {
    const auto& D = phi.dom;
    const auto& C = phi.cod;
    if (phi(0) != 0 || phi(D.top()) != C.top()) return false;
    for (Mask a = 0; a < D.size(); ++a) {
        if (phi(D.star(a)) != C.star(phi(a))) return false;
        for (Mask b = 0; b < D.size(); ++b)
            if (phi(a & b) != (phi(a) & phi(b))) return false;
    }
    return true;
}

bool is_boolean_iso(const FinHom& phi) {
    if (!is_boolean_hom(phi) || phi.dom.n != phi.cod.n) return false;
    std::vector<Mask> t = phi.table;
    std::sort(t.begin(), t.end());
    return std::adjacent_find(t.begin(), t.end()) == t.end();
}

std::optional<std::vector<unsigned>> spectral(const FinHom& phi) {
    if (!is_boolean_hom(phi)) return std::nullopt;
    std::vector<unsigned> f(phi.cod.n);
    for (unsigned y = 0; y < phi.cod.n; ++y) {
        int hits = 0;
        for (unsigned x = 0; x < phi.dom.n; ++x)
            if ((phi(1U << x) >> y) & 1U) {
                f[y] = x;
                ++hits;
            }
        if (hits != 1) return std::nullopt;
    }
    return f;
}

bool map_injective(const std::vector<unsigned>& f, unsigned m) {
    std::vector<int> seen(m, 0);
    for (unsigned v : f)
        if (seen.at(v)++) return false;
    return true;
}

bool map_surjective(const std::vector<unsigned>& f, unsigned m) {
    Mask hit = 0;
    for (unsigned v : f) hit |= 1U << v;
    return hit == (m == 0 ? 0 : static_cast<Mask>((1ULL << m) - 1));
}

FinHom lambda_t(const std::vector<unsigned>& f, unsigned m) {
    const auto n = static_cast<unsigned>(f.size());
    FiniteTopology X = FiniteTopology::discrete(n), Y = FiniteTopology::discrete(m);
    FinContactAlg dom = FinContactAlg::standard(m), cod = FinContactAlg::standard(n);
    FinHom h{dom, cod, std::vector<Mask>(dom.size(), 0)};
    for (Mask G = 0; G < dom.size(); ++G) {
        Mask open = Y.interior(G), pre = 0;
        for (unsigned x = 0; x < n; ++x)
            if ((open >> f[x]) & 1U) pre |= 1U << x;
        h.table[G] = X.closure(pre);
    }
    return h;
}

std::vector<Verdict> check_DLC(const FinHom& phi) {
    const auto& A = phi.dom;
    const auto& B = phi.cod;
    Verdict d1 = verdict("DLC1"), d2 = verdict("DLC2"), d3 = verdict("DLC3"), d3s = verdict("DLC3S");
    Verdict d4 = verdict("DLC4"), d5 = verdict("DLC5"), p5 = verdict("PAL5");
    if (phi(0) != 0) fail(d1, {0});
    for (Mask a = 0; a < A.size(); ++a) {
        for (Mask b = 0; b < A.size(); ++b) {
            if (phi(a & b) != (phi(a) & phi(b))) fail(d2, {a, b});
            if (A.ll(a, b)) {
                bool ok = B.ll(B.star(phi(A.star(a))), phi(b));
                if (!ok) fail(d3s, {a, b});
                if (!ok && A.bounded(a)) fail(d3, {a, b});
            }
        }
        Mask j = 0;
        for (Mask b = 0; b < A.size(); ++b)
            if (A.bounded(b) && A.ll(b, a)) j |= phi(b);
        if (j != phi(a)) fail(d5, {a}, "join of images is " + mask_string(j));
        if (A.bounded(a) && !B.bounded(phi(a))) fail(p5, {a, phi(a)});
    }
    for (Mask b = 0; b < B.size(); ++b) {
        if (!B.bounded(b)) continue;
        bool found = false;
        for (Mask a = 0; a < A.size() && !found; ++a) found = A.bounded(a) && (b & ~phi(a)) == 0;
        if (!found) fail(d4, {b});
    }
    return {d1, d2, d3, d3s, d4, d5, p5};
}

FinHom caron(const FinHom& psi) {
    FinHom out = psi;
    const auto& A = psi.dom;
    for (Mask a = 0; a < A.size(); ++a) {
        Mask j = 0;
        for (Mask b = 0; b < A.size(); ++b)
            if (A.bounded(b) && A.ll(b, a)) j |= psi(b);
        out.table[a] = j;
    }
    return out;
}

FinHom diamond_compose(const FinHom& phi2, const FinHom& phi1) {
    if (!(phi1.cod == phi2.dom)) throw std::invalid_argument("morphisms are not composable");
    FinHom c{phi1.dom, phi2.cod, std::vector<Mask>(phi1.dom.size())};
    for (Mask a = 0; a < phi1.dom.size(); ++a) c.table[a] = phi2(phi1(a));
    return caron(c);
}

std::vector<Mask> phi_Lambda(const FinHom& phi) {
    std::vector<Mask> out(phi.cod.size());
    for (Mask a = 0; a < phi.cod.size(); ++a) {
        Mask m = phi.dom.top();
        for (Mask b = 0; b < phi.dom.size(); ++b)
            if ((a & ~phi(b)) == 0) m &= b;
        out[a] = m;
    }
    return out;
}

std::optional<std::vector<Mask>> check_lower_adjoint_fin(const FinHom& phi) {
    std::vector<Mask> psi = phi_Lambda(phi);
    for (Mask b = 0; b < phi.cod.size(); ++b)
        for (Mask a = 0; a < phi.dom.size(); ++a)
            if (((psi[b] & ~a) == 0) != ((b & ~phi(a)) == 0)) return std::nullopt;
    return psi;
}

Verdict check_InHLC(const FinHom& phi) {
    const auto& B = phi.dom;
    const auto& A = phi.cod;
    Verdict v = verdict("InHLC");
    for (Mask a = 0; a < A.size() && v.pass; ++a) {
        if (!A.bounded(a)) continue;
        for (Mask b = 0; b < A.size() && v.pass; ++b) {
            if (!A.bounded(b) || A.contact(a, b)) continue;
            bool found = false;
            for (Mask c = 0; c < B.size() && !found; ++c) {
                if (!B.bounded(c) || (a & ~phi(c)) != 0) continue;
                for (Mask d = 0; d < B.size() && !found; ++d)
                    found = B.bounded(d) && B.ll(c, d) && !A.contact(phi(d), b);
            }
            if (!found) fail(v, {a, b}, "no separating pair in the domain");
        }
    }
    return v;
}

Verdict check_SuHLC(const FinHom& phi) {
    const auto& B = phi.dom;
    const auto& A = phi.cod;
    Verdict v = verdict("SuHLC");
    for (unsigned y = 0; y < B.n && v.pass; ++y) {
        if (!B.bounded(1U << y)) continue;
        bool found = false;
        for (unsigned x = 0; x < A.n && !found; ++x) {
            if (!A.bounded(1U << x)) continue;
            bool all = true;
            for (Mask b = 0; b < B.size() && all; ++b) {
                if (!B.bounded(b)) continue;
                bool rhs = true;
                for (Mask b2 = 0; b2 < B.size() && rhs; ++b2)
                    if (B.bounded(b2) && B.ll(b, b2)) rhs = A.contact(phi(b2), 1U << x);
                all = B.contact(b, 1U << y) == rhs;
            }
            found = all;
        }
        if (!found) fail(v, {1U << y}, "ultrafilter at atom " + std::to_string(y) + " has no witness");
    }
    return v;
}

Verdict check_InSkeLC(const FinHom& phi) {
    const auto& B = phi.dom;
    const auto& A = phi.cod;
    Verdict v = verdict("InSkeLC");
    auto L = phi_Lambda(phi);
    for (Mask a = 0; a < A.size() && v.pass; ++a)
        for (Mask b = 0; b < A.size() && v.pass; ++b)
            if (A.bounded(a) && A.bounded(b) && B.contact(L[a], L[b]) && !A.contact(a, b)) fail(v, {a, b});
    return v;
}

Verdict check_SuSkeLC(const FinHom& phi) {
    const auto& B = phi.dom;
    const auto& A = phi.cod;
    Verdict v = verdict("SuSkeLC");
    for (unsigned y = 0; y < B.n && v.pass; ++y) {
        if (!B.bounded(1U << y)) continue;
        bool found = false;
        for (unsigned x = 0; x < A.n && !found; ++x) {
            if (!A.bounded(1U << x)) continue;
            // phi^{-1}(u_x) against v_y, element by element.
            bool all = true;
            for (Mask b = 0; b < B.size() && all; ++b) {
                if (!((phi(b) >> x) & 1U)) continue;
                for (Mask c = 0; c < B.size() && all; ++c)
                    if ((c >> y) & 1U) all = B.contact(b, c);
            }
            found = all;
        }
        if (!found) fail(v, {1U << y}, "ultrafilter at atom " + std::to_string(y) + " has no witness");
    }
    return v;
}

Verdict check_LOprime(const FinHom& phi) {
    Verdict v = verdict("LO'");
    if (!is_boolean_iso(phi)) {
        fail(v, {}, "not a Boolean isomorphism");
        return v;
    }
    const auto& B = phi.dom;
    const auto& A = phi.cod;
    std::vector<Mask> inv(A.size());
    for (Mask b = 0; b < B.size(); ++b) inv[phi(b)] = b;
    for (Mask b = 0; b < B.size() && v.pass; ++b)
        for (Mask a = 0; a < A.size() && v.pass; ++a)
            if (A.bounded(a) && B.contact(inv[a], b) && !A.contact(a, phi(b))) fail(v, {b, a});
    return v;
}

bool is_ideal(const FinContactAlg& A, ElemSet s) {
    if (!has(s, 0)) return false;
    for (Mask a = 0; a < A.size(); ++a) {
        if (!has(s, a)) continue;
        for (Mask b = 0; b < A.size(); ++b) {
            if ((b & ~a) == 0 && !has(s, b)) return false;
            if (has(s, b) && !has(s, a | b)) return false;
        }
    }
    return true;
}

bool is_delta_ideal(const FinContactAlg& A, ElemSet s) {
    if (!is_ideal(A, s)) return false;
    for (Mask a = 0; a < A.size(); ++a) {
        if (!has(s, a)) continue;
        if (!A.bounded(a)) return false;
        bool round = false;
        for (Mask b = 0; b < A.size() && !round; ++b) round = has(s, b) && A.ll(a, b);
        if (!round) return false;
    }
    return true;
}

ElemSet down_set(Mask a) {
    ElemSet s = 0;
    for (Mask b = a;; b = (b - 1) & a) {
        s |= single(b);
        if (b == 0) break;
    }
    return s;
}

ElemSet below_ll(const FinContactAlg& A, Mask a) {
    ElemSet s = 0;
    for (Mask b = 0; b < A.size(); ++b)
        if (A.bounded(b) && A.ll(b, a)) s |= single(b);
    return s;
}

std::vector<ElemSet> delta_ideals(const FinContactAlg& A) {
    check_size(A.n);
    std::vector<ElemSet> out;
    if (A.n <= 4) {
        const std::uint64_t count = 1ULL << A.size();
        for (std::uint64_t s = 1; s < count; s += 2)  // 0 is always a member
            if (is_delta_ideal(A, s)) out.push_back(s);
    } else {
        // Subsets of a 32-element algebra are out of reach; every ideal of a
        // finite algebra is a down-set.
        for (Mask a = 0; a < A.size(); ++a)
            if (is_delta_ideal(A, down_set(a))) out.push_back(down_set(a));
    }
    return out;
}

ElemSet DeltaFrame::top() const {
    ElemSet t = bottom();
    for (ElemSet j : ideals) t |= j;
    if (std::find(ideals.begin(), ideals.end(), t) == ideals.end()) throw std::logic_error("delta ideals have no largest member");
    return t;
}

ElemSet DeltaFrame::join(ElemSet j, ElemSet k) const {
    ElemSet best = 0;
    bool have = false;
    for (ElemSet c : ideals) {
        if ((j & ~c) || (k & ~c)) continue;
        if (!have || (c & ~best) == 0) {
            best = c;
            have = true;
        }
    }
    if (!have) throw std::logic_error("no delta ideal contains both arguments");
    for (ElemSet c : ideals)
        if (!(j & ~c) && !(k & ~c) && (best & ~c)) throw std::logic_error("no least upper bound among delta ideals");
    return best;
}

ElemSet DeltaFrame::neg(ElemSet j) const {
    ElemSet best = bottom();
    for (ElemSet c : ideals)
        if ((c & j) == bottom() && (best & ~c) == 0) best = c;
    for (ElemSet c : ideals)
        if ((c & j) == bottom() && (c & ~best)) throw std::logic_error("no pseudocomplement among delta ideals");
    return best;
}

DeltaFrame delta_frame(const FinContactAlg& A) { return DeltaFrame{A, delta_ideals(A)}; }

Mask iota(const FinContactAlg& A, ElemSet j) {
    Mask u = 0;
    for (Mask a = 0; a < A.size(); ++a)
        if (has(j, a)) u |= lambda_g(A, a);
    return u;
}

std::string DeltaClass::label() const {
    std::string s;
    auto add = [&](bool on, const char* name) {
        if (!on) return;
        if (!s.empty()) s += ",";
        s += name;
    };
    add(simple, "simple");
    add(normal, "normal");
    add(a_principal, "A-principal");
    add(principal, "principal");
    add(principal_of_ib, "principal-of-IB");
    return s.empty() ? "none" : s;
}

DeltaClass classify_delta(const DeltaFrame& F, ElemSet j) {
    const auto& A = F.alg;
    DeltaClass c;
    c.simple = F.join(j, F.neg(j)) == F.top();
    c.normal = F.neg(F.neg(j)) == j;
    for (Mask a = 0; a < A.size(); ++a) {
        if (below_ll(A, a) == j) {
            c.a_principal = true;
            if (A.bounded(a)) c.principal = true;
        }
        if (A.bounded(a) && down_set(a) == j) c.principal_of_ib = true;
    }
    return c;
}

std::vector<Verdict> verify_iota(const DeltaFrame& F) {
    const auto& A = F.alg;
    FiniteTopology T = dual_topology(A);
    Verdict inj = verdict("iota-injective"), onto = verdict("iota-onto-opens"), order = verdict("iota-order");
    Verdict meets = verdict("iota-meets"), joins = verdict("iota-joins"), ends = verdict("iota-bottom-top");
    std::vector<Mask> img;
    for (ElemSet j : F.ideals) img.push_back(iota(A, j));
    for (std::size_t i = 0; i < F.ideals.size(); ++i) {
        if (!T.is_open(img[i])) fail(onto, {img[i]}, "image is not open");
        for (std::size_t k = 0; k < F.ideals.size(); ++k) {
            ElemSet j1 = F.ideals[i], j2 = F.ideals[k];
            if (i != k && img[i] == img[k]) fail(inj, {img[i]});
            if (((j1 & ~j2) == 0) != ((img[i] & ~img[k]) == 0)) fail(order, {img[i], img[k]});
            if (iota(A, F.meet(j1, j2)) != (img[i] & img[k])) fail(meets, {img[i], img[k]});
            if (iota(A, F.join(j1, j2)) != (img[i] | img[k])) fail(joins, {img[i], img[k]});
        }
    }
    for (Mask o : T.opens)
        if (std::find(img.begin(), img.end(), o) == img.end()) fail(onto, {o}, "open set not hit");
    if (iota(A, F.bottom()) != 0 || iota(A, F.top()) != T.all()) fail(ends, {});
    return {inj, onto, order, meets, joins, ends};
}

std::vector<Verdict> verify_classification(const DeltaFrame& F) {
    FiniteTopology T = dual_topology(F.alg);
    Verdict clopen = verdict("clopen-iff-simple"), regular = verdict("regular-open-iff-normal");
    Verdict aprinc = verdict("normal-iff-A-principal"), compact = verdict("compact-open-iff-principal-of-IB");
    for (ElemSet j : F.ideals) {
        DeltaClass c = classify_delta(F, j);
        Mask u = iota(F.alg, j);
        // Every subset of a finite space is compact.
        bool is_clopen = T.is_open(u) && T.is_closed(u);
        bool is_regular = T.interior(T.closure(u)) == u;
        bool is_compact_open = T.is_open(u);
        if (is_clopen != c.simple) fail(clopen, {u});
        if (is_regular != c.normal) fail(regular, {u});
        if (c.normal != c.a_principal) fail(aprinc, {u});
        if (is_compact_open != c.principal_of_ib) fail(compact, {u});
    }
    return {clopen, regular, aprinc, compact};
}

QuotientResult construct_open_quotient(const FinContactAlg& A, ElemSet I) {
    QuotientResult r;
    Verdict delta = verdict("delta-ideal");
    if (!is_delta_ideal(A, I)) fail(delta, {}, "argument is not a delta ideal");
    Mask aI = 0;
    for (Mask a = 0; a < A.size(); ++a)
        if (has(I, a)) aI |= a;
    const auto k = static_cast<unsigned>(std::popcount(aI));
    auto eta = [&](Mask a, Mask b) {
        Mask ea = expand(a, aI), eb = expand(b, aI);
        for (Mask c = 0; c < A.size(); ++c) {
            if (!has(I, c) || (c & ~ea)) continue;
            for (Mask d = 0; d < A.size(); ++d)
                if (has(I, d) && !(d & ~eb) && A.contact(c, d)) return true;
        }
        return false;
    };
    FinContactAlg B = FinContactAlg::standard(k);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = 0; j < k; ++j)
            if (eta(1U << i, 1U << j)) B.adj[i] |= 1U << j;
    Verdict lift = verdict("eta-is-atom-lift"), bounded = verdict("I-is-bounded-part");
    for (Mask a = 0; a < B.size(); ++a)
        for (Mask b = 0; b < B.size(); ++b)
            if (eta(a, b) != B.contact(a, b)) fail(lift, {a, b});
    ElemSet Ic = 0;
    for (Mask a = 0; a < A.size(); ++a)
        if (has(I, a)) Ic |= single(compress(a, aI));
    if (Ic != down_set(B.top())) fail(bounded, {}, "I is not the down-set of its join");
    B.bound = B.top();
    r.alg = B;
    r.phi = FinHom{A, B, std::vector<Mask>(A.size())};
    for (Mask a = 0; a < A.size(); ++a) r.phi.table[a] = compress(a & aI, aI);

    Verdict axioms = verdict("quotient-axioms"), boolean = verdict("phi-boolean-epi");
    Verdict inj = verdict("dual-open-injection"), image = verdict("dual-image-is-iota");
    for (const Verdict& v : check_clca_axioms(B))
        if (!v.pass) fail(axioms, v.witness, v.name);
    bool epi = is_boolean_hom(r.phi);
    std::vector<bool> reached(B.size(), false);
    for (Mask a = 0; a < A.size(); ++a) reached[r.phi(a)] = true;
    epi = epi && std::all_of(reached.begin(), reached.end(), [](bool x) { return x; });
    if (!epi) fail(boolean, {});
    auto g = dual_points_map(r.phi);
    FiniteTopology TA = dual_topology(A), TB = dual_topology(B);
    if (!g) {
        fail(inj, {}, "no dual map");
        fail(image, {}, "no dual map");
    } else {
        std::vector<unsigned> gu;
        bool total = true;
        for (int p : *g) {
            total &= p >= 0;
            gu.push_back(static_cast<unsigned>(std::max(p, 0)));
        }
        if (!total || !map_injective(gu, TA.points)) fail(inj, {}, "not injective");
        for (Mask o : TB.opens)
            if (!TA.is_open(image_of(*g, o))) fail(inj, {o}, "image of an open set is not open");
        Mask im = image_of(*g, TB.all());
        if (im != iota(A, I)) fail(image, {im, iota(A, I)});
    }
    r.record = {delta, lift, bounded, axioms, boolean, inj, image};
    return r;
}

QuotientResult construct_regular_closed_quotient(const FinContactAlg& A, Mask a0) {
    QuotientResult r;
    if (a0 & ~A.top()) throw std::invalid_argument("element mentions a missing atom");
    const auto k = static_cast<unsigned>(std::popcount(a0));
    FinContactAlg B = FinContactAlg::standard(k);
    for (unsigned i = 0; i < k; ++i) B.adj[i] = compress(A.adj[atom_index(expand(1U << i, a0))] & a0, a0);
    Verdict ib = verdict("image-of-IB-is-principal");
    ElemSet img = 0;
    for (Mask a = 0; a < A.size(); ++a)
        if (A.bounded(a)) img |= single(compress(a & a0, a0));
    B.bound = compress(A.bound & a0, a0);
    if (img != down_set(B.bound)) fail(ib, {});
    r.alg = B;
    r.phi = FinHom{A, B, std::vector<Mask>(A.size())};
    for (Mask a = 0; a < A.size(); ++a) r.phi.table[a] = compress(a & a0, a0);

    Verdict axioms = verdict("quotient-axioms"), boolean = verdict("phi-boolean-epi"), skel = verdict("InSkeLC");
    Verdict inj = verdict("dual-injection"), cq = verdict("dual-closed-quasi-open"), image = verdict("dual-image-is-lambda");
    for (const Verdict& v : check_clca_axioms(B))
        if (!v.pass) fail(axioms, v.witness, v.name);
    if (!is_boolean_hom(r.phi)) fail(boolean, {});
    // phi runs A -> B here; the dual statement is about B's dual mapping into A's.
    Verdict s = check_InSkeLC(r.phi);
    if (!s.pass) fail(skel, s.witness);
    auto g = dual_points_map(r.phi);
    FiniteTopology TA = dual_topology(A), TB = dual_topology(B);
    if (!g) {
        fail(inj, {}, "no dual map");
        fail(image, {}, "no dual map");
    } else {
        std::vector<unsigned> gu;
        bool total = true;
        for (int p : *g) {
            total &= p >= 0;
            gu.push_back(static_cast<unsigned>(std::max(p, 0)));
        }
        if (!total || !map_injective(gu, TA.points)) fail(inj, {});
        for (Mask o = 0; o <= TB.all(); ++o) {
            Mask im = image_of(*g, o);
            if (TB.is_closed(o) && !TA.is_closed(im)) fail(cq, {o}, "image of a closed set is not closed");
            if (TB.is_open(o) && o != 0 && TA.interior(im) == 0) fail(cq, {o}, "image of an open set has empty interior");
            if (o == TB.all()) break;
        }
        Mask im = image_of(*g, TB.all());
        if (im != lambda_g(A, a0)) fail(image, {im, lambda_g(A, a0)});
    }
    r.record = {ib, axioms, boolean, skel, inj, cq, image};
    return r;
}

IsolatedReport isolated_and_atoms(const FinContactAlg& A) {
    IsolatedReport r;
    r.asserted = is_clca(A);
    FiniteTopology T = dual_topology(A);
    Verdict atoms = verdict("atom-iff-isolated-point"), disc = verdict("discrete-iff-IB-finite-sums");
    Verdict ed = verdict("extremally-disconnected-iff-ll-reflexive"), dense = verdict("isolated-dense-iff-atomic");
    for (Mask a = 1; a < A.size(); ++a) {
        Mask l = lambda_g(A, a);
        bool geo = std::popcount(l) == 1 && (T.isolated() & l) == l;
        if (is_atom(a) != geo) fail(atoms, {a});
    }
    bool discrete = T.isolated() == T.all();
    ElemSet sums = 0, ibset = 0;
    for (Mask a = 0; a < A.size(); ++a) {
        sums |= single(a);  // every element is a finite join of atoms
        if (A.bounded(a)) ibset |= single(a);
    }
    if (discrete != (sums == ibset)) fail(disc, {A.bound});
    bool geo_ed = std::all_of(T.opens.begin(), T.opens.end(), [&](Mask o) { return T.is_open(T.closure(o)); });
    bool alg_ed = true;
    for (Mask a = 0; a < A.size(); ++a) alg_ed &= A.ll(a, a);
    if (geo_ed != alg_ed) fail(ed, {});
    bool atomic = true;
    for (Mask a = 1; a < A.size(); ++a) {
        bool any = false;
        for (unsigned i = 0; i < A.n; ++i) any |= ((a >> i) & 1U) != 0;
        atomic &= any;
    }
    if ((T.closure(T.isolated()) == T.all()) != atomic) fail(dense, {});
    r.items = {atoms, disc, ed, dense};
    return r;
}

bool SweepReport::ok() const {
    return std::all_of(lines.begin(), lines.end(), [](const SweepLine& l) { return l.failures == 0; });
}

namespace {

struct Tally {
    SweepLine line;
    void count(bool ok, const std::string& witness) {
        ++line.cases;
        if (ok) return;
        if (line.failures++ == 0) line.witness = witness;
    }
};

std::string map_string(const std::vector<unsigned>& f, unsigned m) {
    std::string s = std::to_string(f.size()) + "->" + std::to_string(m) + " [";
    for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
    return s + "]";
}

std::string alg_string(const FinContactAlg& A) {
    std::string s = "n=" + std::to_string(A.n) + " adj=";
    for (unsigned i = 0; i < A.n; ++i) s += (i ? "," : "") + mask_string(A.adj[i]);
    return s + " bound=" + mask_string(A.bound);
}

}  // namespace

SweepReport contact_sweep(unsigned n_max, unsigned lemma_n_max) {
    check_size(n_max);
    check_size(lemma_n_max);
    SweepReport rep;
    rep.n_max = n_max;
    rep.lemma_n_max = lemma_n_max;
    std::vector<Tally> t;
    auto tally = [&](const std::string& name) -> Tally& {
        for (Tally& x : t)
            if (x.line.check == name) return x;
        t.push_back(Tally{SweepLine{name, 0, 0, {}}});
        return t.back();
    };
    // Register in report order.
    for (const char* name : {"lift-additive", "finite-clca-is-standard", "clusters", "lambda-t-preimage", "lambda-t-functorial",
                             "dlc-on-duals", "dlc3-iff-dlc3s", "diamond-is-composition", "galois-law", "InHLC-iff-injective",
                             "SuHLC-iff-surjective", "InSkeLC-iff-injective", "SuSkeLC-iff-surjective", "LO'-iff-dense-embedding",
                             "delta-frame-iso", "delta-classification", "open-quotient", "regular-closed-quotient",
                             "isolated-points"})
        tally(name);

    for (unsigned n = 0; n <= lemma_n_max; ++n) {
        std::vector<std::pair<unsigned, unsigned>> pairs;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
        for (std::uint32_t g = 0; g < (1U << pairs.size()); ++g) {
            std::vector<std::pair<unsigned, unsigned>> edges;
            for (std::size_t e = 0; e < pairs.size(); ++e)
                if ((g >> e) & 1U) edges.push_back(pairs[e]);
            for (Mask bound = 0; bound < (1U << n); ++bound) {
                FinContactAlg A = FinContactAlg::from_edges(n, edges, bound);
                auto ax = check_clca_axioms(A);
                bool atoms_ok = true;
                for (unsigned i = 0; i < n; ++i)
                    for (unsigned j = 0; j < n; ++j) atoms_ok &= A.contact(1U << i, 1U << j) == (((A.adj[i] >> j) & 1U) != 0);
                tally("lift-additive").count(find_verdict(ax, "C4").pass && atoms_ok, alg_string(A));
                tally("finite-clca-is-standard").count(all_pass(ax) == (A.edgeless() && bound == A.top()), alg_string(A));
                if (n <= n_max) {
                    IsolatedReport iso = isolated_and_atoms(A);
                    if (iso.asserted) tally("isolated-points").count(iso.ok(), alg_string(A));
                }
            }
        }
    }

    for (unsigned n = 0; n <= n_max; ++n) {
        FinContactAlg A = FinContactAlg::standard(n);
        bool cl = clusters(A).size() == n && bounded_clusters(A).size() == n;
        for (Mask a = 0; a < A.size(); ++a) cl &= lambda_g(A, a) == a;
        tally("clusters").count(cl, alg_string(A));
        DeltaFrame F = delta_frame(A);
        tally("delta-frame-iso").count(all_pass(verify_iota(F)), alg_string(A));
        tally("delta-classification").count(all_pass(verify_classification(F)), alg_string(A));
        for (ElemSet I : F.ideals) tally("open-quotient").count(construct_open_quotient(A, I).ok(), alg_string(A));
        for (Mask a0 = 0; a0 < A.size(); ++a0)
            tally("regular-closed-quotient").count(construct_regular_closed_quotient(A, a0).ok(), alg_string(A) + " a0=" + mask_string(a0));
    }

    for (unsigned m = 0; m <= n_max; ++m)
        for (unsigned n = 0; n <= n_max; ++n) {
            FinContactAlg B = FinContactAlg::standard(m), A = FinContactAlg::standard(n);
            for_each_map(n, m, [&](const std::vector<unsigned>& f) {
                FinHom phi = FinHom::of_map(B, A, f);
                std::string w = map_string(f, m);
                bool inj = map_injective(f, m), sur = map_surjective(f, m);
                tally("lambda-t-preimage").count(lambda_t(f, m) == phi, w);
                tally("dlc-on-duals").count(all_pass(check_DLC(phi)), w);
                tally("InHLC-iff-injective").count(check_InHLC(phi).pass == inj, w);
                tally("SuHLC-iff-surjective").count(check_SuHLC(phi).pass == sur, w);
                tally("InSkeLC-iff-injective").count(check_InSkeLC(phi).pass == inj, w);
                tally("SuSkeLC-iff-surjective").count(check_SuSkeLC(phi).pass == sur, w);
                bool dense = inj && sur;
                tally("LO'-iff-dense-embedding").count((is_boolean_iso(phi) && check_LOprime(phi).pass) == dense, w);
            });
        }

    const unsigned small = std::min(n_max, 3U);
    for (unsigned a = 0; a <= small; ++a)
        for (unsigned b = 0; b <= small; ++b)
            for (unsigned c = 0; c <= small; ++c) {
                // Spaces X (a points) -> Y (b points) -> Z (c points).
                FinContactAlg X = FinContactAlg::standard(a), Y = FinContactAlg::standard(b), Z = FinContactAlg::standard(c);
                for_each_map(a, b, [&](const std::vector<unsigned>& f) {
                    for_each_map(b, c, [&](const std::vector<unsigned>& g) {
                        std::vector<unsigned> gf(a);
                        for (unsigned i = 0; i < a; ++i) gf[i] = g[f[i]];
                        FinHom lf = lambda_t(f, b), lg = lambda_t(g, c);
                        FinHom dia = diamond_compose(lf, lg);
                        std::string w = map_string(f, b) + " then " + map_string(g, c);
                        tally("lambda-t-functorial").count(lambda_t(gf, c) == dia, w);
                        FinHom plain{Z, X, std::vector<Mask>(Z.size())};
                        for (Mask z = 0; z < Z.size(); ++z) plain.table[z] = lf(lg(z));
                        tally("diamond-is-composition").count(dia == plain, w);
                    });
                });
            }

    for (unsigned m = 0; m <= small; ++m)
        for (unsigned n = 0; n <= small; ++n) {
            FinContactAlg D = FinContactAlg::standard(m), C = FinContactAlg::standard(n);
            for_each_meet_hom(D, C, [&](const FinHom& phi) {
                std::string w = "table";
                for (Mask v : phi.table) w += " " + mask_string(v);
                auto dlc = check_DLC(phi);
                bool rest = find_verdict(dlc, "DLC1").pass && find_verdict(dlc, "DLC2").pass && find_verdict(dlc, "DLC4").pass &&
                            find_verdict(dlc, "DLC5").pass;
                if (rest) tally("dlc3-iff-dlc3s").count(find_verdict(dlc, "DLC3").pass == find_verdict(dlc, "DLC3S").pass, w);
                auto adj = check_lower_adjoint_fin(phi);
                bool expect = phi(D.top()) == C.top();
                tally("galois-law").count(adj.has_value() == expect && (!adj || *adj == phi_Lambda(phi)), w);
            });
        }

    for (Tally& x : t) rep.lines.push_back(x.line);
    return rep;
}

}  // namespace slab
