#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slab/zspace.hpp"

namespace slab {

// Element of the finite Boolean algebra 2^n: bit i set iff atom i is below it.
using Mask = std::uint32_t;
// A set of elements of 2^n (n <= 5): bit a set iff element a is a member.
using ElemSet = std::uint64_t;

inline constexpr unsigned kMaxAtoms = 5;

// Contact relation presented on atoms by a reflexive symmetric graph and
// lifted to elements: a rho b iff some atom of a is adjacent to some atom of b.
struct FinContactAlg {
    unsigned n = 0;
    std::vector<Mask> adj;  // closed neighbourhood of each atom
    Mask bound = 0;         // IB is the down-set of bound

    static FinContactAlg standard(unsigned n);  // smallest contact, IB = everything
    static FinContactAlg from_edges(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges, Mask bound);

    Mask top() const { return n == 0 ? 0 : static_cast<Mask>((1ULL << n) - 1); }
    unsigned size() const { return 1U << n; }
    Mask star(Mask a) const { return top() & ~a; }
    Mask nbhd(Mask a) const;
    bool contact(Mask a, Mask b) const { return (nbhd(a) & b) != 0; }
    bool ll(Mask a, Mask b) const { return !contact(a, star(b)); }
    bool bounded(Mask a) const { return (a & ~bound) == 0; }
    bool edgeless() const;

    bool operator==(const FinContactAlg&) const = default;
};

struct Verdict {
    std::string name;
    bool pass = true;
    std::string note;
    std::vector<Mask> witness;
    explicit operator bool() const { return pass; }
};

bool all_pass(const std::vector<Verdict>& vs);
const Verdict& find_verdict(const std::vector<Verdict>& vs, const std::string& name);

// C1-C4, BC1-BC3 and density of the bounded part below every element.
std::vector<Verdict> check_clca_axioms(const FinContactAlg& A);
bool is_clca(const FinContactAlg& A);

// Finite topology given by its open sets over points 0..points-1.
struct FiniteTopology {
    unsigned points = 0;
    std::vector<Mask> opens;

    static FiniteTopology discrete(unsigned k);
    Mask all() const { return points == 0 ? 0 : static_cast<Mask>((1ULL << points) - 1); }
    bool is_open(Mask u) const;
    bool is_closed(Mask u) const { return is_open(all() & ~u); }
    Mask interior(Mask u) const;
    Mask closure(Mask u) const { return all() & ~interior(all() & ~u); }
    Mask isolated() const;
};

// Clusters are stored as closed neighbourhoods of atoms; equal neighbourhoods
// give the same cluster.
std::vector<Mask> clusters(const FinContactAlg& A);
std::vector<Mask> bounded_clusters(const FinContactAlg& A);
// Index of the bounded cluster of each atom, or -1.
std::vector<int> cluster_of_atom(const FinContactAlg& A);
Shape psi_a(const FinContactAlg& A);
FiniteTopology dual_topology(const FinContactAlg& A);  // discrete
Mask lambda_g(const FinContactAlg& A, Mask a);         // bounded clusters containing a

// phi : dom -> cod as a full table over the elements of dom.
struct FinHom {
    FinContactAlg dom, cod;
    std::vector<Mask> table;

    Mask operator()(Mask a) const { return table.at(a); }
    // phi(a) = f^{-1}(a) for f sending atoms of cod to atoms of dom.
    static FinHom of_map(const FinContactAlg& dom, const FinContactAlg& cod, const std::vector<unsigned>& f);
    static FinHom identity(const FinContactAlg& A);
    bool operator==(const FinHom&) const = default;
};

bool is_boolean_hom(const FinHom& phi);
bool is_boolean_iso(const FinHom& phi);
// Dual map on atoms of a Boolean hom: y lies in phi({f(y)}).
std::optional<std::vector<unsigned>> spectral(const FinHom& phi);

bool map_injective(const std::vector<unsigned>& f, unsigned m);
bool map_surjective(const std::vector<unsigned>& f, unsigned m);

// cl(f^{-1}(int G)) on powersets of finite discrete spaces; f : n points -> m points.
FinHom lambda_t(const std::vector<unsigned>& f, unsigned m);

// DLC1-DLC5, DLC3S and PAL5.
std::vector<Verdict> check_DLC(const FinHom& phi);

// a -> join of psi(b), b bounded, b << a.
FinHom caron(const FinHom& psi);
FinHom diamond_compose(const FinHom& phi2, const FinHom& phi1);
// a -> meet of all b in dom with a <= phi(b); indexed by elements of cod.
std::vector<Mask> phi_Lambda(const FinHom& phi);
// Lower adjoint if it exists (Galois law checked on every pair).
std::optional<std::vector<Mask>> check_lower_adjoint_fin(const FinHom& phi);

// phi : dom (B, eta, IB') -> cod (A, rho, IB); the dual map runs from cod to dom.
Verdict check_InHLC(const FinHom& phi);
Verdict check_SuHLC(const FinHom& phi);
Verdict check_InSkeLC(const FinHom& phi);
Verdict check_SuSkeLC(const FinHom& phi);
Verdict check_LOprime(const FinHom& phi);

// Delta ideals as element sets.
bool is_ideal(const FinContactAlg& A, ElemSet s);
bool is_delta_ideal(const FinContactAlg& A, ElemSet s);
ElemSet down_set(Mask a);
ElemSet below_ll(const FinContactAlg& A, Mask a);  // {b in IB : b << a}
std::vector<ElemSet> delta_ideals(const FinContactAlg& A);

struct DeltaFrame {
    FinContactAlg alg;
    std::vector<ElemSet> ideals;

    ElemSet bottom() const { return 1; }
    ElemSet top() const;
    ElemSet meet(ElemSet j, ElemSet k) const { return j & k; }
    ElemSet join(ElemSet j, ElemSet k) const;
    ElemSet neg(ElemSet j) const;
};

DeltaFrame delta_frame(const FinContactAlg& A);
Mask iota(const FinContactAlg& A, ElemSet j);

struct DeltaClass {
    bool simple = false, normal = false, a_principal = false, principal = false, principal_of_ib = false;
    std::string label() const;  // strongest applicable name, or "none"
};

DeltaClass classify_delta(const DeltaFrame& F, ElemSet j);
// iota is a frame isomorphism onto the open sets of the dual space.
std::vector<Verdict> verify_iota(const DeltaFrame& F);
// Algebraic class of each delta ideal against the open set it names.
std::vector<Verdict> verify_classification(const DeltaFrame& F);

struct QuotientResult {
    FinContactAlg alg;
    FinHom phi;
    std::vector<Verdict> record;
    bool ok() const { return all_pass(record); }
};

QuotientResult construct_open_quotient(const FinContactAlg& A, ElemSet I);
QuotientResult construct_regular_closed_quotient(const FinContactAlg& A, Mask a0);

// Four biconditionals about atoms and isolated points; not asserted when
// the axioms fail.
struct IsolatedReport {
    bool asserted = false;
    std::vector<Verdict> items;
    bool ok() const { return !asserted || all_pass(items); }
};

IsolatedReport isolated_and_atoms(const FinContactAlg& A);

struct SweepLine {
    std::string check;
    std::size_t cases = 0;
    std::size_t failures = 0;
    std::string witness;
};

struct SweepReport {
    unsigned n_max = 0;
    unsigned lemma_n_max = 0;
    std::vector<SweepLine> lines;
    bool ok() const;
};

// Exhaustive over all algebras / maps with at most n_max atoms; the
// classification of finite axiom-passing instances runs up to lemma_n_max.
SweepReport contact_sweep(unsigned n_max, unsigned lemma_n_max);

std::string mask_string(Mask a);  // "{0,2}"

}  // namespace slab
