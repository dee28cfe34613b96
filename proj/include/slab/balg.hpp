#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace slab {

using Index = std::int64_t;

enum class Kind : std::uint8_t { FinBlock, CompactSeq, DiscreteSeq };

struct Block {
    Kind kind = Kind::FinBlock;
    std::uint32_t n = 1;  // atom count, FinBlock only

    static Block fin(std::uint32_t n) { return {Kind::FinBlock, n}; }
    static Block conv() { return {Kind::CompactSeq, 0}; }
    static Block disc() { return {Kind::DiscreteSeq, 0}; }
    bool is_seq() const { return kind != Kind::FinBlock; }
    bool operator==(const Block&) const = default;
    auto operator<=>(const Block&) const = default;
};

using Shape = std::vector<Block>;

std::string shape_str(const Shape& s);

struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite or cofinite subset of N. `pts` lists members (finite) or
// excluded indices (cofinite), sorted and unique.
struct SeqSet {
    bool cof = false;
    std::vector<Index> pts;

    static SeqSet none() { return {}; }
    static SeqSet all() { return {true, {}}; }
    static SeqSet fin(std::vector<Index> v);
    static SeqSet cofin(std::vector<Index> v);
    static SeqSet range(Index lo, Index hi);  // [lo, hi)
    static SeqSet cofin_below(Index k);       // [k, inf)

    bool contains(Index i) const;
    bool empty() const { return !cof && pts.empty(); }
    bool full() const { return cof && pts.empty(); }
    bool finite() const { return !cof; }
    Index bound() const { return pts.empty() ? 0 : pts.back() + 1; }
    std::size_t size() const { return pts.size(); }

    SeqSet complement() const { return {!cof, pts}; }
    bool subset_of(const SeqSet& o) const;

    friend SeqSet operator|(const SeqSet& a, const SeqSet& b);
    friend SeqSet operator&(const SeqSet& a, const SeqSet& b);
    friend SeqSet operator-(const SeqSet& a, const SeqSet& b) { return a & b.complement(); }
    bool operator==(const SeqSet&) const = default;
    auto operator<=>(const SeqSet&) const = default;
};

// One block component of an element: a bitmask for FinBlock, a SeqSet for
// sequence blocks. On CompactSeq the limit belongs to the set iff it is cofinite.
struct Part {
    std::uint64_t mask = 0;
    SeqSet set;
    bool operator==(const Part&) const = default;
    auto operator<=>(const Part&) const = default;
};

struct Elem {
    Shape shape;
    std::vector<Part> parts;

    static Elem zero(const Shape& s);
    static Elem top(const Shape& s);
    static Elem atom(const Shape& s, std::size_t block, Index i);
    static Elem block_top(const Shape& s, std::size_t block);
    static Elem tail(const Shape& s, std::size_t block, Index k);  // [k, inf] on a seq block
    static Elem seq(const Shape& s, std::size_t block, SeqSet set);

    bool is_zero() const;
    bool is_top() const;
    Index bound() const;  // 1 + largest index mentioned
    bool operator==(const Elem&) const = default;
    auto operator<=>(const Elem&) const = default;
};

Elem meet(const Elem& a, const Elem& b);
Elem join(const Elem& a, const Elem& b);
Elem complement(const Elem& a);
Elem minus(const Elem& a, const Elem& b);
bool leq(const Elem& a, const Elem& b);
inline bool is_zero(const Elem& a) { return a.is_zero(); }
inline bool disjoint(const Elem& a, const Elem& b) { return meet(a, b).is_zero(); }

// Membership of an isolated point (block, index) or of a CompactSeq limit.
bool holds_index(const Elem& a, std::size_t block, Index i);
bool holds_limit(const Elem& a, std::size_t block);

struct BlockAlgebra {
    Shape blocks;
    bool operator==(const BlockAlgebra&) const = default;
};

bool in_ideal(const Elem& a);
bool is_complete_algebra(const BlockAlgebra& A);

// Atoms. A uniform-tail descriptor stands for every index >= index.
struct AtomDescriptor {
    std::size_t block = 0;
    Index index = 0;
    bool uniform_tail = false;
    Elem elem(const Shape& s) const;
};

std::vector<AtomDescriptor> described_atoms(const Shape& s, Index n);
std::optional<AtomDescriptor> atom_below(const Elem& a);
bool is_atom(const Elem& a);

// Compact cover K_m: every FinBlock and CompactSeq block, plus indices < m
// of every DiscreteSeq block. Each ideal element lies below some K_m.
Elem compact_cover(const Shape& s, Index m);
// Generators of the ideal: block tops of compact blocks and discrete atoms < m.
std::vector<Elem> ideal_generators(const Shape& s, Index m);

// ---- Representable ideals of the ideal part I ----

struct IdealPart {
    enum Form : std::uint8_t { Down, FinOf } form = Down;
    std::uint64_t mask = 0;  // FinBlock, Down only
    SeqSet set;              // Down: the generating element; FinOf: the index set S (infinite)
    bool operator==(const IdealPart&) const = default;
};

struct RepIdeal {
    Shape shape;
    std::vector<IdealPart> parts;

    static RepIdeal zero(const Shape& s);
    static RepIdeal whole(const Shape& s);          // I itself
    static RepIdeal down(const Elem& a);            // requires a in I
    static RepIdeal fin_of(const Shape& s, std::size_t block, SeqSet S);  // other blocks {0}

    bool contains(const Elem& a) const;
    bool operator==(const RepIdeal&) const = default;
};

RepIdeal normalize(RepIdeal J);
RepIdeal ideal_join(const RepIdeal& J, const RepIdeal& K);
RepIdeal ideal_meet(const RepIdeal& J, const RepIdeal& K);
RepIdeal neg_ideal(const RepIdeal& J);
bool ideal_leq(const RepIdeal& J, const RepIdeal& K);
bool is_simple_ideal(const RepIdeal& J);
bool is_normal_ideal(const RepIdeal& J);
bool is_principal_ideal(const RepIdeal& J);

struct NoRepresentableResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Elem sigma_iso(const RepIdeal& J);    // join of J; J simple
RepIdeal e_embed(const Elem& a);      // down-set of a in I
RepIdeal sigma_inverse(const Elem& b);  // {a in I : a <= b}

// Sup of a family of singletons given by a periodic index pattern
// (finite set plus arithmetic progressions). Present iff the union is
// finite or cofinite.
struct IndexPattern {
    std::vector<Index> finite;
    struct Prog { Index stride, offset; };
    std::vector<Prog> progs;
    bool contains(Index i) const;
    std::optional<SeqSet> as_seqset() const;
};

std::optional<Elem> sup_of_singletons(const Shape& s, std::size_t block, const IndexPattern& p);

}  // namespace slab
