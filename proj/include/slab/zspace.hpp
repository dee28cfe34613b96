#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "slab/balg.hpp"

namespace slab {

struct BlockSpace {
    Shape blocks;
    bool operator==(const BlockSpace&) const = default;
};

bool is_compact(const BlockSpace& X);

// A point of a block space, or a virtual limit standing for the cofinite
// ultrafilter of a DiscreteSeq block.
struct ExtPoint {
    enum Type : std::uint8_t { Iso, Limit, Virtual } type = Iso;
    std::size_t block = 0;
    Index index = 0;

    static ExtPoint iso(std::size_t b, Index i) { return {Iso, b, i}; }
    static ExtPoint limit(std::size_t b) { return {Limit, b, 0}; }
    static ExtPoint virt(std::size_t b) { return {Virtual, b, 0}; }
    bool real() const { return type != Virtual; }
    bool operator==(const ExtPoint&) const = default;
    auto operator<=>(const ExtPoint&) const = default;
};

std::string point_str(const ExtPoint& p);

struct TailRule {
    enum Type : std::uint8_t { None, Const, Affine } type = None;
    ExtPoint point;           // Const
    std::size_t block = 0;    // Affine target block
    Index stride = 1;
    Index offset = 0;
    Index threshold = 0;      // n >= threshold maps to stride*(n-threshold)+offset

    static TailRule constant(ExtPoint p) { TailRule t; t.type = Const; t.point = p; return t; }
    static TailRule affine(std::size_t b, Index s, Index o, Index n = 0) {
        TailRule t; t.type = Affine; t.block = b; t.stride = s; t.offset = o; t.threshold = n; return t;
    }
    Index at(Index n) const { return stride * (n - threshold) + offset; }
    bool operator==(const TailRule&) const = default;
};

struct BlockRule {
    std::map<Index, ExtPoint> except;
    TailRule tail;
    bool operator==(const BlockRule&) const = default;
};

struct GenMap {
    Shape src, dst;
    std::vector<BlockRule> rules;
    bool operator==(const GenMap&) const = default;
};

struct MapCheck {
    enum Status : std::uint8_t { Ok, ShapeError, ContinuityError, RealnessError } status = Ok;
    std::size_t block = 0;
    std::optional<Index> index;  // empty: the tail or the limit
    std::string message;
    explicit operator bool() const { return status == Ok; }
};

MapCheck check_shape(const GenMap& f);
MapCheck validate_map(const GenMap& f);
bool is_real(const GenMap& f);
GenMap normalize(GenMap f);
GenMap identity_map(const Shape& s);
GenMap compose(const GenMap& g, const GenMap& f);  // g after f

ExtPoint eval(const GenMap& f, std::size_t block, Index n);
ExtPoint eval_limit(const GenMap& f, std::size_t block);  // image of the limit / cofinite ultrafilter
ExtPoint eval_ext(const GenMap& f, const ExtPoint& p);

bool contains_point(const Elem& G, const ExtPoint& p);
Elem preimage(const GenMap& f, const Elem& G);

// Image descriptor: per target block a finite set, arithmetic progressions
// {stride*k + first : k >= 0}, and limit / virtual-limit flags.
struct SetDescriptor {
    struct Prog {
        Index stride, first;
        bool operator==(const Prog&) const = default;
    };
    struct Part {
        std::vector<Index> finite;
        std::vector<Prog> progs;
        bool limit = false;
        bool virt = false;
    };
    Shape shape;
    std::vector<Part> parts;

    static SetDescriptor empty(const Shape& s);
    void add(const ExtPoint& p);
    void add_prog(std::size_t block, Index stride, Index first);
    bool contains(const ExtPoint& p) const;
    bool is_empty() const;
    IndexPattern pattern(std::size_t block) const;
    std::optional<SeqSet> nat_set(std::size_t block) const;
};

SetDescriptor image_clopen(const GenMap& f, const Elem& U);
SetDescriptor image_point(const GenMap& f, std::size_t block, Index n);

struct Hull {
    enum Status : std::uint8_t { Ok, None, NonRepresentable } status = Ok;
    std::optional<Elem> elem;
    std::size_t block = 0;
};

Hull clopen_hull(const SetDescriptor& S);
bool interior_nonempty(const SetDescriptor& S);
bool closure_interior_nonempty(const SetDescriptor& S);

// ---- map predicates (real maps) ----
bool is_open(const GenMap& f);
bool is_quasi_open(const GenMap& f);
bool is_skeletal(const GenMap& f);
bool is_semi_open(const GenMap& f);
bool is_closed_map(const GenMap& f);
bool is_perfect(const GenMap& f);
bool is_injective(const GenMap& f);
bool is_surjective(const GenMap& f);
bool has_dense_image(const GenMap& f);
bool is_embedding(const GenMap& f);
bool is_closed_embedding(const GenMap& f);
bool is_dense_embedding(const GenMap& f);
bool maps_isolated_to_isolated(const GenMap& f);

// Compact clopen generator of the target whose preimage is not compact.
std::optional<Elem> noncompact_preimage_witness(const GenMap& f);

// ---- representable subsets ----

struct PointSet {
    struct Part {
        std::uint64_t mask = 0;
        SeqSet nat;
        bool limit = false;
        bool operator==(const Part&) const = default;
    };
    Shape shape;
    std::vector<Part> parts;

    static PointSet of(const Elem& a);
    static PointSet empty(const Shape& s);
    static PointSet whole(const Shape& s);
    bool operator==(const PointSet&) const = default;
};

PointSet interior(const PointSet& S);
PointSet closure(const PointSet& S);
PointSet set_union(const PointSet& a, const PointSet& b);
PointSet set_inter(const PointSet& a, const PointSet& b);
bool set_is_open(const PointSet& S);
bool set_is_closed(const PointSet& S);
bool set_is_clopen(const PointSet& S);
bool set_is_regular_open(const PointSet& S);
bool set_is_regular_closed(const PointSet& S);
bool set_is_compact(const PointSet& S);
bool set_is_compact_open(const PointSet& S);
std::optional<Elem> as_clopen(const PointSet& S);

SetDescriptor isolated_points(const BlockSpace& X);
bool is_discrete(const BlockSpace& X);
bool is_extremally_disconnected(const BlockSpace& X);

struct Subspace {
    BlockSpace space;
    GenMap embedding;  // subspace -> ambient
};

Subspace open_subspace(const BlockSpace& X, const PointSet& U);
Subspace regular_closed_subspace(const BlockSpace& X, const PointSet& F);
// Clopen subspace, used by relative algebras.
Subspace clopen_subspace(const Shape& s, const Elem& a);

struct SubspaceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace slab
