#pragma once

#include <optional>
#include <string>

#include "slab/balg.hpp"
#include "slab/zspace.hpp"

namespace slab {

// Boolean homomorphism phi: src -> dst carried by its spectral map
// dst-space -> src-space; phi(G) is the preimage of G.
struct Hom {
    BlockAlgebra src, dst;
    GenMap spectral;

    Elem apply(const Elem& b) const { return preimage(spectral, b); }
    Elem operator()(const Elem& b) const { return apply(b); }
};

Hom hom_of(const GenMap& f);  // phi with spectral map f
Hom identity_hom(const BlockAlgebra& A);
Hom compose(const Hom& psi, const Hom& phi);  // psi after phi

// Sizes beyond which every index of a map behaves like its neighbours.
struct Window {
    Index c = 1;       // 1 + largest constant
    Index stride = 1;  // largest stride
    Index period = 1;  // lcm of strides
    Index x = 4;       // source window
    Index y = 6;       // target window
};

Window window_of(const GenMap& f);

// Sample elements: every block-local shape that matters below the window,
// plus their pairwise joins across blocks when small.
std::vector<Elem> shape_elements(const Shape& s, Index w, bool ideal_only = false);

// A|a with the natural epimorphism x -> x & a and the embedding of its
// space into the ambient space (the reindexing table).
struct RelativeAlgebra {
    BlockAlgebra algebra;
    Hom epi;
    GenMap translation;
};

RelativeAlgebra relative_algebra(const BlockAlgebra& A, const Elem& a);

// Element in I_dst not below phi(c) for any c in I_src.
std::optional<Elem> zlba_witness(const Hom& phi);

// 0-pseudolattice homomorphism psi: J -> A on the ideal part of src.
// The carrier is a possibly generalized spectral map; psi(c) is its
// preimage, defined only for c in J.
struct PseudoHom {
    BlockAlgebra src, dst;
    GenMap carrier;

    Elem apply(const Elem& c) const;
};

struct ExtensionResult {
    std::optional<Hom> phi;
    std::string error;
    std::vector<Elem> witness;
    explicit operator bool() const { return phi.has_value(); }
};

// Sup of the chain psi(b & K_m); nullopt if no clopen is least above it.
std::optional<Elem> sup_of_images(const PseudoHom& psi, const Elem& b);

ExtensionResult extend_pseudolattice_hom(const PseudoHom& psi);

}  // namespace slab
