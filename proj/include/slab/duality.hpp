#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slab/hom.hpp"

namespace slab {

BlockAlgebra theta_t_obj(const BlockSpace& X);
Hom theta_t_map(const GenMap& f);  // throws on maps that do not validate

// Ultrafilter of a block algebra: principal at an atom, or the cofinite
// ultrafilter of a sequence block.
struct Ultrafilter {
    std::size_t block = 0;
    Index index = 0;
    bool cofinite = false;

    static Ultrafilter principal(std::size_t b, Index i) { return {b, i, false}; }
    static Ultrafilter cofin(std::size_t b) { return {b, 0, true}; }
    bool contains(const Elem& a) const;
    bool operator==(const Ultrafilter&) const = default;
};

bool is_bounded(const Shape& s, const Ultrafilter& u);
ExtPoint point_of(const Shape& s, const Ultrafilter& u);
Ultrafilter ultrafilter_of(const ExtPoint& p);

BlockSpace theta_a_obj(const BlockAlgebra& A);

// Ultrafilter {b : phi(b) in u} classified by probing phi with block tops
// and initial segments [0, k), k <= limit; beyond that it is cofinite.
Ultrafilter pull_back(const Hom& phi, const Ultrafilter& u, Index limit);

struct SpectralResult {
    GenMap map;
    bool generalized = false;  // some bounded point pulls back to an unbounded ultrafilter
};

SpectralResult theta_a_map(const Hom& phi);

struct IsoWitness {
    GenMap forward, backward;
    std::vector<std::string> laws;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

IsoWitness nat_iso_tC(const BlockSpace& X);
IsoWitness nat_iso_lambdaC(const BlockAlgebra& A);

// Ideal part of a ZLBA viewed on its own.
struct GBPL {
    Shape shape;
    bool operator==(const GBPL&) const = default;
};

GBPL E_a(const BlockAlgebra& A);
BlockAlgebra E_b(const GBPL& I);
// Boolean isomorphism check: every sampled element is the join of its simple ideal.
IsoWitness sigma_round_trip(const BlockAlgebra& A);
ExtensionResult E_b_map(const PseudoHom& psi);

GBPL theta_g(const BlockSpace& X);

// Open set named by a representable ideal: the union of its members.
PointSet iota_ideal(const RepIdeal& J);

struct GMapResult {
    std::optional<PseudoHom> psi;
    std::optional<Elem> witness;  // compact clopen with non-compact preimage
};

GMapResult theta_g_map(const GenMap& f);

}  // namespace slab
