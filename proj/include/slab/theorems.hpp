#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slab/duality.hpp"

namespace slab {

struct ConditionReport {
    std::string name;
    bool pass = false;
    std::string note;
    std::vector<Elem> witness;
    std::optional<ExtPoint> point;  // a point / ultrafilter of the source space of phi
    std::optional<RepIdeal> ideal;
    explicit operator bool() const { return pass; }
};

// phi : B -> A throughout; A lives on the source space of the spectral map.
ConditionReport check_ZLBA(const Hom& phi);
ConditionReport check_PZLBA(const Hom& phi);
ConditionReport check_CEP(const Hom& phi);
ConditionReport check_SkeZLBA(const Hom& phi);
ConditionReport check_complete(const Hom& phi);
ConditionReport check_QGBPL(const PseudoHom& psi);
ConditionReport check_phi_injective(const Hom& phi);
ConditionReport check_InZLC(const Hom& phi);
ConditionReport surjectivity_b(const Hom& phi);
ConditionReport surjectivity_c(const Hom& phi);
ConditionReport surjectivity_d(const Hom& phi);
ConditionReport check_phiJ_supseteq_I(const Hom& phi);
ConditionReport check_phiJ_eq_I(const Hom& phi);

// Replays the witness of a failed report; true iff it still fails.
bool replay_failure(const Hom& phi, const ConditionReport& r);

// Prime ideals of the ideal part of s: the copoint ideal of every point
// with index below w, then the improper ideal.
std::vector<RepIdeal> prime_ideals(const Shape& s, Index w);

// Lower P-preadjoint: psi(a) = least clopen above the image of a, a in I.
struct Preadjoint {
    std::optional<Elem> missing;  // an a in I whose image has no clopen hull
    const Hom* phi = nullptr;
    Elem operator()(const Elem& a) const;
    explicit operator bool() const { return !missing; }
};

Preadjoint lower_P_preadjoint(const Hom& phi);
ConditionReport verify_OZL(const Hom& phi, const Preadjoint& psi);

struct AdjointResult {
    enum Status : std::uint8_t { Exists, None, NonRepresentable } status = Exists;
    std::optional<Elem> witness;
    std::vector<std::pair<Elem, Elem>> table;  // sampled (b, psi(b))
};

// Lower adjoint of phi on all of A. NonRepresentable: every least bound
// exists among all clopens of the space but some falls outside the
// finite/cofinite fragment of a discrete block.
AdjointResult lower_adjoint(const Hom& phi);

struct EmbeddingClass {
    enum Kind : std::uint8_t { Dense, Closed, General, NotEmbedding } kind = NotEmbedding;
    std::optional<BlockAlgebra> middle;  // A1
    std::optional<Hom> phi1, phi2;       // phi = phi1 after phi2
    std::string note;
};

EmbeddingClass classify_embedding(const Hom& phi);

struct TheoremCase {
    std::string id;
    bool geo = false, alg = false;
    bool asserted = true;  // false when a hypothesis fails
    std::string note;
    std::vector<Elem> witness;
    bool agree() const { return geo == alg; }
};

std::vector<TheoremCase> verdict_engine(const GenMap& f);

// Identifiers of every case the engine can emit.
const std::vector<std::string>& theorem_ids();

}  // namespace slab
