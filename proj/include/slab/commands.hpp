#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "slab/dsl.hpp"
#include "slab/report.hpp"
#include "slab/theorems.hpp"

namespace slab {

struct FuzzOptions {
    std::uint64_t seed = 42;
    std::size_t count = 500;
    std::size_t max_blocks = 4;
    std::size_t probe_every = 10;  // one non-ZLBA and one non-perfect probe every this many cases
};

// Conditions `check` understands for a declaration of the given kind.
std::vector<std::string> check_conditions(const Document& doc, const std::string& name);

Report cmd_dualize(const Document& doc, const std::string& name);
Report cmd_check(const Document& doc, const std::string& name, const std::string& condition);  // condition "all" runs every one
Report cmd_verify(const Document& doc, const std::string& theorem, const std::string& map_name);  // theorem "all" allowed
Report cmd_fuzz(const FuzzOptions& opts);
Report cmd_contact_sweep(unsigned n_max, unsigned lemma_n_max = kMaxAtoms);

// Case holding a map as spaces X, Y, map f and hom h = dual f. add_verdicts
// expects such a case and adds witnesses as elem declarations.
ReportCase map_case(const std::string& id, const GenMap& f);
void add_verdicts(ReportCase& c, const GenMap& f, const std::vector<TheoremCase>& cases);

}  // namespace slab
