#include "slab/commands.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "slab/fuzz.hpp"

namespace slab {

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string l;
    while (std::getline(in, l)) out.push_back(l);
    return out;
}

// Appends declarations to a case and names witnesses after the shapes it knows.
struct CaseBuilder {
    ReportCase c;
    std::vector<std::pair<Shape, std::string>> shapes;
    std::vector<std::string> taken;
    std::vector<std::pair<Elem, std::string>> named;
    std::vector<std::pair<RepIdeal, std::string>> named_ideals;
    int next = 0;

    void add(const Document& doc) {
        for (const std::string& l : lines_of(print_document(doc))) c.dsl.push_back(l);
        for (const Decl& d : doc.decls) {
            taken.push_back(d.name);
            if (auto* s = std::get_if<SpaceDecl>(&d.body)) shapes.emplace_back(s->shape, d.name);
            if (auto* a = std::get_if<AlgebraDecl>(&d.body)) shapes.emplace_back(a->shape, d.name);
        }
    }
    std::string fresh(const std::string& stem) {
        while (true) {
            std::string n = stem + std::to_string(next++);
            if (std::find(taken.begin(), taken.end(), n) == taken.end()) {
                taken.push_back(n);
                return n;
            }
        }
    }
    std::string shape_name(const Shape& s) {
        for (const auto& [sh, n] : shapes)
            if (sh == s) return n;
        std::string n = fresh("S");
        c.dsl.push_back("algebra " + n + " = " + shape_text(s));
        shapes.emplace_back(s, n);
        return n;
    }
    std::string elem(const Elem& e) {
        for (const auto& [x, n] : named)
            if (x == e) return n;
        std::string of = shape_name(e.shape);
        std::string n = fresh("w");
        c.dsl.push_back("elem " + n + " in " + of + " =" + (e.shape.empty() ? "" : " " + elem_text(e)));
        named.emplace_back(e, n);
        return n;
    }
    std::string ideal(const RepIdeal& J) {
        for (const auto& [x, n] : named_ideals)
            if (x == J) return n;
        std::string of = shape_name(J.shape);
        std::string n = fresh("j");
        c.dsl.push_back("ideal " + n + " in " + of + " =" + (J.shape.empty() ? "" : " " + ideal_text(J)));
        named_ideals.emplace_back(J, n);
        return n;
    }
    std::vector<std::string> elems(const std::vector<Elem>& es) {
        std::vector<std::string> out;
        for (const Elem& e : es) out.push_back(elem(e));
        return out;
    }
    void condition(const std::string& name, bool pass, std::vector<std::string> w = {}, std::string note = {}) {
        c.conditions.push_back(ReportCondition{name, pass, std::move(w), std::move(note)});
    }
    void condition(const std::string& name, const ConditionReport& r) {
        std::vector<std::string> w = elems(r.witness);
        if (r.ideal) w.push_back(ideal(*r.ideal));
        std::string note = r.note;
        if (r.point) note += std::string(note.empty() ? "" : "; ") + "point " + point_text(*r.point);
        condition(name, r.pass, std::move(w), note);
    }
    void verdict_list(const std::vector<Verdict>& vs, const std::string& prefix = {}) {
        for (const Verdict& v : vs) {
            std::string note = v.note;
            if (!v.witness.empty()) {
                std::string w;
                for (Mask m : v.witness) w += (w.empty() ? "" : " ") + mask_string(m);
                note += std::string(note.empty() ? "" : "; ") + "elements " + w;
            }
            condition(prefix + v.name, v.pass, {}, note);
        }
    }
};

Document map_document(const GenMap& f) {
    Document d;
    d.decls.push_back(Decl{"X", SpaceDecl{f.src}, 0});
    d.decls.push_back(Decl{"Y", SpaceDecl{f.dst}, 0});
    d.decls.push_back(Decl{"f", MapDecl{"X", "Y", f}, 0});
    d.decls.push_back(Decl{"h", HomDecl{"f"}, 0});
    return d;
}

CaseBuilder map_builder(const std::string& id, const GenMap& f) {
    CaseBuilder b;
    b.c.id = id;
    b.add(map_document(f));
    return b;
}

const Decl& lookup(const Document& doc, const std::string& name) {
    const Decl* d = doc.find(name);
    if (!d) throw std::invalid_argument("unresolvable name '" + name + "'");
    return *d;
}

// Declarations a case needs to replay a reference to `name`.
Document closure_of(const Document& doc, const std::string& name) {
    std::vector<std::string> need{name};
    for (std::size_t i = 0; i < need.size(); ++i) {
        const Decl& d = lookup(doc, need[i]);
        auto push = [&](const std::string& n) {
            if (std::find(need.begin(), need.end(), n) == need.end()) need.push_back(n);
        };
        if (auto* m = std::get_if<MapDecl>(&d.body)) {
            push(m->src);
            push(m->dst);
        }
        if (auto* h = std::get_if<HomDecl>(&d.body)) push(h->map);
        if (auto* e = std::get_if<ElemDecl>(&d.body)) push(e->of);
        if (auto* j = std::get_if<IdealDecl>(&d.body)) push(j->of);
    }
    Document out;
    for (const Decl& d : doc.decls)
        if (std::find(need.begin(), need.end(), d.name) != need.end()) out.decls.push_back(d);
    return out;
}

using MapPred = std::function<bool(const GenMap&)>;
const std::vector<std::pair<std::string, MapPred>>& map_predicates() {
    static const std::vector<std::pair<std::string, MapPred>> v = {
        {"open", is_open}, {"quasi-open", is_quasi_open}, {"skeletal", is_skeletal}, {"semi-open", is_semi_open},
        {"closed", is_closed_map}, {"perfect", is_perfect}, {"injective", is_injective}, {"surjective", is_surjective},
        {"dense", has_dense_image}, {"embedding", is_embedding}, {"closed-embedding", is_closed_embedding},
        {"dense-embedding", is_dense_embedding}};
    return v;
}

using HomCheck = std::function<ConditionReport(const Hom&)>;
const std::vector<std::pair<std::string, HomCheck>>& hom_checks() {
    static const std::vector<std::pair<std::string, HomCheck>> v = {
        {"ZLBA", check_ZLBA},
        {"PZLBA", check_PZLBA},
        {"CEP", check_CEP},
        {"SkeZLBA", check_SkeZLBA},
        {"complete", check_complete},
        {"phi-injective", check_phi_injective},
        {"InZLC", check_InZLC},
        {"surjectivity-b", surjectivity_b},
        {"surjectivity-c", surjectivity_c},
        {"surjectivity-d", surjectivity_d},
        {"phiJ-supseteq-I", check_phiJ_supseteq_I},
        {"phiJ-eq-I", check_phiJ_eq_I},
        {"QGBPL",
         [](const Hom& phi) {
             GMapResult g = theta_g_map(phi.spectral);
             if (!g.psi) {
                 ConditionReport r;
                 r.name = "QGBPL";
                 r.note = "no pseudolattice dual: compact clopen with non-compact preimage";
                 r.witness = {*g.witness};
                 return r;
             }
             return check_QGBPL(*g.psi);
         }},
        {"OZL", [](const Hom& phi) { return verify_OZL(phi, lower_P_preadjoint(phi)); }},
        {"lower-adjoint",
         [](const Hom& phi) {
             AdjointResult a = lower_adjoint(phi);
             ConditionReport r;
             r.name = "lower-adjoint";
             r.pass = a.status != AdjointResult::None;
             if (a.status == AdjointResult::NonRepresentable) r.note = "fragment-limited: least bound outside the finite/cofinite fragment";
             if (a.witness) r.witness = {*a.witness};
             return r;
         }},
    };
    return v;
}

std::vector<std::string> contact_conditions() { return {"axioms", "isolated", "delta-frame"}; }
std::vector<std::string> ideal_conditions() { return {"simple", "normal", "principal", "expect-iota-classification"}; }
std::vector<std::string> space_conditions() { return {"compact", "discrete", "extremally-disconnected"}; }
std::vector<std::string> elem_conditions() { return {"in-ideal", "atom"}; }

template <class T>
std::vector<std::string> names_of(const std::vector<std::pair<std::string, T>>& v) {
    std::vector<std::string> out;
    for (const auto& p : v) out.push_back(p.first);
    return out;
}

void run_condition(CaseBuilder& b, const Document& doc, const Decl& d, const std::string& cond) {
    if (auto* m = std::get_if<MapDecl>(&d.body)) {
        if (cond == "valid") {
            MapCheck mc = validate_map(m->map);
            b.condition("valid", static_cast<bool>(mc), {}, mc.message);
            return;
        }
        MapCheck mc = validate_map(m->map);
        if (!mc) {
            b.condition(cond, false, {}, "map does not validate: " + mc.message);
            return;
        }
        for (const auto& [n, p] : map_predicates())
            if (n == cond) return b.condition(n, p(m->map));
    } else if (std::get_if<HomDecl>(&d.body)) {
        Hom phi = doc.hom(d.name);
        for (const auto& [n, p] : hom_checks())
            if (n == cond) {
                try {
                    ConditionReport r = p(phi);
                    b.condition(n, r);
                } catch (const std::exception& e) {
                    b.condition(n, false, {}, std::string("error: ") + e.what());
                }
                return;
            }
    } else if (auto* k = std::get_if<ContactDecl>(&d.body)) {
        if (cond == "axioms") return b.verdict_list(check_clca_axioms(k->alg), "axiom-");
        if (cond == "isolated") {
            IsolatedReport r = isolated_and_atoms(k->alg);
            if (!r.asserted) b.condition("isolated-asserted", false, {}, "axioms failed, propositions not asserted");
            return b.verdict_list(r.items, r.asserted ? "expect-" : "");
        }
        if (cond == "delta-frame") {
            if (!is_clca(k->alg)) return b.condition("delta-frame-asserted", false, {}, "axioms failed, frame not asserted");
            DeltaFrame F = delta_frame(k->alg);
            b.condition("delta-ideals", true, {}, std::to_string(F.ideals.size()) + " delta ideals");
            b.verdict_list(verify_iota(F), "expect-");
            return b.verdict_list(verify_classification(F), "expect-");
        }
    } else if (auto* j = std::get_if<IdealDecl>(&d.body)) {
        const RepIdeal& J = j->ideal;
        if (cond == "simple") return b.condition(cond, is_simple_ideal(J));
        if (cond == "normal") return b.condition(cond, is_normal_ideal(J));
        if (cond == "principal") return b.condition(cond, is_principal_ideal(J));
        if (cond == "expect-iota-classification") {
            PointSet U = iota_ideal(J);
            bool ok = set_is_open(U) && set_is_clopen(U) == is_simple_ideal(J) && set_is_regular_open(U) == is_normal_ideal(J) &&
                      set_is_compact_open(U) == is_principal_ideal(J);
            return b.condition(cond, ok);
        }
    } else if (auto* s = std::get_if<SpaceDecl>(&d.body)) {
        BlockSpace X{s->shape};
        if (cond == "compact") return b.condition(cond, is_compact(X));
        if (cond == "discrete") return b.condition(cond, is_discrete(X));
        if (cond == "extremally-disconnected") return b.condition(cond, is_extremally_disconnected(X));
    } else if (auto* e = std::get_if<ElemDecl>(&d.body)) {
        if (cond == "in-ideal") return b.condition(cond, in_ideal(e->elem));
        if (cond == "atom") return b.condition(cond, is_atom(e->elem));
    } else if (auto* a = std::get_if<AlgebraDecl>(&d.body)) {
        if (cond == "complete") return b.condition(cond, is_complete_algebra(BlockAlgebra{a->shape}));
    }
    throw std::invalid_argument("unknown condition '" + cond + "' for " + d.name);
}

void witness_laws(CaseBuilder& b, const std::string& name, const IsoWitness& w) {
    std::string note;
    for (const std::string& f : w.failures) note += (note.empty() ? "" : "; ") + f;
    b.condition(name, w.ok(), {}, note);
}

}  // namespace

ReportCase map_case(const std::string& id, const GenMap& f) { return map_builder(id, f).c; }

std::vector<std::string> check_conditions(const Document& doc, const std::string& name) {
    const Decl& d = lookup(doc, name);
    if (std::holds_alternative<MapDecl>(d.body)) {
        auto v = names_of(map_predicates());
        v.insert(v.begin(), "valid");
        return v;
    }
    if (std::holds_alternative<HomDecl>(d.body)) return names_of(hom_checks());
    if (std::holds_alternative<ContactDecl>(d.body)) return contact_conditions();
    if (std::holds_alternative<IdealDecl>(d.body)) return ideal_conditions();
    if (std::holds_alternative<SpaceDecl>(d.body)) return space_conditions();
    if (std::holds_alternative<ElemDecl>(d.body)) return elem_conditions();
    return {"complete"};
}

void add_verdicts(ReportCase& c, const GenMap& f, const std::vector<TheoremCase>& cases) {
    CaseBuilder b = map_builder(c.id, f);
    b.c.conditions = std::move(c.conditions);
    b.c.verdicts = std::move(c.verdicts);
    for (const TheoremCase& t : cases) {
        ReportVerdict v;
        v.theorem = t.id;
        v.geo = t.geo;
        v.alg = t.alg;
        v.asserted = t.asserted;
        v.note = t.note;
        v.witness = b.elems(t.witness);
        b.c.verdicts.push_back(std::move(v));
    }
    c = std::move(b.c);
}

Report cmd_dualize(const Document& doc, const std::string& name) {
    Report r;
    r.meta = {{"command", "dualize"}, {"name", name}};
    CaseBuilder b;
    b.c.id = name;
    Document base = normalize(closure_of(doc, name));
    b.add(base);
    const Decl& d = lookup(doc, name);
    Document extra;
    std::string out = "dual_" + name;
    if (auto* s = std::get_if<SpaceDecl>(&d.body)) {
        extra.decls.push_back(Decl{out, AlgebraDecl{theta_t_obj(BlockSpace{s->shape}).blocks}, 0});
        b.add(extra);
        witness_laws(b, "expect-natural-iso", nat_iso_tC(BlockSpace{s->shape}));
    } else if (auto* a = std::get_if<AlgebraDecl>(&d.body)) {
        BlockAlgebra A{a->shape};
        extra.decls.push_back(Decl{out, SpaceDecl{theta_a_obj(A).blocks}, 0});
        b.add(extra);
        witness_laws(b, "expect-natural-iso", nat_iso_lambdaC(A));
        witness_laws(b, "expect-sigma-round-trip", sigma_round_trip(A));
    } else if (std::get_if<MapDecl>(&d.body)) {
        GenMap f = doc.map(name);
        MapCheck mc = validate_map(f);
        if (!mc) throw std::invalid_argument("map " + name + " does not validate: " + mc.message);
        extra.decls.push_back(Decl{out, HomDecl{name}, 0});
        b.add(extra);
        GMapResult g = theta_g_map(f);
        b.condition("pseudolattice-dual", g.psi.has_value(), g.witness ? std::vector<std::string>{b.elem(*g.witness)} : std::vector<std::string>{},
                    g.psi ? "" : "compact clopen with non-compact preimage");
    } else if (auto* h = std::get_if<HomDecl>(&d.body)) {
        GenMap f = doc.map(h->map);
        SpectralResult back = theta_a_map(hom_of(f));
        const auto* md = std::get_if<MapDecl>(&lookup(doc, h->map).body);
        extra.decls.push_back(Decl{out, MapDecl{md->src, md->dst, back.map}, 0});
        b.add(extra);
        b.condition("generalized", back.generalized);
        b.condition("expect-round-trip", back.map == normalize(f));
    } else if (auto* k = std::get_if<ContactDecl>(&d.body)) {
        extra.decls.push_back(Decl{out, SpaceDecl{psi_a(k->alg)}, 0});
        b.add(extra);
        b.condition("axioms", is_clca(k->alg), {}, is_clca(k->alg) ? "" : "spectrum-only: axioms fail");
    } else if (auto* j = std::get_if<IdealDecl>(&d.body)) {
        PointSet U = iota_ideal(j->ideal);
        Subspace sub = open_subspace(BlockSpace{j->ideal.shape}, U);
        std::string sp = "open_" + name;
        extra.decls.push_back(Decl{sp, SpaceDecl{sub.space.blocks}, 0});
        extra.decls.push_back(Decl{"embed_" + name, MapDecl{sp, j->of, sub.embedding}, 0});
        b.add(extra);
        b.condition("expect-embedding", validate_map(sub.embedding) && is_embedding(sub.embedding) && is_open(sub.embedding));
    } else if (auto* e = std::get_if<ElemDecl>(&d.body)) {
        Subspace sub = clopen_subspace(e->elem.shape, e->elem);
        std::string sp = "clopen_" + name;
        extra.decls.push_back(Decl{sp, SpaceDecl{sub.space.blocks}, 0});
        extra.decls.push_back(Decl{"embed_" + name, MapDecl{sp, e->of, sub.embedding}, 0});
        b.add(extra);
        b.condition("expect-embedding", validate_map(sub.embedding) && is_closed_embedding(sub.embedding) && is_open(sub.embedding));
    }
    r.cases.push_back(std::move(b.c));
    return r;
}

Report cmd_check(const Document& doc, const std::string& name, const std::string& condition) {
    Report r;
    r.meta = {{"command", "check"}, {"name", name}, {"condition", condition}};
    CaseBuilder b;
    b.c.id = name;
    b.add(closure_of(doc, name));
    const Decl& d = lookup(doc, name);
    if (condition == "all") {
        for (const std::string& c : check_conditions(doc, name)) run_condition(b, doc, d, c);
    } else {
        run_condition(b, doc, d, condition);
    }
    r.cases.push_back(std::move(b.c));
    return r;
}

Report cmd_verify(const Document& doc, const std::string& theorem, const std::string& map_name) {
    const auto& ids = theorem_ids();
    if (theorem != "all" && std::find(ids.begin(), ids.end(), theorem) == ids.end())
        throw std::invalid_argument("unknown theorem id '" + theorem + "'");
    const Decl& d = lookup(doc, map_name);
    GenMap f;
    if (std::holds_alternative<MapDecl>(d.body)) f = doc.map(map_name);
    else if (auto* h = std::get_if<HomDecl>(&d.body)) f = doc.map(h->map);
    else throw std::invalid_argument(map_name + " is neither a map nor a hom");
    MapCheck mc = validate_map(f);
    if (!mc) throw std::invalid_argument("map " + map_name + " does not validate: " + mc.message);
    f = normalize(f);
    std::vector<TheoremCase> cases = verdict_engine(f);
    if (theorem != "all")
        cases.erase(std::remove_if(cases.begin(), cases.end(), [&](const TheoremCase& c) { return c.id != theorem; }), cases.end());
    Report r;
    r.meta = {{"command", "verify"}, {"theorem", theorem}, {"map", map_name}};
    ReportCase c = map_case(map_name, f);
    add_verdicts(c, f, cases);
    r.cases.push_back(std::move(c));
    return r;
}

Report cmd_fuzz(const FuzzOptions& opts) {
    Report r;
    r.meta = {{"command", "fuzz"},
              {"seed", std::to_string(opts.seed)},
              {"count", std::to_string(opts.count)},
              {"max-blocks", std::to_string(opts.max_blocks)}};
    FuzzBounds bounds;
    bounds.max_blocks = opts.max_blocks;
    Fuzzer fz(opts.seed, bounds);
    // zero-padded ids keep generation order equal to sorted order
    std::size_t width = std::to_string(opts.count > 0 ? opts.count - 1 : 0).size();
    auto id_of = [&](std::size_t i) {
        std::string d = std::to_string(i);
        return std::string(width - d.size(), '0') + d;
    };
    for (std::size_t i = 0; i < opts.count; ++i) {
        GenMap f = fz.real_map();
        ReportCase c = map_case(id_of(i), f);
        MapCheck mc = validate_map(f);
        c.conditions.push_back(ReportCondition{"expect-generator-real", static_cast<bool>(mc), {}, mc.message});
        if (mc) add_verdicts(c, f, verdict_engine(f));
        r.cases.push_back(std::move(c));
        if (opts.probe_every == 0 || i % opts.probe_every != 0) continue;
        {
            GenMap g = fz.non_perfect_map();
            ReportCase p = map_case(id_of(i) + "-nonperfect", g);
            ConditionReport z = check_PZLBA(hom_of(g));
            p.conditions.push_back(ReportCondition{"expect-non-pzlba-detected", !z.pass, {}, z.note});
            p.conditions.push_back(ReportCondition{"expect-not-perfect", !is_perfect(g), {}, {}});
            r.cases.push_back(std::move(p));
        }
        {
            Shape src = fz.shape(), dst = fz.shape();
            dst.push_back(Block::disc());
            GenMap g = fz.non_zlba_map(src, dst);
            ReportCase p = map_case(id_of(i) + "-nonzlba", g);
            ConditionReport z = check_ZLBA(hom_of(g));
            p.conditions.push_back(ReportCondition{"expect-non-zlba-detected", !z.pass, {}, z.note});
            r.cases.push_back(std::move(p));
        }
    }
    return r;
}

Report cmd_contact_sweep(unsigned n_max, unsigned lemma_n_max) {
    if (n_max > kMaxAtoms || lemma_n_max > kMaxAtoms)
        throw std::invalid_argument("contact sweeps stop at " + std::to_string(kMaxAtoms) + " atoms");
    SweepReport s = contact_sweep(n_max, lemma_n_max);
    Report r;
    r.meta = {{"command", "contact-sweep"}, {"n-max", std::to_string(n_max)}, {"lemma-n-max", std::to_string(lemma_n_max)}};
    for (const SweepLine& l : s.lines) r.tallies.push_back(ReportTally{l.check, l.cases, l.failures, l.witness});
    return r;
}

}  // namespace slab
