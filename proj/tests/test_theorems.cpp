#include <doctest.h>

#include <set>

#include "slab/fuzz.hpp"
#include "slab/theorems.hpp"

using namespace slab;

namespace {

const Shape kConv{Block::conv()};
const Shape kDisc{Block::disc()};
const Shape kPt{Block::fin(1)};

GenMap inclusion() { return GenMap{kDisc, kConv, {BlockRule{{}, TailRule::affine(0, 1, 0)}}}; }
GenMap to_limit() { return GenMap{kConv, kConv, {BlockRule{{}, TailRule::constant(ExtPoint::limit(0))}}}; }
GenMap twice() { return GenMap{kConv, kConv, {BlockRule{{}, TailRule::affine(0, 2, 0)}}}; }
// two copies of N folded onto one
GenMap fold() {
    return GenMap{{Block::disc(), Block::disc()}, kDisc,
                  {BlockRule{{}, TailRule::affine(0, 1, 0)}, BlockRule{{}, TailRule::affine(0, 1, 0)}}};
}
GenMap pair_into_conv() {
    return GenMap{{Block::fin(2)}, kConv, {BlockRule{{{0, ExtPoint::iso(0, 0)}, {1, ExtPoint::iso(0, 1)}}, {}}}};
}

}  // namespace

TEST_SUITE("theorems") {
    TEST_CASE("covering conditions") {
        CHECK(check_ZLBA(theta_t_map(inclusion())));
        GenMap virt{kPt, kDisc, {BlockRule{{{0, ExtPoint::virt(0)}}, {}}}};
        ConditionReport z = check_ZLBA(hom_of(virt));
        CHECK_FALSE(z);
        REQUIRE(z.witness.size() == 1);
        CHECK(z.witness[0].is_top());
        ConditionReport p = check_PZLBA(theta_t_map(inclusion()));
        CHECK_FALSE(p);
        REQUIRE(p.witness.size() == 1);
        CHECK(p.witness[0].is_top());
        CHECK(check_PZLBA(theta_t_map(identity_map(kDisc))));
    }

    TEST_CASE("completeness and CEP") {
        Hom id = theta_t_map(identity_map(kConv));
        CHECK(check_complete(id));
        CHECK(check_CEP(id));
        CHECK(check_SkeZLBA(id));
        Hom lim = theta_t_map(to_limit());
        CHECK_FALSE(check_complete(lim));
        CHECK_FALSE(check_CEP(lim));
        CHECK_FALSE(check_SkeZLBA(lim));
        CHECK(replay_failure(lim, check_complete(lim)));
    }

    TEST_CASE("QGBPL") {
        CHECK(check_QGBPL(PseudoHom{{kDisc}, {kDisc}, identity_map(kDisc)}));
        CHECK(check_QGBPL(PseudoHom{{kDisc}, {{Block::disc(), Block::disc()}}, fold()}));
        GenMap g{kConv, kConv, {BlockRule{{}, TailRule::constant(ExtPoint::iso(0, 0))}}};
        CHECK(check_QGBPL(PseudoHom{{kConv}, {kConv}, g}));
    }

    TEST_CASE("lower preadjoint") {
        Hom id = theta_t_map(identity_map(kConv));
        Preadjoint p = lower_P_preadjoint(id);
        REQUIRE(p);
        Elem a = Elem::seq(kConv, 0, SeqSet::cofin({2}));
        CHECK(p(a) == a);
        CHECK(verify_OZL(id, p));
        Hom two = theta_t_map(twice());
        Preadjoint q = lower_P_preadjoint(two);
        CHECK_FALSE(q);
        CHECK(q.missing);
    }

    TEST_CASE("lower adjoint") {
        AdjointResult id = lower_adjoint(theta_t_map(identity_map(kConv)));
        CHECK(id.status == AdjointResult::Exists);
        for (const auto& [b, psi] : id.table) CHECK(b == psi);
        Shape two{Block::conv(), Block::conv()};
        GenMap both{two, kConv, {BlockRule{{}, TailRule::affine(0, 1, 0)}, BlockRule{{}, TailRule::affine(0, 1, 0)}}};
        AdjointResult u = lower_adjoint(theta_t_map(both));
        CHECK(u.status == AdjointResult::Exists);
        // open but not perfect, and still every b has a least a with b <= phi(a)
        CHECK(lower_adjoint(theta_t_map(inclusion())).status == AdjointResult::Exists);
        CHECK(lower_adjoint(theta_t_map(twice())).status != AdjointResult::Exists);
    }

    TEST_CASE("injectivity conditions") {
        CHECK(check_InZLC(theta_t_map(identity_map(kConv))));
        CHECK(check_InZLC(theta_t_map(inclusion())));
        ConditionReport f = check_InZLC(theta_t_map(fold()));
        CHECK_FALSE(f);
        CHECK(f.witness.size() == 2);
        CHECK_FALSE(check_phiJ_supseteq_I(theta_t_map(fold())));
        CHECK_FALSE(check_phiJ_eq_I(theta_t_map(fold())));
        CHECK(check_phiJ_eq_I(theta_t_map(pair_into_conv())));
        CHECK(check_phiJ_supseteq_I(theta_t_map(identity_map(kDisc))));
    }

    TEST_CASE("surjectivity criteria") {
        Hom id = theta_t_map(identity_map(kConv));
        CHECK(surjectivity_b(id));
        CHECK(surjectivity_c(id));
        CHECK(surjectivity_d(id));
        Hom inc = theta_t_map(inclusion());
        ConditionReport b = surjectivity_b(inc);
        CHECK_FALSE(b);
        CHECK(b.point == ExtPoint::limit(0));
        CHECK_FALSE(surjectivity_c(inc));
        CHECK_FALSE(surjectivity_d(inc));
        Hom f = theta_t_map(fold());
        CHECK(surjectivity_b(f));
        CHECK(surjectivity_c(f));
        CHECK(surjectivity_d(f));
    }

    TEST_CASE("prime ideals") {
        auto ps = prime_ideals(kConv, 3);
        CHECK(ps.size() == 5);
        CHECK(ps.back() == RepIdeal::whole(kConv));
        CHECK_FALSE(ps[0].contains(Elem::atom(kConv, 0, 0)));
        CHECK(ps[0].contains(Elem::atom(kConv, 0, 1)));
    }

    TEST_CASE("embedding classification") {
        CHECK(classify_embedding(theta_t_map(inclusion())).kind == EmbeddingClass::Dense);
        CHECK(classify_embedding(theta_t_map(pair_into_conv())).kind == EmbeddingClass::Closed);
        CHECK(classify_embedding(theta_t_map(fold())).kind == EmbeddingClass::NotEmbedding);
        GenMap gen{kDisc, {Block::conv(), Block::fin(1)}, {BlockRule{{}, TailRule::affine(0, 1, 0)}}};
        EmbeddingClass g = classify_embedding(theta_t_map(gen));
        CHECK(g.kind == EmbeddingClass::General);
        REQUIRE(g.middle);
        CHECK(g.middle->blocks == kConv);
        REQUIRE(g.phi1);
        REQUIRE(g.phi2);
        Hom phi = theta_t_map(gen);
        Elem e = Elem::seq(gen.dst, 0, SeqSet::cofin({1}));
        CHECK(compose(*g.phi1, *g.phi2)(e) == phi(e));
    }

    TEST_CASE("verdict engine examples") {
        for (const GenMap& f : {identity_map(kConv), inclusion(), to_limit(), fold(), twice(), pair_into_conv()}) {
            for (const TheoremCase& c : verdict_engine(f)) {
                INFO(c.id << " " << c.note);
                if (c.asserted) CHECK(c.agree());
                else CHECK(c.note.rfind("hypothesis-violated", 0) == 0);
            }
        }
        for (const TheoremCase& c : verdict_engine(to_limit()))
            if (c.id == "skeletal-complete") {
                CHECK_FALSE(c.geo);
                CHECK_FALSE(c.alg);
            }
    }

    TEST_CASE("engine covers every theorem id") {
        std::set<std::string> seen;
        Fuzzer fz(41);
        for (int i = 0; i < 50; ++i)
            for (const TheoremCase& c : verdict_engine(fz.real_map())) seen.insert(c.id);
        for (const std::string& id : theorem_ids()) CHECK(seen.count(id));
    }

    TEST_CASE("properties on random maps") {
        Fuzzer fz(42);
        for (int i = 0; i < 200; ++i) {
            GenMap f = fz.real_map();
            Hom phi = theta_t_map(f);
            CHECK(check_ZLBA(phi));
            if (is_perfect(f)) CHECK(check_PZLBA(phi));
            bool b = surjectivity_b(phi).pass;
            CHECK(b == surjectivity_c(phi).pass);
            CHECK(b == surjectivity_d(phi).pass);
            CHECK(check_CEP(phi).pass == check_complete(phi).pass);
            for (const ConditionReport& r : {check_CEP(phi), check_complete(phi), check_InZLC(phi), check_phi_injective(phi),
                                             check_phiJ_eq_I(phi), check_phiJ_supseteq_I(phi)})
                if (!r.pass) CHECK(replay_failure(phi, r));
        }
    }

    TEST_CASE("non-covering homs are caught") {
        Fuzzer fz(43);
        for (int i = 0; i < 100; ++i) {
            Shape x = fz.shape(), y = fz.shape();
            y.push_back(Block::disc());
            GenMap g = fz.non_zlba_map(x, y);
            CHECK(check_shape(g));
            CHECK_FALSE(check_ZLBA(hom_of(g)));
        }
    }
}
