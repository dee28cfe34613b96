#include <doctest.h>

#include "slab/contact.hpp"

using namespace slab;

TEST_SUITE("contact") {
    TEST_CASE("standard contact") {
        FinContactAlg A = FinContactAlg::standard(3);
        CHECK(A.top() == 7);
        CHECK(A.edgeless());
        CHECK(A.contact(0b011, 0b010));
        CHECK_FALSE(A.contact(0b001, 0b110));
        CHECK(A.ll(0b001, 0b011));
        CHECK(is_clca(A));
        CHECK(FinContactAlg::standard(0).size() == 1);
        CHECK(is_clca(FinContactAlg::standard(0)));
    }

    TEST_CASE("a finite algebra with a proper edge fails the axioms") {
        FinContactAlg C = FinContactAlg::from_edges(3, {{0, 1}}, 7);
        CHECK_FALSE(C.edgeless());
        CHECK(C.contact(0b001, 0b010));
        auto vs = check_clca_axioms(C);
        CHECK(find_verdict(vs, "C1").pass);
        CHECK_FALSE(all_pass(vs));
        CHECK_FALSE(isolated_and_atoms(C).asserted);
    }

    TEST_CASE("bounded part") {
        FinContactAlg A = FinContactAlg::from_edges(3, {}, 0b011);
        CHECK(A.bounded(0b010));
        CHECK_FALSE(A.bounded(0b100));
        CHECK(bounded_clusters(A).size() == 2);
        CHECK(clusters(A).size() == 3);
        auto idx = cluster_of_atom(A);
        CHECK(idx[2] == -1);
        CHECK(psi_a(A) == Shape{Block::fin(2)});
    }

    TEST_CASE("dual topology") {
        FinContactAlg A = FinContactAlg::standard(3);
        FiniteTopology t = dual_topology(A);
        CHECK(t.points == 3);
        CHECK(t.isolated() == 7);
        CHECK(lambda_g(A, 0b101) == 0b101);
        FiniteTopology d = FiniteTopology::discrete(2);
        CHECK(d.is_open(2));
        CHECK(d.closure(1) == 1);
    }

    TEST_CASE("homomorphisms from maps") {
        FinContactAlg A = FinContactAlg::standard(2), B = FinContactAlg::standard(3);
        FinHom phi = FinHom::of_map(A, B, {0, 0, 1});
        CHECK(is_boolean_hom(phi));
        CHECK_FALSE(is_boolean_iso(phi));
        CHECK(phi(0b01) == 0b011);
        CHECK(spectral(phi) == std::vector<unsigned>{0, 0, 1});
        CHECK(is_boolean_iso(FinHom::identity(B)));
        CHECK(map_surjective({0, 0, 1}, 2));
        CHECK_FALSE(map_injective({0, 0, 1}, 2));
        FinHom l = lambda_t({0, 0, 1}, 2);
        CHECK(l == phi);
    }

    TEST_CASE("dual morphisms") {
        FinContactAlg A = FinContactAlg::standard(2), B = FinContactAlg::standard(3);
        FinHom phi = FinHom::of_map(A, B, {0, 0, 1});
        CHECK(all_pass(check_DLC(phi)));
        CHECK(check_InHLC(phi).pass == map_injective({0, 0, 1}, 2));
        CHECK(check_SuHLC(phi).pass == map_surjective({0, 0, 1}, 2));
        CHECK_FALSE(check_LOprime(phi));
        CHECK(check_LOprime(FinHom::identity(B)));
        auto adj = check_lower_adjoint_fin(phi);
        REQUIRE(adj);
        CHECK((*adj)[0b011] == 0b01);
        CHECK(phi_Lambda(phi)[0b001] == 0b01);
        FinHom c = caron(FinHom::identity(A));
        CHECK(c == FinHom::identity(A));
        CHECK(diamond_compose(FinHom::identity(B), phi) == phi);
    }

    TEST_CASE("delta ideals and the frame") {
        FinContactAlg A = FinContactAlg::standard(2);
        auto ds = delta_ideals(A);
        CHECK(ds.size() == 4);
        for (ElemSet d : ds) CHECK(is_delta_ideal(A, d));
        CHECK(is_ideal(A, down_set(0b01)));
        CHECK(below_ll(A, 0b11) == down_set(0b11));
        DeltaFrame F = delta_frame(A);
        CHECK(F.top() == down_set(0b11));
        CHECK(F.neg(down_set(0b01)) == down_set(0b10));
        CHECK(iota(A, down_set(0b10)) == 0b10);
        CHECK(all_pass(verify_iota(F)));
        CHECK(all_pass(verify_classification(F)));
        DeltaClass k = classify_delta(F, down_set(0b01));
        CHECK(k.simple);
        CHECK(k.principal);
    }

    TEST_CASE("quotients") {
        FinContactAlg A = FinContactAlg::standard(3);
        QuotientResult q = construct_open_quotient(A, down_set(0b011));
        CHECK(q.ok());
        CHECK(q.alg.n == 2);
        QuotientResult r = construct_regular_closed_quotient(A, 0b110);
        CHECK(r.ok());
        CHECK(r.alg.n == 2);
    }

    TEST_CASE("isolated points") {
        IsolatedReport r = isolated_and_atoms(FinContactAlg::standard(3));
        CHECK(r.asserted);
        CHECK(r.ok());
    }

    TEST_CASE("masks print as sets") {
        CHECK(mask_string(0) == "{}");
        CHECK(mask_string(0b101) == "{0,2}");
    }

    TEST_CASE("small sweep") {
        SweepReport s = contact_sweep(3, 3);
        CHECK(s.ok());
        for (const SweepLine& l : s.lines) {
            INFO(l.check << " " << l.witness);
            CHECK(l.failures == 0);
        }
    }
}
