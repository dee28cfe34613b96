#include <doctest.h>

#include "slab/duality.hpp"
#include "slab/fuzz.hpp"

using namespace slab;

namespace {

const Shape kConv{Block::conv()};
const Shape kDisc{Block::disc()};
const Shape kPt{Block::fin(1)};

GenMap inclusion() { return GenMap{kDisc, kConv, {BlockRule{{}, TailRule::affine(0, 1, 0)}}}; }

GenMap point_to(const Shape& dst, ExtPoint p) { return GenMap{kPt, dst, {BlockRule{{{0, p}}, {}}}}; }

}  // namespace

TEST_SUITE("duality") {
    TEST_CASE("objects") {
        CHECK(theta_t_obj({kConv}).blocks == kConv);
        CHECK(theta_a_obj({kDisc}).blocks == kDisc);
        CHECK(theta_a_obj({{Block::fin(3)}}).blocks == Shape{Block::fin(3)});
        CHECK(E_a({kDisc}).shape == kDisc);
        CHECK(E_b(GBPL{kDisc}).blocks == kDisc);
        CHECK(theta_g({kConv}).shape == kConv);
    }

    TEST_CASE("ultrafilters") {
        Ultrafilter c = Ultrafilter::cofin(0);
        CHECK(c.contains(Elem::tail(kConv, 0, 4)));
        CHECK_FALSE(c.contains(Elem::seq(kConv, 0, SeqSet::fin({1}))));
        CHECK(is_bounded(kConv, c));
        CHECK_FALSE(is_bounded(kDisc, c));
        // the unbounded one meets no ideal element
        for (Index k = 0; k < 10; ++k) CHECK_FALSE(c.contains(Elem::seq(kDisc, 0, SeqSet::range(0, k))));
        CHECK(point_of(kConv, c) == ExtPoint::limit(0));
        CHECK(point_of(kDisc, c) == ExtPoint::virt(0));
        CHECK(ultrafilter_of(ExtPoint::iso(0, 3)) == Ultrafilter::principal(0, 3));
    }

    TEST_CASE("homs of maps") {
        Hom id = theta_t_map(identity_map(kConv));
        Elem g = Elem::seq(kConv, 0, SeqSet::cofin({1}));
        CHECK(id(g) == g);
        Hom c = theta_t_map(point_to(kConv, ExtPoint::iso(0, 2)));
        CHECK(c(Elem::atom(kConv, 0, 2)).is_top());
        CHECK(c(Elem::atom(kConv, 0, 3)).is_zero());
        Hom inc = theta_t_map(inclusion());
        CHECK(inc(Elem::seq(kConv, 0, SeqSet::cofin({4}))) == Elem::seq(kDisc, 0, SeqSet::cofin({4})));
        GenMap virt = point_to(kDisc, ExtPoint::virt(0));
        CHECK_THROWS(theta_t_map(virt));
    }

    TEST_CASE("spectral maps round trip") {
        CHECK(theta_a_map(identity_hom({kConv})).map == identity_map(kConv));
        SpectralResult g = theta_a_map(hom_of(point_to(kDisc, ExtPoint::virt(0))));
        CHECK(g.generalized);
        Fuzzer fz(31);
        for (int i = 0; i < 200; ++i) {
            GenMap f = fz.real_map();
            SpectralResult r = theta_a_map(theta_t_map(f));
            CHECK_FALSE(r.generalized);
            CHECK(r.map == normalize(f));
        }
    }

    TEST_CASE("hom laws and composition") {
        Fuzzer fz(32);
        for (int i = 0; i < 100; ++i) {
            Shape x = fz.shape(), y = fz.shape(), z = fz.shape();
            GenMap f = fz.real_map(x, y), g = fz.real_map(y, z);
            Hom phi = hom_of(f), psi = hom_of(g);
            Hom both = compose(phi, psi);
            Elem e = fz.elem(z), d = fz.elem(z);
            CHECK(both(e) == phi(psi(e)));
            CHECK(psi(meet(e, d)) == meet(psi(e), psi(d)));
            CHECK(psi(complement(e)) == complement(psi(e)));
            CHECK(psi(Elem::zero(z)).is_zero());
        }
    }

    TEST_CASE("natural isomorphisms") {
        for (const Shape& s : {kPt, kConv, Shape{Block::disc(), Block::fin(2)}}) {
            IsoWitness t = nat_iso_tC({s});
            INFO(shape_str(s));
            CHECK(t.ok());
            CHECK_FALSE(t.laws.empty());
            CHECK(nat_iso_lambdaC({s}).ok());
            CHECK(sigma_round_trip({s}).ok());
        }
    }

    TEST_CASE("covering condition") {
        CHECK_FALSE(zlba_witness(theta_t_map(inclusion())));
        auto w = zlba_witness(hom_of(point_to(kDisc, ExtPoint::virt(0))));
        REQUIRE(w);
        CHECK(w->is_top());
    }

    TEST_CASE("extension of ideal homomorphisms") {
        PseudoHom id{{kConv}, {kConv}, identity_map(kConv)};
        ExtensionResult r = extend_pseudolattice_hom(id);
        REQUIRE(r);
        CHECK(r.phi->spectral == identity_map(kConv));
        PseudoHom inc{{kConv}, {kDisc}, inclusion()};
        ExtensionResult e = E_b_map(inc);
        REQUIRE(e);
        Elem cof = Elem::seq(kConv, 0, SeqSet::cofin({0, 3}));
        CHECK(e.phi->apply(cof) == Elem::seq(kDisc, 0, SeqSet::cofin({0, 3})));
        PseudoHom bad{{kDisc}, {kPt}, point_to(kDisc, ExtPoint::virt(0))};
        ExtensionResult b = extend_pseudolattice_hom(bad);
        CHECK_FALSE(b);
        CHECK_FALSE(b.witness.empty());
        CHECK_THROWS_AS(bad.apply(Elem::top(kDisc)), ShapeError);
    }

    TEST_CASE("extension agrees with psi and is boolean") {
        Fuzzer fz(33);
        for (int i = 0; i < 100; ++i) {
            GenMap f = fz.real_map();
            PseudoHom psi{{f.dst}, {f.src}, f};
            ExtensionResult r = extend_pseudolattice_hom(psi);
            REQUIRE(r);
            for (int k = 0; k < 5; ++k) {
                Elem c = fz.elem(f.dst, true), a = fz.elem(f.dst), b = fz.elem(f.dst);
                CHECK(r.phi->apply(c) == psi.apply(c));
                CHECK(r.phi->apply(join(a, b)) == join(r.phi->apply(a), r.phi->apply(b)));
                CHECK(r.phi->apply(complement(a)) == complement(r.phi->apply(a)));
            }
            CHECK(r.phi->apply(Elem::top(f.dst)).is_top());
        }
    }

    TEST_CASE("relative algebras") {
        RelativeAlgebra top = relative_algebra({kConv}, Elem::top(kConv));
        CHECK(top.algebra.blocks == kConv);
        RelativeAlgebra two = relative_algebra({kConv}, Elem::seq(kConv, 0, SeqSet::fin({2, 5})));
        CHECK(two.algebra.blocks == Shape{Block::fin(2)});
        RelativeAlgebra shifted = relative_algebra({kConv}, Elem::seq(kConv, 0, SeqSet::cofin({0})));
        CHECK(shifted.algebra.blocks == kConv);
        CHECK(shifted.epi(Elem::atom(kConv, 0, 1)) == Elem::atom(kConv, 0, 0));
        CHECK(shifted.epi(Elem::atom(kConv, 0, 0)).is_zero());
    }

    TEST_CASE("pull back of ultrafilters") {
        Hom inc = theta_t_map(inclusion());
        CHECK(pull_back(inc, Ultrafilter::principal(0, 4), 16) == Ultrafilter::principal(0, 4));
        CHECK(pull_back(inc, Ultrafilter::cofin(0), 16) == Ultrafilter::cofin(0));
    }

    TEST_CASE("iota of ideals") {
        PointSet u = iota_ideal(RepIdeal::fin_of(kConv, 0, SeqSet::all()));
        CHECK(set_is_open(u));
        CHECK_FALSE(set_is_closed(u));
        CHECK(iota_ideal(RepIdeal::whole(kConv)) == PointSet::whole(kConv));
        CHECK(iota_ideal(RepIdeal::zero(kDisc)) == PointSet::empty(kDisc));
    }

    TEST_CASE("generalized spaces") {
        GMapResult g = theta_g_map(inclusion());
        CHECK_FALSE(g.psi);
        REQUIRE(g.witness);
        GMapResult id = theta_g_map(identity_map(kConv));
        CHECK(id.psi);
    }
}
