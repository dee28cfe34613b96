#include <doctest.h>

#include "slab/balg.hpp"
#include "slab/fuzz.hpp"

using namespace slab;

namespace {

const Shape kConv{Block::conv()};
const Shape kDisc{Block::disc()};
const Shape kMixed{Block::fin(2), Block::conv(), Block::disc()};

Elem seq(const Shape& s, SeqSet set, std::size_t b = 0) { return Elem::seq(s, b, std::move(set)); }

}  // namespace

TEST_SUITE("balg") {
    TEST_CASE("seqset operations") {
        SeqSet a = SeqSet::fin({1, 3}), b = SeqSet::cofin({3, 4});
        CHECK((a | b) == SeqSet::cofin({4}));
        CHECK((a & b) == SeqSet::fin({1}));
        CHECK((b - a) == SeqSet::cofin({1, 3, 4}));
        CHECK(a.complement() == SeqSet::cofin({1, 3}));
        CHECK(SeqSet::range(2, 5) == SeqSet::fin({2, 3, 4}));
        CHECK(SeqSet::cofin_below(2) == SeqSet::cofin({0, 1}));
        CHECK(a.subset_of(SeqSet::all()));
        CHECK_FALSE(b.subset_of(a));
        CHECK(b.contains(100));
        CHECK_FALSE(b.contains(4));
    }

    TEST_CASE("lattice examples") {
        CHECK(meet(Elem::top(kConv), seq(kConv, SeqSet::fin({3}))) == seq(kConv, SeqSet::fin({3})));
        CHECK(complement(seq(kConv, SeqSet::fin({0, 1}))) == seq(kConv, SeqSet::cofin({0, 1})));
        CHECK(join(seq(kConv, SeqSet::fin({0})), seq(kConv, SeqSet::cofin({0}))).is_top());
        CHECK(Elem::zero(kMixed).is_zero());
        CHECK(holds_limit(Elem::tail(kConv, 0, 4), 0));
        CHECK_FALSE(holds_limit(seq(kConv, SeqSet::fin({9})), 0));
        CHECK(Elem::atom(kMixed, 0, 1).parts[0].mask == 2);
        CHECK(holds_index(Elem::atom(kMixed, 2, 7), 2, 7));
    }

    TEST_CASE("mismatched shapes are rejected") {
        CHECK_THROWS_AS(meet(Elem::top(kConv), Elem::top(kDisc)), ShapeError);
    }

    TEST_CASE("ideal membership") {
        CHECK_FALSE(in_ideal(Elem::top(kDisc)));
        CHECK(in_ideal(seq(kDisc, SeqSet::fin({0, 5}))));
        CHECK(in_ideal(seq(kConv, SeqSet::cofin({5}))));
        CHECK(in_ideal(Elem::top(Shape{Block::fin(3)})));
        CHECK(is_complete_algebra({{Block::fin(3)}}));
        CHECK(is_complete_algebra({{}}));
        CHECK_FALSE(is_complete_algebra({kConv}));
    }

    TEST_CASE("boolean laws on random elements") {
        Fuzzer fz(7);
        for (int i = 0; i < 200; ++i) {
            Shape s = fz.shape();
            Elem a = fz.elem(s), b = fz.elem(s), c = fz.elem(s);
            CHECK(meet(a, join(b, c)) == join(meet(a, b), meet(a, c)));
            CHECK(complement(join(a, b)) == meet(complement(a), complement(b)));
            CHECK(meet(a, complement(a)).is_zero());
            CHECK(join(a, complement(a)).is_top());
            CHECK(leq(meet(a, b), a));
            CHECK(leq(a, b) == (meet(a, b) == a));
            CHECK(minus(a, b) == meet(a, complement(b)));
        }
    }

    TEST_CASE("atomicity") {
        Fuzzer fz(11);
        for (int i = 0; i < 200; ++i) {
            Shape s = fz.shape();
            Elem a = fz.elem(s);
            if (a.is_zero()) continue;
            auto d = atom_below(a);
            REQUIRE(d);
            CHECK(leq(d->elem(s), a));
            CHECK(is_atom(d->elem(s)));
        }
        CHECK_FALSE(is_atom(seq(kConv, SeqSet::fin({1, 2}))));
        CHECK_FALSE(is_atom(Elem::zero(kConv)));
        for (const AtomDescriptor& d : described_atoms(kMixed, 3))
            if (!d.uniform_tail) CHECK(is_atom(d.elem(kMixed)));
    }

    TEST_CASE("compact covers and generators") {
        Elem k = compact_cover(kMixed, 3);
        CHECK(in_ideal(k));
        CHECK(k.parts[0].mask == 3);
        CHECK(k.parts[1].set.full());
        CHECK(k.parts[2].set == SeqSet::range(0, 3));
        for (const Elem& g : ideal_generators(kMixed, 3)) CHECK(leq(g, k));
    }

    TEST_CASE("representable ideals") {
        RepIdeal fin_all = RepIdeal::fin_of(kConv, 0, SeqSet::all());
        CHECK_FALSE(is_simple_ideal(fin_all));
        CHECK(neg_ideal(fin_all) == RepIdeal::zero(kConv));
        CHECK(neg_ideal(RepIdeal::zero(kConv)) == RepIdeal::whole(kConv));
        CHECK(is_simple_ideal(RepIdeal::zero(kConv)));
        CHECK(is_simple_ideal(RepIdeal::down(Elem::top(Shape{Block::fin(3)}))));
        CHECK_FALSE(is_principal_ideal(RepIdeal::whole(kDisc)));
        CHECK(is_normal_ideal(RepIdeal::fin_of(kDisc, 0, SeqSet::cofin({1, 4}))));
        CHECK(fin_all.contains(seq(kConv, SeqSet::fin({4, 9}))));
        CHECK_FALSE(fin_all.contains(Elem::tail(kConv, 0, 3)));
        CHECK_THROWS(RepIdeal::down(Elem::top(kDisc)));
    }

    TEST_CASE("sigma and e are inverse") {
        CHECK(sigma_iso(RepIdeal::zero(kMixed)).is_zero());
        CHECK(sigma_iso(RepIdeal::fin_of(kDisc, 0, SeqSet::cofin({2}))) == seq(kDisc, SeqSet::cofin({2})));
        Fuzzer fz(3);
        for (int i = 0; i < 500; ++i) {
            Shape s = fz.shape();
            Elem a = fz.elem(s, true);
            REQUIRE(in_ideal(a));
            CHECK(sigma_iso(e_embed(a)) == a);
        }
    }

    TEST_CASE("embedding laws for e") {
        Fuzzer fz(4);
        for (int i = 0; i < 100; ++i) {
            Shape s = fz.shape();
            Elem a = fz.elem(s, true), b = fz.elem(s, true);
            CHECK(e_embed(meet(a, b)) == ideal_meet(e_embed(a), e_embed(b)));
            CHECK(e_embed(join(a, b)) == ideal_join(e_embed(a), e_embed(b)));
        }
        CHECK(e_embed(Elem::zero(kConv)) == RepIdeal::zero(kConv));
    }

    TEST_CASE("pseudocomplement is the largest disjoint ideal") {
        Fuzzer fz(5);
        for (int i = 0; i < 200; ++i) {
            Shape s = fz.shape();
            RepIdeal J = fz.ideal(s), K = fz.ideal(s);
            RepIdeal N = neg_ideal(J);
            CHECK(ideal_meet(J, N) == RepIdeal::zero(s));
            if (ideal_meet(K, J) == RepIdeal::zero(s)) CHECK(ideal_leq(K, N));
            CHECK(ideal_leq(J, neg_ideal(N)));
            CHECK(ideal_leq(ideal_meet(J, K), ideal_join(J, K)));
            CHECK(is_simple_ideal(J) == (ideal_join(J, N) == RepIdeal::whole(s)));
        }
    }

    TEST_CASE("sup of singletons") {
        IndexPattern evens{{}, {{2, 0}}};
        CHECK_FALSE(sup_of_singletons(kConv, 0, evens));
        IndexPattern both{{}, {{2, 0}, {2, 1}}};
        CHECK(sup_of_singletons(kConv, 0, both) == Elem::top(kConv));
        IndexPattern few{{1, 4}, {}};
        CHECK(sup_of_singletons(kDisc, 0, few) == seq(kDisc, SeqSet::fin({1, 4})));
    }
}
