#include <doctest.h>

#include "slab/dsl.hpp"
#include "slab/fuzz.hpp"

using namespace slab;

namespace {

const char* kDoc =
    "# omega+1 and N\n"
    "space W = conv\n"
    "space N = disc\n"
    "map inc : N -> W\n"
    "  0: tail every 1 from 0 in 0\n"
    "end\n"
    "hom h = dual inc\n"
    "elem a in W = 0:cofin{1}\n"
    "ideal J in W = 0:finof cofin{}\n"
    "contact C = atoms 3 edges 0-1 bound {0,1,2}\n";

ParseError error_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const ParseError& e) {
        return e;
    }
    FAIL("document parsed: " << text);
    return ParseError(ParseError::Syntax, 0, 0, "");
}

}  // namespace

TEST_SUITE("dsl") {
    TEST_CASE("empty document") {
        CHECK(parse_document("").decls.empty());
        CHECK(print_document(parse_document("# nothing\n\n")).empty());
    }

    TEST_CASE("declarations resolve") {
        Document d = parse_document(kDoc);
        CHECK(d.decls.size() == 7);
        CHECK(d.shape_of("W") == Shape{Block::conv()});
        GenMap inc = d.map("inc");
        CHECK(validate_map(inc));
        CHECK(eval(inc, 0, 5) == ExtPoint::iso(0, 5));
        Hom h = d.hom("h");
        CHECK(h.spectral == inc);
        const auto& a = std::get<ElemDecl>(d.find("a")->body);
        CHECK(a.elem == Elem::seq({Block::conv()}, 0, SeqSet::cofin({1})));
        const auto& J = std::get<IdealDecl>(d.find("J")->body);
        CHECK(J.ideal == RepIdeal::fin_of({Block::conv()}, 0, SeqSet::all()));
        const auto& C = std::get<ContactDecl>(d.find("C")->body);
        CHECK(C.alg == FinContactAlg::from_edges(3, {{0, 1}}, 7));
        CHECK(d.find("missing") == nullptr);
    }

    TEST_CASE("print and parse are inverse on normal forms") {
        std::string once = print_document(normalize(parse_document(kDoc)));
        CHECK(print_document(parse_document(once)) == once);
    }

    TEST_CASE("random maps survive printing") {
        Fuzzer fz(51);
        for (int i = 0; i < 200; ++i) {
            GenMap f = fz.real_map();
            Document d;
            d.decls.push_back({"X", SpaceDecl{f.src}});
            d.decls.push_back({"Y", SpaceDecl{f.dst}});
            d.decls.push_back({"f", MapDecl{"X", "Y", f}});
            d.decls.push_back({"a", ElemDecl{"Y", fz.elem(f.dst)}});
            d.decls.push_back({"J", IdealDecl{"X", fz.ideal(f.src)}});
            std::string text = print_document(d);
            Document back = parse_document(text);
            CHECK(back.map("f") == f);
            CHECK(std::get<ElemDecl>(back.find("a")->body).elem == std::get<ElemDecl>(d.decls[3].body).elem);
            CHECK(std::get<IdealDecl>(back.find("J")->body).ideal == normalize(std::get<IdealDecl>(d.decls[4].body).ideal));
            CHECK(print_document(back) == text);
        }
    }

    TEST_CASE("item forms") {
        CHECK(shape_text({Block::fin(2), Block::conv(), Block::disc()}) == "fin 2, conv, disc");
        CHECK(parse_shape("fin 2, conv") == Shape{Block::fin(2), Block::conv()});
        CHECK(point_text(ExtPoint::limit(1)) == "1.inf");
        CHECK(point_text(ExtPoint::virt(0)) == "0.vlim");
        Shape s{Block::fin(3), Block::disc()};
        Elem e = parse_elem(s, "0:{0,2} 1:cofin{1}");
        CHECK(elem_text(e) == "0:{0,2} 1:cofin{1}");
    }

    TEST_CASE("syntax errors carry a location") {
        ParseError e = error_of("space X = conv\nmap f : X -> X\n  0: tail every from 0 in 0\nend\n");
        CHECK(e.kind == ParseError::Syntax);
        CHECK(e.line == 3);
        CHECK(e.column > 1);
        CHECK(std::string(e.what()).rfind("3:", 0) == 0);
        ParseError g = error_of("space X = conv,\n");
        CHECK(g.line == 1);
        ParseError u = error_of("space X = wobble\n");
        CHECK(u.kind == ParseError::Syntax);
        ParseError big = error_of("space X = fin 3\nelem a in X = 0:{4294967296}\n");
        CHECK(big.line == 2);
        ParseError open = error_of("space X = conv\nmap f : X -> X\n  0: tail const 0.inf\n");
        CHECK(open.kind == ParseError::Syntax);
    }

    TEST_CASE("unresolved names") {
        ParseError e = error_of("map f : X -> X\n  0: tail const 0.inf\nend\n");
        CHECK(e.kind == ParseError::Unresolved);
        CHECK(e.line == 1);
        ParseError h = error_of("hom h = dual g\n");
        CHECK(h.kind == ParseError::Unresolved);
        ParseError dup = error_of("space X = conv\nspace X = disc\n");
        CHECK(dup.line == 2);
    }

    TEST_CASE("shape mismatches") {
        ParseError e = error_of("space X = conv\nspace Y = disc\nmap f : X -> Y\n  0: tail every 1 from 0 in 1\nend\n");
        CHECK(e.kind == ParseError::ShapeMismatch);
        CHECK(e.line == 4);
        // well-shaped but discontinuous maps parse and fail validation later
        Document d = parse_document("space X = conv\nspace Y = disc\nmap f : X -> Y\n  0: tail every 1 from 0 in 0\nend\n");
        CHECK(validate_map(d.map("f")).status == MapCheck::ContinuityError);
        ParseError b = error_of("space X = fin 2\nelem a in X = 1:{0}\n");
        CHECK(b.kind == ParseError::ShapeMismatch);
        ParseError m = error_of("space X = fin 2\nelem a in X = 0:{5}\n");
        CHECK(m.kind == ParseError::ShapeMismatch);
        ParseError i = error_of("space X = disc\nideal J in X = 0:down cofin{}\n");
        CHECK(i.kind == ParseError::ShapeMismatch);
    }
}
