#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "slab/contact.hpp"
#include "slab/hom.hpp"

namespace slab {

struct ParseError : std::runtime_error {
    enum Kind : std::uint8_t { Syntax, Unresolved, ShapeMismatch } kind;
    int line, column;
    ParseError(Kind k, int l, int c, const std::string& msg);
};

struct SpaceDecl {
    Shape shape;
};
struct AlgebraDecl {
    Shape shape;
};
struct MapDecl {
    std::string src, dst;
    GenMap map;
};
// phi = dual of a map: phi(G) is the preimage of G.
struct HomDecl {
    std::string map;
};
struct ElemDecl {
    std::string of;
    Elem elem;
};
struct IdealDecl {
    std::string of;
    RepIdeal ideal;
};
struct ContactDecl {
    FinContactAlg alg;
};

using DeclBody = std::variant<SpaceDecl, AlgebraDecl, MapDecl, HomDecl, ElemDecl, IdealDecl, ContactDecl>;

struct Decl {
    std::string name;
    DeclBody body;
    int line = 0;
};

struct Document {
    std::vector<Decl> decls;

    const Decl* find(const std::string& name) const;
    const Shape& shape_of(const std::string& name) const;  // space or algebra
    GenMap map(const std::string& name) const;
    Hom hom(const std::string& name) const;
};

Document parse_document(const std::string& text);
std::string print_document(const Document& doc);
// Maps put in normal form; everything else unchanged.
Document normalize(Document doc);

// Single-item forms shared with the report format.
std::string shape_text(const Shape& s);
std::string point_text(const ExtPoint& p);
std::string elem_text(const Elem& a);
std::string ideal_text(const RepIdeal& J);
std::string contact_text(const FinContactAlg& A);
Shape parse_shape(const std::string& text);
Elem parse_elem(const Shape& s, const std::string& text);

}  // namespace slab
