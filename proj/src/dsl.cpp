#include "slab/dsl.hpp"

#include <cctype>
#include <limits>
#include <set>
#include <sstream>

namespace slab {

ParseError::ParseError(Kind k, int l, int c, const std::string& msg)
    : std::runtime_error(std::to_string(l) + ":" + std::to_string(c) + ": " + msg), kind(k), line(l), column(c) {}

namespace {

constexpr Index kMaxLiteral = Index{1} << 31;

struct Token {
    enum Type : std::uint8_t { Word, Int, Punct, End } type = End;
    std::string text;
    Index value = 0;
    int col = 0;
};

std::vector<Token> tokenize(const std::string& line, int lineno) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        int col = static_cast<int>(i) + 1;
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < line.size() && (std::isalnum(static_cast<unsigned char>(line[j])) || line[j] == '_' || line[j] == '\'' ||
                                       (line[j] == '-' && j + 1 < line.size() && std::isalpha(static_cast<unsigned char>(line[j + 1])))))
                ++j;
            out.push_back({Token::Word, line.substr(i, j - i), 0, col});
            i = j;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            Index v = 0;
            while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) {
                v = v * 10 + (line[j] - '0');
                if (v > kMaxLiteral) throw ParseError(ParseError::Syntax, lineno, col, "index literal exceeds 2^31");
                ++j;
            }
            out.push_back({Token::Int, line.substr(i, j - i), v, col});
            i = j;
            continue;
        }
        if (c == '-' && i + 1 < line.size() && line[i + 1] == '>') {
            out.push_back({Token::Punct, "->", 0, col});
            i += 2;
            continue;
        }
        if (std::string("=,:;{}.-").find(c) != std::string::npos) {
            out.push_back({Token::Punct, std::string(1, c), 0, col});
            ++i;
            continue;
        }
        throw ParseError(ParseError::Syntax, lineno, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Token::End, "", 0, static_cast<int>(line.size()) + 1});
    return out;
}

class Cursor {
public:
    Cursor(std::vector<Token> t, int line) : toks_(std::move(t)), line_(line) {}

    const Token& peek() const { return toks_[pos_]; }
    bool at_end() const { return peek().type == Token::End; }
    int line() const { return line_; }

    [[noreturn]] void error(const std::string& msg, ParseError::Kind k = ParseError::Syntax) const {
        throw ParseError(k, line_, peek().col, msg);
    }

    bool accept(const std::string& text) {
        if (peek().type == Token::End || peek().text != text) return false;
        ++pos_;
        return true;
    }
    void expect(const std::string& text) {
        if (!accept(text)) error("expected '" + text + "', found " + describe());
    }
    std::string word() {
        if (peek().type != Token::Word) error("expected a name, found " + describe());
        return toks_[pos_++].text;
    }
    Index integer() {
        if (peek().type != Token::Int) error("expected an integer, found " + describe());
        return toks_[pos_++].value;
    }
    void finish() {
        if (!at_end()) error("unexpected " + describe());
    }
    std::string describe() const { return at_end() ? "end of line" : "'" + peek().text + "'"; }

private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
    int line_;
};

Shape read_shape(Cursor& c) {
    Shape s;
    if (c.accept("none")) return s;
    do {
        if (c.accept("fin")) {
            Index n = c.integer();
            if (n < 1 || n > 64) c.error("finite block size must be between 1 and 64");
            s.push_back(Block::fin(static_cast<std::uint32_t>(n)));
        } else if (c.accept("conv")) {
            s.push_back(Block::conv());
        } else if (c.accept("disc")) {
            s.push_back(Block::disc());
        } else {
            c.error("expected a block kind (fin, conv, disc), found " + c.describe());
        }
    } while (c.accept(","));
    return s;
}

std::vector<Index> read_index_set(Cursor& c) {
    c.expect("{");
    std::vector<Index> v;
    if (!c.accept("}")) {
        do v.push_back(c.integer());
        while (c.accept(","));
        c.expect("}");
    }
    return v;
}

SeqSet read_seqset(Cursor& c) {
    bool cof = c.accept("cofin");
    auto v = read_index_set(c);
    return cof ? SeqSet::cofin(v) : SeqSet::fin(v);
}

std::uint64_t read_mask(Cursor& c, std::uint32_t n) {
    std::uint64_t m = 0;
    for (Index i : read_index_set(c)) {
        if (i >= static_cast<Index>(n)) c.error("atom index out of range", ParseError::ShapeMismatch);
        m |= 1ULL << i;
    }
    return m;
}

ExtPoint read_point(Cursor& c) {
    Index b = c.integer();
    c.expect(".");
    if (c.accept("inf")) return ExtPoint::limit(static_cast<std::size_t>(b));
    if (c.accept("vlim")) return ExtPoint::virt(static_cast<std::size_t>(b));
    return ExtPoint::iso(static_cast<std::size_t>(b), c.integer());
}

std::size_t read_block_index(Cursor& c, const Shape& s) {
    Index b = c.integer();
    if (b >= static_cast<Index>(s.size())) c.error("block index out of range", ParseError::ShapeMismatch);
    return static_cast<std::size_t>(b);
}

Elem read_elem_parts(Cursor& c, const Shape& s) {
    Elem e = Elem::zero(s);
    std::set<std::size_t> seen;
    while (!c.at_end()) {
        std::size_t b = read_block_index(c, s);
        if (!seen.insert(b).second) c.error("block listed twice");
        c.expect(":");
        if (s[b].is_seq()) e.parts[b].set = read_seqset(c);
        else e.parts[b].mask = read_mask(c, s[b].n);
    }
    return e;
}

RepIdeal read_ideal_parts(Cursor& c, const Shape& s) {
    RepIdeal J = RepIdeal::zero(s);
    std::set<std::size_t> seen;
    while (!c.at_end()) {
        std::size_t b = read_block_index(c, s);
        if (!seen.insert(b).second) c.error("block listed twice");
        c.expect(":");
        IdealPart& p = J.parts[b];
        if (c.accept("down")) {
            p.form = IdealPart::Down;
            if (s[b].is_seq()) p.set = read_seqset(c);
            else p.mask = read_mask(c, s[b].n);
        } else if (c.accept("finof")) {
            if (!s[b].is_seq()) c.error("finof needs a sequence block", ParseError::ShapeMismatch);
            p.form = IdealPart::FinOf;
            p.set = read_seqset(c);
        } else {
            c.error("expected 'down' or 'finof', found " + c.describe());
        }
    }
    return J;
}

std::size_t read_map_line(Cursor& c, GenMap& f, std::set<std::size_t>& seen) {
    std::size_t b = read_block_index(c, f.src);
    if (!seen.insert(b).second) c.error("block listed twice");
    c.expect(":");
    BlockRule& r = f.rules[b];
    bool tail = false;
    if (c.at_end()) return b;
    do {
        if (c.accept("tail")) {
            if (tail) c.error("second tail rule");
            tail = true;
            if (c.accept("const")) {
                r.tail = TailRule::constant(read_point(c));
            } else if (c.accept("every")) {
                Index stride = c.integer();
                if (stride < 1) c.error("stride must be positive");
                c.expect("from");
                Index offset = c.integer();
                c.expect("in");
                Index target = c.integer();
                Index after = c.accept("after") ? c.integer() : 0;
                r.tail = TailRule::affine(static_cast<std::size_t>(target), stride, offset, after);
            } else {
                c.error("malformed tail rule: expected 'const' or 'every', found " + c.describe());
            }
        } else {
            Index n = c.integer();
            c.expect("->");
            if (r.except.count(n)) c.error("index mapped twice");
            r.except[n] = read_point(c);
        }
    } while (c.accept(";"));
    c.finish();
    return b;
}

FinContactAlg read_contact(Cursor& c) {
    c.expect("atoms");
    Index n = c.integer();
    if (n > static_cast<Index>(kMaxAtoms)) c.error("at most " + std::to_string(kMaxAtoms) + " atoms", ParseError::ShapeMismatch);
    std::vector<std::pair<unsigned, unsigned>> edges;
    if (c.accept("edges")) {
        while (c.peek().type == Token::Int) {
            Index i = c.integer();
            c.expect("-");
            Index j = c.integer();
            if (i >= n || j >= n) c.error("edge endpoint out of range", ParseError::ShapeMismatch);
            edges.emplace_back(static_cast<unsigned>(i), static_cast<unsigned>(j));
        }
    }
    c.expect("bound");
    Mask bound = static_cast<Mask>(read_mask(c, static_cast<std::uint32_t>(n)));
    return FinContactAlg::from_edges(static_cast<unsigned>(n), edges, bound);
}

std::string index_set_text(const std::vector<Index>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + "}";
}

std::string seqset_text(const SeqSet& s) { return (s.cof ? "cofin" : "") + index_set_text(s.pts); }

std::string mask_text(std::uint64_t m) {
    std::vector<Index> v;
    for (Index i = 0; i < 64; ++i)
        if ((m >> i) & 1ULL) v.push_back(i);
    return index_set_text(v);
}

}  // namespace

std::string shape_text(const Shape& s) {
    if (s.empty()) return "none";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        switch (s[i].kind) {
            case Kind::FinBlock: out += "fin " + std::to_string(s[i].n); break;
            case Kind::CompactSeq: out += "conv"; break;
            case Kind::DiscreteSeq: out += "disc"; break;
        }
    }
    return out;
}

std::string point_text(const ExtPoint& p) {
    std::string b = std::to_string(p.block) + ".";
    switch (p.type) {
        case ExtPoint::Iso: return b + std::to_string(p.index);
        case ExtPoint::Limit: return b + "inf";
        case ExtPoint::Virtual: return b + "vlim";
    }
    return b;
}

std::string elem_text(const Elem& a) {
    std::string out;
    for (std::size_t b = 0; b < a.shape.size(); ++b) {
        if (b) out += " ";
        out += std::to_string(b) + ":" + (a.shape[b].is_seq() ? seqset_text(a.parts[b].set) : mask_text(a.parts[b].mask));
    }
    return out;
}

std::string ideal_text(const RepIdeal& J) {
    std::string out;
    for (std::size_t b = 0; b < J.shape.size(); ++b) {
        if (b) out += " ";
        const IdealPart& p = J.parts[b];
        out += std::to_string(b) + ":";
        if (p.form == IdealPart::FinOf) out += "finof " + seqset_text(p.set);
        else out += "down " + (J.shape[b].is_seq() ? seqset_text(p.set) : mask_text(p.mask));
    }
    return out;
}

std::string contact_text(const FinContactAlg& A) {
    std::string out = "atoms " + std::to_string(A.n);
    std::string edges;
    for (unsigned i = 0; i < A.n; ++i)
        for (unsigned j = i + 1; j < A.n; ++j)
            if ((A.adj[i] >> j) & 1U) edges += " " + std::to_string(i) + "-" + std::to_string(j);
    if (!edges.empty()) out += " edges" + edges;
    return out + " bound " + mask_text(A.bound);
}

Shape parse_shape(const std::string& text) {
    Cursor c(tokenize(text, 1), 1);
    Shape s = read_shape(c);
    c.finish();
    return s;
}

Elem parse_elem(const Shape& s, const std::string& text) {
    Cursor c(tokenize(text, 1), 1);
    return read_elem_parts(c, s);
}

const Decl* Document::find(const std::string& name) const {
    for (const Decl& d : decls)
        if (d.name == name) return &d;
    return nullptr;
}

const Shape& Document::shape_of(const std::string& name) const {
    const Decl* d = find(name);
    if (!d) throw std::out_of_range("no declaration named " + name);
    if (auto* s = std::get_if<SpaceDecl>(&d->body)) return s->shape;
    if (auto* a = std::get_if<AlgebraDecl>(&d->body)) return a->shape;
    throw std::invalid_argument(name + " is not a space or an algebra");
}

GenMap Document::map(const std::string& name) const {
    const Decl* d = find(name);
    if (!d) throw std::out_of_range("no declaration named " + name);
    if (auto* m = std::get_if<MapDecl>(&d->body)) return m->map;
    throw std::invalid_argument(name + " is not a map");
}

Hom Document::hom(const std::string& name) const {
    const Decl* d = find(name);
    if (!d) throw std::out_of_range("no declaration named " + name);
    if (auto* h = std::get_if<HomDecl>(&d->body)) return hom_of(map(h->map));
    throw std::invalid_argument(name + " is not a hom");
}

Document parse_document(const std::string& text) {
    Document doc;
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string l;
        while (std::getline(in, l)) {
            if (!l.empty() && l.back() == '\r') l.pop_back();
            lines.push_back(l);
        }
    }
    auto shape_ref = [&](Cursor& c) -> const Shape& {
        int col = c.peek().col;
        std::string name = c.word();
        const Decl* d = doc.find(name);
        if (!d) throw ParseError(ParseError::Unresolved, c.line(), col, "unresolved reference '" + name + "'");
        if (auto* s = std::get_if<SpaceDecl>(&d->body)) return s->shape;
        if (auto* a = std::get_if<AlgebraDecl>(&d->body)) return a->shape;
        throw ParseError(ParseError::Unresolved, c.line(), col, "'" + name + "' is not a space or an algebra");
    };
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        Cursor c(tokenize(lines[i], lineno), lineno);
        if (c.at_end()) continue;
        int col = c.peek().col;
        std::string kw = c.word();
        int name_col = c.peek().col;
        std::string name = c.word();
        if (doc.find(name)) throw ParseError(ParseError::Syntax, lineno, name_col, "duplicate name '" + name + "'");
        Decl d{name, SpaceDecl{}, lineno};
        if (kw == "space" || kw == "algebra") {
            c.expect("=");
            Shape s = read_shape(c);
            c.finish();
            if (kw == "space") d.body = SpaceDecl{s};
            else d.body = AlgebraDecl{s};
        } else if (kw == "map") {
            c.expect(":");
            int sc = c.peek().col;
            std::string src = c.word();
            c.expect("->");
            int dc = c.peek().col;
            std::string dst = c.word();
            c.finish();
            auto space = [&](const std::string& n, int at) -> const Shape& {
                const Decl* r = doc.find(n);
                if (!r) throw ParseError(ParseError::Unresolved, lineno, at, "unresolved reference '" + n + "'");
                auto* s = std::get_if<SpaceDecl>(&r->body);
                if (!s) throw ParseError(ParseError::Unresolved, lineno, at, "'" + n + "' is not a space");
                return s->shape;
            };
            GenMap f{space(src, sc), space(dst, dc), {}};
            f.rules.resize(f.src.size());
            std::set<std::size_t> seen;
            std::vector<int> rule_line(f.src.size(), lineno);
            bool closed = false;
            while (++i < lines.size()) {
                const int ln = static_cast<int>(i) + 1;
                Cursor mc(tokenize(lines[i], ln), ln);
                if (mc.at_end()) continue;
                if (mc.accept("end")) {
                    mc.finish();
                    closed = true;
                    break;
                }
                rule_line[read_map_line(mc, f, seen)] = ln;
            }
            if (!closed) throw ParseError(ParseError::Syntax, lineno, col, "map without 'end'");
            MapCheck mc = check_shape(f);
            if (!mc) {
                int at = mc.block < rule_line.size() ? rule_line[mc.block] : lineno;
                throw ParseError(ParseError::ShapeMismatch, at, at == lineno ? col : 1, "map " + name + ": " + mc.message);
            }
            d.body = MapDecl{src, dst, f};
        } else if (kw == "hom") {
            c.expect("=");
            c.expect("dual");
            int mcol = c.peek().col;
            std::string m = c.word();
            c.finish();
            const Decl* r = doc.find(m);
            if (!r) throw ParseError(ParseError::Unresolved, lineno, mcol, "unresolved reference '" + m + "'");
            if (!std::holds_alternative<MapDecl>(r->body)) throw ParseError(ParseError::Unresolved, lineno, mcol, "'" + m + "' is not a map");
            d.body = HomDecl{m};
        } else if (kw == "elem" || kw == "ideal") {
            c.expect("in");
            std::string of = c.peek().text;
            const Shape& s = shape_ref(c);
            c.expect("=");
            if (kw == "elem") {
                d.body = ElemDecl{of, read_elem_parts(c, s)};
            } else {
                RepIdeal J = read_ideal_parts(c, s);
                try {
                    J = normalize(J);
                } catch (const std::exception& e) {
                    throw ParseError(ParseError::ShapeMismatch, lineno, col, std::string("ideal ") + name + ": " + e.what());
                }
                d.body = IdealDecl{of, J};
            }
        } else if (kw == "contact") {
            c.expect("=");
            d.body = ContactDecl{read_contact(c)};
            c.finish();
        } else {
            throw ParseError(ParseError::Syntax, lineno, col, "unknown declaration '" + kw + "'");
        }
        doc.decls.push_back(std::move(d));
    }
    return doc;
}

std::string print_document(const Document& doc) {
    std::string out;
    for (const Decl& d : doc.decls) {
        std::visit(
            [&](const auto& b) {
                using T = std::decay_t<decltype(b)>;
                if constexpr (std::is_same_v<T, SpaceDecl>) {
                    out += "space " + d.name + " = " + shape_text(b.shape) + "\n";
                } else if constexpr (std::is_same_v<T, AlgebraDecl>) {
                    out += "algebra " + d.name + " = " + shape_text(b.shape) + "\n";
                } else if constexpr (std::is_same_v<T, MapDecl>) {
                    out += "map " + d.name + " : " + b.src + " -> " + b.dst + "\n";
                    for (std::size_t k = 0; k < b.map.rules.size(); ++k) {
                        const BlockRule& r = b.map.rules[k];
                        std::vector<std::string> items;
                        for (const auto& [n, p] : r.except) items.push_back(std::to_string(n) + " -> " + point_text(p));
                        if (r.tail.type == TailRule::Const) {
                            items.push_back("tail const " + point_text(r.tail.point));
                        } else if (r.tail.type == TailRule::Affine) {
                            std::string t = "tail every " + std::to_string(r.tail.stride) + " from " + std::to_string(r.tail.offset) +
                                            " in " + std::to_string(r.tail.block);
                            if (r.tail.threshold != 0) t += " after " + std::to_string(r.tail.threshold);
                            items.push_back(t);
                        }
                        out += "  " + std::to_string(k) + ":";
                        for (std::size_t j = 0; j < items.size(); ++j) out += (j ? "; " : " ") + items[j];
                        out += "\n";
                    }
                    out += "end\n";
                } else if constexpr (std::is_same_v<T, HomDecl>) {
                    out += "hom " + d.name + " = dual " + b.map + "\n";
                } else if constexpr (std::is_same_v<T, ElemDecl>) {
                    out += "elem " + d.name + " in " + b.of + " =" + (b.elem.shape.empty() ? "" : " " + elem_text(b.elem)) + "\n";
                } else if constexpr (std::is_same_v<T, IdealDecl>) {
                    out += "ideal " + d.name + " in " + b.of + " =" + (b.ideal.shape.empty() ? "" : " " + ideal_text(b.ideal)) + "\n";
                } else {
                    out += "contact " + d.name + " = " + contact_text(b.alg) + "\n";
                }
            },
            d.body);
    }
    return out;
}

Document normalize(Document doc) {
    for (Decl& d : doc.decls)
        if (auto* m = std::get_if<MapDecl>(&d.body))
            if (validate_map(m->map)) m->map = normalize(m->map);
    return doc;
}

}  // namespace slab
