#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyface/constructors.hpp"
#include "polyface/errors.hpp"
#include "polyface/incidence.hpp"
#include "polyface/lattice.hpp"

// A small construction language:
//   expr  := name [ '(' [ arg { ',' arg } ] ')' ]
//   arg   := ident '=' integer | integer | expr
// e.g. pyramid(t=2, product(simplex(2), simplex(2))).

namespace polyface::expr {

struct ParamSpec {
    std::string name;
    std::optional<long long> default_value;
};

struct BuilderSpec {
    std::string name;
    std::vector<ParamSpec> params;
    int children = 0;
};

inline const std::vector<BuilderSpec>& builders() {
    static const std::vector<BuilderSpec> table = {
        {"simplex", {{"d", {}}}, 0},
        {"segment", {}, 0},
        {"cube", {{"d", {}}}, 0},
        {"polygon", {{"n", {}}}, 0},
        {"cyclic", {{"n", {}}, {"d", {}}}, 0},
        {"triplex", {{"s", {}}, {"t", {}}}, 0},
        {"delta", {{"r", {}}, {"s", {}}, {"t", 0}}, 0},
        {"pentasm", {{"d", {}}}, 0},
        {"capped_prism", {{"l", {}}, {"d", {}}}, 0},
        {"sigma3", {}, 0},
        {"pyramid", {{"t", 1}}, 1},
        {"bipyramid", {}, 1},
        {"prism", {}, 1},
        {"dual", {}, 1},
        {"truncate", {{"v", {}}}, 1},
        {"product", {}, 2},
        {"free_join", {}, 2},
    };
    return table;
}

inline const BuilderSpec* find_builder(std::string_view name) {
    if (name == "join") name = "free_join";
    for (const auto& b : builders())
        if (b.name == name) return &b;
    return nullptr;
}

struct ConstructionExpr {
    std::string name;                                  // canonical builder name
    std::vector<std::pair<std::string, long long>> params;  // every parameter, schema order
    std::vector<ConstructionExpr> children;

    long long param(std::string_view key) const {
        for (const auto& [k, v] : params)
            if (k == key) return v;
        throw std::out_of_range("no parameter " + std::string(key));
    }

    friend bool operator==(const ConstructionExpr&, const ConstructionExpr&) = default;
};

/// Leaves print integers positionally; nodes with children name them, as in
/// pyramid(t=2, simplex(3)).
inline std::string to_string(const ConstructionExpr& e) {
    std::string out = e.name + "(";
    bool first = true;
    auto sep = [&] {
        if (!first) out += ", ";
        first = false;
    };
    for (const auto& [k, v] : e.params) {
        sep();
        if (!e.children.empty()) out += k + "=";
        out += std::to_string(v);
    }
    for (const auto& c : e.children) {
        sep();
        out += to_string(c);
    }
    return out + ")";
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    ConstructionExpr parse() {
        ConstructionExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size()) fail({"end of input"});
        return e;
    }

private:
    [[noreturn]] void fail(std::vector<std::string> expected) const {
        std::string found = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
        throw ParseError(pos_, std::move(expected), found);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c, std::vector<std::string> expected) {
        if (!peek(c)) fail(std::move(expected));
        ++pos_;
    }

    std::string ident() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) {
            pos_ = start;
            fail({"identifier"});
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    long long integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_ || pos_ - digits > 12) {
            pos_ = start;
            fail({"integer"});
        }
        return std::stoll(std::string(text_.substr(start, pos_ - start)));
    }

    bool at_integer() {
        skip_ws();
        return pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-');
    }

    ConstructionExpr parse_expr() {
        skip_ws();
        const std::size_t name_pos = pos_;
        if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            fail({"builder name"});
        const std::string name = ident();
        const BuilderSpec* spec = find_builder(name);
        if (!spec) {
            pos_ = name_pos;
            std::vector<std::string> names;
            for (const auto& b : builders()) names.push_back(b.name);
            throw ParseError(name_pos, names, "'" + name + "'");
        }

        std::vector<std::optional<long long>> values(spec->params.size());
        std::vector<ConstructionExpr> children;
        std::size_t positional = 0;
        if (peek('(')) {
            ++pos_;
            if (peek(')')) {
                ++pos_;
            } else {
                while (true) {
                    const std::size_t arg_pos = (skip_ws(), pos_);
                    if (at_integer()) {
                        const long long v = integer();
                        while (positional < values.size() && values[positional]) ++positional;
                        if (positional >= values.size()) {
                            pos_ = arg_pos;
                            fail({"')'"});
                        }
                        values[positional++] = v;
                    } else {
                        const std::size_t save = pos_;
                        const std::string word = ident();
                        if (peek('=')) {
                            ++pos_;
                            std::size_t idx = 0;
                            while (idx < spec->params.size() && spec->params[idx].name != word) ++idx;
                            if (idx == spec->params.size() || values[idx]) {
                                pos_ = arg_pos;
                                std::vector<std::string> expected;
                                for (std::size_t i = 0; i < spec->params.size(); ++i)
                                    if (!values[i]) expected.push_back(spec->params[i].name + "=");
                                if (expected.empty()) expected.push_back("expression");
                                fail(expected);
                            }
                            values[idx] = integer();
                        } else {
                            pos_ = save;
                            children.push_back(parse_expr());
                        }
                    }
                    if (peek(',')) {
                        ++pos_;
                        continue;
                    }
                    expect(')', {"','", "')'"});
                    break;
                }
            }
        }

        ConstructionExpr e;
        e.name = spec->name;
        for (std::size_t i = 0; i < values.size(); ++i) {
            const auto& p = spec->params[i];
            if (!values[i] && !p.default_value)
                throw ParseError(pos_, {p.name + "="}, "missing argument of " + spec->name);
            e.params.emplace_back(p.name, values[i] ? *values[i] : *p.default_value);
        }
        if (static_cast<int>(children.size()) != spec->children)
            throw ParseError(pos_, {std::to_string(spec->children) + " sub-expression(s)"},
                             std::to_string(children.size()) + " in " + spec->name);
        e.children = std::move(children);
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline ConstructionExpr parse(std::string_view text) { return Parser(text).parse(); }

/// Dimension and vertex count of an expression's result.
struct Shape {
    int dim = 0;
    int vertices = 0;
};

inline IncidencePolytope build(const ConstructionExpr& e);

/// Bottom-up dimension and size check. Throws DimensionMismatch when parameters do not fit
/// the dimensions of the operands and DomainError for out-of-range parameters.
inline Shape check(const ConstructionExpr& e) {
    auto p = [&](std::string_view k) { return static_cast<int>(e.param(k)); };
    auto need = [&](bool ok, const std::string& what) {
        if (!ok) throw DomainError(e.name + ": " + what);
    };
    auto fits = [&](Shape s) {
        if (s.vertices > VertexSet::capacity)
            throw DimensionMismatch(e.name + ": " + std::to_string(s.vertices) +
                                    " vertices exceed the supported " +
                                    std::to_string(VertexSet::capacity));
        return s;
    };
    for (const auto& [k, v] : e.params)
        need(v >= -1000000 && v <= 1000000, "parameter " + k + " out of range");

    std::vector<Shape> kids;
    for (const auto& c : e.children) kids.push_back(check(c));

    const std::string& n = e.name;
    if (n == "simplex") {
        need(p("d") >= 0, "need d >= 0");
        return fits({p("d"), p("d") + 1});
    }
    if (n == "segment") return {1, 2};
    if (n == "cube") {
        need(p("d") >= 1 && p("d") <= 6, "need 1 <= d <= 6");
        return fits({p("d"), 1 << p("d")});
    }
    if (n == "polygon") {
        need(p("n") >= 3, "need n >= 3");
        need(p("n") <= 24, "need n <= 24");
        return {2, p("n")};
    }
    if (n == "cyclic") {
        if (p("n") <= p("d")) throw DimensionMismatch("cyclic: need n > d");
        need(p("d") >= 2 && p("n") <= 24, "need d >= 2 and n <= 24");
        return {p("d"), p("n")};
    }
    if (n == "triplex") {
        need(p("s") >= 1 && p("t") >= 0, "need s >= 1, t >= 0");
        return fits({p("s") + p("t"), 2 * p("s") + p("t")});
    }
    if (n == "delta") {
        need(p("r") >= 1 && p("s") >= 1 && p("t") >= 0, "need r, s >= 1, t >= 0");
        return fits({p("r") + p("s") + p("t"), (p("r") + 1) * (p("s") + 1) + p("t")});
    }
    if (n == "pentasm") {
        need(p("d") >= 3, "need d >= 3");
        return fits({p("d"), 2 * p("d") + 1});
    }
    if (n == "capped_prism") {
        need(p("l") >= 3, "need l >= 3");
        if (p("l") > p("d")) throw DimensionMismatch("capped_prism: need l <= d");
        return fits({p("d"), 2 * p("d") + 1});
    }
    if (n == "sigma3") return {3, 7};
    if (n == "pyramid") {
        need(p("t") >= 0, "need t >= 0");
        return fits({kids[0].dim + p("t"), kids[0].vertices + p("t")});
    }
    if (n == "bipyramid") return fits({kids[0].dim + 1, kids[0].vertices + 2});
    if (n == "prism") return fits({kids[0].dim + 1, 2 * kids[0].vertices});
    if (n == "dual") {
        if (kids[0].dim < 1) throw DimensionMismatch("dual: operand must have dimension >= 1");
        return fits({kids[0].dim, build(e.children[0]).num_facets()});
    }
    if (n == "truncate") {
        if (p("v") < 0 || p("v") >= kids[0].vertices)
            throw DimensionMismatch("truncate: vertex " + std::to_string(p("v")) +
                                    " not in 0.." + std::to_string(kids[0].vertices - 1));
        return fits({kids[0].dim, kids[0].vertices - 1 + kids[0].dim});
    }
    if (n == "product") {
        if (kids[0].dim < 1 || kids[1].dim < 1)
            throw DimensionMismatch("product: operands must have dimension >= 1");
        return fits({kids[0].dim + kids[1].dim, kids[0].vertices * kids[1].vertices});
    }
    if (n == "free_join") return fits({kids[0].dim + kids[1].dim + 1, kids[0].vertices + kids[1].vertices});
    throw DomainError("unknown builder " + n);
}

inline IncidencePolytope build(const ConstructionExpr& e) {
    (void)check(e);
    auto p = [&](std::string_view k) { return static_cast<int>(e.param(k)); };
    auto child = [&](std::size_t i) { return build(e.children.at(i)); };
    const std::string& n = e.name;
    if (n == "simplex") return build::simplex(p("d"));
    if (n == "segment") return build::segment();
    if (n == "cube") return build::cube(p("d"));
    if (n == "polygon") return build::polygon(p("n"));
    if (n == "cyclic") return build::cyclic(p("n"), p("d"));
    if (n == "triplex") return build::triplex(p("s"), p("t"));
    if (n == "delta") return build::delta(p("r"), p("s"), p("t"));
    if (n == "pentasm") return build::pentasm(p("d"));
    if (n == "capped_prism") return build::capped_prism(p("l"), p("d"));
    if (n == "sigma3") return build::sigma3();
    if (n == "pyramid") return build::pyramid(child(0), p("t"));
    if (n == "bipyramid") return build::bipyramid(child(0));
    if (n == "prism") return build::prism(child(0));
    if (n == "dual") return dual_incidence(child(0));
    if (n == "truncate") return build::truncate_simple_vertex(child(0), p("v"));
    if (n == "product") return build::product(child(0), child(1));
    if (n == "free_join") return build::free_join(child(0), child(1));
    throw DomainError("unknown builder " + n);
}

inline IncidencePolytope build(std::string_view text) { return build(parse(text)); }

}  // namespace polyface::expr
