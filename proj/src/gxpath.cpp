// Copyright (c) gxrepair contributors.
// SPDX-License-Identifier: Apache-2.0
#include "gxrepair/gxpath.hpp"

#include <stdexcept>
#include <type_traits>

namespace gxrepair {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool same(const PathPtr& a, const PathPtr& b) { return a == b || (a && b && *a == *b); }
bool same(const NodePtr& a, const NodePtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

bool operator==(const PathExpr& a, const PathExpr& b) {
    if (a.v.index() != b.v.index()) {
        return false;
    }
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.v);
            if constexpr (std::is_same_v<T, path::Epsilon> || std::is_same_v<T, path::Wildcard>) {
                return true;
            } else if constexpr (std::is_same_v<T, path::Label> || std::is_same_v<T, path::Inverse>) {
                return x.name == y.name;
            } else if constexpr (std::is_same_v<T, path::Star> || std::is_same_v<T, path::Complement>) {
                return same(x.arg, y.arg);
            } else if constexpr (std::is_same_v<T, path::NodeTest>) {
                return same(x.test, y.test);
            } else if constexpr (std::is_same_v<T, path::Repeat>) {
                return x.min == y.min && x.max == y.max && same(x.arg, y.arg);
            } else {
                return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
            }
        },
        a.v);
}

bool operator==(const NodeExpr& a, const NodeExpr& b) {
    if (a.v.index() != b.v.index()) {
        return false;
    }
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.v);
            if constexpr (std::is_same_v<T, node::DataEq> || std::is_same_v<T, node::DataNeq>) {
                return x.value == y.value;
            } else if constexpr (std::is_same_v<T, node::Not>) {
                return same(x.arg, y.arg);
            } else if constexpr (std::is_same_v<T, node::Exists>) {
                return same(x.path, y.path);
            } else {
                return same(x.lhs, y.lhs) && same(x.rhs, y.rhs);
            }
        },
        a.v);
}

PathPtr eps() { return std::make_shared<const PathExpr>(PathExpr{path::Epsilon{}}); }
PathPtr wildcard() { return std::make_shared<const PathExpr>(PathExpr{path::Wildcard{}}); }
PathPtr label(EdgeLabel name) { return std::make_shared<const PathExpr>(PathExpr{path::Label{std::move(name)}}); }
PathPtr inverse(EdgeLabel name) {
    return std::make_shared<const PathExpr>(PathExpr{path::Inverse{std::move(name)}});
}
PathPtr concat(PathPtr lhs, PathPtr rhs) {
    return std::make_shared<const PathExpr>(PathExpr{path::Concat{std::move(lhs), std::move(rhs)}});
}
PathPtr alt(PathPtr lhs, PathPtr rhs) {
    return std::make_shared<const PathExpr>(PathExpr{path::Union{std::move(lhs), std::move(rhs)}});
}
PathPtr intersect(PathPtr lhs, PathPtr rhs) {
    return std::make_shared<const PathExpr>(PathExpr{path::Intersect{std::move(lhs), std::move(rhs)}});
}
PathPtr star(PathPtr arg) { return std::make_shared<const PathExpr>(PathExpr{path::Star{std::move(arg)}}); }
PathPtr complement(PathPtr arg) {
    return std::make_shared<const PathExpr>(PathExpr{path::Complement{std::move(arg)}});
}
PathPtr test(NodePtr phi) { return std::make_shared<const PathExpr>(PathExpr{path::NodeTest{std::move(phi)}}); }
PathPtr repeat(PathPtr arg, std::size_t min, std::size_t max) {
    if (min > max) {
        throw std::invalid_argument("repeat bounds out of order");
    }
    return std::make_shared<const PathExpr>(PathExpr{path::Repeat{std::move(arg), min, max}});
}
PathPtr path_implies(PathPtr a, PathPtr b) { return alt(std::move(b), complement(std::move(a))); }

NodePtr data_eq(DataValue c) { return std::make_shared<const NodeExpr>(NodeExpr{node::DataEq{std::move(c)}}); }
NodePtr data_neq(DataValue c) { return std::make_shared<const NodeExpr>(NodeExpr{node::DataNeq{std::move(c)}}); }
NodePtr negate(NodePtr phi) { return std::make_shared<const NodeExpr>(NodeExpr{node::Not{std::move(phi)}}); }
NodePtr lor(NodePtr lhs, NodePtr rhs) {
    return std::make_shared<const NodeExpr>(NodeExpr{node::Or{std::move(lhs), std::move(rhs)}});
}
NodePtr land(NodePtr lhs, NodePtr rhs) {
    return std::make_shared<const NodeExpr>(NodeExpr{node::And{std::move(lhs), std::move(rhs)}});
}
NodePtr exists(PathPtr alpha) { return std::make_shared<const NodeExpr>(NodeExpr{node::Exists{std::move(alpha)}}); }
NodePtr exists_eq(PathPtr lhs, PathPtr rhs) {
    return std::make_shared<const NodeExpr>(NodeExpr{node::ExistsEq{std::move(lhs), std::move(rhs)}});
}
NodePtr exists_neq(PathPtr lhs, PathPtr rhs) {
    return std::make_shared<const NodeExpr>(NodeExpr{node::ExistsNeq{std::move(lhs), std::move(rhs)}});
}
NodePtr node_implies(NodePtr p, NodePtr q) { return lor(std::move(q), negate(std::move(p))); }

ConstraintSet::ConstraintSet(std::vector<NodePtr> nodes, std::vector<PathPtr> paths) {
    for (auto& n : nodes) {
        add(std::move(n));
    }
    for (auto& p : paths) {
        add(std::move(p));
    }
}

std::vector<NodePtr> ConstraintSet::node_constraints() const {
    std::vector<NodePtr> out;
    for (const auto& c : items_) {
        if (const auto* n = std::get_if<NodePtr>(&c.expr)) {
            out.push_back(*n);
        }
    }
    return out;
}

std::vector<PathPtr> ConstraintSet::path_constraints() const {
    std::vector<PathPtr> out;
    for (const auto& c : items_) {
        if (const auto* p = std::get_if<PathPtr>(&c.expr)) {
            out.push_back(*p);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fragment classification

namespace {

void scan(const PathExpr& e, FragmentFlags& f);

void scan(const NodeExpr& e, FragmentFlags& f) {
    std::visit(overloaded{
                   [](const node::DataEq&) {},
                   [](const node::DataNeq&) {},
                   [&](const node::Not& x) {
                       f.positive = false;
                       scan(*x.arg, f);
                   },
                   [&](const node::Exists& x) { scan(*x.path, f); },
                   [&](const auto& x) {
                       scan(*x.lhs, f);
                       scan(*x.rhs, f);
                   },
               },
               e.v);
}

void scan(const PathExpr& e, FragmentFlags& f) {
    std::visit(overloaded{
                   [](const path::Epsilon&) {},
                   [](const path::Wildcard&) {},
                   [](const path::Label&) {},
                   [](const path::Inverse&) {},
                   [&](const path::Star& x) {
                       const bool atomic = std::holds_alternative<path::Label>(x.arg->v) ||
                                           std::holds_alternative<path::Inverse>(x.arg->v);
                       if (!atomic) {
                           f.core = false;
                       }
                       scan(*x.arg, f);
                   },
                   [&](const path::Complement& x) {
                       f.positive = false;
                       scan(*x.arg, f);
                   },
                   [&](const path::NodeTest& x) { scan(*x.test, f); },
                   [&](const path::Repeat& x) { scan(*x.arg, f); },
                   [&](const auto& x) {
                       scan(*x.lhs, f);
                       scan(*x.rhs, f);
                   },
               },
               e.v);
}

}  // namespace

std::vector<Fragment> FragmentFlags::memberships() const {
    std::vector<Fragment> out{Fragment::RegGXPath};
    if (positive) {
        out.push_back(Fragment::PosRegGXPath);
    }
    if (positive && node) {
        out.push_back(Fragment::PosRegGXPathNode);
    }
    if (core) {
        out.push_back(Fragment::CoreGXPath);
    }
    return out;
}

Fragment FragmentFlags::most_specific() const {
    if (positive && node) {
        return Fragment::PosRegGXPathNode;
    }
    if (positive) {
        return Fragment::PosRegGXPath;
    }
    if (core) {
        return Fragment::CoreGXPath;
    }
    return Fragment::RegGXPath;
}

FragmentFlags classify(const PathExpr& e) {
    FragmentFlags f;
    scan(e, f);
    return f;
}

FragmentFlags classify(const NodeExpr& e) {
    FragmentFlags f;
    f.node = true;
    scan(e, f);
    return f;
}

bool is_positive_node_set(const ConstraintSet& r) {
    for (const auto& c : r.items()) {
        const auto* n = std::get_if<NodePtr>(&c.expr);
        if (n == nullptr || !classify(**n).positive) {
            return false;
        }
    }
    return true;
}

bool is_positive_set(const ConstraintSet& r) {
    for (const auto& c : r.items()) {
        const bool positive = std::visit([](const auto& p) { return classify(*p).positive; }, c.expr);
        if (!positive) {
            return false;
        }
    }
    return true;
}

const char* to_string(Fragment f) {
    switch (f) {
        case Fragment::RegGXPath:
            return "Reg-GXPath";
        case Fragment::PosRegGXPath:
            return "Pos-Reg-GXPath";
        case Fragment::PosRegGXPathNode:
            return "Pos-Reg-GXPath-node";
        case Fragment::CoreGXPath:
            return "Core-GXPath";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Printing

namespace {

bool is_ident_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' || c >= 0x80;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"':
                out += "\\\"";
                break;
            case '\\':
                out += "\\\\";
                break;
            case '\n':
                out += "\\n";
                break;
            case '\t':
                out += "\\t";
                break;
            default:
                out += c;
        }
    }
    out += '"';
    return out;
}

std::string symbol(const std::string& s) {
    if (s.empty() || s == "eps" || s == "_") {
        return quoted(s);
    }
    for (unsigned char c : s) {
        if (!is_ident_char(c)) {
            return quoted(s);
        }
    }
    return s;
}

// binding strength, larger binds tighter
int precedence(const PathExpr& e) {
    return std::visit(overloaded{
                          [](const path::Union&) { return 1; },
                          [](const path::Intersect&) { return 2; },
                          [](const path::Concat&) { return 3; },
                          [](const path::Complement&) { return 4; },
                          [](const path::Star&) { return 5; },
                          [](const path::Repeat&) { return 5; },
                          [](const path::Inverse&) { return 5; },
                          [](const auto&) { return 6; },
                      },
                      e.v);
}

int precedence(const NodeExpr& e) {
    return std::visit(overloaded{
                          [](const node::Or&) { return 1; },
                          [](const node::And&) { return 2; },
                          [](const node::Not&) { return 3; },
                          [](const auto&) { return 4; },
                      },
                      e.v);
}

std::string print(const PathExpr& e, int min_prec);
std::string print(const NodeExpr& e, int min_prec);

std::string print(const PathExpr& e, int min_prec) {
    std::string s = std::visit(
        overloaded{
            [](const path::Epsilon&) -> std::string { return "eps"; },
            [](const path::Wildcard&) -> std::string { return "_"; },
            [](const path::Label& x) { return symbol(x.name); },
            [](const path::Inverse& x) { return symbol(x.name) + "^-"; },
            [](const path::Concat& x) { return print(*x.lhs, 3) + "." + print(*x.rhs, 4); },
            [](const path::Union& x) { return print(*x.lhs, 1) + " + " + print(*x.rhs, 2); },
            [](const path::Intersect& x) { return print(*x.lhs, 2) + " & " + print(*x.rhs, 3); },
            [](const path::Star& x) { return print(*x.arg, 5) + "*"; },
            [](const path::Complement& x) { return "!" + print(*x.arg, 4); },
            [](const path::NodeTest& x) { return "[" + print(*x.test, 1) + "]"; },
            [](const path::Repeat& x) {
                return print(*x.arg, 5) + "{" + std::to_string(x.min) + "," + std::to_string(x.max) + "}";
            },
        },
        e.v);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string print(const NodeExpr& e, int min_prec) {
    std::string s = std::visit(
        overloaded{
            [](const node::DataEq& x) { return "=" + quoted(x.value); },
            [](const node::DataNeq& x) { return "!=" + quoted(x.value); },
            [](const node::Not& x) {
                // "!" directly before "=" would lex as "!="
                const bool eq = std::holds_alternative<node::DataEq>(x.arg->v);
                return "!" + (eq ? "(" + print(*x.arg, 1) + ")" : print(*x.arg, 3));
            },
            [](const node::Or& x) { return print(*x.lhs, 1) + " + " + print(*x.rhs, 2); },
            [](const node::And& x) { return print(*x.lhs, 2) + " & " + print(*x.rhs, 3); },
            [](const node::Exists& x) { return "<" + print(*x.path, 1) + ">"; },
            [](const node::ExistsEq& x) { return "<" + print(*x.lhs, 1) + " = " + print(*x.rhs, 1) + ">"; },
            [](const node::ExistsNeq& x) { return "<" + print(*x.lhs, 1) + " != " + print(*x.rhs, 1) + ">"; },
        },
        e.v);
    return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string sexpr(const NodeExpr& e);

std::string sexpr(const PathExpr& e) {
    return std::visit(
        overloaded{
            [](const path::Epsilon&) -> std::string { return "(eps)"; },
            [](const path::Wildcard&) -> std::string { return "(any)"; },
            [](const path::Label& x) { return "(label " + quoted(x.name) + ")"; },
            [](const path::Inverse& x) { return "(inverse " + quoted(x.name) + ")"; },
            [](const path::Concat& x) { return "(concat " + sexpr(*x.lhs) + " " + sexpr(*x.rhs) + ")"; },
            [](const path::Union& x) { return "(union " + sexpr(*x.lhs) + " " + sexpr(*x.rhs) + ")"; },
            [](const path::Intersect& x) { return "(intersect " + sexpr(*x.lhs) + " " + sexpr(*x.rhs) + ")"; },
            [](const path::Star& x) { return "(star " + sexpr(*x.arg) + ")"; },
            [](const path::Complement& x) { return "(complement " + sexpr(*x.arg) + ")"; },
            [](const path::NodeTest& x) { return "(test " + sexpr(*x.test) + ")"; },
            [](const path::Repeat& x) {
                return "(repeat " + sexpr(*x.arg) + " " + std::to_string(x.min) + " " + std::to_string(x.max) + ")";
            },
        },
        e.v);
}

std::string sexpr(const NodeExpr& e) {
    return std::visit(
        overloaded{
            [](const node::DataEq& x) { return "(eq " + quoted(x.value) + ")"; },
            [](const node::DataNeq& x) { return "(neq " + quoted(x.value) + ")"; },
            [](const node::Not& x) { return "(not " + sexpr(*x.arg) + ")"; },
            [](const node::Or& x) { return "(or " + sexpr(*x.lhs) + " " + sexpr(*x.rhs) + ")"; },
            [](const node::And& x) { return "(and " + sexpr(*x.lhs) + " " + sexpr(*x.rhs) + ")"; },
            [](const node::Exists& x) { return "(exists " + sexpr(*x.path) + ")"; },
            [](const node::ExistsEq& x) { return "(exists-eq " + sexpr(*x.lhs) + " " + sexpr(*x.rhs) + ")"; },
            [](const node::ExistsNeq& x) { return "(exists-neq " + sexpr(*x.lhs) + " " + sexpr(*x.rhs) + ")"; },
        },
        e.v);
}

void collect(const PathExpr& e, std::set<EdgeLabel>& labels, std::set<DataValue>& constants);

void collect(const NodeExpr& e, std::set<EdgeLabel>& labels, std::set<DataValue>& constants) {
    std::visit(overloaded{
                   [&](const node::DataEq& x) { constants.insert(x.value); },
                   [&](const node::DataNeq& x) { constants.insert(x.value); },
                   [&](const node::Not& x) { collect(*x.arg, labels, constants); },
                   [&](const node::Exists& x) { collect(*x.path, labels, constants); },
                   [&](const auto& x) {
                       collect(*x.lhs, labels, constants);
                       collect(*x.rhs, labels, constants);
                   },
               },
               e.v);
}

void collect(const PathExpr& e, std::set<EdgeLabel>& labels, std::set<DataValue>& constants) {
    std::visit(overloaded{
                   [](const path::Epsilon&) {},
                   [](const path::Wildcard&) {},
                   [&](const path::Label& x) { labels.insert(x.name); },
                   [&](const path::Inverse& x) { labels.insert(x.name); },
                   [&](const path::Star& x) { collect(*x.arg, labels, constants); },
                   [&](const path::Complement& x) { collect(*x.arg, labels, constants); },
                   [&](const path::Repeat& x) { collect(*x.arg, labels, constants); },
                   [&](const path::NodeTest& x) { collect(*x.test, labels, constants); },
                   [&](const auto& x) {
                       collect(*x.lhs, labels, constants);
                       collect(*x.rhs, labels, constants);
                   },
               },
               e.v);
}

}  // namespace

std::string pretty(const PathExpr& e) { return print(e, 1); }
std::string pretty(const NodeExpr& e) { return print(e, 1); }
std::string pretty(const Constraint& c) {
    return std::visit(overloaded{
                          [](const NodePtr& n) { return "node: " + pretty(*n); },
                          [](const PathPtr& p) { return "path: " + pretty(*p); },
                      },
                      c.expr);
}

std::string to_sexpr(const PathExpr& e) { return sexpr(e); }
std::string to_sexpr(const NodeExpr& e) { return sexpr(e); }

std::set<EdgeLabel> mentioned_labels(const ConstraintSet& r) {
    std::set<EdgeLabel> labels;
    std::set<DataValue> constants;
    for (const auto& c : r.items()) {
        std::visit([&](const auto& p) { collect(*p, labels, constants); }, c.expr);
    }
    return labels;
}

std::set<DataValue> mentioned_constants(const ConstraintSet& r) {
    std::set<EdgeLabel> labels;
    std::set<DataValue> constants;
    for (const auto& c : r.items()) {
        std::visit([&](const auto& p) { collect(*p, labels, constants); }, c.expr);
    }
    return constants;
}

}  // namespace gxrepair
