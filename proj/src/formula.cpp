#include "defarg/formula.hpp"

#include <algorithm>
#include <vector>
#include <cctype>

namespace defarg {

bool is_assumption_name(std::string_view name) {
    return !name.empty() && name.front() == assumption_marker;
}

bool is_user_name(std::string_view name) {
    if (name.empty())
        return false;
    auto head = static_cast<unsigned char>(name.front());
    if (!std::isalpha(head) && head != '_')
        return false;
    return std::all_of(name.begin() + 1, name.end(), [](char c) {
        auto u = static_cast<unsigned char>(c);
        return std::isalnum(u) || u == '_';
    });
}

struct Formula::Node {
    FormulaKind kind = FormulaKind::verum;
    std::string name;
    std::vector<Formula> children;
    std::size_t hash = 0;
    std::size_t size = 1;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
    return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula::Formula() : Formula(verum()) {}

Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::atom(std::string name) {
    auto n = std::make_shared<Node>();
    n->kind = FormulaKind::atom;
    n->hash = mix(std::hash<std::string>{}(name), 1);
    n->name = std::move(name);
    return Formula(std::move(n));
}

Formula Formula::verum() {
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = FormulaKind::verum;
        n->hash = mix(0, 2);
        return n;
    }();
    return Formula(node);
}

Formula Formula::falsum() {
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = FormulaKind::falsum;
        n->hash = mix(0, 3);
        return n;
    }();
    return Formula(node);
}

namespace {

template <class NodeT>
std::shared_ptr<NodeT> compound(FormulaKind kind, const Formula& a, const Formula& b, std::size_t arity) {
    auto n = std::make_shared<NodeT>();
    n->kind = kind;
    n->children = {a, b};
    n->hash = mix(mix(static_cast<std::size_t>(kind) + 10, a.hash()), arity == 2 ? b.hash() : 0);
    n->size = 1 + a.size() + (arity == 2 ? b.size() : 0);
    return n;
}

}  // namespace

Formula Formula::negation(Formula operand) {
    return Formula(compound<Node>(FormulaKind::negation, operand, verum(), 1));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    return Formula(compound<Node>(FormulaKind::conjunction, lhs, rhs, 2));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    return Formula(compound<Node>(FormulaKind::disjunction, lhs, rhs, 2));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
    return Formula(compound<Node>(FormulaKind::implication, lhs, rhs, 2));
}

FormulaKind Formula::kind() const { return node_->kind; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const { return node_->children[0]; }
const Formula& Formula::rhs() const { return node_->children[1]; }
std::size_t Formula::hash() const { return node_->hash; }
std::size_t Formula::size() const { return node_->size; }

Vocabulary Formula::vocabulary() const {
    Vocabulary v;
    collect_vocabulary(v);
    return v;
}

void Formula::collect_vocabulary(Vocabulary& into) const {
    switch (kind()) {
    case FormulaKind::atom:
        into.insert(name());
        break;
    case FormulaKind::verum:
    case FormulaKind::falsum:
        break;
    case FormulaKind::negation:
        lhs().collect_vocabulary(into);
        break;
    default:
        lhs().collect_vocabulary(into);
        rhs().collect_vocabulary(into);
    }
}

bool Formula::evaluate(const std::function<bool(const std::string&)>& value_of) const {
    switch (kind()) {
    case FormulaKind::atom: return value_of(name());
    case FormulaKind::verum: return true;
    case FormulaKind::falsum: return false;
    case FormulaKind::negation: return !lhs().evaluate(value_of);
    case FormulaKind::conjunction: return lhs().evaluate(value_of) && rhs().evaluate(value_of);
    case FormulaKind::disjunction: return lhs().evaluate(value_of) || rhs().evaluate(value_of);
    case FormulaKind::implication: return !lhs().evaluate(value_of) || rhs().evaluate(value_of);
    }
    return false;
}

namespace {

int precedence(FormulaKind k) {
    switch (k) {
    case FormulaKind::implication: return 1;
    case FormulaKind::disjunction: return 2;
    case FormulaKind::conjunction: return 3;
    case FormulaKind::negation: return 4;
    default: return 5;
    }
}

void render(const Formula& f, std::string& out);

void render_child(const Formula& f, bool parens, std::string& out) {
    if (parens)
        out += '(';
    render(f, out);
    if (parens)
        out += ')';
}

void render(const Formula& f, std::string& out) {
    const int p = precedence(f.kind());
    switch (f.kind()) {
    case FormulaKind::atom: out += f.name(); return;
    case FormulaKind::verum: out += "true"; return;
    case FormulaKind::falsum: out += "false"; return;
    case FormulaKind::negation:
        out += '!';
        render_child(f.lhs(), precedence(f.lhs().kind()) < p, out);
        return;
    case FormulaKind::implication:
        render_child(f.lhs(), precedence(f.lhs().kind()) <= p, out);
        out += " -> ";
        render_child(f.rhs(), precedence(f.rhs().kind()) < p, out);
        return;
    default:
        render_child(f.lhs(), precedence(f.lhs().kind()) < p, out);
        out += f.kind() == FormulaKind::conjunction ? " & " : " | ";
        render_child(f.rhs(), precedence(f.rhs().kind()) <= p, out);
    }
}

}  // namespace

std::string Formula::to_string() const {
    std::string out;
    render(*this, out);
    return out;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_)
        return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size())
        return false;
    switch (a.kind()) {
    case FormulaKind::atom: return a.name() == b.name();
    case FormulaKind::verum:
    case FormulaKind::falsum: return true;
    case FormulaKind::negation: return a.lhs() == b.lhs();
    default: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    }
}

Formula operator!(const Formula& f) { return Formula::negation(f); }
Formula operator&(const Formula& a, const Formula& b) { return Formula::conjunction(a, b); }
Formula operator|(const Formula& a, const Formula& b) { return Formula::disjunction(a, b); }
Formula implies(const Formula& a, const Formula& b) { return Formula::implication(a, b); }

TheorySet::TheorySet(std::initializer_list<Formula> formulas) {
    for (const auto& f : formulas)
        insert(f);
}

bool TheorySet::insert(Formula f) {
    if (!seen_.insert(f).second)
        return false;
    items_.push_back(std::move(f));
    return true;
}

void TheorySet::insert_all(const TheorySet& other) {
    for (const auto& f : other)
        insert(f);
}

bool TheorySet::contains(const Formula& f) const { return seen_.count(f) != 0; }

Vocabulary TheorySet::vocabulary() const {
    Vocabulary v;
    for (const auto& f : items_)
        f.collect_vocabulary(v);
    return v;
}

}  // namespace defarg
