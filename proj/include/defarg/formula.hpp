#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace defarg {

using Vocabulary = std::set<std::string>;

/// Names starting with this character belong to the assumption namespace
/// and are rejected by the parser.
inline constexpr char assumption_marker = '@';

bool is_assumption_name(std::string_view name);

/// True for `[A-Za-z_][A-Za-z0-9_]*`.
bool is_user_name(std::string_view name);

enum class FormulaKind { atom, verum, falsum, negation, conjunction, disjunction, implication };

/// Immutable propositional formula. Copies share structure.
class Formula {
public:
    /// Verum.
    Formula();

    static Formula atom(std::string name);
    static Formula verum();
    static Formula falsum();
    static Formula negation(Formula operand);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    static Formula implication(Formula lhs, Formula rhs);

    FormulaKind kind() const;
    bool is_atom() const { return kind() == FormulaKind::atom; }

    /// Atom name; empty for other kinds.
    const std::string& name() const;
    /// Operand of a negation, or left side of a binary connective.
    const Formula& lhs() const;
    const Formula& rhs() const;

    std::size_t hash() const;
    std::size_t size() const;

    Vocabulary vocabulary() const;
    void collect_vocabulary(Vocabulary& into) const;

    bool evaluate(const std::function<bool(const std::string&)>& value_of) const;

    /// Minimal-parenthesis rendering in the input grammar; parses back to
    /// the same tree.
    std::string to_string() const;

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

Formula operator!(const Formula& f);
Formula operator&(const Formula& a, const Formula& b);
Formula operator|(const Formula& a, const Formula& b);
Formula implies(const Formula& a, const Formula& b);

struct FormulaHash {
    std::size_t operator()(const Formula& f) const { return f.hash(); }
};

/// Parse one formula. Precedence `!` > `&` > `|` > `->`; `->` is
/// right-associative, `&` and `|` associate to the left.
Formula parse_formula(std::string_view text);

/// Insertion-ordered set of formulas, duplicate-free under syntactic equality.
class TheorySet {
public:
    TheorySet() = default;
    TheorySet(std::initializer_list<Formula> formulas);

    /// Returns false when an identical formula is already present.
    bool insert(Formula f);
    void insert_all(const TheorySet& other);
    bool contains(const Formula& f) const;

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const Formula& operator[](std::size_t i) const { return items_[i]; }
    auto begin() const { return items_.begin(); }
    auto end() const { return items_.end(); }
    const std::vector<Formula>& formulas() const { return items_; }

    Vocabulary vocabulary() const;

private:
    std::vector<Formula> items_;
    std::unordered_set<Formula, FormulaHash> seen_;
};

}  // namespace defarg
