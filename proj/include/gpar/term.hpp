#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace gpar {

/// Interns a label and returns its stable handle. Safe under concurrent use.
std::uint32_t intern(std::string_view label);

/// Label for a handle returned by intern(). The reference stays valid for the
/// lifetime of the process.
const std::string& label_of(std::uint32_t id);

/// Renders a label as a token, quoting it when it would not re-parse as a
/// bare term (whitespace, quotes, leading `?`/`#`/`@`, or empty).
std::string render_label(std::string_view label);

/// A graph term (node or edge label). Equality is label equality.
class Term {
public:
    Term() = default;
    explicit Term(std::string_view label) : id_(intern(label)) {}

    static Term from_id(std::uint32_t id) {
        Term t;
        t.id_ = id;
        return t;
    }

    std::uint32_t id() const { return id_; }
    const std::string& label() const { return label_of(id_); }

    friend bool operator==(Term, Term) = default;
    friend auto operator<=>(Term, Term) = default;

private:
    std::uint32_t id_ = 0;
};

/// A pattern variable; `name` excludes the leading `?`.
class Variable {
public:
    Variable() = default;
    explicit Variable(std::string_view name) : id_(intern(name)) {}

    static Variable from_id(std::uint32_t id) {
        Variable v;
        v.id_ = id;
        return v;
    }

    std::uint32_t id() const { return id_; }
    const std::string& name() const { return label_of(id_); }

    friend bool operator==(Variable, Variable) = default;
    friend auto operator<=>(Variable, Variable) = default;

private:
    std::uint32_t id_ = 0;
};

/// Orders by label bytes, for canonical output.
struct LabelLess {
    bool operator()(Term a, Term b) const { return a != b && a.label() < b.label(); }
    bool operator()(Variable a, Variable b) const { return a != b && a.name() < b.name(); }
};

}  // namespace gpar

template <>
struct std::hash<gpar::Term> {
    std::size_t operator()(gpar::Term t) const noexcept { return std::hash<std::uint32_t>{}(t.id()); }
};

template <>
struct std::hash<gpar::Variable> {
    std::size_t operator()(gpar::Variable v) const noexcept { return std::hash<std::uint32_t>{}(v.id()); }
};
