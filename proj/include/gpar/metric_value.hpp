#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gpar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// An exact metric result: a rational, +infinity, or undefined with a reason.
class MetricValue {
public:
    enum class Kind { Finite, Infinite, Undefined };

    MetricValue() : kind_(Kind::Undefined), reason_("unset") {}
    MetricValue(Rational v) : kind_(Kind::Finite), value_(std::move(v)) {}

    static MetricValue infinity();
    static MetricValue undefined(std::string reason, std::vector<std::string> graph_ids = {});

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_infinite() const { return kind_ == Kind::Infinite; }
    bool is_undefined() const { return kind_ == Kind::Undefined; }

    /// Only meaningful for finite values.
    const Rational& value() const { return value_; }
    const std::string& reason() const { return reason_; }
    /// Graphs that violated the definedness condition (macro regime).
    const std::vector<std::string>& graph_ids() const { return graph_ids_; }

    /// `p/q`, `k`, `inf`, or `undef:<reason>`.
    std::string to_string() const;
    /// Rounded decimal with `digits` fractional digits; `inf`/`undef` unchanged.
    std::string to_decimal(int digits) const;

    bool equals(const Rational& r) const { return is_finite() && value_ == r; }

private:
    Kind kind_;
    Rational value_;
    std::string reason_;
    std::vector<std::string> graph_ids_;
};

/// Same kind and, when finite, the same value. Undefined reasons are ignored.
bool same_value(const MetricValue& a, const MetricValue& b);

std::string rational_to_string(const Rational& r);

}  // namespace gpar
