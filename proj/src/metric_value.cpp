#include "gpar/metric_value.hpp"

namespace gpar {

MetricValue MetricValue::infinity() {
    MetricValue v;
    v.kind_ = Kind::Infinite;
    v.reason_.clear();
    return v;
}

MetricValue MetricValue::undefined(std::string reason, std::vector<std::string> graph_ids) {
    MetricValue v;
    v.reason_ = std::move(reason);
    v.graph_ids_ = std::move(graph_ids);
    return v;
}

std::string rational_to_string(const Rational& r) {
    auto num = boost::multiprecision::numerator(r);
    auto den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

std::string MetricValue::to_string() const {
    switch (kind_) {
        case Kind::Finite: return rational_to_string(value_);
        case Kind::Infinite: return "inf";
        case Kind::Undefined: break;
    }
    std::string out = "undef:" + reason_;
    if (!graph_ids_.empty()) {
        out += '@';
        for (std::size_t i = 0; i < graph_ids_.size(); ++i) {
            if (i) out += ',';
            out += graph_ids_[i];
        }
    }
    return out;
}

std::string MetricValue::to_decimal(int digits) const {
    if (!is_finite()) return to_string();
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    auto num = boost::multiprecision::numerator(value_) * scale;
    auto den = boost::multiprecision::denominator(value_);
    bool negative = num < 0;
    if (negative) num = -num;
    BigInt q = (2 * num + den) / (2 * den);
    std::string s = q.str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
        s.insert(s.size() - digits, ".");
    }
    if (negative && q != 0) s.insert(0, "-");
    return s;
}

bool same_value(const MetricValue& a, const MetricValue& b) {
    if (a.kind() != b.kind()) return false;
    return !a.is_finite() || a.value() == b.value();
}

}  // namespace gpar
