#include "gpar/term.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

namespace gpar {
namespace {

struct InternTable {
    std::shared_mutex mutex;
    std::deque<std::string> labels;
    std::unordered_map<std::string_view, std::uint32_t> ids;

    InternTable() {
        // id 0 is the empty label so default-constructed handles are valid
        labels.emplace_back();
        ids.emplace(labels.back(), 0);
    }
};

InternTable& table() {
    static InternTable instance;
    return instance;
}

}  // namespace

std::uint32_t intern(std::string_view label) {
    auto& t = table();
    {
        std::shared_lock lock(t.mutex);
        if (auto it = t.ids.find(label); it != t.ids.end()) return it->second;
    }
    std::unique_lock lock(t.mutex);
    if (auto it = t.ids.find(label); it != t.ids.end()) return it->second;
    auto id = static_cast<std::uint32_t>(t.labels.size());
    t.labels.emplace_back(label);
    t.ids.emplace(t.labels.back(), id);
    return id;
}

const std::string& label_of(std::uint32_t id) {
    auto& t = table();
    std::shared_lock lock(t.mutex);
    return t.labels.at(id);
}

std::string render_label(std::string_view label) {
    bool quote = label.empty() || label.front() == '?' || label.front() == '#' || label.front() == '@';
    for (char c : label)
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f' || c == '"' || c == '\\')
            quote = true;
    if (!quote) return std::string(label);
    std::string out = "\"";
    for (char c : label) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

}  // namespace gpar
