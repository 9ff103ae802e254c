#pragma once

#include <string>
#include <vector>

namespace devries {

/// One named check with its verdict and, when it failed, the first
/// counterexample rendered in the same textual syntax the CLI accepts.
struct CheckItem {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail; // counterexample on failure, short note otherwise
};

struct CheckReport {
    std::string suite;
    std::vector<CheckItem> items;

    void add_pass(std::string name, std::string detail = "") {
        items.push_back({std::move(name), true, false, std::move(detail)});
    }
    void add_fail(std::string name, std::string counterexample) {
        items.push_back({std::move(name), false, false, std::move(counterexample)});
    }
    void add_skip(std::string name, std::string why) {
        items.push_back({std::move(name), false, true, std::move(why)});
    }

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass && !it.skipped) return false;
        return true;
    }

    const CheckItem* find(const std::string& name) const {
        for (const auto& it : items)
            if (it.name == name) return &it;
        return nullptr;
    }

    /// Human-readable block, one line per item.
    std::string render_text() const;

    /// Line-oriented key=value form for scripting.
    std::string render_kv() const;
};

} // namespace devries
