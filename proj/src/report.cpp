#include "devries/report.hpp"

#include <sstream>

namespace devries {

std::string CheckReport::render_text() const {
    std::ostringstream out;
    out << "== " << suite << " ==\n";
    for (const auto& it : items) {
        const char* verdict = it.skipped ? "SKIP" : (it.pass ? "pass" : "FAIL");
        out << "  " << it.name << ": " << verdict;
        if (!it.detail.empty()) out << "  [" << it.detail << "]";
        out << "\n";
    }
    out << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return out.str();
}

std::string CheckReport::render_kv() const {
    std::ostringstream out;
    out << "suite=" << suite << "\n";
    for (const auto& it : items) {
        out << "check=" << it.name
            << " result=" << (it.skipped ? "skip" : (it.pass ? "pass" : "fail"));
        if (!it.detail.empty()) out << " detail=\"" << it.detail << "\"";
        out << "\n";
    }
    out << "overall=" << (all_pass() ? "pass" : "fail") << "\n";
    return out.str();
}

} // namespace devries
