#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scring {

struct Check {
    std::string name;
    bool pass = false;
    std::string witness;  // empty on pass; failure evidence otherwise
};

// Flat list of named pass/fail results; the only cross-module currency for
// verification outcomes. Failures carry witnesses instead of throwing so a
// run can report every broken identity at once.
struct Report {
    std::string title;
    std::vector<Check> checks;
    int64_t seed = 0;  // only meaningful when randomized spot-checks ran

    void add(std::string name, bool pass, std::string witness = "") {
        checks.push_back(Check{std::move(name), pass, pass ? "" : std::move(witness)});
    }

    void merge(const Report& o) {
        for (const auto& c : o.checks) {
            checks.push_back(c);
            if (!o.title.empty()) checks.back().name = o.title + ": " + c.name;
        }
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    int64_t failures() const {
        int64_t n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

}  // namespace scring
