#pragma once

#include <string>
#include <utility>
#include <vector>

namespace brauer {

struct Check {
    std::string name;
    std::string expected;
    std::string got;
    bool pass = false;
};

struct Certificate {
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Check> checks;
    std::vector<std::string> notes;

    bool passed() const
    {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add(std::string name, std::string expected, std::string got, bool pass)
    {
        checks.push_back({std::move(name), std::move(expected), std::move(got), pass});
    }
    void add_eq(std::string name, const std::string& expected, const std::string& got)
    {
        add(std::move(name), expected, got, expected == got);
    }
    void merge(const Certificate& o)
    {
        checks.insert(checks.end(), o.checks.begin(), o.checks.end());
        notes.insert(notes.end(), o.notes.begin(), o.notes.end());
    }
};

}  // namespace brauer
