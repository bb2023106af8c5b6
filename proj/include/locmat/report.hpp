#pragma once

#include <chrono>
#include <string>
#include <utility>
#include <vector>

#include "io.hpp"

namespace locmat {

struct CheckRecord {
    std::string name;
    json params;
    json expected;
    json observed;
    bool pass = false;
    double wall_ms = 0.0;
};

/// One CLI invocation: the echoed command and its checks. Overall pass is the
/// conjunction of the per-check passes.
struct RunReport {
    std::string command;
    std::vector<CheckRecord> checks;

    bool pass() const
    {
        for (const auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }

    /// Times fn and appends its record. fn fills everything but the timing.
    template <typename Fn>
    CheckRecord& run(Fn&& fn)
    {
        const auto start = std::chrono::steady_clock::now();
        CheckRecord rec = std::forward<Fn>(fn)();
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        checks.push_back(std::move(rec));
        return checks.back();
    }

    /// Timing fields are left out when include_timing is false, which makes the
    /// output byte-identical across runs.
    json to_json(bool include_timing = true) const
    {
        json j;
        j["command"] = command;
        json list = json::array();
        for (const auto& c : checks) {
            json r;
            r["name"] = c.name;
            r["params"] = c.params;
            r["expected"] = c.expected;
            r["observed"] = c.observed;
            r["pass"] = c.pass;
            if (include_timing)
                r["wall_ms"] = c.wall_ms;
            list.push_back(std::move(r));
        }
        j["checks"] = std::move(list);
        j["pass"] = pass();
        return j;
    }
};

} // namespace locmat
