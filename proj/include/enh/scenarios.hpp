#pragma once

#include <string>
#include <vector>

#include "enh/bigraded.hpp"

namespace enh {

/// Provenance of an expected value in a scenario table.
enum class Provenance { paper, trivial, derived };

inline const char* provenance_str(Provenance p)
{
    switch (p) {
        case Provenance::paper:
            return "paper";
        case Provenance::trivial:
            return "trivial";
        case Provenance::derived:
            return "derived";
    }
    return "?";
}

struct CellDiff {
    Cell cell;
    int expected = 0;
    int got = 0;
    Provenance provenance = Provenance::trivial;
    bool match() const { return expected == got; }
};

struct CheckLine {
    std::string name;
    bool pass = false;
    std::string detail;
    Provenance provenance = Provenance::trivial;
};

struct RunReport {
    std::string id;
    bool pass = true;
    double wall_seconds = 0;
    std::vector<CellDiff> cells;    // cellwise table comparison
    std::vector<CheckLine> checks;  // named identity checks

    void add_cell(Cell c, int expected, int got, Provenance p)
    {
        cells.push_back({c, expected, got, p});
        if (expected != got)
            pass = false;
    }
    void add_check(const std::string& name, bool ok, Provenance p, std::string detail = "")
    {
        checks.push_back({name, ok, std::move(detail), p});
        if (!ok)
            pass = false;
    }

    std::string to_text() const;
    std::string to_csv() const;
    std::string to_json() const;
};

struct ScenarioOptions {
    int threads = 1;
    long budget = 20000;
};

/// Registered scenario ids, in canonical order.
std::vector<std::string> scenario_ids();

/// Runs one registered scenario; throws enh::Error for unknown ids.
RunReport run_scenario(const std::string& id, const ScenarioOptions& opt = {});

}  // namespace enh
