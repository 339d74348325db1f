#pragma once

#include <climits>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "enh/error.hpp"

namespace enh {

/// A position in the bigrading: homological degree (may be negative,
/// cochain conventions) and auxiliary weight (polynomial degree / tensor
/// length). Weight is the finiteness mechanism: every construction
/// preserves it and every cell is finite.
struct Cell {
    int deg = 0;
    int wt = 0;
    auto operator<=>(const Cell&) const = default;
};

inline Cell operator+(Cell a, Cell b) { return {a.deg + b.deg, a.wt + b.wt}; }

inline std::string to_string(Cell c)
{
    std::ostringstream os;
    os << "(" << c.deg << "," << c.wt << ")";
    return os.str();
}

/// Closed rectangle of cells within which a construction is complete:
/// any cell absent from a container but inside its window is genuinely zero.
struct Window {
    int deg_lo = 0, deg_hi = -1;  // empty by default
    int wt_lo = 0, wt_hi = -1;

    static Window all_degrees(int wt_lo, int wt_hi)
    {
        return Window{INT_MIN / 2, INT_MAX / 2, wt_lo, wt_hi};
    }
    bool contains(Cell c) const
    {
        return c.deg >= deg_lo && c.deg <= deg_hi && c.wt >= wt_lo && c.wt <= wt_hi;
    }
    bool empty() const { return deg_lo > deg_hi || wt_lo > wt_hi; }
};

/// Finite ordered basis per cell; labels are printable and unique per cell.
struct BigradedSpace {
    std::map<Cell, std::vector<std::string>> cells;

    int dim(Cell c) const
    {
        auto it = cells.find(c);
        return it == cells.end() ? 0 : (int)it->second.size();
    }
    int add(Cell c, std::string label)
    {
        auto& v = cells[c];
        v.push_back(std::move(label));
        return (int)v.size() - 1;
    }
    const std::string& label(Cell c, int i) const { return cells.at(c)[i]; }

    BigradedSpace suspended(int n) const
    {
        BigradedSpace out;
        for (auto& [c, labels] : cells)
            out.cells[{c.deg + n, c.wt}] = labels;
        return out;
    }
};

/// One homology cell: exact dimension plus chosen representative cycles,
/// printed as label/coefficient pairs.
struct HomologyCell {
    int dim = 0;
    std::vector<std::vector<std::pair<std::string, std::string>>> reps;
};

struct HomologyTable {
    std::string field;  // "Q" or "F2"
    std::map<Cell, HomologyCell> entries;

    int dim(Cell c) const
    {
        auto it = entries.find(c);
        return it == entries.end() ? 0 : it->second.dim;
    }
    void set_dim(Cell c, int d)
    {
        if (d != 0)
            entries[c].dim = d;
    }

    /// Nonzero cells only, sorted by degree then weight.
    std::vector<std::pair<Cell, int>> dims() const
    {
        std::vector<std::pair<Cell, int>> out;
        for (auto& [c, e] : entries)
            if (e.dim != 0)
                out.emplace_back(c, e.dim);
        return out;
    }

    bool same_dims(const HomologyTable& other) const
    {
        return dims() == other.dims();
    }

    HomologyTable suspended(int n) const
    {
        HomologyTable out;
        out.field = field;
        for (auto& [c, e] : entries)
            out.entries[{c.deg + n, c.wt}] = e;
        return out;
    }

    std::string to_csv() const
    {
        std::ostringstream os;
        os << "degree,weight,dim\n";
        for (auto& [c, e] : entries)
            if (e.dim != 0)
                os << c.deg << "," << c.wt << "," << e.dim << "\n";
        return os.str();
    }

    std::string to_json() const;  // json_io.hpp
};

}  // namespace enh
