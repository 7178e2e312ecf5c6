#pragma once

// Published values used as comparison targets: the first stable cohomology
// groups, the E^1 columns for L = 3..6, and the five-point example tables.

#include <limits>
#include <map>
#include <vector>

namespace hyperstab::reference {

// Degree -> (twist w of Q(-w) -> multiplicity), degrees 0..18, n = 0.
inline const std::map<int, std::map<int, int>>& stable_rows()
{
    static const std::map<int, std::map<int, int>> rows = [] {
        std::map<int, std::map<int, int>> r;
        for (int i = 0; i <= 18; ++i) r[i];
        r[0] = {{0, 1}};
        r[8] = {{6, 1}};
        r[9] = {{7, 1}};
        r[12] = {{9, 1}, {10, 1}};
        r[13] = {{10, 1}, {11, 1}};
        r[14] = {{11, 1}};
        r[15] = {{12, 2}};
        r[16] = {{12, 2}, {13, 2}, {14, 1}};
        r[17] = {{13, 3}, {14, 2}, {15, 1}};
        r[18] = {{14, 2}, {15, 3}};
        return r;
    }();
    return rows;
}

struct ColumnClass {
    int row;
    int twist;  // Q(-twist)
    int multiplicity;
};

// Main E^1 table, twisted by Q(-v): L -> classes. Two printed summands with the
// same twist in one cell are kept as separate entries.
inline const std::map<int, std::vector<ColumnClass>>& main_table_columns()
{
    static const std::map<int, std::vector<ColumnClass>> cols = {
        {3, {{-11, 6, 1}, {-12, 7, 1}, {-14, 8, 2}, {-15, 9, 2}, {-17, 10, 1}, {-18, 11, 1}}},
        {4, {{-13, 7, 1}, {-14, 8, 1}, {-16, 9, 3}, {-17, 10, 3}, {-19, 11, 3}, {-20, 12, 3}, {-22, 13, 1},
             {-23, 14, 1}}},
        {5, {{-17, 10, 1}, {-18, 10, 1}, {-18, 10, 1}, {-19, 11, 2}, {-20, 12, 3}, {-21, 12, 4}, {-21, 13, 2},
             {-22, 13, 2}, {-22, 14, 4}, {-23, 14, 3}, {-24, 14, 5}, {-24, 15, 1}, {-25, 15, 6}, {-26, 16, 1},
             {-27, 16, 2}, {-28, 17, 2}}},
        {6, {{-19, 11, 1}, {-20, 12, 1}, {-21, 12, 2}, {-22, 13, 5}, {-23, 13, 3}, {-23, 14, 4}, {-24, 14, 7},
             {-24, 15, 1}, {-25, 15, 8}, {-26, 15, 6}, {-26, 16, 6}, {-27, 16, 8}, {-27, 17, 2}, {-28, 17, 5},
             {-29, 17, 3}, {-29, 18, 4}, {-30, 18, 3}, {-30, 19, 1}, {-31, 19, 1}, {-32, 20, 1}}},
    };
    return cols;
}

// Lowest row printed for a column; the L = 6 column continues below the table.
inline int main_table_lowest_row(int L) { return L == 6 ? -32 : std::numeric_limits<int>::min(); }

struct ExampleClass {
    int column;  // 1-based: (1,0,2), (0,1,2), (2,1,1), (1,2,1)
    int row;
    int tate;
};

// Twisted homology of the four five-point configuration spaces: Q(tate) in row.
inline const std::vector<ExampleClass>& five_point_config_classes()
{
    static const std::vector<ExampleClass> t = {{1, 6, 3}, {1, 9, 5}, {2, 7, 4}, {2, 10, 6},
                                                {3, 5, 3}, {3, 8, 5}, {4, 6, 4}, {4, 9, 6}};
    return t;
}

// Strata of the same types: Q(v - tate) in row 2v + row.
inline const std::vector<ExampleClass>& five_point_strata_classes()
{
    static const std::vector<ExampleClass> t = {{1, -13, 8},  {1, -16, 10}, {2, -12, 7},  {2, -15, 9},
                                                {3, -16, 9},  {3, -19, 11}, {4, -15, 8}, {4, -18, 10}};
    return t;
}

} // namespace hyperstab::reference
