#pragma once

// Data behind the two comparison plots: exact versus asymptotic success
// probability as a function of the error fraction k/(mn) (fixed m, growing n)
// and of the symbol error rate p (fixed n, growing m).

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace wreath {

struct Fig1Row {
    int n;
    int k;
    double frac;  // k / (m n)
    double p_exact;
    std::optional<double> p_asym;  // empty outside the admissible saddle window
};

struct Fig2Row {
    int m;
    double p;
    double P_exact;
    double P_asym;
};

inline constexpr int kFig1BlockSize = 5;
inline const std::vector<int> kFig1BlockCounts{8, 16, 32};
inline const std::vector<int> kFig2BlockSizes{8, 16, 32};
inline constexpr int kFig2BlockCount = 1;
inline constexpr int kFig2GridPoints = 200;

/// Rows for k = 0..n*r at each n; p_asym is set on the admissible window.
std::vector<Fig1Row> figure1_rows(int m = kFig1BlockSize, const std::vector<int>& block_counts = kFig1BlockCounts);

/// Rows on the grid p = i/(grid+1), i = 1..grid, r = floor((m-1)/2).
std::vector<Fig2Row> figure2_rows(const std::vector<int>& block_sizes = kFig2BlockSizes,
                                  int n = kFig2BlockCount, int grid_points = kFig2GridPoints);

/// Largest |P_exact - P_asym| over the rows belonging to block size m.
double figure2_max_gap(const std::vector<Fig2Row>& rows, int m);

void write_figure1_csv(std::ostream& os, const std::vector<Fig1Row>& rows);
void write_figure2_csv(std::ostream& os, const std::vector<Fig2Row>& rows);

/// gnuplot script plotting `csv_path` (points = exact, lines = asymptotic).
std::string figure1_gnuplot(const std::string& csv_path, const std::vector<int>& block_counts = kFig1BlockCounts);
std::string figure2_gnuplot(const std::string& csv_path, const std::vector<int>& block_sizes = kFig2BlockSizes);

/// 17 significant digits, the CSV float format.
std::string format_csv_double(double x);

/// Shortest text that round-trips to x.
std::string format_shortest(double x);

}  // namespace wreath
