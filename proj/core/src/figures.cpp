#include "wreath/figures.hpp"

#include "wreath/asymptotics.hpp"
#include "wreath/enumeration.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

namespace wreath {

std::string format_csv_double(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string format_shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::vector<Fig1Row> figure1_rows(int m, const std::vector<int>& block_counts) {
    std::vector<Fig1Row> rows;
    for (int n : block_counts) {
        const CodeParams params(m, n);
        const RecurrenceTable table(params);
        for (int k = 0; k <= n * params.r(); ++k) {
            Fig1Row row{n, k, static_cast<double>(k) / params.length(), 0.0, std::nullopt};
            row.p_exact = to_double(Rational(table.at(n, k), binomial(params.length(), k)));
            if (asym_prob_k_admissible(params, k)) row.p_asym = asym_prob_k(params, k);
            rows.push_back(row);
        }
    }
    return rows;
}

std::vector<Fig2Row> figure2_rows(const std::vector<int>& block_sizes, int n, int grid_points) {
    std::vector<Fig2Row> rows;
    for (int m : block_sizes) {
        const CodeParams params(m, n);
        for (int i = 1; i <= grid_points; ++i) {
            const Rational p(i, grid_points + 1);
            const double pd = to_double(p);
            rows.push_back({m, pd, to_double(prob_channel(params, p)), asym_prob_channel(params, pd)});
        }
    }
    return rows;
}

double figure2_max_gap(const std::vector<Fig2Row>& rows, int m) {
    double gap = 0.0;
    for (const auto& row : rows)
        if (row.m == m) gap = std::max(gap, std::abs(row.P_exact - row.P_asym));
    return gap;
}

void write_figure1_csv(std::ostream& os, const std::vector<Fig1Row>& rows) {
    os << "n,k,frac,p_exact,p_asym\n";
    for (const auto& row : rows) {
        os << row.n << ',' << row.k << ',' << format_csv_double(row.frac) << ',' << format_csv_double(row.p_exact)
           << ',';
        if (row.p_asym) os << format_csv_double(*row.p_asym);
        os << '\n';
    }
}

void write_figure2_csv(std::ostream& os, const std::vector<Fig2Row>& rows) {
    os << "m,p,P_exact,P_asym\n";
    for (const auto& row : rows)
        os << row.m << ',' << format_csv_double(row.p) << ',' << format_csv_double(row.P_exact) << ','
           << format_csv_double(row.P_asym) << '\n';
}

std::string figure1_gnuplot(const std::string& csv_path, const std::vector<int>& block_counts) {
    std::ostringstream gp;
    gp << "# exact p(k) as points, saddle-point ratio as lines\n"
       << "set datafile separator ','\n"
       << "set key top right\n"
       << "set xlabel 'k/(mn)'\n"
       << "set ylabel 'probability that k errors are correctible'\n"
       << "set xrange [0:0.4]\n"
       << "set yrange [0:1]\n"
       << "plot ";
    for (std::size_t i = 0; i < block_counts.size(); ++i) {
        const int n = block_counts[i];
        if (i) gp << ", \\\n     ";
        gp << "'" << csv_path << "' every ::1 using 3:($1==" << n << " ? $4 : 1/0) with points pt 7 ps 0.5 lc " << i + 1
           << " title 'n=" << n << " exact', \\\n     '" << csv_path << "' every ::1 using 3:($1==" << n
           << " && strlen(strcol(5))>0 ? $5 : 1/0) with lines lc " << i + 1 << " title 'n=" << n << " asymptotic'";
    }
    gp << "\n";
    return gp.str();
}

std::string figure2_gnuplot(const std::string& csv_path, const std::vector<int>& block_sizes) {
    std::ostringstream gp;
    gp << "# exact P(p) as points, uniform erfc estimate as lines\n"
       << "set datafile separator ','\n"
       << "set key bottom left\n"
       << "set xlabel 'p'\n"
       << "set ylabel 'probability that a word is correctible'\n"
       << "set xrange [0:1]\n"
       << "set yrange [0:1]\n"
       << "plot ";
    for (std::size_t i = 0; i < block_sizes.size(); ++i) {
        const int m = block_sizes[i];
        if (i) gp << ", \\\n     ";
        gp << "'" << csv_path << "' every ::1 using 2:($1==" << m << " ? $3 : 1/0) with points pt 7 ps 0.4 lc " << i + 1
           << " title 'm=" << m << " exact', \\\n     '" << csv_path << "' every ::1 using 2:($1==" << m
           << " ? $4 : 1/0) with lines lc " << i + 1 << " title 'm=" << m << " asymptotic'";
    }
    gp << "\n";
    return gp.str();
}

}  // namespace wreath
