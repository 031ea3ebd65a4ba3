#pragma once

// Truncated-expansion datasets: columns for each requested order next to the
// exact density, ready for an external plotting tool.

#include <cmath>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "holtsmark/auto.hpp"
#include "holtsmark/error.hpp"
#include "holtsmark/expansions.hpp"
#include "holtsmark/io/records.hpp"
#include "holtsmark/oracle/quadrature.hpp"

namespace holtsmark::io {

enum class FigureKind { small, large };

struct FigureDataset {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// `order` counts retained terms: n = 0 .. order-1 of the power series for
/// `small`, n = 1 .. order of the asymptotic series for `large`. The `exact`
/// column comes from the quadrature oracle (s_auto past its range).
inline FigureDataset make_figure(FigureKind kind, const std::vector<std::size_t>& orders,
                                 const std::vector<double>& grid)
{
    if (orders.empty()) throw error(errc::domain, "figure: at least one order is required");
    for (std::size_t o : orders)
        if (o == 0) throw error(errc::domain, "figure: orders must be positive");

    FigureDataset data;
    data.columns.push_back("beta");
    const std::string prefix = kind == FigureKind::small ? "small_" : "large_";
    for (std::size_t o : orders) data.columns.push_back(prefix + std::to_string(o));
    data.columns.push_back("exact");

    for (double b : grid) {
        if (kind == FigureKind::large && !(b > 0.0))
            throw error(errc::domain, "figure: the large-argument expansion needs beta > 0");
        std::vector<double> row{b};
        for (std::size_t o : orders)
            row.push_back(kind == FigureKind::small ? s_series_truncated(std::abs(b), o)
                                                    : s_asymptotic_truncated(b, o));
        row.push_back(std::abs(b) <= oracle::quadrature_max_beta ? oracle::s_quadrature(b).value
                                                                  : s_auto(b).value);
        data.rows.push_back(std::move(row));
    }
    return data;
}

inline void write_csv(std::ostream& os, const FigureDataset& data)
{
    for (std::size_t i = 0; i < data.columns.size(); ++i) os << (i ? "," : "") << data.columns[i];
    os << '\n';
    for (const auto& row : data.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
        os << '\n';
    }
}

inline void write_json(std::ostream& os, const FigureDataset& data)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : data.rows) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[data.columns[i]] = row[i];
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << '\n';
}

} // namespace holtsmark::io
