#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "holtsmark/dispatch.hpp"
#include "holtsmark/method.hpp"

namespace holtsmark::io {

/// One evaluated grid point as written by the CLI.
struct OutputRecord {
    double beta = 0.0;
    double value = 0.0;
    MethodId method = MethodId::automatic;
    double err_estimate = 0.0;
    std::size_t terms_used = 0;

    bool operator==(const OutputRecord&) const = default;
};

inline OutputRecord to_record(double beta, const EvalResult& r)
{
    return {beta, r.value, r.method, r.err_estimate, r.terms_used};
}

/// 17 significant digits: enough for any double to survive a text round trip.
inline std::string format_double(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline constexpr const char* csv_header = "beta,value,method,err_estimate,terms_used";

inline void write_csv(std::ostream& os, const std::vector<OutputRecord>& records)
{
    os << csv_header << '\n';
    for (const auto& r : records)
        os << format_double(r.beta) << ',' << format_double(r.value) << ',' << to_string(r.method) << ','
           << format_double(r.err_estimate) << ',' << r.terms_used << '\n';
}

inline nlohmann::json to_json(const OutputRecord& r)
{
    return {{"beta", r.beta},
            {"value", r.value},
            {"method", std::string(to_string(r.method))},
            {"err_estimate", r.err_estimate},
            {"terms_used", r.terms_used}};
}

inline void write_json(std::ostream& os, const std::vector<OutputRecord>& records)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    os << arr.dump(2) << '\n';
}

namespace detail {

// from_chars rather than stod: stod reports subnormal results as out of range.
template <class T>
T parse_number(const std::string& field)
{
    T x{};
    const char* end = field.data() + field.size();
    const auto [ptr, ec] = std::from_chars(field.data(), end, x);
    if (ec != std::errc{} || ptr != end) throw std::invalid_argument("not a number: '" + field + "'");
    return x;
}

inline double parse_double(const std::string& field)
{
    return parse_number<double>(field);
}

inline MethodId parse_method_or_throw(const std::string& field)
{
    const auto m = parse_method(field);
    if (!m) throw std::invalid_argument("unknown method '" + field + "'");
    return *m;
}

} // namespace detail

inline std::vector<OutputRecord> read_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line) || line != csv_header) throw std::invalid_argument("missing CSV header");
    std::vector<OutputRecord> out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
        if (fields.size() != 5) throw std::invalid_argument("expected 5 fields in '" + line + "'");
        out.push_back({detail::parse_double(fields[0]), detail::parse_double(fields[1]),
                       detail::parse_method_or_throw(fields[2]), detail::parse_double(fields[3]),
                       detail::parse_number<std::size_t>(fields[4])});
    }
    return out;
}

inline std::vector<OutputRecord> read_json(std::istream& is)
{
    const auto arr = nlohmann::json::parse(is);
    std::vector<OutputRecord> out;
    for (const auto& j : arr)
        out.push_back({j.at("beta").get<double>(), j.at("value").get<double>(),
                       detail::parse_method_or_throw(j.at("method").get<std::string>()),
                       j.at("err_estimate").get<double>(), j.at("terms_used").get<std::size_t>()});
    return out;
}

/// from, from + step, ... up to `to` (inclusive within a 1e-9 step fraction).
inline std::vector<double> make_grid(double from, double to, double step)
{
    if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("step must be positive");
    if (!(to >= from) || !std::isfinite(from) || !std::isfinite(to)) throw std::invalid_argument("need from <= to");
    const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<double> grid(count);
    for (std::size_t i = 0; i < count; ++i) grid[i] = from + step * static_cast<double>(i);
    return grid;
}

inline std::vector<OutputRecord> make_table(Function fn, MethodId method, const std::vector<double>& grid,
                                            const EvalOptions& opt = {})
{
    std::vector<OutputRecord> out;
    out.reserve(grid.size());
    for (double b : grid) out.push_back(to_record(b, evaluate(fn, method, b, opt)));
    return out;
}

} // namespace holtsmark::io
