// holtsmark: point evaluation, tables and truncation-order datasets for the
// Holtsmark density S(beta) and field distribution H(beta).

#include <cstdlib>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "holtsmark.hpp"
#include "holtsmark/io/figure.hpp"
#include "holtsmark/io/records.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_evaluation = 3;

const std::map<std::string, holtsmark::MethodId> method_names = [] {
    std::map<std::string, holtsmark::MethodId> m;
    for (auto id : holtsmark::all_methods) m.emplace(std::string(holtsmark::to_string(id)), id);
    return m;
}();

const std::map<std::string, holtsmark::Function> function_names{{"S", holtsmark::Function::S},
                                                                 {"H", holtsmark::Function::H}};

struct Common {
    std::string method = "auto";
    std::string function = "S";
    std::string format = "csv";
    double tol = 1e-15;
    double switchover = holtsmark::AutoOptions{}.switchover;
};

void add_common(CLI::App* cmd, Common& c, bool with_method)
{
    if (with_method)
        cmd->add_option("--method", c.method, "series | asymptotic | lee | airy-closed | bessel-closed | quadrature | auto")
            ->check(CLI::IsMember(method_names));
    cmd->add_option("--function", c.function, "S (density) or H (field distribution)")
        ->check(CLI::IsMember(function_names));
    cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--tol", c.tol, "relative series truncation tolerance")->check(CLI::Range(1e-18, 0.5));
    cmd->add_option("--switchover", c.switchover, "closed form / asymptotic crossover for auto")
        ->check(CLI::Range(holtsmark::asymptotic_min_beta, holtsmark::closed_form_max_beta));
}

holtsmark::EvalOptions options_from(const Common& c)
{
    holtsmark::EvalOptions opt;
    opt.auto_options.switchover = c.switchover;
    opt.auto_options.control.rel_tol = c.tol;
    opt.quadrature_tol = std::max(holtsmark::oracle::quadrature_min_tol, c.tol);
    return opt;
}

void emit(const std::vector<holtsmark::io::OutputRecord>& records, const std::string& format)
{
    if (format == "json")
        holtsmark::io::write_json(std::cout, records);
    else
        holtsmark::io::write_csv(std::cout, records);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Holtsmark density S(beta) and field distribution H(beta)"};
    app.require_subcommand(1);

    Common eval_opts;
    double eval_beta = 0.0;
    auto* eval = app.add_subcommand("eval", "evaluate at one beta");
    eval->add_option("--beta", eval_beta, "reduced field strength")->required();
    add_common(eval, eval_opts, true);

    Common table_opts;
    double t_from = 0.0, t_to = 5.0, t_step = 0.1;
    auto* table = app.add_subcommand("table", "evaluate on a uniform grid");
    table->add_option("--from", t_from, "first grid point");
    table->add_option("--to", t_to, "last grid point (inclusive)");
    table->add_option("--step", t_step, "grid spacing")->check(CLI::PositiveNumber);
    add_common(table, table_opts, true);

    std::string which = "small";
    std::vector<int> orders{4, 16, 64};
    double f_from = 0.0, f_to = 5.0, f_step = 0.05;
    std::string f_format = "csv";
    auto* figure = app.add_subcommand(
        "figure",
        "truncated expansions next to the exact density; an order counts retained terms "
        "(n = 0..order-1 of the small-argument series, n = 1..order of the asymptotic series)");
    figure->add_option("--which", which, "small or large")->check(CLI::IsMember({"small", "large"}));
    figure->add_option("--orders", orders, "comma separated term counts")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    auto* f_from_opt = figure->add_option("--from", f_from, "first grid point (default 0 for small, 1 for large)");
    figure->add_option("--to", f_to, "last grid point (inclusive)");
    figure->add_option("--step", f_step, "grid spacing")->check(CLI::PositiveNumber);
    figure->add_option("--format", f_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*eval) {
            const auto r = holtsmark::evaluate(function_names.at(eval_opts.function), method_names.at(eval_opts.method),
                                               eval_beta, options_from(eval_opts));
            emit({holtsmark::io::to_record(eval_beta, r)}, eval_opts.format);
        } else if (*table) {
            std::vector<double> grid;
            try {
                grid = holtsmark::io::make_grid(t_from, t_to, t_step);
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage: " << e.what() << '\n';
                return exit_usage;
            }
            emit(holtsmark::io::make_table(function_names.at(table_opts.function), method_names.at(table_opts.method),
                                           grid, options_from(table_opts)),
                 table_opts.format);
        } else if (*figure) {
            const auto kind = which == "small" ? holtsmark::io::FigureKind::small : holtsmark::io::FigureKind::large;
            if (f_from_opt->count() == 0 && kind == holtsmark::io::FigureKind::large) f_from = 1.0;
            std::vector<double> grid;
            try {
                grid = holtsmark::io::make_grid(f_from, f_to, f_step);
            } catch (const std::invalid_argument& e) {
                std::cerr << "usage: " << e.what() << '\n';
                return exit_usage;
            }
            const std::vector<std::size_t> counts(orders.begin(), orders.end());
            const auto data = holtsmark::io::make_figure(kind, counts, grid);
            if (f_format == "json")
                holtsmark::io::write_json(std::cout, data);
            else
                holtsmark::io::write_csv(std::cout, data);
        }
    } catch (const holtsmark::error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_evaluation;
    }
    return exit_ok;
}
