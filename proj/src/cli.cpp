#include "cantor/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

#include <CLI11.hpp>
#include <json.hpp>

#include "cantor/asymptotics.hpp"
#include "cantor/errors.hpp"
#include "cantor/expansion.hpp"
#include "cantor/integral.hpp"

namespace cantor::cli {

namespace {

using json = nlohmann::json;

/// Thrown when a computed result contradicts an identity it must satisfy.
class InconsistencyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double parse_decimal(std::string_view s, const std::string& whole) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    double value = 0.0;
    const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || end != s.data() + s.size() || !std::isfinite(value))
        throw std::invalid_argument("spec: cannot read number '" + whole + "'");
    return value;
}

double read_number(const json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        const auto slash = s.find('/');
        if (slash == std::string::npos) return parse_decimal(s, s);
        const std::string_view view(s);
        const double den = parse_decimal(view.substr(slash + 1), s);
        if (den == 0.0) throw std::invalid_argument("spec: zero denominator in '" + s + "'");
        return parse_decimal(view.substr(0, slash), s) / den;
    }
    throw std::invalid_argument("spec: expected a number, got " + v.dump());
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

struct Common {
    std::string spec_path;
    std::string preset_name;
    std::string out_path;
    bool meta = false;
};

void add_common(CLI::App* cmd, Common& common) {
    auto* spec = cmd->add_option("--spec", common.spec_path, "ladder spec file (JSON)");
    auto* pre = cmd->add_option("--preset", common.preset_name, "built-in ladder: cantor, cantor3, rho13-23");
    spec->excludes(pre);
    cmd->add_option("--out", common.out_path, "write output to FILE instead of stdout");
    cmd->add_flag("--meta", common.meta, "prefix output with '#' run metadata lines");
}

LadderSpec load(const Common& common) {
    if (!common.preset_name.empty()) return preset(common.preset_name);
    if (common.spec_path.empty()) throw std::invalid_argument("one of --spec or --preset is required");
    return parse_ladder_spec(read_text(common.spec_path));
}

std::vector<double> lambda_grid(const std::vector<double>& explicit_values, std::optional<double> lmin,
                                std::optional<double> lmax, int steps, bool log_grid) {
    if (!explicit_values.empty()) return explicit_values;
    if (!lmin || !lmax) throw std::invalid_argument("give --lambda or both --lmin and --lmax");
    if (steps < 1) throw std::invalid_argument("--steps must be at least 1");
    if (log_grid && !(*lmin > 0.0)) throw std::invalid_argument("--log-grid needs --lmin > 0");
    std::vector<double> grid;
    for (int i = 0; i < steps; ++i) {
        const double t = steps == 1 ? 0.0 : static_cast<double>(i) / (steps - 1);
        grid.push_back(log_grid ? *lmin * std::pow(*lmax / *lmin, t) : *lmin + (*lmax - *lmin) * t);
    }
    return grid;
}

}  // namespace

LadderSpec parse_ladder_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("spec: malformed document: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("segments") || !doc.contains("weights"))
        throw std::invalid_argument("spec: document needs 'segments' and 'weights'");
    LadderSpec spec;
    for (const auto& pair : doc.at("segments")) {
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("spec: each segment must be a pair [a, b]");
        spec.segments.push_back(Segment{read_number(pair[0]), read_number(pair[1])});
    }
    for (const auto& w : doc.at("weights")) spec.weights.push_back(read_number(w));
    if (doc.contains("name")) spec.name = doc.at("name").get<std::string>();
    return spec;
}

std::string format_ladder_spec(const Ladder& ladder, const std::optional<std::string>& name) {
    // written by hand so that numbers keep their shortest round-trip form
    std::ostringstream os;
    os << "{\n";
    if (name) os << "  \"name\": " << json(*name).dump() << ",\n";
    os << "  \"segments\": [";
    for (std::size_t k = 0; k < ladder.steps(); ++k) {
        const auto& s = ladder.segments()[k];
        os << (k ? ", " : "") << '[' << format_real(s.a) << ", " << format_real(s.b) << ']';
    }
    os << "],\n  \"weights\": [";
    for (std::size_t k = 0; k < ladder.steps(); ++k) os << (k ? ", " : "") << format_real(ladder.weights()[k]);
    os << "]\n}\n";
    return os.str();
}

LadderSpec preset(const std::string& name) {
    if (name == "cantor") return {{{0.0, 1.0 / 3.0}, {2.0 / 3.0, 1.0}}, {0.5, 0.5}, name};
    if (name == "cantor3")
        return {{{0.0, 1.0 / 9.0}, {2.0 / 9.0, 1.0 / 3.0}, {2.0 / 3.0, 1.0}}, {0.25, 0.25, 0.5}, name};
    if (name == "rho13-23") return {{{0.0, 1.0 / 3.0}, {2.0 / 3.0, 1.0}}, {1.0 / 3.0, 2.0 / 3.0}, name};
    throw std::invalid_argument("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() { return {"cantor", "cantor3", "rho13-23"}; }

std::string format_real(double value) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, res.ptr);
}

std::string format_csv(const OutputTable& table) {
    std::ostringstream os;
    for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_real(row[i]);
        os << '\n';
    }
    return os.str();
}

std::vector<OutputTable> parse_csv(const std::string& text) {
    std::vector<OutputTable> tables;
    std::istringstream in(text);
    std::string line;
    bool fresh = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '#') continue;
        if (line.empty()) {
            fresh = true;
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (fresh) {
            tables.push_back(OutputTable{cells, {}});
            fresh = false;
            continue;
        }
        std::vector<double> row;
        for (const auto& c : cells) {
            double v = 0.0;
            const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
            if (res.ec != std::errc() || res.ptr != c.data() + c.size())
                throw std::invalid_argument("parse_csv: bad number '" + c + "'");
            row.push_back(v);
        }
        tables.back().rows.push_back(std::move(row));
    }
    return tables;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Generalized Cantor ladders: integrals, asymptotics and expansions", "ladder-asym"};
    app.require_subcommand(1);

    Common common;

    auto* eval_cmd = app.add_subcommand("eval", "scaled integral exp(-l) E(l) on a grid of l");
    std::vector<double> lambdas;
    std::optional<double> lmin, lmax;
    int steps = 11;
    bool log_grid = false;
    bool negative = false;
    std::optional<int> enclose_depth;
    add_common(eval_cmd, common);
    eval_cmd->add_option("--lambda", lambdas, "explicit values of l")->delimiter(',');
    eval_cmd->add_option("--lmin", lmin, "grid start");
    eval_cmd->add_option("--lmax", lmax, "grid end");
    eval_cmd->add_option("--steps", steps, "grid points");
    eval_cmd->add_flag("--log-grid", log_grid, "logarithmic spacing");
    eval_cmd->add_flag("--neg", negative, "evaluate E(-l) instead");
    eval_cmd->add_option("--enclose", enclose_depth, "also print a rigorous enclosure of this depth");

    auto* asym_cmd = app.add_subcommand("asym", "periodic profile of the leading term");
    std::size_t grid = 256;
    std::optional<int> fourier_max;
    add_common(asym_cmd, common);
    asym_cmd->add_option("--grid", grid, "samples over one period");
    asym_cmd->add_option("--fourier", fourier_max, "closed-form Fourier coefficients |n| <= N (regular only)");

    auto* expand_cmd = app.add_subcommand("expand", "higher-order terms of the expansion");
    std::optional<double> smax;
    std::optional<std::size_t> count;
    std::optional<double> at;
    bool strict = false;
    add_common(expand_cmd, common);
    auto* smax_opt = expand_cmd->add_option("--smax", smax, "largest exponent to separate");
    auto* count_opt = expand_cmd->add_option("--count", count, "number of exponents to separate");
    smax_opt->excludes(count_opt);
    expand_cmd->add_option("--at", at, "also print partial sums at this l");
    expand_cmd->add_flag("--strict", strict, "reject --at below the validity threshold");

    auto* critical_cmd = app.add_subcommand("critical", "critical point of the ladder");
    add_common(critical_cmd, common);

    auto* mirror_cmd = app.add_subcommand("mirror", "spec of the mirrored ladder C1(t) = 1 - C(1 - t)");
    add_common(mirror_cmd, common);

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }

    std::ostringstream body;
    try {
        const LadderSpec spec = load(common);
        const Ladder ladder = spec.ladder();
        if (common.meta) {
            body << "# command=" << app.get_subcommands().front()->get_name() << '\n';
            if (spec.name) body << "# ladder=" << *spec.name << '\n';
        }

        if (eval_cmd->parsed()) {
            const auto values = lambda_grid(lambdas, lmin, lmax, steps, log_grid);
            const Ladder target = negative ? mirror(ladder) : ladder;
            OutputTable table{{"lambda", negative ? "E_neg" : "scaled_E"}, {}};
            if (enclose_depth) {
                table.columns.push_back("lo");
                table.columns.push_back("hi");
            }
            for (double l : values) {
                // E(-l) = exp(-l) E_{C1}(l) = e_{C1}(l)
                const double v = eval_scaled_E(target, l);
                std::vector<double> row{l, v};
                if (enclose_depth) {
                    const IntervalValue box = enclose_E(target, l, *enclose_depth);
                    if (!box.contains(v)) {
                        throw InconsistencyError("value " + format_real(v) + " at l = " + format_real(l) +
                                                 " escapes its enclosure [" + format_real(box.lo()) + ", " +
                                                 format_real(box.hi()) + "]");
                    }
                    row.push_back(box.lo());
                    row.push_back(box.hi());
                }
                table.rows.push_back(std::move(row));
            }
            body << format_csv(table);
        } else if (asym_cmd->parsed()) {
            const PeriodicProfile profile = extract_profile(ladder, EvalConfig{}, ProfileOptions{grid});
            OutputTable table{{"x", "phi"}, {}};
            for (std::size_t j = 0; j < profile.grid_size(); ++j)
                table.rows.push_back({profile.grid_x(j), profile.samples()[j]});
            body << format_csv(table);
            if (fourier_max) {
                OutputTable coeffs{{"n", "c_re", "c_im"}, {}};
                for (int n = -*fourier_max; n <= *fourier_max; ++n) {
                    const ComplexValue c = fourier_coefficient(ladder, n);
                    coeffs.rows.push_back({static_cast<double>(n), c.real(), c.imag()});
                }
                body << '\n' << format_csv(coeffs);
            }
        } else if (expand_cmd->parsed()) {
            double limit = 0.0;
            if (smax) {
                limit = *smax;
            } else if (count) {
                const ExponentSequence seq = exponent_sequence(ladder, *count);
                if (seq.values.empty()) throw std::invalid_argument("--count must be positive");
                limit = seq.values.back();
            } else {
                throw std::invalid_argument("give --smax or --count");
            }
            const PeriodicProfile profile = extract_profile(ladder);
            const Expansion expansion = general_expansion(ladder, profile, limit);

            std::size_t atom_columns = 0;
            for (const auto& t : expansion.terms) atom_columns = std::max(atom_columns, t.coefficient.atoms().size());
            OutputTable table{{"sigma", "const_coef"}, {}};
            for (std::size_t a = 1; a <= atom_columns; ++a) {
                table.columns.push_back("beta_" + std::to_string(a));
                table.columns.push_back("coef_" + std::to_string(a));
            }
            double reference = 0.0;
            if (at) {
                table.columns.push_back("partial_sum");
                table.columns.push_back("reference");
                reference = eval_scaled_E(ladder, *at);
            }
            for (std::size_t k = 0; k < expansion.terms.size(); ++k) {
                const auto& term = expansion.terms[k];
                std::vector<double> row{term.exponent, term.coefficient.const_part()};
                const auto& atoms = term.coefficient.atoms();
                for (std::size_t a = 0; a < atom_columns; ++a) {
                    // absent atoms are padded as scale 0, coefficient 0
                    row.push_back(a < atoms.size() ? atoms[a].scale : 0.0);
                    row.push_back(a < atoms.size() ? atoms[a].coef : 0.0);
                }
                if (at) {
                    row.push_back(eval_expansion(expansion, profile, *at, k + 1, PartialSumOptions{strict, {}}));
                    row.push_back(reference);
                }
                table.rows.push_back(std::move(row));
            }
            body << format_csv(table);
            if (expansion.status == ExpansionStatus::FiniteBelowCritical) {
                err << "note: every coefficient below the critical point " << format_real(*expansion.critical)
                    << " vanishes (finite below critical)\n";
            }
            if (at && *at < expansion.validity_threshold() && !strict) {
                err << "warning: l = " << format_real(*at) << " is below the validity threshold "
                    << format_real(expansion.validity_threshold()) << '\n';
            }
        } else if (critical_cmd->parsed()) {
            const auto critical = critical_point(ladder);
            body << "critical_point\n" << (critical ? format_real(*critical) : std::string("none")) << '\n';
        } else if (mirror_cmd->parsed()) {
            body << format_ladder_spec(mirror(ladder), spec.name ? std::optional(*spec.name + "-mirror")
                                                                 : std::nullopt);
        }
    } catch (const InconsistencyError& e) {
        err << "error: internal inconsistency: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const ConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInconsistent;
    } catch (const CriticalPointError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::logic_error& e) {  // validation and domain errors
        err << "error: " << e.what() << '\n';
        return kExitInput;
    }

    if (common.out_path.empty()) {
        out << body.str();
    } else {
        std::ofstream file(common.out_path);
        if (!file) {
            err << "error: cannot write '" << common.out_path << "'\n";
            return kExitInput;
        }
        file << body.str();
    }
    return kExitOk;
}

}  // namespace cantor::cli
