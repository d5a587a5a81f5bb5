// Command-line front end: decomposition, directness scans, Verma checks,
// operator relations, and basis/dimension tables, all in exact arithmetic.
//
// Exit codes: 0 success/direct/pass, 1 semantic negative (witness, violation,
// mismatch, not-in-span), 2 input error, 3 resource error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mvharm/mvharm.hpp"
#include "mvharm/serialize.hpp"

namespace {

using namespace mvharm;

enum ExitCode {
    kOk = 0,
    kNegative = 1,
    kInputError = 2,
    kResourceError = 3,
};

struct Config {
    int k = 1;
    int m = 1;
    std::optional<int> degree;
    std::optional<std::string> multidegree;
    std::optional<std::string> partition;
    std::optional<std::string> expr;
    std::optional<std::string> file;
    std::string format = "table";
    long cap = default_resource_cap;
    int jobs = 1;
    bool detect = false;
    int depth = 2;
};

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        std::size_t start = pos;
        bool any = false;
        long value = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            value = value * 10 + (text[pos] - '0');
            if (value > 1000000) throw parse_error("entry too large", pos);
            ++pos;
            any = true;
        }
        if (!any) throw parse_error("expected a number", start);
        out.push_back(static_cast<int>(value));
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos < text.size()) {
            if (text[pos] != ',')
                throw parse_error("expected ',' between entries", pos);
            ++pos;
        }
    }
    if (out.empty()) throw parse_error("empty list", 0);
    return out;
}

MultiDegree parse_multidegree(const std::string& text, int k) {
    auto entries = parse_int_list(text);
    if (static_cast<int>(entries.size()) != k)
        throw parse_error("multidegree must have exactly " + std::to_string(k) +
                              " entries",
                          0);
    return MultiDegree(entries);
}

std::string read_polynomial_text(const Config& cfg) {
    if (cfg.expr && cfg.file)
        throw error("supply exactly one of --expr and --file");
    if (cfg.expr) return *cfg.expr;
    if (cfg.file && *cfg.file != "-") {
        std::ifstream in(*cfg.file);
        if (!in) throw error("cannot open file: " + *cfg.file);
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

void require_format(const Config& cfg, std::initializer_list<const char*> ok) {
    for (const char* f : ok)
        if (cfg.format == f) return;
    throw error("format '" + cfg.format + "' not supported for this command");
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

// ---- decompose ----

int cmd_decompose(const Config& cfg) {
    require_format(cfg, {"table", "json"});
    Ambient amb(cfg.k, cfg.m);
    Polynomial input = Polynomial::parse(read_polynomial_text(cfg), cfg.k,
                                         cfg.m);
    Decomposer dec(amb, cfg.cap);
    auto components = dec.decompose(input);
    if (!(reassemble(amb, components) == input))
        throw error("internal: decomposition failed the residual check");

    std::vector<std::string> warnings;
    if (!semistable(cfg.m, cfg.k)) {
        std::vector<MultiDegree> hit;
        for (const auto& [d, part] : input.multidegree_split()) {
            auto rec = directness_at(amb, d, cfg.cap);
            if (rec.collapsed()) hit.push_back(d);
        }
        if (hit.empty()) {
            warnings.push_back(
                "outside the semistable range (m < 2k-1): the decomposition "
                "may not be unique");
        } else {
            std::string ds;
            for (const auto& d : hit) {
                if (!ds.empty()) ds += ", ";
                ds += d.str();
            }
            warnings.push_back(
                "decomposition is not unique: collapse witnesses exist at "
                "multidegree " +
                ds);
        }
    }
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

    if (cfg.format == "json") {
        Json out;
        out["k"] = cfg.k;
        out["m"] = cfg.m;
        out["input"] = input.str();
        out["components"] = json_components(components);
        out["verified"] = true;
        Json warn = Json::array();
        for (const auto& w : warnings) warn.push_back(w);
        out["warnings"] = std::move(warn);
        emit(out);
    } else {
        if (components.empty()) {
            std::cout << "0\n";
        } else {
            for (const auto& comp : components)
                std::cout << comp.n.str() << " * (" << comp.harmonic.str()
                          << ")\n";
        }
    }
    return kOk;
}

// ---- directness ----

int cmd_directness(const Config& cfg) {
    require_format(cfg, {"table", "json"});
    if (!cfg.degree) throw error("--degree is required");
    Ambient amb(cfg.k, cfg.m);
    auto rep = directness_report(amb, *cfg.degree, cfg.cap, cfg.jobs);
    if (cfg.format == "json") {
        emit(json_directness(rep));
    } else {
        std::cout << "k=" << rep.k << " m=" << rep.m << " D=" << rep.D
                  << " semistable=" << (rep.semistable ? "yes" : "no") << "\n";
        for (const auto& rec : rep.records) {
            std::cout << "  d=" << rec.d.str() << " ambient="
                      << rec.ambient_dim << " family=" << rec.family_size
                      << " rank=" << rec.rank;
            if (rec.collapsed())
                std::cout << " witnesses=" << rec.witnesses.size();
            std::cout << "\n";
            for (const auto& w : rec.witnesses) {
                std::cout << "    witness:";
                for (std::size_t i = 0; i < w.size(); ++i) {
                    if (sgn(w[i]) == 0) continue;
                    const auto& mem = rec.members[i];
                    std::cout << " " << (sgn(w[i]) > 0 ? "+" : "")
                              << to_string(w[i]) << "*" << mem.n.str() << "[h"
                              << mem.harmonic_index << "@" << mem.hdeg.str()
                              << "]";
                }
                std::cout << "\n";
            }
        }
        std::cout << (rep.direct() ? "direct" : "not direct") << " up to D="
                  << rep.D << "\n";
    }
    return rep.direct() ? kOk : kNegative;
}

// ---- verma ----

int cmd_verma(const Config& cfg) {
    require_format(cfg, {"table", "json", "csv"});
    if (!cfg.partition) throw error("--partition is required");
    Partition a = Partition::parse(*cfg.partition);
    if (a.length() > cfg.k) throw error("partition longer than k");
    auto rep = check_partition(a, cfg.m, cfg.k);
    std::optional<CollapseReport> collapse;
    if (cfg.detect)
        collapse = collapse_detect(Ambient(cfg.k, cfg.m), a, cfg.depth,
                                   cfg.cap);

    if (cfg.format == "json") {
        Json out = json_conditions(rep);
        out["partition"] = a.parts();
        out["m"] = cfg.m;
        if (collapse) out["collapse"] = json_collapse(*collapse);
        emit(out);
    } else if (cfg.format == "csv") {
        if (!collapse)
            throw error("csv output for verma requires --detect");
        std::cout << csv_collapse(*collapse);
    } else {
        std::cout << "a=(" << a.str() << ") m=" << cfg.m << " k=" << cfg.k
                  << " lambda=(";
        for (std::size_t i = 0; i < rep.lambda.size(); ++i) {
            if (i) std::cout << ",";
            std::cout << to_string(rep.lambda[i]);
        }
        std::cout << ")\n";
        for (const auto& e : rep.cond1)
            std::cout << "  (1) i=" << e.i << " j=" << e.j << " value="
                      << to_string(e.value)
                      << (e.violated ? " VIOLATED" : " ok") << "\n";
        for (const auto& e : rep.cond2)
            std::cout << "  (2) i=" << e.i << " value=" << to_string(e.value)
                      << (e.violated ? " VIOLATED" : " ok") << "\n";
        std::cout << (rep.irreducible_sufficient ? "pass" : "violation")
                  << "\n";
        if (collapse) {
            if (collapse->empty()) {
                std::cout << "collapse: simplicial space is zero, nothing to "
                             "scan\n";
            } else {
                for (const auto& rec : collapse->records)
                    std::cout << "  g=" << rec.g << " free=" << rec.free_dim
                              << " copies=" << rec.copies << " realized="
                              << rec.realized_dim
                              << (rec.collapsed ? " COLLAPSED" : " ok") << "\n";
            }
        }
    }
    bool negative = !rep.irreducible_sufficient ||
                    (collapse && collapse->any_collapse());
    return negative ? kNegative : kOk;
}

// ---- relations ----

int cmd_relations(const Config& cfg) {
    require_format(cfg, {"table", "json"});
    Ambient amb(cfg.k, cfg.m);
    if (cfg.expr) {
        WeylElement w = parse_operator(*cfg.expr, amb);
        std::vector<WeylElement> basis;
        std::vector<std::string> names;
        for (auto& [name, op] : sp_spanning_set(amb)) {
            names.push_back(name);
            basis.push_back(std::move(op));
        }
        auto combo = span_membership(w, basis);
        if (cfg.format == "json") {
            Json out;
            out["expr"] = *cfg.expr;
            out["normal_ordered"] = w.str();
            out["in_span"] = combo.has_value();
            if (combo) {
                Json coeffs;
                for (std::size_t i = 0; i < names.size(); ++i)
                    if (sgn((*combo)[i]) != 0)
                        coeffs[names[i]] = to_string((*combo)[i]);
                out["coefficients"] = std::move(coeffs);
            }
            emit(out);
        } else {
            std::cout << w.str() << "\n";
            if (combo) {
                std::cout << "in span:";
                bool anyc = false;
                for (std::size_t i = 0; i < names.size(); ++i) {
                    if (sgn((*combo)[i]) == 0) continue;
                    std::cout << " " << (anyc ? "+ " : "")
                              << to_string((*combo)[i]) << "*" << names[i];
                    anyc = true;
                }
                if (!anyc) std::cout << " 0";
                std::cout << "\n";
            } else {
                std::cout << "not in span\n";
            }
        }
        return combo ? kOk : kNegative;
    }
    auto rep = closure_report(amb);
    if (cfg.format == "json") {
        emit(json_closure(rep));
    } else {
        std::cout << "k=" << rep.k << " m=" << rep.m << "\n"
                  << "span dim " << rep.span_dim << " (expected "
                  << rep.expected_span_dim << ")\n"
                  << "gl span dim " << rep.gl_dim << " (expected "
                  << rep.expected_gl_dim << ")\n"
                  << "pairwise brackets checked: " << rep.pairs_checked
                  << "\n";
        for (const auto& [x, y] : rep.failures)
            std::cout << "  bracket outside span: [" << x << "," << y << "]\n";
        std::cout << (rep.ok() ? "closed" : "NOT CLOSED") << "\n";
    }
    return rep.ok() ? kOk : kNegative;
}

// ---- harmonics ----

int cmd_harmonics(const Config& cfg) {
    Ambient amb(cfg.k, cfg.m);
    if (cfg.multidegree && cfg.degree)
        throw error("supply exactly one of --multidegree and --degree");
    if (cfg.multidegree) {
        require_format(cfg, {"table", "json"});
        MultiDegree d = parse_multidegree(*cfg.multidegree, cfg.k);
        auto hb = harmonic_basis(amb, d, cfg.cap);
        if (cfg.format == "json") {
            emit(json_harmonic_basis(hb));
        } else {
            std::cout << "d=" << d.str() << " dimension " << hb.dimension()
                      << "\n";
            for (const auto& p : hb.basis) std::cout << "  " << p.str() << "\n";
        }
        return kOk;
    }
    if (!cfg.degree) throw error("--multidegree or --degree is required");
    require_format(cfg, {"table", "json", "csv"});
    auto grid = multidegrees_up_to(cfg.k, *cfg.degree);
    std::vector<std::pair<MultiDegree, int>> dims;
    for (const auto& d : grid)
        dims.push_back({d, harmonic_basis(amb, d, cfg.cap).dimension()});
    if (cfg.format == "json") {
        Json out = Json::array();
        for (const auto& [d, dim] : dims) {
            Json row;
            row["multidegree"] = json_multidegree(d);
            row["dimension"] = dim;
            out.push_back(std::move(row));
        }
        emit(out);
    } else if (cfg.format == "csv") {
        std::cout << "multidegree,dimension\n";
        for (const auto& [d, dim] : dims)
            std::cout << csv_field(d.str()) << "," << dim << "\n";
    } else {
        for (const auto& [d, dim] : dims)
            std::cout << "d=" << d.str() << " dimension " << dim << "\n";
    }
    return kOk;
}

// ---- simplicial ----

int cmd_simplicial(const Config& cfg) {
    require_format(cfg, {"table", "json"});
    if (!cfg.partition) throw error("--partition is required");
    Partition a = Partition::parse(*cfg.partition);
    if (a.length() > cfg.k) throw error("partition longer than k");
    auto sb = simplicial_basis(Ambient(cfg.k, cfg.m), a, cfg.cap);
    if (cfg.format == "json") {
        emit(json_simplicial_basis(sb));
    } else {
        std::cout << "a=(" << a.str() << ") dimension " << sb.dimension()
                  << "\n";
        for (const auto& p : sb.basis) std::cout << "  " << p.str() << "\n";
    }
    return kOk;
}

// ---- isotypic ----

int cmd_isotypic(const Config& cfg) {
    require_format(cfg, {"table", "json", "csv"});
    Ambient amb(cfg.k, cfg.m);
    if (cfg.multidegree && cfg.degree)
        throw error("supply exactly one of --multidegree and --degree");
    std::vector<IsotypicRecord> records;
    if (cfg.multidegree) {
        records.push_back(isotypic_dimension_check(
            amb, parse_multidegree(*cfg.multidegree, cfg.k), cfg.cap));
    } else if (cfg.degree) {
        records = isotypic_scan(amb, *cfg.degree, cfg.cap);
    } else {
        throw error("--multidegree or --degree is required");
    }
    bool all_match = true;
    for (const auto& rec : records) all_match = all_match && rec.match;
    if (cfg.format == "json") {
        emit(json_isotypic(records));
    } else if (cfg.format == "csv") {
        std::cout << csv_isotypic(records);
    } else {
        for (const auto& rec : records)
            std::cout << "d=" << rec.d.str() << " lhs=" << rec.lhs << " rhs="
                      << rec.rhs << (rec.match ? " match" : " MISMATCH")
                      << "\n";
        std::cout << (all_match ? "all match" : "mismatch found") << "\n";
    }
    return all_match ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact harmonic decomposition toolkit"};
    app.require_subcommand(1);

    Config cfg;
    auto add_common = [&cfg](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "number of vector variables")
            ->check(CLI::PositiveNumber);
        sub->add_option("--m", cfg.m, "coordinates per vector variable")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--cap", cfg.cap,
                        "resource cap on ambient dimension per multidegree")
            ->envname("MVHARM_CAP")
            ->check(CLI::PositiveNumber);
        sub->add_option("--jobs", cfg.jobs, "worker threads for grid scans")
            ->check(CLI::PositiveNumber);
    };

    auto* decompose = app.add_subcommand(
        "decompose", "Fischer decomposition of a polynomial");
    add_common(decompose);
    decompose->add_option("-e,--expr", cfg.expr, "inline polynomial");
    decompose->add_option("-f,--file", cfg.file,
                          "polynomial file ('-' for stdin)");

    auto* directness = app.add_subcommand(
        "directness", "rank analysis of the decomposition up to a degree");
    add_common(directness);
    directness->add_option("--degree", cfg.degree, "total degree bound")
        ->required();

    auto* verma = app.add_subcommand(
        "verma", "irreducibility conditions for the shifted weight");
    add_common(verma);
    verma->add_option("--partition", cfg.partition, "partition, e.g. 2,1")
        ->required();
    verma->add_flag("--detect", cfg.detect, "also run the collapse detector");
    verma->add_option("--depth", cfg.depth, "collapse scan depth")
        ->check(CLI::NonNegativeNumber);

    auto* relations = app.add_subcommand(
        "relations", "closure of the invariant operator algebra");
    add_common(relations);
    relations->add_option("-e,--expr", cfg.expr,
                          "operator expression, e.g. [D11,R11]");

    auto* harmonics = app.add_subcommand(
        "harmonics", "harmonic basis or dimension table");
    add_common(harmonics);
    harmonics->add_option("--multidegree", cfg.multidegree,
                          "multidegree, e.g. 2,1");
    harmonics->add_option("--degree", cfg.degree, "scan all totals up to D");

    auto* simplicial = app.add_subcommand(
        "simplicial", "simplicial harmonic basis for a partition");
    add_common(simplicial);
    simplicial->add_option("--partition", cfg.partition, "partition, e.g. 2,1")
        ->required();

    auto* isotypic = app.add_subcommand(
        "isotypic", "dimension identity check at one or many multidegrees");
    add_common(isotypic);
    isotypic->add_option("--multidegree", cfg.multidegree,
                         "multidegree, e.g. 2,1");
    isotypic->add_option("--degree", cfg.degree, "scan all totals up to D");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (decompose->parsed()) return cmd_decompose(cfg);
        if (directness->parsed()) return cmd_directness(cfg);
        if (verma->parsed()) return cmd_verma(cfg);
        if (relations->parsed()) return cmd_relations(cfg);
        if (harmonics->parsed()) return cmd_harmonics(cfg);
        if (simplicial->parsed()) return cmd_simplicial(cfg);
        if (isotypic->parsed()) return cmd_isotypic(cfg);
    } catch (const resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResourceError;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kResourceError;
    }
    return kInputError;
}
