#include "polyco/cli.hpp"

#include "polyco/decomp.hpp"
#include "polyco/liealg.hpp"
#include "polyco/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace polyco {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int line_of_offset(const std::string& text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line of the first occurrence of "key", or 0 if absent.
int line_of_key(const std::string& text, const std::string& key) {
    const auto pos = text.find("\"" + key + "\"");
    return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

std::string where(const std::string& source, int line) {
    return line > 0 ? source + ":" + std::to_string(line) : source;
}

nlohmann::json parse_json(const std::string& text, const std::string& source) {
    try {
        return nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const int line = line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0);
        throw InputError(where(source, line) + ": malformed JSON (" + e.what() + ")");
    }
}

}  // namespace

SimplicialComplex load_complex(const std::string& path) {
    const std::string text = read_file(path);
    const nlohmann::json j = parse_json(text, path);
    try {
        return complex_from_json(j);
    } catch (const InputError& e) {
        throw InputError(path + ": " + e.what());
    } catch (const nlohmann::json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

PairAssignment pairs_from_json(const nlohmann::json& j, const std::string& source, const std::string& text) {
    if (!j.is_object()) throw InputError(source + ": spaces file must be an object keyed by vertex number");
    const int m = static_cast<int>(j.size());
    PairAssignment pairs;
    for (int v = 1; v <= m; ++v) {
        const std::string key = std::to_string(v);
        if (!j.contains(key))
            throw InputError(source + ": vertices must be numbered 1.." + std::to_string(m) + " (missing \"" + key + "\")");
        const auto& entry = j.at(key);
        try {
            if (entry.is_object() && !entry.contains("kind")) {
                const bool contractible = entry.value("domain_contractible", false);
                if (!entry.contains("codomain")) throw InputError("pair entry needs a \"codomain\"");
                const SpaceExpr codomain = expr_from_json(entry.at("codomain"));
                if (entry.contains("domain")) {
                    pairs.push_back(VertexPair::make(expr_from_json(entry.at("domain")), codomain, contractible));
                } else if (contractible) {
                    pairs.push_back(VertexPair::path_fibration(codomain));
                } else {
                    throw InputError("pair entry needs a \"domain\" unless domain_contractible is true");
                }
            } else {
                pairs.push_back(VertexPair::constant(expr_from_json(entry)));
            }
        } catch (const InputError& e) {
            throw InputError(where(source, line_of_key(text, key)) + ": vertex " + key + ": " + e.what());
        } catch (const nlohmann::json::exception& e) {
            throw InputError(where(source, line_of_key(text, key)) + ": vertex " + key + ": " + e.what());
        }
    }
    return pairs;
}

PairAssignment load_pairs(const std::string& path) {
    const std::string text = read_file(path);
    return pairs_from_json(parse_json(text, path), path, text);
}

namespace {

enum class Format { Text, Json };

struct Options {
    std::string complex_path, complex2_path, spaces_path, output_path, check, subset;
    std::string format = "text";
    int max_degree = 12;
    int max_weight = 0;  // 0: derive from max_degree
    int alphabet = 0;
};

std::vector<SpaceExpr> domains_only(const PairAssignment& pairs, const std::string& source) {
    std::vector<SpaceExpr> out;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!pairs[i].codomain_is_point)
            throw InputError(source + ": vertex " + std::to_string(i + 1) + ": this command needs A_i = * (got " +
                             to_text(pairs[i].codomain) + ")");
        out.push_back(pairs[i].domain);
    }
    return out;
}

std::string require(const std::string& value, const char* flag) {
    if (value.empty()) throw InputError(std::string("missing required option ") + flag);
    return value;
}

Truncation truncation(const Options& o) {
    if (o.max_degree < 1) throw InputError("--max-degree must be at least 1");
    const int w = o.max_weight > 0 ? o.max_weight : o.max_degree + 1;
    return {w, o.max_degree};
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::string render(const Decomposition& d, Format f) { return f == Format::Json ? dump(to_json(d)) : to_text(d); }

std::string run_homology(const Options& o, Format f) {
    const SimplicialComplex k = load_complex(require(o.complex_path, "--complex"));
    const HomologyProfile h = homology(k);
    const auto spheres = wedge_of_spheres_type(k);
    if (f == Format::Json) {
        nlohmann::json j = {{"ranks", h.ranks}, {"top_dim", h.top_dim}, {"euler_characteristic", euler_characteristic(k)},
                            {"f_vector", k.f_vector()}};
        j["wedge_of_spheres"] = spheres ? nlohmann::json(*spheres) : nlohmann::json(nullptr);
        return dump(j);
    }
    std::ostringstream out;
    out << "ranks: [";
    for (std::size_t i = 0; i < h.ranks.size(); ++i) out << (i ? "," : "") << h.ranks[i];
    out << "]\ntop dimension: " << h.top_dim << "\neuler characteristic: " << euler_characteristic(k) << "\n";
    out << "wedge of spheres: ";
    if (!spheres) {
        out << "not certified\n";
    } else if (spheres->empty()) {
        out << "contractible\n";
    } else {
        for (std::size_t i = 0; i < spheres->size(); ++i) out << (i ? " v " : "") << "S^" << (*spheres)[i];
        out << "\n";
    }
    return out.str();
}

std::string run_hall_basis(const Options& o, Format f) {
    std::vector<Generator> alphabet;
    if (o.alphabet > 0 && !o.subset.empty()) throw InputError("--alphabet and --subset are mutually exclusive");
    if (o.alphabet > 0) {
        alphabet = symbol_alphabet(o.alphabet);
    } else if (!o.subset.empty()) {
        std::vector<int> vs;
        std::stringstream in(o.subset);
        std::string item;
        while (std::getline(in, item, ',')) {
            try {
                vs.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw InputError("--subset expects comma-separated vertex numbers, got \"" + o.subset + "\"");
            }
        }
        for (int v : vs)
            if (v < 1 || v > VertexSet::kMaxVertex) throw InputError("--subset vertex out of range: " + std::to_string(v));
        alphabet = generators_for(VertexSet::from_vector(vs));
    } else {
        throw InputError("hall-basis needs --alphabet k or --subset i,j,..");
    }
    const int w = o.max_weight > 0 ? o.max_weight : truncation(o).weight_bound;
    const auto basis = hall_basis(alphabet, w);
    if (f == Format::Json) {
        nlohmann::json list = nlohmann::json::array();
        for (const Bracket& b : basis) list.push_back({{"bracket", b.to_string()}, {"weight", b.weight()}});
        return dump({{"max_weight", w}, {"count", basis.size()}, {"brackets", list}});
    }
    std::ostringstream out;
    out << basis.size() << " brackets of weight <= " << w << "\n";
    for (const Bracket& b : basis) out << "  " << b.to_string() << "\n";
    return out.str();
}

std::string run_bbcg(const Options& o, Format f) {
    const SimplicialComplex k = load_complex(require(o.complex_path, "--complex"));
    const PairAssignment pairs = load_pairs(require(o.spaces_path, "--spaces"));
    if (pairs.size() != static_cast<std::size_t>(k.vertex_count()))
        throw InputError(o.spaces_path + ": has " + std::to_string(pairs.size()) + " vertices, complex has " +
                         std::to_string(k.vertex_count()));
    const auto xs = domains_only(pairs, o.spaces_path);
    const auto wedge = bbcg_wedge_splitting(k, xs);
    const auto cone = bbcg_cone_splitting(k, xs);
    if (f == Format::Json) {
        auto list = [](const std::vector<std::pair<VertexSet, SpaceExpr>>& items) {
            nlohmann::json out = nlohmann::json::array();
            for (const auto& [s, e] : items) out.push_back({{"subset", s.vertices()}, {"summand", to_text(e)}});
            return out;
        };
        return dump({{"wedge_splitting", list(wedge)}, {"cone_splitting", list(cone)}});
    }
    std::ostringstream out;
    out << "suspension splitting over faces:\n";
    for (const auto& [s, e] : wedge) out << "  " << s.to_string() << ": " << to_text(e) << "\n";
    out << "suspension splitting over missing subsets:\n";
    for (const auto& [s, e] : cone) out << "  " << s.to_string() << ": " << to_text(e) << "\n";
    return out.str();
}

std::vector<VerificationReport> builtin_checks(int n) {
    const SpaceExpr s2 = SpaceExpr::sphere(2);
    return {check_counterexample(n),
            check_disjoint_union(SimplicialComplex::simplex(1), SimplicialComplex::simplex(1), {s2, s2}, n),
            check_hilton_milnor({SpaceExpr::sphere(3), SpaceExpr::sphere(5)}, n),
            check_porter({s2, s2}, n),
            check_wedge_case(SimplicialComplex::simplex(3), {s2, s2, s2}, n)};
}

std::string run_verify(const Options& o, Format f) {
    const int n = truncation(o).degree_bound.value();
    std::vector<VerificationReport> reports;
    const std::string& check = o.check;
    if (check.empty() || check == "all") {
        reports = builtin_checks(n);
    } else if (check == "counterexample") {
        reports.push_back(check_counterexample(n));
    } else if (check == "hilton-milnor" || check == "porter") {
        const auto xs = domains_only(load_pairs(require(o.spaces_path, "--spaces")), o.spaces_path);
        reports.push_back(check == "porter" ? check_porter(xs, n) : check_hilton_milnor(xs, n));
    } else if (check == "wedge-case") {
        const SimplicialComplex k = load_complex(require(o.complex_path, "--complex"));
        reports.push_back(check_wedge_case(k, domains_only(load_pairs(require(o.spaces_path, "--spaces")), o.spaces_path), n));
    } else if (check == "disjoint-union") {
        const SimplicialComplex k1 = load_complex(require(o.complex_path, "--complex"));
        const SimplicialComplex k2 = load_complex(require(o.complex2_path, "--complex2"));
        reports.push_back(
            check_disjoint_union(k1, k2, domains_only(load_pairs(require(o.spaces_path, "--spaces")), o.spaces_path), n));
    } else {
        throw InputError("unknown check \"" + check +
                         "\" (expected all, counterexample, hilton-milnor, porter, wedge-case, disjoint-union)");
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.name < b.name; });
    if (f == Format::Json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& r : reports) list.push_back(to_json(r));
        return dump(list);
    }
    std::string out;
    for (const auto& r : reports) out += to_text(r);
    return out;
}

std::string run_command(const std::string& name, const Options& o) {
    if (o.format != "text" && o.format != "json") throw InputError("--format must be text or json");
    const Format f = o.format == "json" ? Format::Json : Format::Text;
    if (name == "homology") return run_homology(o, f);
    if (name == "hall-basis") return run_hall_basis(o, f);
    if (name == "bbcg") return run_bbcg(o, f);
    if (name == "verify") return run_verify(o, f);

    const Truncation t = truncation(o);
    if (name == "porter" || name == "hilton-milnor") {
        const auto xs = domains_only(load_pairs(require(o.spaces_path, "--spaces")), o.spaces_path);
        return render(name == "porter" ? porter_loop_decomp(xs) : hilton_milnor(xs, t), f);
    }
    const SimplicialComplex k = load_complex(require(o.complex_path, "--complex"));
    const PairAssignment pairs = load_pairs(require(o.spaces_path, "--spaces"));
    if (pairs.size() != static_cast<std::size_t>(k.vertex_count()))
        throw InputError(o.spaces_path + ": has " + std::to_string(pairs.size()) + " vertices but " + o.complex_path +
                         " has " + std::to_string(k.vertex_count()));
    if (name == "decompose") return render(loop_decompose(k, pairs, t), f);
    if (name == "decompose-wedge") return render(loop_decompose_wedge(k, domains_only(pairs, o.spaces_path), t), f);
    if (name == "decompose-contractible") return render(loop_decompose_contractible(k, pairs, t), f);
    throw InputError("unknown command \"" + name + "\"");
}

int default_max_degree() {
    const char* env = std::getenv("POLYCO_MAX_DEGREE");
    if (!env || !*env) return 12;
    try {
        std::size_t used = 0;
        const int n = std::stoi(env, &used);
        if (used != std::string(env).size() || n < 1) throw std::invalid_argument(env);
        return n;
    } catch (const std::exception&) {
        throw InputError(std::string("POLYCO_MAX_DEGREE must be a positive integer, got \"") + env + "\"");
    }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    try {
        o.max_degree = default_max_degree();
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Loop-space decompositions of polyhedral coproducts", "polyco"};
    app.require_subcommand(1);
    struct Command {
        const char* name;
        const char* help;
        bool complex, spaces;
    };
    const std::vector<Command> commands = {
        {"decompose", "general decomposition for pairs f_i: X_i -> A_i", true, true},
        {"decompose-wedge", "decomposition for A_i = *", true, true},
        {"decompose-contractible", "decomposition for contractible domains", true, true},
        {"porter", "Porter decomposition of the loops on a wedge", false, true},
        {"hilton-milnor", "Hilton-Milnor decomposition of the loops on a suspended wedge", false, true},
        {"hall-basis", "list Lyndon-Hall brackets", false, false},
        {"homology", "reduced rational homology of a complex", true, false},
        {"bbcg", "suspension splittings over faces and missing subsets", true, true},
        {"verify", "series checks (all, counterexample, hilton-milnor, porter, wedge-case, disjoint-union)", true, true},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        if (c.complex) sub->add_option("--complex", o.complex_path, "complex JSON file");
        if (c.spaces) sub->add_option("--spaces", o.spaces_path, "spaces JSON file");
        sub->add_option("--format", o.format, "text or json");
        sub->add_option("--output", o.output_path, "write the report to this file");
        sub->add_option("--max-degree", o.max_degree, "truncation degree N (default 12 or POLYCO_MAX_DEGREE)");
        if (std::string(c.name) != "verify") sub->add_option("--max-weight", o.max_weight, "bracket weight bound W (default N+1)");
        if (std::string(c.name) == "hall-basis") {
            sub->add_option("--alphabet", o.alphabet, "plain alphabet x_1..x_k");
            sub->add_option("--subset", o.subset, "generators a_{J,i} for J inside this comma-separated subset");
        }
        if (std::string(c.name) == "verify") {
            sub->add_option("--check", o.check, "which check to run");
            sub->add_option("--complex2", o.complex2_path, "second complex for disjoint-union");
        }
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        const std::string name = app.get_subcommands().front()->get_name();
        const std::string report = run_command(name, o);
        if (o.output_path.empty()) {
            out << report;
        } else {
            std::ofstream file(o.output_path, std::ios::binary);
            if (!file) throw InputError(o.output_path + ": cannot open for writing");
            file << report;
        }
        return 0;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConnectivityError& e) {
        err << "error: " << e.what() << " (a simply connected input was expected)\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace polyco
