// Command-line front end: density computations, family evaluation,
// construction verification, convergence curves, searches, and the
// published-data reproduction recipes.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <sstream>

#include "latproj/catalog.hpp"
#include "latproj/io.hpp"
#include "latproj/lattice.hpp"
#include "latproj/search.hpp"

using namespace latproj;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

std::vector<Int> parse_vector(const std::string& csv) {
    std::vector<Int> v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        Int x;
        if (x.set_str(tok, 10) != 0) throw parse_error("bad integer in vector: " + tok);
        v.push_back(x);
    }
    if (v.empty()) throw parse_error("empty vector");
    return v;
}

std::vector<long> parse_wlist(const std::string& csv) {
    std::vector<long> v;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) v.push_back(std::stol(tok));
    if (v.empty()) throw parse_error("empty w list");
    return v;
}

std::string fmt6(double x) {
    std::ostringstream os;
    os.precision(6);
    os << x;
    return os.str();
}

void emit(const json& j, const std::string& format, const std::string& csv,
          const std::string& table) {
    if (format == "json") std::cout << j.dump(2) << "\n";
    else if (format == "csv") std::cout << csv;
    else std::cout << table;
}

json family_json(const std::vector<IntPoly>& fam) {
    json arr = json::array();
    for (const auto& p : fam)
        arr.push_back(json{{"pretty", p.pretty()}, {"coeffs", p.coeff_text()}});
    return arr;
}

Lifting load_lifting(const std::string& catalog_name, const std::string& file) {
    if (!catalog_name.empty()) return catalog::get(catalog_name).lifting;
    return io::lifting_from_json(json::parse(io::read_file(file)));
}

int cmd_density(const std::string& vec_csv, const std::string& format) {
    std::vector<Int> v = parse_vector(vec_csv);
    Lattice l = project_orthogonal(v);
    DensityReport d = l.center_density();
    Int n2 = 0;
    for (const auto& x : v) n2 += x * x;
    json j = io::density_to_json(d);
    j["vector"] = vec_csv;
    j["norm2"] = n2.get_str();
    std::ostringstream csv, tab;
    csv << "vector,center_density,minimal_norm,norm2\n"
        << '"' << vec_csv << "\"," << fmt6(d.center_density) << ',' << fmt6(d.min_dist) << ','
        << n2.get_str() << '\n';
    tab << "(" << vec_csv << ")  delta=" << fmt6(d.center_density)
        << "  r=" << fmt6(d.min_dist) << "  |v|^2=" << n2.get_str() << '\n';
    emit(j, format, csv.str(), tab.str());
    return kExitOk;
}

int cmd_project(const std::string& vec_csv) {
    Lattice l = project_orthogonal(parse_vector(vec_csv));
    std::cout << io::lattice_to_json(l).dump(2) << "\n";
    return kExitOk;
}

int cmd_family(const std::string& catalog_name, const std::string& rank2, long atw,
               bool have_w, const std::string& format) {
    std::vector<IntPoly> fam;
    if (!rank2.empty()) {
        std::vector<Int> abc = parse_vector(rank2);
        if (abc.size() != 3) throw parse_error("--rank2 needs a,b,c");
        auto r = catalog::rank2_analysis(abc[0].get_si(), abc[1].get_si());
        if (!r.feasible) {
            std::cout << json{{"feasible", false}, {"reason", r.reason}}.dump(2) << "\n";
            return kExitOk;
        }
        fam = projection_family(r.lifting(abc[2].get_si()));
    } else {
        fam = projection_family(catalog::get(catalog_name).lifting);
    }
    json j{{"family", family_json(fam)}};
    std::ostringstream tab;
    for (const auto& p : fam) tab << p.pretty() << "\n";
    if (have_w) {
        auto v = eval_family(fam, atw);
        json arr = json::array();
        std::ostringstream row;
        for (const auto& x : v) {
            arr.push_back(x.get_str());
            row << x.get_str() << ' ';
        }
        j["w"] = atw;
        j["value"] = arr;
        tab << "at w=" << atw << ": " << row.str() << "\n";
    }
    emit(j, format, tab.str(), tab.str());
    return kExitOk;
}

int cmd_verify(const std::string& catalog_name, const std::string& file,
               const std::string& format) {
    Lifting l = load_lifting(catalog_name, file);
    auto c1 = check_cond1(l);
    auto c2 = check_cond2(l);
    json j{{"cond1", json{{"pass", c1.pass},
                          {"det", c1.pass ? c1.det_value.get_str() : std::string()},
                          {"det_poly", c1.det_poly.pretty()}}},
           {"cond2", json{{"pass", c2.pass}, {"alpha", c2.pass ? rat_str(c2.alpha) : std::string()}}}};
    if (c1.pass) j["family"] = family_json(projection_family(l));
    std::ostringstream tab;
    tab << "cond1: " << (c1.pass ? "pass det=" + c1.det_poly.pretty() : "FAIL det=" + c1.det_poly.pretty())
        << "\ncond2: " << (c2.pass ? "pass alpha=" + rat_str(c2.alpha) : "FAIL") << "\n";
    emit(j, format, tab.str(), tab.str());
    return kExitOk;
}

int cmd_converge(const std::string& catalog_name, const std::string& file,
                 const std::string& wlist, const std::string& out_json,
                 const std::string& out_csv) {
    Lifting l = load_lifting(catalog_name, file);
    RationalMatrix target = inverse(l.astar);
    ConvergenceReport rep =
        convergence_report(l, target, parse_wlist(wlist), catalog_name.empty() ? "file" : catalog_name);
    json j = io::convergence_to_json(rep);
    std::string csv = io::convergence_to_csv(rep);
    if (!out_json.empty()) io::write_file(out_json, j.dump(2) + "\n");
    if (!out_csv.empty()) io::write_file(out_csv, csv);
    std::cout << j.dump(2) << "\n";
    if (!catalog_name.empty()) {
        // exit code reflects the theoretical claim for catalog entries
        bool quadratic = check_cond2(l).pass;
        double lo = quadratic ? -2.2 : -1.3, hi = quadratic ? -1.8 : -0.8;
        if (rep.slope < lo || rep.slope > hi) {
            std::cerr << "slope " << rep.slope << " outside [" << lo << ", " << hi << "]\n";
            return kExitMismatch;
        }
    }
    return kExitOk;
}

int cmd_search(int ambient, const std::string& lo, const std::string& hi, std::size_t top,
               const std::string& format) {
    search::SearchOptions opt;
    opt.top = top;
    auto res = search::search_densest(ambient, Int(lo), Int(hi), opt);
    json rows = json::array();
    std::ostringstream csv, tab;
    csv << "rank,vector,center_density,minimal_norm,norm2\n";
    for (const auto& r : res) {
        std::ostringstream vs;
        for (std::size_t i = 0; i < r.v.size(); ++i) vs << (i ? "," : "") << r.v[i].get_str();
        rows.push_back(json{{"rank", r.rank},
                            {"vector", vs.str()},
                            {"center_density", r.delta},
                            {"minimal_norm", r.r},
                            {"r_sq", rat_str(r.r_sq)},
                            {"norm2", r.norm2.get_str()}});
        csv << r.rank << ",\"" << vs.str() << "\"," << fmt6(r.delta) << ',' << fmt6(r.r) << ','
            << r.norm2.get_str() << '\n';
        tab << r.rank << ". (" << vs.str() << ")  delta=" << fmt6(r.delta) << "  r=" << fmt6(r.r)
            << "  |v|^2=" << r.norm2.get_str() << '\n';
    }
    emit(json{{"results", rows}}, format, csv.str(), tab.str());
    return kExitOk;
}

int cmd_perturb_opt(const std::string& lattice_name, long bound, long alpha_max,
                    std::uint64_t seed, int restarts) {
    catalog::NamedLattice nl = catalog::named_lattice(lattice_name);
    search::OptimizeOptions opt;
    opt.entry_bound = bound;
    opt.alpha_max = alpha_max;
    opt.seed = seed;
    opt.restarts = restarts;
    auto cand = search::optimize_perturbation(nl.gstar, opt);
    json j{{"lattice", lattice_name},
           {"P", io::matrix_to_json(cand.p)},
           {"alpha", rat_str(cand.alpha)},
           {"objective", rat_str(cand.objective)},
           {"objective_float", to_double(cand.objective)},
           {"evaluations", cand.evaluations},
           {"restarts", cand.restarts},
           {"seed", cand.seed}};
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

int cmd_catalog(const std::string& action, const std::string& name, const std::string& out) {
    if (action == "list") {
        for (const auto& n : catalog::list_names()) {
            auto e = catalog::get(n);
            std::cout << n << "  (" << e.target << ")\n";
        }
        return kExitOk;
    }
    if (action == "export") {
        auto e = catalog::get(name);
        std::string text = io::lifting_to_json(e.lifting).dump(2) + "\n";
        if (out.empty()) std::cout << text;
        else io::write_file(out, text);
        return kExitOk;
    }
    throw parse_error("catalog action must be list or export");
}

int cmd_reproduce(const std::string& target, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    if (target == "table1") {
        auto rep = search::verify_table1();
        json rows = json::array();
        std::ostringstream tab;
        for (const auto& r : rep.rows) {
            std::ostringstream vs;
            for (std::size_t i = 0; i < r.v.size(); ++i) vs << (i ? "," : "") << r.v[i].get_str();
            rows.push_back(json{{"vector", vs.str()},
                                {"norm2", r.norm2.get_str()},
                                {"r", r.r},
                                {"delta", r.delta},
                                {"r_published", r.r_expected},
                                {"delta_published", r.delta_expected},
                                {"pass", r.pass}});
            tab << (r.pass ? "pass" : "FAIL") << "  (" << vs.str() << ")  delta=" << fmt6(r.delta)
                << "/" << fmt6(r.delta_expected) << "  r=" << fmt6(r.r) << "/" << fmt6(r.r_expected)
                << "\n";
        }
        io::write_file(out_dir + "/table1.json", json{{"rows", rows}, {"all_pass", rep.all_pass}}.dump(2) + "\n");
        std::cout << tab.str() << (rep.all_pass ? "13/13 rows pass\n" : "MISMATCH\n");
        return rep.all_pass ? kExitOk : kExitMismatch;
    }
    if (target == "table2") {
        auto fams = catalog::table2_families();
        bool all = true;
        json out = json::array();
        for (auto& [n, fam] : fams) {
            json fj{{"n", n}, {"family", family_json(fam)}};
            bool row_ok = true;
            // primitivity and determinant law at small parameters
            for (long wv = 1; wv <= 4; ++wv) {
                auto v = eval_family(fam, wv);
                Int n2 = 0;
                for (const auto& x : v) n2 += x * x;
                bool prim = is_primitive(v);
                bool detlaw = project_orthogonal(v).determinant() == make_rat(1, n2);
                row_ok = row_ok && prim && detlaw;
                json evj = json::array();
                for (const auto& x : v) evj.push_back(x.get_str());
                fj["evaluations"].push_back(json{{"w", wv}, {"v", evj}, {"primitive", prim},
                                                 {"det_law", detlaw}});
            }
            // degree law where a generating lifting exists
            static const std::map<int, std::string> lifting_names = {
                {3, "D3"}, {4, "D4"}, {5, "D5"}, {6, "D6"}, {7, "E7"}, {8, "E8-rep2-P2"}};
            auto it = lifting_names.find(n);
            if (it != lifting_names.end()) {
                Lifting l = catalog::get(it->second).lifting;
                auto lf = projection_family(l);
                int maxdeg = -1;
                for (const auto& p : lf) maxdeg = std::max(maxdeg, p.degree());
                Rat dg = abs(det(l.gstar.submatrix(0, 0, l.dim(), l.dim())));
                bool deg_ok = maxdeg == static_cast<int>(l.dim()) &&
                              abs(Rat(lf[l.dim()].leading())) == dg;
                fj["degree_law"] = deg_ok;
                row_ok = row_ok && deg_ok;
            }
            fj["pass"] = row_ok;
            all = all && row_ok;
            out.push_back(std::move(fj));
            std::cout << (row_ok ? "pass" : "FAIL") << "  n=" << n << "\n";
        }
        io::write_file(out_dir + "/table2.json", json{{"rows", out}, {"all_pass", all}}.dump(2) + "\n");
        return all ? kExitOk : kExitMismatch;
    }
    if (target == "figure1") {
        auto e8 = catalog::e8_liftings();
        struct Seq {
            std::string name;
            Lifting l;
        };
        std::vector<Seq> seqs = {{"rep1-baseline", e8.rep1_baseline()},
                                 {"rep1-P1", e8.rep1_p1()},
                                 {"rep2-baseline", e8.rep2_baseline()},
                                 {"rep2-P2", e8.rep2_p2()}};
        std::ostringstream csv;
        csv << "sequence,w,log2_norm_vw,center_density\n";
        std::map<std::string, std::vector<double>> deltas;
        for (auto& s : seqs) {
            auto fam = projection_family(s.l);
            for (long wv = 1; wv <= 8; ++wv) {
                auto v = eval_family(fam, wv);
                Int n2 = 0;
                for (const auto& x : v) n2 += x * x;
                DensityReport d = Lattice(inverse(s.l.gram_at(wv))).center_density();
                double log2norm = 0.5 * std::log2(to_double(Rat(n2)));
                csv << s.name << ',' << wv << ',' << log2norm << ',' << fmt6(d.center_density)
                    << '\n';
                deltas[s.name].push_back(d.center_density);
            }
        }
        io::write_file(out_dir + "/figure1.csv", csv.str());
        // ordering claim: the optimized perturbation beats the unperturbed
        // sequence at every w >= 2 on the same representation
        bool ok = true;
        for (int i = 1; i < 8; ++i) {
            ok = ok && deltas["rep1-P1"][i] > deltas["rep1-baseline"][i];
            ok = ok && deltas["rep2-P2"][i] > deltas["rep2-baseline"][i];
        }
        std::cout << (ok ? "curve ordering holds for w in 2..8\n" : "curve ordering MISMATCH\n");
        return ok ? kExitOk : kExitMismatch;
    }
    throw parse_error("reproduce target must be table1, table2, or figure1");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-projection toolkit"};
    app.require_subcommand(1);

    std::string vec, format = "json", cat_name, file, rank2, wlist = "2,4,8,16,32";
    std::string out_json, out_csv, action, out, out_dir = ".", lattice_name, lo = "1", hi = "1";
    long atw = 0;
    bool have_w = false;
    int ambient = 4;
    std::size_t top = 10;
    long bound = 2, alpha_max = 4;
    std::uint64_t seed = 7;
    int restarts = 32;

    auto* density = app.add_subcommand("density", "center density of a projection lattice");
    density->add_option("--vector", vec, "comma-separated integer vector")->required();
    density->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    auto* project = app.add_subcommand("project", "projection lattice of a primitive vector");
    project->add_option("--vector", vec)->required();

    auto* family = app.add_subcommand("family", "projection-vector family of a lifting");
    family->add_option("--catalog", cat_name, "catalog entry name");
    family->add_option("--rank2", rank2, "a,b,c for the rank-2 construction");
    auto* wopt = family->add_option("--w", atw, "evaluate at integer w");
    family->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    auto* verify = app.add_subcommand("verify", "check both certification conditions");
    verify->add_option("--catalog", cat_name);
    verify->add_option("--file", file, "lifting JSON file");
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    auto* converge = app.add_subcommand("converge", "exact convergence errors and slope");
    converge->add_option("--catalog", cat_name);
    converge->add_option("--file", file);
    converge->add_option("--w", wlist, "comma-separated w values");
    converge->add_option("--out-json", out_json);
    converge->add_option("--out-csv", out_csv);

    auto* searchcmd = app.add_subcommand("search", "exhaustive dense-vector search in a norm window");
    searchcmd->add_option("--ambient", ambient)->required();
    searchcmd->add_option("--norm2-min", lo)->required();
    searchcmd->add_option("--norm2-max", hi)->required();
    searchcmd->add_option("--top", top);
    searchcmd->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "table"}));

    auto* popt = app.add_subcommand("perturb-opt", "structured perturbation optimizer");
    popt->add_option("--lattice", lattice_name)->required();
    popt->add_option("--bound", bound);
    popt->add_option("--alpha-max", alpha_max);
    popt->add_option("--seed", seed);
    popt->add_option("--restarts", restarts);

    auto* cat = app.add_subcommand("catalog", "list or export built-in liftings");
    cat->add_option("action", action)->required()->check(CLI::IsMember({"list", "export"}));
    cat->add_option("--name", cat_name);
    cat->add_option("--out", out);

    auto* rep = app.add_subcommand("reproduce", "reproduce published tables and figure data");
    rep->add_option("target", action)->required()->check(CLI::IsMember({"table1", "table2", "figure1"}));
    rep->add_option("--out-dir", out_dir);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(density)) return cmd_density(vec, format);
        if (app.got_subcommand(project)) return cmd_project(vec);
        if (app.got_subcommand(family)) {
            have_w = wopt->count() > 0;
            return cmd_family(cat_name, rank2, atw, have_w, format);
        }
        if (app.got_subcommand(verify)) return cmd_verify(cat_name, file, format);
        if (app.got_subcommand(converge)) return cmd_converge(cat_name, file, wlist, out_json, out_csv);
        if (app.got_subcommand(searchcmd)) return cmd_search(ambient, lo, hi, top, format);
        if (app.got_subcommand(popt)) return cmd_perturb_opt(lattice_name, bound, alpha_max, seed, restarts);
        if (app.got_subcommand(cat)) return cmd_catalog(action, cat_name, out);
        if (app.got_subcommand(rep)) return cmd_reproduce(action, out_dir);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitUsage;
}
