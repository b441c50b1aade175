#include "sep/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <variant>

#include "sep/ehrhart.hpp"
#include "sep/errors.hpp"
#include "sep/gamma.hpp"
#include "sep/interior.hpp"
#include "sep/matching.hpp"
#include "sep/spectral.hpp"
#include "sep/witness.hpp"

namespace sep::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

enum class Format { coeffs, pretty, structured, csv };

json poly_json(const IntPoly& p) {
    json arr = json::array();
    for (const auto& c : p.coeffs()) {
        if (c.fits_slong_p())
            arr.push_back(c.get_si());
        else
            arr.push_back(c.get_str());
    }
    return arr;
}

json int_json(const Int& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

// Ordered key/value report, printed as "key: value" lines or as one JSON document.
class Report {
public:
    using Value = std::variant<std::string, IntPoly, bool, Int, Report>;

    Report& add(std::string key, Value v) {
        fields_.emplace_back(std::move(key), std::move(v));
        return *this;
    }
    Report& add(std::string key, const char* v) { return add(std::move(key), Value(std::string(v))); }
    Report& add(std::string key, int v) { return add(std::move(key), Value(Int(v))); }
    Report& add(std::string key, bool v) { return add(std::move(key), Value(v)); }

    json to_json() const {
        json j = json::object();
        for (const auto& [key, v] : fields_) {
            if (auto* s = std::get_if<std::string>(&v)) j[key] = *s;
            else if (auto* p = std::get_if<IntPoly>(&v)) j[key] = poly_json(*p);
            else if (auto* b = std::get_if<bool>(&v)) j[key] = *b;
            else if (auto* i = std::get_if<Int>(&v)) j[key] = int_json(*i);
            else j[key] = std::get<Report>(v).to_json();
        }
        return j;
    }

    void write(std::ostream& out, Format f, int indent = 0) const {
        if (f == Format::structured) {
            out << to_json().dump(2) << "\n";
            return;
        }
        std::string pad(static_cast<std::size_t>(indent), ' ');
        for (const auto& [key, v] : fields_) {
            if (auto* r = std::get_if<Report>(&v)) {
                out << pad << key << ":\n";
                r->write(out, f, indent + 2);
                continue;
            }
            out << pad << key << ": ";
            if (auto* s = std::get_if<std::string>(&v)) out << *s;
            else if (auto* p = std::get_if<IntPoly>(&v)) out << (f == Format::pretty ? p->pretty() : p->to_string());
            else if (auto* b = std::get_if<bool>(&v)) out << (*b ? "yes" : "no");
            else out << std::get<Int>(v).get_str();
            out << "\n";
        }
    }

private:
    std::vector<std::pair<std::string, Value>> fields_;
};

struct Options {
    std::string format = "coeffs";
    std::vector<std::string> bound_overrides;
    std::uint64_t seed = 0; // reserved; nothing is randomized
    int jobs = 1;
    bool strict = false;
    bool timing = false;

    Limits limits() const {
        Limits l;
        for (const auto& spec : bound_overrides) {
            auto eq = spec.find('=');
            if (eq == std::string::npos) throw ParseError("bound override '" + spec + "' is not name=value");
            std::string name = spec.substr(0, eq);
            std::uint64_t value = 0;
            try {
                value = std::stoull(spec.substr(eq + 1));
            } catch (const std::exception&) {
                throw ParseError("bound override '" + spec + "' has a bad value");
            }
            auto as_int = [&] { return static_cast<int>(std::min<std::uint64_t>(value, 1u << 30)); };
            if (name == "cut_vertices") l.max_cut_vertices = as_int();
            else if (name == "cut_sum_vertices") l.max_cut_sum_vertices = as_int();
            else if (name == "cycles") l.max_cycles = value;
            else if (name == "matching_vertices") l.max_matching_vertices = as_int();
            else if (name == "independence_vertices") l.max_independence_vertices = as_int();
            else if (name == "spanning_states") l.max_spanning_states = value;
            else if (name == "box_points") l.max_box_points = value;
            else if (name == "hrep_dim") l.max_hrep_dim = as_int();
            else if (name == "hrep_points") l.max_hrep_points = value;
            else if (name == "cliques") l.max_cliques = value;
            else throw ParseError("unknown bound '" + name + "'");
        }
        return l;
    }

    Format fmt() const {
        if (format == "pretty") return Format::pretty;
        if (format == "structured") return Format::structured;
        if (format == "csv") return Format::csv;
        return Format::coeffs;
    }
};

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    std::string ms() const {
        auto d = std::chrono::steady_clock::now() - start_;
        return std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(d).count());
    }

private:
    std::chrono::steady_clock::time_point start_;
};

Report result_report(const SepResult& r) {
    Report rep;
    rep.add("gamma", r.gamma).add("hstar", r.hstar).add("volume", r.volume).add("dim", r.dim).add("method", method_name(r.method));
    return rep;
}

std::string class_string(const GraphClassification& c) {
    std::vector<std::string> tags;
    if (c.connected) tags.emplace_back("connected");
    if (c.bipartite) tags.emplace_back("bipartite");
    if (c.forest) tags.emplace_back("forest");
    if (c.cactus) tags.emplace_back("cactus");
    if (c.unique_even_cycle_condition) tags.emplace_back("even-unique");
    std::string s;
    for (const auto& t : tags) s += (s.empty() ? "" : ";") + t;
    return s.empty() ? "-" : s;
}

Report classification_report(const Graph& g, const GraphClassification& c) {
    Report rep;
    rep.add("n", g.order()).add("edges", g.size());
    rep.add("connected", c.connected).add("bipartite", c.bipartite).add("forest", c.forest).add("cactus", c.cactus);
    rep.add("even_cycle_condition", c.unique_even_cycle_condition);
    rep.add("simple_cycles", static_cast<int>(c.simple_cycles.size()));
    return rep;
}

SepResult compute_a(const Graph& g, const std::string& method, const Limits& limits, int jobs) {
    if (method == "formula") return gamma_a_suspension(g, limits);
    if (method == "cuts") return gamma_a_cut_sum(g, limits, jobs);
    if (method == "ehrhart") return gamma_a_ehrhart(g, limits);
    return gamma_a_auto(g, limits, jobs);
}

SepResult compute_b(const Graph& g, const std::string& method, const Limits& limits) {
    if (method == "formula") return gamma_b(g, limits);
    if (method == "interior") return gamma_b_interior(g, limits);
    if (method == "ehrhart") return gamma_b_ehrhart(g, limits);
    return gamma_b_auto(g, limits);
}

Report property_report(const IntPoly& f) {
    Report rep;
    rep.add("polynomial", f);
    if (f.is_zero()) {
        rep.add("degree", -1);
        return rep;
    }
    auto p = check_properties(f);
    rep.add("degree", p.degree).add("palindromic", p.palindromic).add("unimodal", p.unimodal).add("log-concave", p.log_concave);
    rep.add("gamma-positive", p.gamma_positive);
    if (p.gamma) rep.add("gamma", *p.gamma);
    rep.add("real-rooted", p.real_rooted).add("real-roots", p.real_root_count);
    return rep;
}

// ---------------------------------------------------------------------------

int cmd_gamma(const Options& o, const std::string& path, const std::string& method, bool type_b, std::ostream& out) {
    Graph g = read_graph_file(path, o.strict);
    Limits limits = o.limits();
    Timer timer;
    SepResult r = type_b ? compute_b(g, method, limits) : compute_a(g, method, limits, o.jobs);
    Report rep;
    rep.add("input", path).add("polytope", type_b ? "B" : "A-suspension");
    Report res = result_report(r);
    if (o.fmt() == Format::structured) {
        rep.add("result", res);
    } else {
        rep = res;
    }
    if (o.timing) rep.add("time_ms", timer.ms());
    rep.write(out, o.fmt());
    return ok;
}

int cmd_check(const Options& o, const std::string& path, const std::string& poly_text, const std::string& polytope,
              std::ostream& out) {
    Limits limits = o.limits();
    Report rep;
    if (!poly_text.empty()) {
        rep.add("hstar", property_report(parse_poly(poly_text)));
        rep.write(out, o.fmt());
        return ok;
    }
    if (path.empty()) throw ParseError("check needs a graph file or --poly");
    Graph g = read_graph_file(path, o.strict);
    IntPoly hstar;
    int dim = 0;
    if (polytope == "a") {
        auto data = ehrhart(build_a(g), limits);
        hstar = data.hstar;
        dim = data.dim;
    } else if (polytope == "b") {
        if (two_coloring(g)) {
            auto r = gamma_b_auto(g, limits);
            hstar = r.hstar;
            dim = r.dim;
        } else {
            auto data = ehrhart(build_b(g), limits);
            hstar = data.hstar;
            dim = data.dim;
        }
    } else {
        auto r = gamma_a_auto(g, limits, o.jobs);
        hstar = r.hstar;
        dim = r.dim;
    }
    rep.add("input", path).add("polytope", polytope).add("dim", dim);
    rep.add("reflexive", reflexivity_check(hstar, dim));
    rep.add("hstar", property_report(hstar));
    if (is_palindromic(hstar)) rep.add("gamma", property_report(hstar_to_gamma(hstar)));
    rep.write(out, o.fmt());
    return ok;
}

int cmd_witness(const Options& o, const std::string& path, const std::string& type, const std::string& export_path,
                std::ostream& out) {
    Graph g = read_graph_file(path, o.strict);
    Limits limits = o.limits();
    FlagWitness w = type == "b" ? witness_b(g, limits) : witness_a(g, limits);
    if (!export_path.empty()) {
        std::ofstream f(export_path);
        if (!f) throw ParseError("cannot write " + export_path);
        f << to_edge_list(w.witness_graph);
    }
    Report rep;
    rep.add("input", path).add("type", type).add("m", w.m);
    rep.add("witness_vertices", w.witness_graph.order()).add("witness_edges", w.witness_graph.size());
    rep.add("f_poly", w.f_poly).add("gamma", w.target).add("match", w.f_poly == w.target);
    rep.write(out, o.fmt());
    return ok;
}

int cmd_analyze(const Options& o, const std::string& path, std::ostream& out) {
    Graph g = read_graph_file(path, o.strict);
    Limits limits = o.limits();
    auto c = classify(g, limits);
    Report rep;
    rep.add("input", path);
    rep.add("classification", classification_report(g, c));
    rep.add("even_cycle_families", static_cast<int>(even_cycle_families(g, limits).size()));
    rep.add("matching_generating", matching_generating_poly(g));
    rep.add("matching_poly", matching_poly(g));
    rep.add("char_poly", char_poly_adjacency(g));
    if (g.order() <= limits.max_matching_vertices) rep.add("matched_vertex_sets", IntPoly(matched_vertex_sets(g, limits)));
    if (g.order() <= limits.max_independence_vertices) rep.add("independence", independence_poly(g, limits));
    rep.write(out, o.fmt());
    return ok;
}

// ---------------------------------------------------------------------------
// verify

struct CheckLog {
    Report report;
    bool failed = false;

    void pass(const std::string& name) { report.add(name, "PASS"); }
    void skip(const std::string& name, const std::string& why) { report.add(name, "SKIP (" + why + ")"); }
    void compare(const std::string& name, const IntPoly& a, const IntPoly& b) {
        if (a == b) {
            pass(name);
        } else {
            failed = true;
            report.add(name, "FAIL " + a.to_string() + " vs " + b.to_string());
        }
    }
};

int cmd_verify(const Options& o, const std::string& path, const std::string& level, std::ostream& out) {
    Graph g = read_graph_file(path, o.strict);
    Limits limits = o.limits();
    auto c = classify(g, limits);
    bool full = level == "full";
    CheckLog log;

    std::optional<SepResult> formula_a;
    if (c.unique_even_cycle_condition) formula_a = gamma_a_suspension(g, limits);
    SepResult cuts_a = gamma_a_cut_sum(g, limits, o.jobs);
    if (formula_a)
        log.compare("a.formula=cut_sum", formula_a->gamma, cuts_a.gamma);
    else
        log.skip("a.formula=cut_sum", "even-cycle condition fails");

    if (c.bipartite) {
        SepResult interior_b = gamma_b_interior(g, limits);
        if (c.cactus)
            log.compare("b.formula=interior", gamma_b(g, limits).gamma, interior_b.gamma);
        else
            log.skip("b.formula=interior", "not a cactus");
        if (full) log.compare("b.ehrhart=interior", gamma_b_ehrhart(g, limits).hstar, interior_b.hstar);
    } else {
        log.skip("b.formula=interior", "not bipartite");
    }

    if (full) {
        log.compare("a.ehrhart=cut_sum", gamma_a_ehrhart(g, limits).hstar, cuts_a.hstar);
        if (c.cactus) {
            if (verify_gamma_mu_bridge(g, default_bridge_samples(g), limits))
                log.pass("mu.bridge");
            else {
                log.failed = true;
                log.report.add("mu.bridge", "FAIL");
            }
        } else {
            log.skip("mu.bridge", "not a cactus");
        }
        RatPoly mu0 = mu_poly(g, uniform_weights(g, Rat(0), limits), limits);
        RatPoly mu1 = mu_poly(g, uniform_weights(g, Rat(1), limits), limits);
        log.compare("mu(0)=alpha", to_int(mu0), matching_poly(g));
        log.compare("mu(1)=charpoly", to_int(mu1), char_poly_adjacency(g));
    }

    Report rep;
    rep.add("input", path).add("level", level).add("checks", log.report).add("verdict", log.failed ? "FAIL" : "PASS");
    rep.write(out, o.fmt());
    return log.failed ? mismatch : ok;
}

// ---------------------------------------------------------------------------
// batch

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) {
        if (ch == '"') q += '"';
        q += ch;
    }
    return q + "\"";
}

struct BatchRow {
    std::string name;
    Graph g;
    GraphClassification c;
    SepResult r;
    bool real_rooted = false;
    std::string agreement;
};

BatchRow batch_row(const fs::path& file, bool type_b, const Options& o, const Limits& limits) {
    BatchRow row;
    row.name = file.filename().string();
    row.g = read_graph_file(file.string(), o.strict);
    row.c = classify(row.g, limits);
    const Graph& g = row.g;
    if (type_b) {
        if (!row.c.bipartite) throw PreconditionError("graph is not bipartite");
        row.r = gamma_b_interior(g, limits);
        row.agreement = "interior";
        if (row.c.cactus) {
            bool same = gamma_b(g, limits).gamma == row.r.gamma;
            row.agreement = same ? "formula=interior" : "mismatch";
        }
    } else {
        bool cuts_ok = g.order() <= limits.max_cut_sum_vertices;
        if (row.c.unique_even_cycle_condition) {
            row.r = gamma_a_suspension(g, limits);
            row.agreement = "formula";
            if (cuts_ok) row.agreement = gamma_a_cut_sum(g, limits, o.jobs).gamma == row.r.gamma ? "formula=cut_sum" : "mismatch";
        } else {
            row.r = gamma_a_cut_sum(g, limits, o.jobs);
            row.agreement = "cut_sum";
        }
    }
    row.real_rooted = is_real_rooted(row.r.hstar);
    return row;
}

int cmd_batch(const Options& o, const std::string& dir, const std::string& type, std::ostream& out, std::ostream& err) {
    if (!fs::is_directory(dir)) throw ParseError("not a directory: " + dir);
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });

    Limits limits = o.limits();
    bool structured = o.format == "structured";
    bool type_b = type == "b";
    std::vector<BatchRow> rows;
    std::vector<std::pair<std::string, std::string>> failures;
    for (const auto& f : files) {
        try {
            rows.push_back(batch_row(f, type_b, o, limits));
        } catch (const Error& e) {
            failures.emplace_back(f.filename().string(), e.what());
        }
    }

    bool any_mismatch = false;
    if (structured) {
        json doc;
        doc["type"] = type_b ? "B" : "A-suspension";
        doc["rows"] = json::array();
        for (const auto& r : rows) {
            json j;
            j["name"] = r.name;
            j["n"] = r.g.order();
            j["edges"] = r.g.size();
            j["class"] = class_string(r.c);
            j["gamma"] = poly_json(r.r.gamma);
            j["hstar"] = poly_json(r.r.hstar);
            j["volume"] = int_json(r.r.volume);
            j["real_rooted"] = r.real_rooted;
            j["agreement"] = r.agreement;
            doc["rows"].push_back(j);
        }
        doc["failures"] = json::array();
        for (const auto& [name, what] : failures) doc["failures"].push_back({{"name", name}, {"error", what}});
        out << doc.dump(2) << "\n";
    } else {
        out << "name,n,edges,class,gamma,hstar,volume,real_rooted,agreement\n";
        for (const auto& r : rows) {
            out << csv_field(r.name) << ',' << r.g.order() << ',' << r.g.size() << ',' << csv_field(class_string(r.c)) << ','
                << csv_field(r.r.gamma.to_string()) << ',' << csv_field(r.r.hstar.to_string()) << ',' << r.r.volume.get_str()
                << ',' << (r.real_rooted ? "yes" : "no") << ',' << r.agreement << "\n";
        }
    }
    for (const auto& r : rows) any_mismatch = any_mismatch || r.agreement == "mismatch";
    for (const auto& [name, what] : failures) err << "error: " << name << ": " << what << "\n";
    if (!failures.empty()) return io_or_parse;
    return any_mismatch ? mismatch : ok;
}

void add_common(CLI::App* app, Options& o, bool batch) {
    if (batch)
        app->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"csv", "structured"}));
    else
        app->add_option("--format", o.format, "Polynomial/report format")->check(CLI::IsMember({"pretty", "coeffs", "structured"}));
    app->add_option("--bound-override", o.bound_overrides, "Resource guard override, name=value");
    app->add_option("--seed", o.seed, "Reserved; all computation is deterministic");
    app->add_option("--jobs", o.jobs, "Worker threads for the cut sum")->check(CLI::Range(1, 256));
    app->add_flag("--strict", o.strict, "Reject duplicate edges");
    app->add_flag("--timing", o.timing, "Append wall time to the report");
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Gamma-polynomials of symmetric edge polytopes"};
    app.name("sepoly");
    app.require_subcommand(1);

    Options o;
    std::string path, method = "auto", level = "quick", type = "a", export_path, poly_text, polytope = "a-susp";

    auto* ga = app.add_subcommand("gamma-a", "Type A polytope of the suspension");
    ga->add_option("graph", path, "Graph file")->required();
    ga->add_option("--method", method)->check(CLI::IsMember({"auto", "formula", "cuts", "ehrhart"}));
    add_common(ga, o, false);

    auto* gb = app.add_subcommand("gamma-b", "Type B polytope");
    gb->add_option("graph", path, "Graph file")->required();
    gb->add_option("--method", method)->check(CLI::IsMember({"auto", "formula", "interior", "ehrhart"}));
    add_common(gb, o, false);

    auto* ck = app.add_subcommand("check", "Property report of h* and gamma");
    ck->add_option("graph", path, "Graph file");
    ck->add_option("--poly", poly_text, "Check a coefficient list instead, e.g. \"[1, 6, 16, 6, 1]\"");
    ck->add_option("--polytope", polytope)->check(CLI::IsMember({"a-susp", "a", "b"}));
    add_common(ck, o, false);

    auto* wt = app.add_subcommand("witness", "Flag complex witness for gamma");
    wt->add_option("graph", path, "Graph file")->required();
    wt->add_option("--type", type)->check(CLI::IsMember({"a", "b"}));
    wt->add_option("--export", export_path, "Write the witness graph as an edge list");
    add_common(wt, o, false);

    auto* an = app.add_subcommand("analyze", "Structure and matching data of a graph");
    an->add_option("graph", path, "Graph file")->required();
    add_common(an, o, false);

    auto* bt = app.add_subcommand("batch", "Report over a directory of graph files");
    bt->add_option("dir", path, "Directory")->required();
    bt->add_option("--type", type)->check(CLI::IsMember({"a", "b"}));
    add_common(bt, o, true);

    auto* vf = app.add_subcommand("verify", "Cross-check all applicable methods on one graph");
    vf->add_option("graph", path, "Graph file")->required();
    vf->add_option("--level", level)->check(CLI::IsMember({"quick", "full"}));
    add_common(vf, o, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : io_or_parse;
    }
    if (bt->parsed() && o.format == "coeffs") o.format = "csv";

    try {
        if (ga->parsed()) return cmd_gamma(o, path, method, false, out);
        if (gb->parsed()) return cmd_gamma(o, path, method, true, out);
        if (ck->parsed()) return cmd_check(o, path, poly_text, polytope, out);
        if (wt->parsed()) return cmd_witness(o, path, type, export_path, out);
        if (an->parsed()) return cmd_analyze(o, path, out);
        if (bt->parsed()) return cmd_batch(o, path, type, out, err);
        if (vf->parsed()) return cmd_verify(o, path, level, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return io_or_parse;
    } catch (const PreconditionError& e) {
        err << "precondition: " << e.what() << "\n";
        return precondition;
    } catch (const VerificationError& e) {
        err << "mismatch: " << e.what() << "\n";
        return mismatch;
    } catch (const BoundExceeded& e) {
        err << "bound: " << e.what() << "\n";
        return bound;
    }
    return io_or_parse;
}

} // namespace sep::cli
