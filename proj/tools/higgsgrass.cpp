// Batch front-end: reads problem files, dispatches to the library, and emits
// deterministic JSON (or plain text) envelopes.

#include "higgsgrass/degree.hpp"
#include "higgsgrass/errors.hpp"
#include "higgsgrass/grass.hpp"
#include "higgsgrass/groebner.hpp"
#include "higgsgrass/json_io.hpp"
#include "higgsgrass/parse.hpp"
#include "higgsgrass/rank2.hpp"
#include "higgsgrass/spectral.hpp"
#include "higgsgrass/structure.hpp"
#include "higgsgrass/systems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

using nlohmann::json;
using namespace higgsgrass;

namespace {

struct Options {
    std::string format = "json";
    std::uint64_t seed = 0;
    bool seed_given = false;
    unsigned jobs = 1;
};

struct Session {
    Options opts;
    std::string command;
    std::string input_bytes; // everything read, in order
    json payload = json::object();
    json stats = json::object();
};

std::string read_file(const std::string& path, Session& s) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DomainError("cannot open input file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    std::string bytes = os.str();
    s.input_bytes += bytes;
    return bytes;
}

std::string fnv1a64(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string str(std::uint64_t v) { return std::to_string(v); }
std::string str(int v) { return std::to_string(v); }

json gens_json(const std::vector<Poly>& gens) {
    json a = json::array();
    for (const auto& g : gens) a.push_back(g.to_string());
    return a;
}

json names_json(const std::vector<std::string>& names) {
    json a = json::array();
    for (const auto& n : names) a.push_back(n);
    return a;
}

json int_list_json(const std::vector<int>& v) {
    json a = json::array();
    for (int i : v) a.push_back(str(i));
    return a;
}

void render_text(const json& j, const std::string& prefix, std::ostream& os) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), os);
    } else if (j.is_array()) {
        std::size_t i = 0;
        for (const auto& e : j) render_text(e, prefix + "[" + std::to_string(i++) + "]", os);
    } else if (j.is_string()) {
        os << prefix << ": " << j.get<std::string>() << "\n";
    } else {
        os << prefix << ": " << j.dump() << "\n";
    }
}

int emit(Session& s, const std::string& status) {
    json envelope;
    envelope["command"] = s.command;
    envelope["input_digest"] = fnv1a64(s.input_bytes);
    envelope["payload"] = s.payload;
    envelope["stats"] = s.stats;
    envelope["status"] = status;
    if (s.opts.format == "text")
        render_text(envelope, "", std::cout);
    else
        std::cout << envelope.dump(2) << "\n";
    return 0;
}

int emit_error(Session& s, const std::string& kind, const std::string& message, int code) {
    json envelope;
    envelope["command"] = s.command;
    envelope["error"] = {{"kind", kind}, {"message", message}};
    envelope["status"] = "error";
    if (s.opts.format == "text")
        render_text(envelope, "", std::cout);
    else
        std::cout << envelope.dump(2) << "\n";
    return code;
}

HiggsField load_higgs(const std::string& path, Session& s) {
    ProblemFile p = problem_from_json(read_file(path, s));
    if (!p.higgs) throw DomainError("problem file '" + path + "' does not carry a Higgs field");
    if (p.spair_budget) set_spair_budget(*p.spair_budget);
    if (p.seed && !s.opts.seed_given) s.opts.seed = *p.seed;
    return std::move(*p.higgs);
}

JordanSpec load_spec(const std::string& path, Session& s) {
    ProblemFile p = problem_from_json(read_file(path, s));
    if (!p.spec)
        throw DomainError("problem file '" + path + "' does not carry a Jordan specification");
    if (p.spair_budget) set_spair_budget(*p.spair_budget);
    if (p.seed && !s.opts.seed_given) s.opts.seed = *p.seed;
    return std::move(*p.spec);
}

std::vector<Rat> parse_point(const std::string& text) {
    std::vector<Rat> point;
    std::string cur;
    std::istringstream is(text);
    while (std::getline(is, cur, ',')) point.push_back(Rat::from_string(cur));
    return point;
}

DegreeOptions degree_options(const Session& s) {
    DegreeOptions o;
    o.seed = s.opts.seed;
    return o;
}

json witness_json(const Rank2Class& c) {
    json w = json::object();
    if (c.which_h >= 0) w["which_h"] = str(c.which_h + 1);
    if (c.sqrt_delta) w["sqrt_delta"] = c.sqrt_delta->to_string();
    if (c.factors) w["factors"] = json::array({c.factors->first.to_string(),
                                               c.factors->second.to_string()});
    if (c.gcd_witness) w["gcd"] = c.gcd_witness->to_string();
    return w;
}

void cmd_check(Session& s, const std::string& in) {
    HiggsField H = load_higgs(in, s);
    s.payload["valid"] = true;
    s.payload["base_dim"] = str(H.n);
    s.payload["rank"] = str(H.r);
}

void cmd_grass(Session& s, const std::string& in, int d, bool relations) {
    HiggsField H = load_higgs(in, s);
    GrassIdeal G = d == 1 && !relations ? rank1_ideal(H) : rankd_ideal(H, d, relations);
    s.payload["d"] = str(G.d);
    s.payload["kind"] = G.kind == FiberCoords::vertical ? "vertical" : "pluecker";
    s.payload["fiber_vars"] = names_json(G.fiber_vars);
    s.payload["raw_generator_count"] = str(G.raw_generator_count);
    s.payload["generators"] = gens_json(G.ideal.generators());
}

json component_json(const ComponentIdeal& c) {
    json out;
    out["v"] = str(c.v);
    out["dimension"] = str(c.dimension);
    out["fiber_degree"] = str(c.fiber_degree);
    out["generators"] = gens_json(c.ideal.generators());
    return out;
}

void cmd_structure(Session& s, const std::string& in, const std::string& mode, int v) {
    JordanSpec spec = load_spec(in, s);
    s.payload["mode"] = mode;
    if (mode == "full") {
        Ideal full = predicted_full_ideal(spec);
        s.payload["generators"] = gens_json(full.generators());
        auto sets = jordan_spec_sets(spec);
        json A = json::array();
        for (const auto& a : sets.global.A) A.push_back(int_list_json(a));
        s.payload["sets"] = {{"A", A},
                             {"B", int_list_json(sets.global.B)},
                             {"C", int_list_json(sets.global.C)}};
    } else if (mode == "component") {
        if (v > 0) {
            s.payload["component"] = component_json(predicted_component_ideal(spec, v));
        } else {
            json list = json::array();
            for (int k = 1; k <= static_cast<int>(spec.blocks.size()); ++k)
                list.push_back(component_json(predicted_component_ideal(spec, k)));
            s.payload["components"] = list;
        }
    } else if (mode == "single") {
        if (spec.blocks.size() != 1 || spec.blocks[0].mult != 1)
            throw DomainError("mode 'single' expects exactly one Jordan block");
        s.payload["generators"] = gens_json(single_block_ideal(spec.blocks[0].size).generators());
    } else {
        throw DomainError("unknown mode '" + mode + "' (full|component|single)");
    }
}

void cmd_classify2(Session& s, const std::string& in) {
    HiggsField H = load_higgs(in, s);
    Rank2Class c = classify_rank2(H);
    s.payload["tag"] = to_string(c.tag);
    s.payload["delta"] = c.delta.to_string();
    s.payload["witness"] = witness_json(c);
}

void cmd_singular2(Session& s, const std::string& in, int which) {
    HiggsField H = load_higgs(in, s);
    SingularLocus sing = singular_locus_rank2(H, which - 1);
    s.payload["chart_vars"] = names_json(sing.chart.vars()->names());
    s.payload["chart_generators"] = gens_json(sing.chart.generators());
    s.payload["homogeneous_generators"] = gens_json(sing.homogeneous.generators());
}

void cmd_spectral(Session& s, const std::string& in) {
    HiggsField H = load_higgs(in, s);
    SpectralIdeal S = spectral_ideal(H);
    json gens = json::array();
    for (const auto& [e, g] : S.indexed_generators) {
        json entry;
        json de = json::array();
        for (auto x : e) de.push_back(str(static_cast<int>(x)));
        entry["dexp"] = de;
        entry["poly"] = g.to_string();
        gens.push_back(entry);
    }
    std::vector<std::string> lnames(S.ideal.vars()->names().end() - S.n,
                                    S.ideal.vars()->names().end());
    s.payload["l_vars"] = names_json(lnames);
    s.payload["generators"] = gens;
}

void cmd_spectral_degree(Session& s, const std::string& in, const std::string& point) {
    HiggsField H = load_higgs(in, s);
    SpectralIdeal S = spectral_ideal(H);
    s.payload["point"] = point;
    s.payload["degree"] = str(spectral_fiber_degree(S, parse_point(point)));
}

void cmd_simpson(Session& s, int n, int d, int max_power) {
    HiggsField H = simpson_system(n);
    s.payload["n"] = str(n);
    s.payload["rank"] = str(H.r);
    if (d == 0) {
        json mats = json::array();
        for (const auto& m : H.matrices) {
            json rows = json::array();
            for (const auto& row : m) {
                json r = json::array();
                for (const auto& e : row) r.push_back(e.to_string());
                rows.push_back(r);
            }
            mats.push_back(rows);
        }
        s.payload["matrices"] = mats;
        return;
    }
    SimpsonGrassReport rep = simpson_grass_check(n, d, max_power);
    s.payload["d"] = str(d);
    s.payload["generators"] = gens_json(rep.grass.ideal.generators());
    s.payload["schubert_generators"] = gens_json(rep.schubert.generators());
    s.payload["ideal_in_schubert"] = rep.ideal_in_schubert;
    s.payload["schubert_in_radical"] = rep.schubert_in_radical;
    s.payload["certified"] = rep.certified();
    if (!rep.certified())
        throw DomainError("simpson: radical certification failed for n=" + str(n) +
                          ", d=" + str(d));
}

void cmd_flag(Session& s, const std::string& in) {
    HiggsField H = load_higgs(in, s);
    FlagIdeal F = flag_ideal(H);
    s.payload["i1"] = gens_json(F.i1.generators());
    s.payload["i2"] = gens_json(F.i2.generators());
    s.payload["incidence"] = F.incidence.to_string();
    s.payload["total"] = gens_json(F.total.generators());
}

std::vector<std::vector<std::string>> parse_groups(const std::string& text) {
    std::vector<std::vector<std::string>> groups;
    std::istringstream outer(text);
    std::string group;
    while (std::getline(outer, group, ';')) {
        std::vector<std::string> names;
        std::istringstream inner(group);
        std::string name;
        while (std::getline(inner, name, ',')) names.push_back(name);
        groups.push_back(std::move(names));
    }
    return groups;
}

void cmd_fiber(Session& s, const std::string& in, const std::string& point_text, int d,
               bool flag_mode, const std::string& groups_text) {
    HiggsField H = load_higgs(in, s);
    std::vector<Rat> point = parse_point(point_text);
    if (flag_mode) {
        if (point.size() != 1) throw DomainError("fiber --flag expects a single base coordinate");
        FlagIdeal F = flag_ideal(H);
        FlagFiberReport rep = flag_fiber_report(F, point[0], degree_options(s));
        s.payload["length"] = str(rep.length);
        s.payload["point_count"] = rep.point_count ? json(str(*rep.point_count)) : json("unknown");
        s.payload["groups"] = json::array({"z1,z2,z3", "y1,y2,y3"});
        return;
    }
    GrassIdeal G = rankd_ideal(H, d, false);
    Ideal fiber = restrict_fiber(G, point);
    auto groups = groups_text.empty() ? std::vector<std::vector<std::string>>{G.fiber_vars}
                                      : parse_groups(groups_text);
    s.payload["d"] = str(d);
    s.payload["generators"] = gens_json(fiber.generators());
    s.payload["length"] = str(projective_degree(fiber, groups, degree_options(s)));
}

void cmd_quot(Session& s, const std::string& in, const std::string& inline_matrix) {
    std::string text = inline_matrix.empty() ? read_file(in, s) : inline_matrix;
    if (!inline_matrix.empty()) s.input_bytes += inline_matrix;
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw DomainError("malformed JSON matrix");
    if (j.contains("matrix")) j = j["matrix"];
    VarSetPtr vars = VarSet::make({"x"});
    PolyMat M;
    for (const auto& jrow : j) {
        std::vector<Poly> row;
        for (const auto& je : jrow) row.push_back(parse_poly(je.get<std::string>(), vars));
        M.push_back(std::move(row));
    }
    QuotReport rep = quot_canonicalize(M);
    s.payload["p1"] = rep.point.p1.to_string();
    s.payload["p2"] = rep.point.p2.to_string();
    s.payload["q"] = rep.point.q.to_string();
    s.payload["invariant"] = rep.invariant;
    s.payload["colength"] = str(rep.colength);
}

void cmd_compare(Session& s, const std::string& in, const std::string& against) {
    Ideal a = ideal_from_json(read_file(in, s));
    Ideal b = ideal_from_json(read_file(against, s));
    GBReport ra, rb;
    if (s.opts.jobs > 1) {
        auto fa = std::async(std::launch::async, [&] { return groebner_basis(a); });
        rb = groebner_basis(b.with_order(a.order()));
        ra = fa.get();
    } else {
        ra = groebner_basis(a);
        rb = groebner_basis(b.with_order(a.order()));
    }
    s.payload["equal"] = ideal_equal(a, b);
    s.stats["left_spairs"] = str(ra.s_pairs_processed);
    s.stats["right_spairs"] = str(rb.s_pairs_processed);
    s.stats["left_zero_reductions"] = str(ra.reductions_to_zero);
    s.stats["right_zero_reductions"] = str(rb.reductions_to_zero);
}

void cmd_member(Session& s, const std::string& in, const std::string& poly_text, bool radical) {
    Ideal I = ideal_from_json(read_file(in, s));
    Poly p = parse_poly(poly_text, I.vars());
    s.input_bytes += poly_text;
    s.payload["poly"] = p.to_string();
    s.payload["member"] = radical ? radical_member(p, I) : ideal_member(p, I);
    s.payload["radical"] = radical;
}

void cmd_intersect(Session& s, const std::string& in, const std::string& against) {
    Ideal a = ideal_from_json(read_file(in, s));
    Ideal b = ideal_from_json(read_file(against, s));
    Ideal c = ideal_intersect(a, b);
    s.payload["generators"] = gens_json(c.generators());
}

void cmd_minimal_primes(Session& s, const std::string& in) {
    Ideal I = ideal_from_json(read_file(in, s));
    json primes = json::array();
    for (const auto& P : monomial_minimal_primes(I)) primes.push_back(gens_json(P.generators()));
    s.payload["primes"] = primes;
    s.payload["count"] = str(primes.size());
}

} // namespace

int main(int argc, char** argv) {
    Session s;
    if (const char* env = std::getenv("HIGGSGRASS_SPAIR_BUDGET"))
        set_spair_budget(std::strtoull(env, nullptr, 10));

    CLI::App app{"Exact computations on Higgs Grassmannians, spectral covers, flag schemes "
                 "and Quot points of Higgs bundles presented as commuting polynomial matrices"};
    app.require_subcommand(1);
    app.add_option("--format", s.opts.format, "Output format: json|text")
        ->check(CLI::IsMember({"json", "text"}));
    auto* seed_opt = app.add_option("--seed", s.opts.seed, "Seed for random chart draws");
    app.add_option("--jobs", s.opts.jobs, "Parallelism for independent Groebner jobs");

    std::string in, against, point, mode = "full", poly_text, inline_matrix, groups_text;
    int d = 1, v = 0, which = 1, n = 1, simpson_d = 0, max_power = 4;
    bool relations = false, flag_mode = false, radical = false;

    auto* c_check = app.add_subcommand("check", "Validate the commutation of a Higgs field");
    c_check->add_option("--in", in)->required();

    auto* c_grass = app.add_subcommand("grass", "Defining ideal of a Higgs Grassmannian");
    c_grass->add_option("--in", in)->required();
    c_grass->add_option("--d", d, "Subbundle rank");
    c_grass->add_flag("--pluecker-relations", relations, "Append the Pluecker relations");

    auto* c_structure = app.add_subcommand("structure", "Predicted ideals from a Jordan spec");
    c_structure->add_option("--spec", in)->required();
    c_structure->add_option("--mode", mode, "full|component|single");
    c_structure->add_option("--v", v, "Stratum index (component mode)");

    auto* c_classify = app.add_subcommand("classify2", "Rank-2 discriminant classification");
    c_classify->add_option("--in", in)->required();

    auto* c_singular = app.add_subcommand("singular2", "Rank-2 singular locus on a curve");
    c_singular->add_option("--in", in)->required();
    c_singular->add_option("--which", which, "1-based matrix index");

    auto* c_spectral = app.add_subcommand("spectral", "Spectral-cover ideal");
    c_spectral->add_option("--in", in)->required();

    auto* c_sdeg = app.add_subcommand("spectral-degree", "Fiber degree of the spectral cover");
    c_sdeg->add_option("--in", in)->required();
    c_sdeg->add_option("--point", point)->required();

    auto* c_simpson = app.add_subcommand("simpson", "Simpson system and its Grassmannians");
    c_simpson->add_option("--n", n)->required();
    c_simpson->add_option("--d", simpson_d, "Check the d-th Grassmannian");
    c_simpson->add_option("--max-power", max_power, "Power bound for radical certificates");

    auto* c_flag = app.add_subcommand("flag", "Flag scheme ideal (rank 3 on the line)");
    c_flag->add_option("--case-file", in)->required();

    auto* c_fiber = app.add_subcommand("fiber", "Fiber length over a base point");
    c_fiber->add_option("--in", in)->required();
    c_fiber->add_option("--point", point)->required();
    c_fiber->add_option("--d", d, "Subbundle rank");
    c_fiber->add_option("--groups", groups_text,
                        "Homogeneity groups, e.g. \"z1,z2,z3;y1,y2,y3\"");
    c_fiber->add_flag("--flag", flag_mode, "Treat the input as a rank-3 flag case");

    auto* c_quot = app.add_subcommand("quot", "Canonical form of a Quot-scheme point");
    c_quot->add_option("--in", in, "JSON file with a \"matrix\" of univariate poly strings");
    c_quot->add_option("--matrix", inline_matrix, "Inline JSON 2x2 matrix");

    auto* c_compare = app.add_subcommand("compare", "Decide equality of two ideals");
    c_compare->add_option("--in", in)->required();
    c_compare->add_option("--against", against)->required();

    auto* c_member = app.add_subcommand("member", "Ideal (or radical) membership");
    c_member->add_option("--in", in)->required();
    c_member->add_option("--poly", poly_text)->required();
    c_member->add_flag("--radical", radical, "Test radical membership");

    auto* c_intersect = app.add_subcommand("intersect", "Intersection of two ideals");
    c_intersect->add_option("--in", in)->required();
    c_intersect->add_option("--against", against)->required();

    auto* c_primes = app.add_subcommand("minimal-primes", "Minimal primes of a squarefree "
                                                          "monomial ideal");
    c_primes->add_option("--in", in)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    }
    s.opts.seed_given = seed_opt->count() > 0;
    s.command = app.get_subcommands().front()->get_name();
    s.stats["spair_budget"] = str(spair_budget());

    try {
        if (c_check->parsed()) cmd_check(s, in);
        else if (c_grass->parsed()) cmd_grass(s, in, d, relations);
        else if (c_structure->parsed()) cmd_structure(s, in, mode, v);
        else if (c_classify->parsed()) cmd_classify2(s, in);
        else if (c_singular->parsed()) cmd_singular2(s, in, which);
        else if (c_spectral->parsed()) cmd_spectral(s, in);
        else if (c_sdeg->parsed()) cmd_spectral_degree(s, in, point);
        else if (c_simpson->parsed()) cmd_simpson(s, n, simpson_d, max_power);
        else if (c_flag->parsed()) cmd_flag(s, in);
        else if (c_fiber->parsed()) cmd_fiber(s, in, point, d, flag_mode, groups_text);
        else if (c_quot->parsed()) cmd_quot(s, in, inline_matrix);
        else if (c_compare->parsed()) cmd_compare(s, in, against);
        else if (c_member->parsed()) cmd_member(s, in, poly_text, radical);
        else if (c_intersect->parsed()) cmd_intersect(s, in, against);
        else if (c_primes->parsed()) cmd_minimal_primes(s, in);
    } catch (const BudgetError& e) {
        return emit_error(s, "budget", e.what(), 3);
    } catch (const ParseError& e) {
        return emit_error(s, "parse", e.what(), 1);
    } catch (const DomainError& e) {
        return emit_error(s, "domain", e.what(), 1);
    } catch (const std::exception& e) {
        return emit_error(s, "internal", e.what(), 1);
    }
    return emit(s, "ok");
}
