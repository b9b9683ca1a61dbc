#include "higgsgrass/json_io.hpp"

#include "higgsgrass/errors.hpp"
#include "higgsgrass/parse.hpp"

#include <json.hpp>

namespace higgsgrass {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw DomainError("malformed JSON input");
    return j;
}

VarSetPtr vars_from(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw DomainError(std::string("missing or non-array \"") + key + "\"");
    std::vector<std::string> names;
    for (const auto& v : j[key]) {
        if (!v.is_string()) throw DomainError("variable names must be strings");
        names.push_back(v.get<std::string>());
    }
    return VarSet::make(std::move(names));
}

HiggsField higgs_from(const json& j) {
    VarSetPtr base = vars_from(j, "base_vars");
    if (!j.contains("matrices") || !j["matrices"].is_array())
        throw DomainError("missing \"matrices\"");
    std::vector<PolyMat> mats;
    for (const auto& jm : j["matrices"]) {
        PolyMat m;
        for (const auto& jrow : jm) {
            std::vector<Poly> row;
            for (const auto& je : jrow) {
                if (!je.is_string()) throw DomainError("matrix entries must be poly strings");
                row.push_back(parse_poly(je.get<std::string>(), base));
            }
            m.push_back(std::move(row));
        }
        mats.push_back(std::move(m));
    }
    if (j.contains("base_dim") &&
        j["base_dim"].get<std::size_t>() != mats.size())
        throw DomainError("\"base_dim\" does not match the number of matrices");
    HiggsField H = validate_higgs(std::move(mats), base);
    if (j.contains("rank") && j["rank"].get<int>() != H.r)
        throw DomainError("\"rank\" does not match the matrix size");
    return H;
}

JordanSpec spec_from(const json& j) {
    VarSetPtr base =
        j.contains("base_vars") ? vars_from(j, "base_vars") : VarSet::make({"x"});
    if (!j.contains("blocks") || !j["blocks"].is_array())
        throw DomainError("missing \"blocks\"");
    std::vector<JordanBlockSpec> blocks;
    for (const auto& jb : j["blocks"]) {
        JordanBlockSpec b;
        if (!jb.contains("lambda") || !jb["lambda"].is_string())
            throw DomainError("block needs a \"lambda\" poly string");
        b.lambda = parse_poly(jb["lambda"].get<std::string>(), base);
        b.size = jb.value("size", 1);
        b.mult = jb.value("mult", 1);
        blocks.push_back(std::move(b));
    }
    return make_jordan_spec(base, std::move(blocks));
}

} // namespace

MonomialOrder order_from_name(const std::string& name) {
    if (name == "grevlex") return MonomialOrder::grevlex();
    if (name == "lex") return MonomialOrder::lex();
    const std::string prefix = "elimination_block:";
    if (name.rfind(prefix, 0) == 0)
        return MonomialOrder::elimination_block(std::stoul(name.substr(prefix.size())));
    throw DomainError("unknown monomial order '" + name + "'");
}

ProblemFile problem_from_json(const std::string& text) {
    json j = parse_json(text);
    ProblemFile out;
    if (j.contains("higgs")) out.higgs = higgs_from(j["higgs"]);
    if (j.contains("spec")) out.spec = spec_from(j["spec"]);
    if (!out.higgs && !out.spec)
        throw DomainError("problem file needs a \"higgs\" or \"spec\" object");
    if (out.higgs && out.spec)
        throw DomainError("problem file must carry exactly one of \"higgs\" and \"spec\"");
    if (j.contains("order")) out.order = order_from_name(j["order"].get<std::string>());
    if (j.contains("seed")) out.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("spair_budget")) out.spair_budget = j["spair_budget"].get<std::uint64_t>();
    return out;
}

Ideal ideal_from_json(const std::string& text) {
    json j = parse_json(text);
    VarSetPtr vars = vars_from(j, "vars");
    if (!j.contains("generators") || !j["generators"].is_array())
        throw DomainError("missing \"generators\"");
    std::vector<Poly> gens;
    for (const auto& g : j["generators"]) {
        if (!g.is_string()) throw DomainError("generators must be poly strings");
        gens.push_back(parse_poly(g.get<std::string>(), vars));
    }
    MonomialOrder order = MonomialOrder::grevlex();
    if (j.contains("order")) order = order_from_name(j["order"].get<std::string>());
    return Ideal(vars, std::move(gens), order);
}

} // namespace higgsgrass
