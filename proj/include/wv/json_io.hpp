#ifndef WV_JSON_IO_HPP
#define WV_JSON_IO_HPP

// JSON views of the domain objects and parsing of the variety / config
// documents accepted on the command line.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "wv/catalog.hpp"
#include "wv/models.hpp"
#include "wv/multiply.hpp"
#include "wv/rootsys.hpp"
#include "wv/sections.hpp"
#include "wv/wonderful.hpp"

namespace wv {

using Json = nlohmann::json;

inline Json weight_to_json(const Weight& w) {
    Json a = Json::array();
    for (std::size_t k = 0; k < w.rank(); ++k) a.push_back(w[k]);
    return a;
}

inline Weight weight_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("weight must be an integer array");
    std::vector<std::int64_t> c;
    for (const auto& v : j) c.push_back(v.get<std::int64_t>());
    return Weight(std::move(c));
}

inline Json rootsystem_to_json(const RootSystem& rs) {
    return Json{{"type", std::string(1, static_cast<char>(rs.kind()))},
                {"rank", rs.rank()}};
}

inline RootSystem rootsystem_from_json(const Json& j) {
    const auto type = j.at("type").get<std::string>();
    if (type.size() != 1) throw std::invalid_argument("root-system type must be a single letter");
    return RootSystem(kind_from_char(type[0]), j.at("rank").get<std::size_t>());
}

/// Fiber / irreducible-entry descriptor: {"family":"9B","n":3}, {"family":"15"},
/// {"family":"P1xP1"} or {"family":"flag","group":{...},"pic":[[...],...]}.
inline CatalogEntry entry_from_json(const Json& j) {
    const Family family = family_from_string(j.at("family").get<std::string>());
    if (family == Family::flag) {
        std::vector<Weight> gens;
        for (const auto& g : j.at("pic")) gens.push_back(weight_from_json(g));
        return make_flag_entry(rootsystem_from_json(j.at("group")), std::move(gens));
    }
    const int n = j.contains("n") ? j.at("n").get<int>() : 0;
    return get_entry(family, n);
}

inline Json entry_to_json(const CatalogEntry& e) {
    Json j{{"family", to_string(e.family)}};
    if (e.family == Family::case_9b || e.family == Family::case_9c) j["n"] = e.n;
    if (e.family == Family::flag) {
        j["group"] = rootsystem_to_json(e.group);
        Json pic = Json::array();
        for (const auto& g : e.pic_generators) pic.push_back(weight_to_json(g));
        j["pic"] = pic;
    }
    return j;
}

/// Variety descriptor: an entry descriptor for the irreducible case, or
/// {"induction":{"ambient":{...},"levi":[...],"fiber":{...},"map":{"1":2,...}}}.
inline WonderfulVariety variety_from_json(const Json& j) {
    if (!j.contains("induction")) return make_irreducible(entry_from_json(j));
    const Json& ind = j.at("induction");
    RootSystem ambient = rootsystem_from_json(ind.at("ambient"));
    std::vector<std::size_t> levi;
    for (const auto& v : ind.at("levi")) levi.push_back(v.get<std::size_t>());
    CatalogEntry fiber = entry_from_json(ind.at("fiber"));
    std::vector<std::size_t> corr(fiber.group.rank(), 0);
    for (const auto& [key, val] : ind.at("map").items()) {
        const std::size_t from = std::stoul(key);
        if (from < 1 || from > corr.size())
            throw std::invalid_argument("correspondence key " + key + " out of range");
        corr[from - 1] = val.get<std::size_t>();
    }
    return make_induced(std::move(ambient), std::move(levi), std::move(fiber), std::move(corr));
}

inline Json variety_to_json(const WonderfulVariety& x) {
    if (x.irreducible()) return entry_to_json(x.fiber());
    Json map = Json::object();
    for (std::size_t k = 0; k < x.correspondence().size(); ++k)
        map[std::to_string(k + 1)] = x.correspondence()[k];
    return Json{{"induction", Json{{"ambient", rootsystem_to_json(x.ambient())},
                                   {"levi", x.levi_nodes()},
                                   {"fiber", entry_to_json(x.fiber())},
                                   {"map", map}}}};
}

/// {"lambda":[...], "summands":[{"m":0,"head":[...],"dim":"27"},...],
///  "total_dim":"35"} -- dimensions as decimal strings, arbitrary precision.
inline Json decomposition_to_json(const SectionDecomposition& d) {
    Json summands = Json::array();
    for (const auto& s : d.summands)
        summands.push_back(Json{{"m", s.m},
                                {"head", weight_to_json(s.head)},
                                {"dim", s.dim.str()}});
    return Json{{"lambda", weight_to_json(d.lambda)},
                {"summands", summands},
                {"total_dim", d.total_dim.str()}};
}

inline Json certificate_to_json(const SurjectivityCertificate& c) {
    Json j{{"lambda", weight_to_json(c.lambda)},
           {"mu", weight_to_json(c.mu)},
           {"verdict", to_string(c.verdict)}};
    if (c.has_bounds) {
        j["bounds"] = Json::array({c.bound_lambda, c.bound_mu, c.bound_sum});
        Json w = Json::array();
        for (const auto& t : c.witnesses) w.push_back(Json::array({t.m, t.m1, t.m2}));
        j["witnesses"] = w;
    }
    if (c.verdict == Verdict::failed) j["failed_m"] = c.failed_m;
    return j;
}

inline Json oracle_to_json(const GradedModel& model, Degree d, Degree dp, const OracleResult& r) {
    Json da = Json::array({d.a}), db = Json::array({dp.a});
    if (model.bigraded()) {
        da.push_back(d.b);
        db.push_back(dp.b);
    }
    return Json{{"model", model.name()},
                {"d", da},
                {"dprime", db},
                {"rows", r.rows},
                {"cols", r.cols},
                {"rank", r.rank},
                {"surjective", r.surjective}};
}

} // namespace wv

#endif
