#include "cocycle/io.hpp"

#include <filesystem>
#include <fstream>

#include "cocycle/error.hpp"

namespace cocycle::io {

Json group_to_json(const Group& g) {
    Json j;
    j["names"] = g.names();
    j["table"] = g.table();
    return j;
}

GroupPtr group_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("table")) {
        throw BadFormat("group file needs an object with a \"table\" field");
    }
    try {
        auto table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
        std::vector<std::string> names;
        if (j.contains("names")) {
            names = j.at("names").get<std::vector<std::string>>();
        } else {
            for (std::size_t i = 0; i < table.size(); ++i) names.push_back(std::to_string(i));
        }
        return Group::from_cayley_table(std::move(names), std::move(table));
    } catch (const nlohmann::json::exception& e) {
        throw BadFormat(std::string("group file: ") + e.what());
    }
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Json values_to_json(const std::vector<Complex>& v) {
    Json a = Json::array();
    for (const auto& z : v) a.push_back(complex_to_json(z));
    return a;
}

Json function_to_json(const GroupFunction& f) {
    Json j;
    j["values"] = values_to_json(f.values);
    return j;
}

namespace {

Complex complex_from_json(const Json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
        return {v[0].get<double>(), v[1].get<double>()};
    }
    throw BadFormat("expected a number or [re, im] pair, got " + v.dump());
}

}  // namespace

GroupFunction function_from_json(const Json& j, const GroupPtr& g) {
    const Json* values = &j;
    if (j.is_object()) {
        if (!j.contains("values")) throw BadFormat("function file needs a \"values\" field");
        values = &j.at("values");
    }
    if (!values->is_array()) throw BadFormat("function values must be an array");
    std::vector<Complex> v;
    for (const auto& item : *values) v.push_back(complex_from_json(item));
    if (v.size() != g->order()) {
        throw BadFormat("function has " + std::to_string(v.size()) + " values, group order is " +
                        std::to_string(g->order()));
    }
    return {g, std::move(v)};
}

Json matrix_to_json(const CMatrix& m) {
    Json a = Json::array();
    for (const auto& z : m.data()) a.push_back(complex_to_json(z));
    return a;
}

Json irreps_to_json(const IrrepBasis& basis) {
    Json out = Json::array();
    for (const auto& rep : basis.irreps) {
        Json r;
        r["dim"] = rep.dim();
        Json mats = Json::array();
        for (const auto& m : rep.matrices()) mats.push_back(matrix_to_json(m));
        r["matrices"] = std::move(mats);
        out.push_back(std::move(r));
    }
    return out;
}

IrrepBasis irreps_from_json(const Json& j, const GroupPtr& g) {
    if (!j.is_array()) throw BadFormat("irrep export must be an array");
    IrrepBasis basis{g, {}};
    for (const auto& r : j) {
        const std::size_t d = r.at("dim").get<std::size_t>();
        std::vector<CMatrix> mats;
        for (const auto& m : r.at("matrices")) {
            if (m.size() != d * d) throw BadFormat("matrix entry count does not match dim");
            std::vector<Complex> data;
            for (const auto& z : m) data.push_back(complex_from_json(z));
            mats.emplace_back(d, d, std::move(data));
        }
        basis.irreps.push_back(UnitaryRep::make(g, std::move(mats)));
    }
    return basis;
}

Json residual_to_json(const ResidualReport& r) {
    Json j;
    j["max_residual"] = r.max_residual;
    j["argmax"] = Json::array({r.argmax.first, r.argmax.second});
    j["satisfied"] = r.satisfied;
    if (r.projected_to_real) j["projected_to_real"] = true;
    return j;
}

Json lemma_to_json(const LemmaReport& r) {
    Json j;
    Json w = Json::array();
    for (const auto& v : r.witnesses) w.push_back(values_to_json(v));
    j["witnesses"] = std::move(w);
    j["hypothesis_holds"] = r.hypothesis_holds;
    j["conclusion"] = to_string(r.conclusion);
    return j;
}

Json read_json_file(const std::string& path) {
    if (!std::filesystem::is_regular_file(path)) throw FileNotFound(path);
    std::ifstream in(path);
    if (!in) throw FileNotFound(path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw BadFormat(path + ": " + e.what());
    }
}

GroupPtr load_group(const std::string& source) {
    constexpr std::string_view prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) return builtin::by_name(source.substr(prefix.size()));
    return group_from_json(read_json_file(source));
}

}  // namespace cocycle::io
