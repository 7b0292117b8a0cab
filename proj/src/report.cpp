#include "visang/report.hpp"

#include <json.hpp>

#include <cstdio>

namespace visang {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

nlohmann::ordered_json report_to_json(const IdentityReport& rep, bool include_timing) {
    nlohmann::ordered_json j;
    j["identity"] = rep.identity;
    j["route"] = rep.route;
    j["body"] = rep.body_desc;
    j["params"] = {{"k", rep.k}, {"m", rep.m}};
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["abs_err"] = rep.abs_err;
    j["rel_err"] = rep.rel_err;
    nlohmann::ordered_json terms;
    for (const auto& [name, value] : rep.terms)
        terms[name] = value;
    j["terms"] = std::move(terms);
    nlohmann::ordered_json quad;
    for (const auto& [name, value] : rep.quadrature)
        quad[name] = value;
    j["quadrature"] = std::move(quad);
    j["wall_time_s"] = include_timing ? rep.wall_time_s : 0.0;
    return j;
}

} // namespace

std::string reports_to_json(const std::vector<IdentityReport>& reports, bool include_timing) {
    nlohmann::ordered_json doc;
    doc["schema"] = "visang-report-v1";
    doc["reports"] = nlohmann::ordered_json::array();
    for (const IdentityReport& rep : reports)
        doc["reports"].push_back(report_to_json(rep, include_timing));
    return doc.dump(2) + "\n";
}

namespace {

// RFC 4180 quoting; body descriptors like "shifted_disk:1,0.3" carry commas.
std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string reports_to_csv(const std::vector<IdentityReport>& reports, bool include_timing) {
    std::string out = "identity,route,body,k,m,lhs,rhs,abs_err,rel_err,wall_time_s\n";
    for (const IdentityReport& rep : reports) {
        out += csv_field(rep.identity) + ',' + csv_field(rep.route) + ',' +
               csv_field(rep.body_desc) + ',';
        out += std::to_string(rep.k) + ',' + std::to_string(rep.m) + ',';
        out += fmt17(rep.lhs) + ',' + fmt17(rep.rhs) + ',';
        out += fmt17(rep.abs_err) + ',' + fmt17(rep.rel_err) + ',';
        out += fmt17(include_timing ? rep.wall_time_s : 0.0);
        out += '\n';
    }
    return out;
}

} // namespace visang
