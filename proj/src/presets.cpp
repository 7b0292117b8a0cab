#include "visang/presets.hpp"

#include "visang/errors.hpp"
#include "visang/report.hpp"

#include <json.hpp>

#include <sstream>

namespace visang {

namespace {

std::vector<double> parse_numbers(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw BadParamError("bad numeric parameter '" + item + "'");
        }
    }
    return out;
}

} // namespace

NamedBody body_from_preset(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    std::vector<double> args;
    if (colon != std::string::npos)
        args = parse_numbers(spec.substr(colon + 1));

    if (name == "disk") {
        if (args.size() != 1)
            throw BadParamError("disk preset needs one radius: disk:r");
        return {spec, make_disk(args[0])};
    }
    if (name == "shifted_disk") {
        if (args.size() != 2 && args.size() != 3)
            throw BadParamError("shifted_disk preset needs r,dx[,dy]");
        const double dy = args.size() == 3 ? args[2] : 0.0;
        return {spec, make_body(args[0], {args[1]}, {dy})};
    }
    if (name == "ellipse") {
        if (args.size() != 2)
            throw BadParamError("ellipse preset needs a,b");
        return {spec, make_ellipse(args[0], args[1])};
    }
    if (name == "const_width") {
        if (args.size() < 2)
            throw BadParamError("const_width preset needs a0,c3[,c5,...]");
        // coefficients attach to the odd cosine harmonics 3, 5, 7, ...
        std::vector<double> ca(2 * args.size() - 1, 0.0);
        for (std::size_t i = 1; i < args.size(); ++i)
            ca[2 * i] = args[i];
        return {spec, make_const_width(args[0], std::move(ca), {})};
    }
    if (name == "generic") {
        if (!args.empty())
            throw BadParamError("generic preset takes no parameters");
        return {spec, make_body(1.0, {0.0, 0.15, 0.0, 0.02}, {0.0, 0.0, 0.05, 0.0})};
    }
    throw BadParamError("unknown preset '" + name + "'");
}

std::vector<NamedBody> standard_suite() {
    std::vector<NamedBody> suite;
    suite.push_back(body_from_preset("disk:1"));
    suite.push_back(body_from_preset("shifted_disk:1,0.3"));
    suite.push_back(body_from_preset("ellipse:2,1"));
    suite.push_back(body_from_preset("const_width:1,0.1"));
    suite.push_back(body_from_preset("generic"));
    return suite;
}

SupportBody body_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw BadParamError(std::string("body JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("a0"))
        throw BadParamError("body JSON must be an object with an \"a0\" field");
    std::vector<double> ca, cb;
    if (j.contains("a"))
        ca = j["a"].get<std::vector<double>>();
    if (j.contains("b"))
        cb = j["b"].get<std::vector<double>>();
    ca.resize(std::max(ca.size(), cb.size()), 0.0);
    cb.resize(ca.size(), 0.0);
    return make_body(j["a0"].get<double>(), std::move(ca), std::move(cb));
}

std::string body_to_json(const SupportBody& body) {
    nlohmann::ordered_json j;
    j["a0"] = body.a0();
    auto a = nlohmann::ordered_json::array();
    auto b = nlohmann::ordered_json::array();
    for (std::size_t k = 1; k <= body.degree(); ++k) {
        a.push_back(body.cos_coeff(k));
        b.push_back(body.sin_coeff(k));
    }
    j["a"] = std::move(a);
    j["b"] = std::move(b);
    return j.dump(2) + "\n";
}

} // namespace visang
