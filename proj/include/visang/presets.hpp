#pragma once

#include "visang/geometry.hpp"

#include <string>
#include <utility>
#include <vector>

namespace visang {

/// A named body.
struct NamedBody {
    std::string desc;
    SupportBody body;
};

/// Builds a body from a preset string:
///   disk:r | shifted_disk:r,dx[,dy] | ellipse:a,b | const_width:a0,c3[,c5,...]
///   | generic
/// Throws BadParamError on malformed specs (CLI maps it to a usage error).
NamedBody body_from_preset(const std::string& spec);

/// The standard five-body verification suite: unit disk, shifted disk,
/// 2:1 ellipse, constant-width body, and a generic mixed-harmonic body.
std::vector<NamedBody> standard_suite();

/// Body JSON: {"a0": num, "a": [...], "b": [...]}.
SupportBody body_from_json(const std::string& text);
std::string body_to_json(const SupportBody& body);

} // namespace visang
