#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "yosp/module.hpp"
#include "yosp/verify.hpp"

namespace yosp {

using Json = nlohmann::ordered_json;

Json to_json(const UniPoly& p);
UniPoly poly_from_json(const Json& j);

Json to_json(const ModuleRep& m);
ModuleRep module_from_json(const Json& j);

/// Canonical text: two-space indentation and a trailing newline.
std::string dump(const Json& j);

void write_module(const ModuleRep& m, const std::filesystem::path& path);
ModuleRep read_module(const std::filesystem::path& path);

/// FNV-1a of the canonical module text, as 16 hex digits.
std::string module_digest(const ModuleRep& m);

Json to_json(const CheckReport& report, const ModuleRep& m);
Json to_json(const Vec& v);

}  // namespace yosp
