#pragma once

#include <functional>
#include <string>
#include <vector>

#include "json_io.hpp"

namespace contact_sextic::cli {

enum class ParamKind { Rational, Polynomial, Point };

struct ParamSpec {
    std::string name;
    ParamKind kind;
    json fallback;
    std::string doc;
};

enum class Check { Ode, Halphen };

struct FamilySpec {
    std::string name;
    std::string description;
    std::vector<ParamSpec> params;
    Check check = Check::Ode;
    std::function<CurveDoc(const json&)> build;  // takes normalised params
};

const std::vector<FamilySpec>& families();
// throws Error(Parse) for an unknown name
const FamilySpec& find_family(const std::string& name);

// defaults filled in, unknown keys and malformed values rejected
json normalise_params(const FamilySpec& f, const json& given);

json describe(const FamilySpec& f);

}  // namespace contact_sextic::cli
