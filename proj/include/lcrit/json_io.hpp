#pragma once

#include <json.hpp>

#include "lcrit/archimedean.hpp"
#include "lcrit/cohomology.hpp"
#include "lcrit/motivic.hpp"
#include "lcrit/periods.hpp"
#include "lcrit/signs.hpp"

namespace lcrit::io {

using json = nlohmann::json;

// All readers throw InputError on malformed input.

json to_json(const FieldSignature& sig);
FieldSignature field_from_json(const json& j);

json to_json(const Weight& mu);
Weight weight_from_json(const json& j, const FieldSignature& sig);

json to_json(const PurityReport& r);

json to_json(const CriticalSet& s);
CriticalSet critical_set_from_json(const json& j);

json to_json(HalfInt h);  // "<twice>/2"
HalfInt halfint_from_json(const json& j);

json to_json(const ArchParameter& p);
ArchParameter parameter_from_json(const json& j);

json to_json(const DegreeReport& r);
DegreeReport degrees_from_json(const json& j);

json to_json(const SymSign& s);
SymSign sign_from_json(const json& j);
json to_json(const Atom& a);
Atom atom_from_json(const json& j);
json to_json(const PeriodExpr& e);
PeriodExpr period_expr_from_json(const json& j);
json to_json(const TraceStep& t);

json to_json(const HodgeData& h);
HodgeData hodge_from_json(const json& j, const FieldSignature& sig);
json to_json(const std::optional<CritType>& t);
std::optional<CritType> crit_type_from_json(const json& j);

HeckeCharData hecke_from_json(const json& j, const FieldSignature& sig);

}  // namespace lcrit::io
