#pragma once

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "cospans/bar.hpp"
#include "cospans/envbm.hpp"
#include "cospans/frobenius.hpp"

namespace cospans {

using json = nlohmann::json;

// Self-describing records: a single top-level key names the kind
// ("set", "fn", "cospan", "cell", "square", "algebra", "envbm_obj",
// "envbm_mor"). Keys serialize in sorted order, so byte-identical output for
// equal values.

json to_json(const FinSet& s);
json to_json(const FinFn& f);
json to_json(const Cospan& c);
json to_json(const TwoCell& c);
json to_json(const CommutingSquare& sq);
json to_json(const AlgebraDatum& d);
json to_json(const EnvBMObject& o);
json to_json(const EnvBMMorphism& m);

FinSet set_from_json(const json& j);
FinFn fn_from_json(const json& j);
Cospan cospan_from_json(const json& j);
TwoCell cell_from_json(const json& j);
CommutingSquare square_from_json(const json& j);
AlgebraDatum algebra_from_json(const json& j);
EnvBMObject envbm_obj_from_json(const json& j);
EnvBMMorphism envbm_mor_from_json(const json& j);

using WorkspaceValue = std::variant<FinSet, FinFn, Cospan, TwoCell, CommutingSquare,
                                    AlgebraDatum, EnvBMObject, EnvBMMorphism>;

/// Named bindings loaded from one or more input files; names must be unique.
struct Workspace {
  std::map<std::string, WorkspaceValue> bindings;

  const WorkspaceValue& get(const std::string& name) const;
  template <typename T>
  const T& get_as(const std::string& name, const char* kind) const {
    const WorkspaceValue& v = get(name);
    const T* p = std::get_if<T>(&v);
    if (!p) throw TypeMismatch("binding \"" + name + "\" is not a " + kind);
    return *p;
  }
};

/// Parses a self-describing value; throws ParseError naming the bad key.
WorkspaceValue value_from_json(const json& j);
json value_to_json(const WorkspaceValue& v);

/// Parses {"name": value, ...} objects from each file content, merging.
/// ParseErrors carry the source name (a path or ordinal) and, for malformed
/// JSON, the byte position.
Workspace parse_workspace(const std::vector<std::string>& file_contents);
Workspace parse_workspace(
    const std::vector<std::pair<std::string, std::string>>& named_contents);

}  // namespace cospans
