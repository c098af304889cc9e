#include "cospans/json_io.hpp"

namespace cospans {

namespace {

const json& expect_record(const json& j, const char* kind) {
  if (!j.is_object() || j.size() != 1 || !j.contains(kind)) {
    throw ParseError(std::string("expected a {\"") + kind + "\": ...} record");
  }
  return j.at(kind);
}

json cell_body(const TwoCell& c) {
  return json{{"from", to_json(c.from)}, {"to", to_json(c.to)},
              {"map", c.map.as_label_map()}};
}

}  // namespace

json to_json(const FinSet& s) {
  return json{{"set", {{"elements", s.elements()}}}};
}

json to_json(const FinFn& f) {
  return json{{"fn",
               {{"dom", to_json(f.dom())},
                {"cod", to_json(f.cod())},
                {"map", f.as_label_map()}}}};
}

json to_json(const Cospan& c) {
  return json{{"cospan",
               {{"src", to_json(c.src)},
                {"tgt", to_json(c.tgt)},
                {"apex", to_json(c.apex)},
                {"left", to_json(c.left)},
                {"right", to_json(c.right)}}}};
}

json to_json(const TwoCell& c) { return json{{"cell", cell_body(c)}}; }

json to_json(const CommutingSquare& sq) {
  return json{{"square",
               {{"f", to_json(sq.f)},
                {"g", to_json(sq.g)},
                {"gp", to_json(sq.gp)},
                {"fp", to_json(sq.fp)}}}};
}

json to_json(const AlgebraDatum& d) {
  json witnesses = json::object();
  auto put = [&witnesses](const char* key, const std::optional<TwoCell>& w) {
    witnesses[key] = w ? json{{"cell", cell_body(*w)}} : json(nullptr);
  };
  put("left_unitality", d.witnesses.left_unitality);
  put("right_unitality", d.witnesses.right_unitality);
  put("associativity", d.witnesses.associativity);
  put("commutativity", d.witnesses.commutativity);
  return json{{"algebra",
               {{"carrier", to_json(d.carrier)},
                {"unit", to_json(d.unit)},
                {"mult", to_json(d.mult)},
                {"witnesses", witnesses}}}};
}

json to_json(const EnvBMObject& o) {
  return json{{"envbm_obj",
               {{"L", o.left.elements()},
                {"M", o.middle.elements()},
                {"R", o.right.elements()}}}};
}

json to_json(const EnvBMMorphism& m) {
  json orders = json::object();
  for (const auto& [y, order] : m.fiber_orders) orders[y] = order;
  return json{{"envbm_mor",
               {{"src", to_json(m.src)},
                {"tgt", to_json(m.tgt)},
                {"map", m.fn.as_label_map()},
                {"orders", orders}}}};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> string_list(const json& j, const char* where) {
  if (!j.is_array()) throw ParseError(std::string(where) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string(where) + " must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> string_map(const json& j, const char* where) {
  if (!j.is_object()) throw ParseError(std::string(where) + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw ParseError(std::string(where) + " values must be strings");
    out[k] = v.get<std::string>();
  }
  return out;
}

template <typename F>
auto wrap_parse(const char* what, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad ") + what + ": " + e.what());
  }
}

}  // namespace

FinSet set_from_json(const json& j) {
  const json& body = expect_record(j, "set");
  return wrap_parse("set", [&] {
    return FinSet::make(string_list(body.at("elements"), "set.elements"));
  });
}

FinFn fn_from_json(const json& j) {
  const json& body = expect_record(j, "fn");
  return wrap_parse("fn", [&] {
    return FinFn::make(set_from_json(body.at("dom")), set_from_json(body.at("cod")),
                       string_map(body.at("map"), "fn.map"));
  });
}

Cospan cospan_from_json(const json& j) {
  const json& body = expect_record(j, "cospan");
  return wrap_parse("cospan", [&] {
    FinSet src = set_from_json(body.at("src"));
    FinSet tgt = set_from_json(body.at("tgt"));
    FinSet apex = set_from_json(body.at("apex"));
    FinFn left = fn_from_json(body.at("left"));
    FinFn right = fn_from_json(body.at("right"));
    return Cospan::make(std::move(src), std::move(tgt), std::move(apex),
                        std::move(left), std::move(right));
  });
}

TwoCell cell_from_json(const json& j) {
  const json& body = expect_record(j, "cell");
  return wrap_parse("cell", [&] {
    Cospan from = cospan_from_json(body.at("from"));
    Cospan to = cospan_from_json(body.at("to"));
    FinFn map = FinFn::make(from.apex, to.apex, string_map(body.at("map"), "cell.map"));
    return TwoCell::make(std::move(from), std::move(to), std::move(map));
  });
}

CommutingSquare square_from_json(const json& j) {
  const json& body = expect_record(j, "square");
  return wrap_parse("square", [&] {
    return CommutingSquare::make(fn_from_json(body.at("f")), fn_from_json(body.at("g")),
                                 fn_from_json(body.at("gp")), fn_from_json(body.at("fp")));
  });
}

AlgebraDatum algebra_from_json(const json& j) {
  const json& body = expect_record(j, "algebra");
  return wrap_parse("algebra", [&] {
    // Witness cells are reconstructed by search; make_algebra yields the same
    // cells deterministically, so round-trips are exact.
    return make_algebra(set_from_json(body.at("carrier")),
                        cospan_from_json(body.at("unit")),
                        cospan_from_json(body.at("mult")));
  });
}

EnvBMObject envbm_obj_from_json(const json& j) {
  const json& body = expect_record(j, "envbm_obj");
  return wrap_parse("envbm_obj", [&] {
    return EnvBMObject::make(FinSet::make(string_list(body.at("L"), "envbm_obj.L")),
                             FinSet::make(string_list(body.at("M"), "envbm_obj.M")),
                             FinSet::make(string_list(body.at("R"), "envbm_obj.R")));
  });
}

EnvBMMorphism envbm_mor_from_json(const json& j) {
  const json& body = expect_record(j, "envbm_mor");
  return wrap_parse("envbm_mor", [&] {
    EnvBMObject src = envbm_obj_from_json(body.at("src"));
    EnvBMObject tgt = envbm_obj_from_json(body.at("tgt"));
    FinFn fn = FinFn::make(src.underlying(), tgt.underlying(),
                           string_map(body.at("map"), "envbm_mor.map"));
    const json& orders_j = body.at("orders");
    if (!orders_j.is_object()) throw ParseError("envbm_mor.orders must be an object");
    std::map<std::string, std::vector<std::string>> orders;
    for (const auto& [y, order] : orders_j.items()) {
      orders[y] = string_list(order, ("envbm_mor.orders." + y).c_str());
    }
    return EnvBMMorphism::make(std::move(src), std::move(tgt), std::move(fn),
                               std::move(orders));
  });
}

// ---------------------------------------------------------------------------

WorkspaceValue value_from_json(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw ParseError("value must be an object with one kind key");
  }
  const std::string kind = j.begin().key();
  if (kind == "set") return set_from_json(j);
  if (kind == "fn") return fn_from_json(j);
  if (kind == "cospan") return cospan_from_json(j);
  if (kind == "cell") return cell_from_json(j);
  if (kind == "square") return square_from_json(j);
  if (kind == "algebra") return algebra_from_json(j);
  if (kind == "envbm_obj") return envbm_obj_from_json(j);
  if (kind == "envbm_mor") return envbm_mor_from_json(j);
  throw ParseError("unknown kind \"" + kind + "\"");
}

json value_to_json(const WorkspaceValue& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

const WorkspaceValue& Workspace::get(const std::string& name) const {
  auto it = bindings.find(name);
  if (it == bindings.end()) throw UnknownName("no binding named \"" + name + "\"");
  return it->second;
}

Workspace parse_workspace(
    const std::vector<std::pair<std::string, std::string>>& named_contents) {
  Workspace ws;
  for (const auto& [where, content] : named_contents) {
    try {
      json j = json::parse(content);
      if (!j.is_object()) throw ParseError("workspace file must be a JSON object");
      for (const auto& [name, value] : j.items()) {
        if (ws.bindings.count(name)) {
          throw ParseError("binding \"" + name + "\" defined twice");
        }
        try {
          ws.bindings.emplace(name, value_from_json(value));
        } catch (const ParseError& e) {
          throw ParseError("binding \"" + name + "\": " + e.what());
        }
      }
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what());
    } catch (const json::exception& e) {
      throw ParseError(where + ": " + e.what());
    }
  }
  return ws;
}

Workspace parse_workspace(const std::vector<std::string>& file_contents) {
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(file_contents.size());
  for (std::size_t i = 0; i < file_contents.size(); ++i) {
    named.emplace_back("input " + std::to_string(i + 1), file_contents[i]);
  }
  return parse_workspace(named);
}

}  // namespace cospans
