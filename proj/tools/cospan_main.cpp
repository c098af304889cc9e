#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cospans/json_io.hpp"
#include "cospans/selftest.hpp"

namespace {

using cospans::json;

struct ReportBody {
  bool pass = true;
  json witnesses = json::object();
  std::vector<std::string> diagnostics;
};

struct CommonOpts {
  std::vector<std::string> files;
  std::string out_path;
  std::string format = "json";
  bool timings = false;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cospans::ParseError("cannot read input file \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

cospans::Workspace load_workspace(const CommonOpts& opts) {
  std::vector<std::pair<std::string, std::string>> contents;
  contents.reserve(opts.files.size());
  for (const auto& f : opts.files) contents.emplace_back(f, slurp(f));
  return cospans::parse_workspace(contents);
}

json cell_json(const cospans::TwoCell& c) { return cospans::to_json(c); }

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("files", opts.files, "workspace JSON files");
  cmd->add_option("--out", opts.out_path, "write the report to a file");
  cmd->add_option("--format", opts.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_flag("--timings", opts.timings, "include wall-clock timing in the report");
}

int emit(const std::string& command, const json& inputs, const ReportBody& body,
         const CommonOpts& opts, long long elapsed_ms) {
  json report{{"command", command},
              {"inputs", inputs},
              {"verdict", body.pass ? "pass" : "fail"},
              {"witnesses", body.witnesses},
              {"diagnostics", body.diagnostics}};
  if (opts.timings) report["timing"] = {{"milliseconds", elapsed_ms}};

  std::string text;
  if (opts.format == "json") {
    text = report.dump(2) + "\n";
  } else {
    std::ostringstream ss;
    ss << command << ": " << (body.pass ? "pass" : "fail") << "\n";
    for (const auto& d : body.diagnostics) ss << "  " << d << "\n";
    text = ss.str();
  }
  if (!opts.out_path.empty()) {
    std::ofstream out(opts.out_path, std::ios::binary);
    out << text;
  } else {
    std::cout << text;
  }
  return body.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic engine for the 2-category of cospans of finite sets"};
  app.require_subcommand(1);

  std::string command;
  json inputs = json::object();
  CommonOpts opts;
  std::function<ReportBody()> runner;

  auto make_cmd = [&](const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    add_common(cmd, opts);
    cmd->callback([&command, name] { command = name; });
    return cmd;
  };

  // --- cospan calculus -----------------------------------------------------
  {
    static std::string left, right;
    CLI::App* cmd = make_cmd("compose", "horizontal composite of two bound cospans");
    cmd->add_option("--left", left, "earlier cospan (A -/-> B)")->required();
    cmd->add_option("--right", right, "later cospan (B -/-> C)")->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"left", left}, {"right", right}};
        const auto& c1 = ws.get_as<cospans::Cospan>(left, "cospan");
        const auto& c2 = ws.get_as<cospans::Cospan>(right, "cospan");
        ReportBody body;
        body.witnesses["result"] = cospans::to_json(cospans::hcompose(c2, c1));
        return body;
      };
    });
  }
  {
    static std::string left, right;
    CLI::App* cmd = make_cmd("tensor", "monoidal product of two bound cospans");
    cmd->add_option("--left", left)->required();
    cmd->add_option("--right", right)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"left", left}, {"right", right}};
        ReportBody body;
        body.witnesses["result"] = cospans::to_json(
            cospans::tensor(ws.get_as<cospans::Cospan>(left, "cospan"),
                            ws.get_as<cospans::Cospan>(right, "cospan")));
        return body;
      };
    });
  }
  {
    static std::string name;
    CLI::App* cmd = make_cmd("mirror", "mirror image of a bound cospan");
    cmd->add_option("--cospan", name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"cospan", name}};
        ReportBody body;
        body.witnesses["result"] =
            cospans::to_json(cospans::mirror(ws.get_as<cospans::Cospan>(name, "cospan")));
        return body;
      };
    });
  }

  // --- adjunctions -----------------------------------------------------------
  {
    static std::string name;
    CLI::App* cmd = make_cmd("check-left-adjoint", "decide left adjointness");
    cmd->add_option("--cospan", name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"cospan", name}};
        ReportBody body;
        body.pass = cospans::is_left_adjoint(ws.get_as<cospans::Cospan>(name, "cospan"));
        if (!body.pass) body.diagnostics.push_back("wrong-way leg is not a bijection");
        return body;
      };
    });
  }
  {
    static std::string name;
    CLI::App* cmd = make_cmd("derive-adjoint", "construct the canonical right adjoint");
    cmd->add_option("--cospan", name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"cospan", name}};
        ReportBody body;
        try {
          auto w = cospans::construct_right_adjoint(
              ws.get_as<cospans::Cospan>(name, "cospan"));
          body.witnesses["right"] = cospans::to_json(w.right);
          body.witnesses["unit"] = cell_json(w.unit);
          body.witnesses["counit"] = cell_json(w.counit);
          auto report = cospans::verify_adjunction(w);
          body.pass = report.ok;
          if (!report.ok) body.diagnostics.push_back(report.detail);
        } catch (const cospans::NotLeftAdjoint& e) {
          body.pass = false;
          body.diagnostics.push_back(e.what());
        }
        return body;
      };
    });
  }
  {
    static std::string name;
    static std::size_t bound = 0;
    static bool bound_set = false;
    CLI::App* cmd = make_cmd("search-adjoint", "bounded brute-force adjoint search");
    cmd->add_option("--cospan", name)->required();
    bound_set = false;
    cmd->add_option("--apex-bound", bound, "candidate apex size bound")
        ->each([&](const std::string&) { bound_set = true; });
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        const auto& c = ws.get_as<cospans::Cospan>(name, "cospan");
        std::size_t b = bound_set ? bound : cospans::default_apex_bound(c);
        inputs = {{"cospan", name}, {"apex_bound", b}};
        ReportBody body;
        auto w = cospans::search_adjoint(c, b);
        body.pass = w.has_value();
        if (w) {
          body.witnesses["right"] = cospans::to_json(w->right);
          body.witnesses["unit"] = cell_json(w->unit);
          body.witnesses["counit"] = cell_json(w->counit);
        } else {
          body.diagnostics.push_back("no witness within apex bound " + std::to_string(b));
        }
        return body;
      };
    });
  }
  {
    static std::string name;
    CLI::App* cmd = make_cmd("bc-check", "Beck-Chevalley cell of a commuting square");
    cmd->add_option("--square", name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"square", name}};
        const auto& sq = ws.get_as<cospans::CommutingSquare>(name, "square");
        ReportBody body;
        auto cell = cospans::beck_chevalley_cell(sq);
        body.witnesses["cell"] = cell_json(cell);
        body.pass = cospans::is_invertible_cell(cell);
        if (!body.pass) {
          body.diagnostics.push_back(
              "Beck-Chevalley cell is not invertible: the square is not a pushout");
        }
        return body;
      };
    });
  }

  // --- algebras ---------------------------------------------------------------
  {
    static std::string name;
    CLI::App* cmd = make_cmd("check-frobenius",
                             "Frobenius structure of the canonical algebra");
    cmd->add_option("--object", name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"object", name}};
        auto algebra =
            cospans::canonical_algebra(ws.get_as<cospans::FinSet>(name, "set"));
        auto report = cospans::verify_frobenius(algebra);
        ReportBody body;
        body.pass = report.ok;
        if (report.ok) {
          body.witnesses["counit"] = cospans::to_json(report.datum->counit);
          body.witnesses["comult"] = cospans::to_json(report.datum->comult);
          body.witnesses["left_counitality"] = cell_json(report.datum->left_counitality);
          body.witnesses["right_counitality"] =
              cell_json(report.datum->right_counitality);
        } else {
          body.diagnostics.push_back(report.failure);
        }
        return body;
      };
    });
  }
  {
    static std::string name;
    CLI::App* cmd = make_cmd("check-rigid", "rigidity of the canonical algebra");
    cmd->add_option("--object", name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"object", name}};
        auto algebra =
            cospans::canonical_algebra(ws.get_as<cospans::FinSet>(name, "set"));
        auto report = cospans::verify_rigid(algebra);
        ReportBody body;
        body.pass = report.ok;
        body.witnesses["unit_left_adjoint"] = report.unit_left_adjoint;
        body.witnesses["mult_left_adjoint"] = report.mult_left_adjoint;
        body.witnesses["projection_formula_invertible"] =
            report.projection_formula_invertible;
        if (report.mult_left_adjoint) {
          body.witnesses["projection_cell"] =
              cell_json(cospans::projection_formula_cell(algebra));
        }
        if (!report.ok) body.diagnostics.push_back("rigidity test failed");
        return body;
      };
    });
  }
  {
    static std::string name;
    static std::size_t bound = 3;
    CLI::App* cmd = make_cmd("classify", "classify unital multiplications");
    cmd->add_option("--object", name)->required();
    cmd->add_option("--apex-bound", bound);
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"object", name}, {"apex_bound", bound}};
        ReportBody body;
        try {
          auto solutions = cospans::classify_unital_multiplications(
              ws.get_as<cospans::FinSet>(name, "set"), bound);
          json list = json::array();
          for (const auto& s : solutions) {
            list.push_back({{"mult", cospans::to_json(s.mult)},
                            {"iso_to_fold", cell_json(s.iso_to_fold)}});
          }
          body.witnesses["solutions"] = list;
          body.witnesses["count"] = solutions.size();
          body.diagnostics.push_back(
              "1-truncated classification: unitality is witnessed up to "
              "2-iso with no higher coherence");
        } catch (const cospans::ClassificationCounterexample& e) {
          body.pass = false;
          body.diagnostics.push_back(e.what());
        }
        return body;
      };
    });
  }
  {
    static std::string name;
    CLI::App* cmd = make_cmd("transpose", "transpose through the self-dualities");
    cmd->add_option("--cospan", name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"cospan", name}};
        const auto& c = ws.get_as<cospans::Cospan>(name, "cospan");
        auto da = cospans::self_duality(c.src);
        auto db = cospans::self_duality(c.tgt);
        auto t = cospans::transpose_general(c, da, db);
        ReportBody body;
        body.witnesses["result"] = cospans::to_json(t);
        auto iso = cospans::find_two_iso(t, cospans::mirror(c));
        body.pass = iso.has_value();
        if (iso) {
          body.witnesses["iso_to_mirror"] = cell_json(*iso);
        } else {
          body.diagnostics.push_back("transpose is not 2-isomorphic to the mirror");
        }
        return body;
      };
    });
  }
  {
    static std::string name;
    CLI::App* cmd = make_cmd("self-duality", "evaluation/coevaluation with zigzags");
    cmd->add_option("--object", name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"object", name}};
        auto d = cospans::self_duality(ws.get_as<cospans::FinSet>(name, "set"));
        ReportBody body;
        body.witnesses["ev"] = cospans::to_json(d.ev);
        body.witnesses["coev"] = cospans::to_json(d.coev);
        body.witnesses["zigzag_left"] = cell_json(d.zigzag_left);
        body.witnesses["zigzag_right"] = cell_json(d.zigzag_right);
        return body;
      };
    });
  }

  // --- envelope ----------------------------------------------------------------
  {
    static std::string source, target;
    CLI::App* cmd = make_cmd("envbm-hom", "enumerate envelope morphisms");
    cmd->add_option("--source", source)->required();
    cmd->add_option("--target", target)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"source", source}, {"target", target}};
        auto hom = cospans::envbm_hom(
            ws.get_as<cospans::EnvBMObject>(source, "envbm_obj"),
            ws.get_as<cospans::EnvBMObject>(target, "envbm_obj"));
        ReportBody body;
        json list = json::array();
        for (const auto& m : hom) list.push_back(cospans::to_json(m));
        body.witnesses["hom"] = list;
        body.witnesses["count"] = hom.size();
        return body;
      };
    });
  }
  {
    static std::string left, right;
    CLI::App* cmd = make_cmd("envbm-compose", "compose envelope morphisms");
    cmd->add_option("--left", left, "earlier morphism")->required();
    cmd->add_option("--right", right, "later morphism")->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"left", left}, {"right", right}};
        ReportBody body;
        body.witnesses["result"] = cospans::to_json(cospans::envbm_compose(
            ws.get_as<cospans::EnvBMMorphism>(right, "envbm_mor"),
            ws.get_as<cospans::EnvBMMorphism>(left, "envbm_mor")));
        return body;
      };
    });
  }
  {
    static std::size_t bound = 3;
    CLI::App* cmd = make_cmd("envbm-generate", "generation check for the envelope");
    cmd->add_option("--bound", bound);
    cmd->parse_complete_callback([&] {
      runner = [&] {
        inputs = {{"bound", bound}};
        ReportBody body;
        try {
          body.pass = cospans::envbm_generation_check(bound);
        } catch (const cospans::GenerationGap& e) {
          body.pass = false;
          body.diagnostics.push_back(e.what());
        }
        return body;
      };
    });
  }

  // --- bar complexes -------------------------------------------------------------
  {
    static std::string f_name, g_name;
    static std::size_t level = 3;
    CLI::App* cmd = make_cmd("bar-check", "bar truncation + cocone checks");
    cmd->add_option("--f", f_name)->required();
    cmd->add_option("--g", g_name)->required();
    cmd->add_option("--level", level);
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"f", f_name}, {"g", g_name}, {"level", level}};
        const auto& f = ws.get_as<cospans::FinFn>(f_name, "fn");
        const auto& g = ws.get_as<cospans::FinFn>(g_name, "fn");
        ReportBody body;
        try {
          auto t = cospans::bar_truncation(f, g, level);
          auto p = cospans::pushout_algebra(f, g);
          bool cocone_ok = cospans::verify_bar_cocone(t, p);
          body.witnesses["levels"] = t.levels;
          body.witnesses["carrier"] = cospans::to_json(p.carrier.apex);
          body.witnesses["rigid"] = p.rigid.ok;
          body.witnesses["cocone_commutes"] = cocone_ok;
          body.pass = p.rigid.ok && p.square_commutes && cocone_ok;
        } catch (const cospans::SimplicialIdentityFailure& e) {
          body.pass = false;
          body.diagnostics.push_back(e.what());
        }
        return body;
      };
    });
  }
  {
    static std::string f_name, g_name;
    CLI::App* cmd = make_cmd("pushout-algebra", "pushout of canonical algebras");
    cmd->add_option("--f", f_name)->required();
    cmd->add_option("--g", g_name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"f", f_name}, {"g", g_name}};
        auto p = cospans::pushout_algebra(ws.get_as<cospans::FinFn>(f_name, "fn"),
                                          ws.get_as<cospans::FinFn>(g_name, "fn"));
        ReportBody body;
        body.witnesses["algebra"] = cospans::to_json(p.algebra);
        body.witnesses["cocone_left"] = cospans::to_json(p.cocone_left);
        body.witnesses["cocone_right"] = cospans::to_json(p.cocone_right);
        body.witnesses["rigid"] = p.rigid.ok;
        body.witnesses["square_commutes"] = p.square_commutes;
        body.pass = p.rigid.ok && p.square_commutes;
        return body;
      };
    });
  }
  {
    static std::string f_name, g_name;
    CLI::App* cmd = make_cmd("forgetful-bc-check",
                             "cobase change for the carrier pushout square");
    cmd->add_option("--f", f_name)->required();
    cmd->add_option("--g", g_name)->required();
    cmd->parse_complete_callback([&] {
      runner = [&] {
        auto ws = load_workspace(opts);
        inputs = {{"f", f_name}, {"g", g_name}};
        ReportBody body;
        body.pass = cospans::forgetful_cobase_change_check(
            ws.get_as<cospans::FinFn>(f_name, "fn"),
            ws.get_as<cospans::FinFn>(g_name, "fn"));
        if (!body.pass) body.diagnostics.push_back("Beck-Chevalley cell not invertible");
        return body;
      };
    });
  }

  // --- selftest ---------------------------------------------------------------
  {
    static std::size_t max_size = 3;
    static std::uint64_t seed = 1;
    CLI::App* cmd = make_cmd("selftest", "run the full acceptance suite");
    cmd->add_option("--max-size", max_size,
                    "size bound for the enumerated tiers (default 3; the "
                    "exhaustive tiers grow superexponentially beyond that)");
    cmd->add_option("--seed", seed, "seed for the randomized tiers");
    cmd->parse_complete_callback([&] {
      runner = [&] {
        inputs = {{"max_size", max_size}, {"seed", seed}};
        auto results = cospans::run_acceptance({max_size, seed});
        ReportBody body;
        json list = json::array();
        for (const auto& c : results) {
          body.pass = body.pass && c.pass;
          list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
          body.diagnostics.push_back(std::string(c.pass ? "PASS " : "FAIL ") + c.name +
                                     " (" + c.detail + ")");
        }
        body.witnesses["criteria"] = list;
        return body;
      };
    });
  }

  CLI11_PARSE(app, argc, argv);

  try {
    auto start = std::chrono::steady_clock::now();
    ReportBody body = runner();
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return emit(command, inputs, body, opts, elapsed);
  } catch (const cospans::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
