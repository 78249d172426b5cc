#include <CLI11.hpp>
#include <filesystem>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "regsyn/error.hpp"
#include "regsyn/joining.hpp"
#include "regsyn/properties.hpp"
#include "regsyn/reduction.hpp"
#include "regsyn/solver.hpp"
#include "regsyn/synthesis.hpp"
#include "regsyn/text.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace regsyn;

namespace {

constexpr int kOk = 0, kRefuted = 1, kUsage = 2, kBudget = 3;

struct Common {
  std::string type;
  int bound = -1;
  std::string report;
  int jobs = 1;
};

struct Report {
  json j;
  explicit Report(const std::string& cmd) {
    j["schema_version"] = 1;
    j["subcommand"] = cmd;
    j["inputs"] = json::object();
    j["verdicts"] = json::object();
    j["statistics"] = json::object();
    j["artifacts"] = json::array();
  }
  void artifact(const std::string& p) { j["artifacts"].push_back(p); }
};

std::string first_keyword(const std::string& text) {
  auto lines = tokenize(text);
  return lines.empty() ? "" : lines[0].tok[0];
}

Union load_carrier(const std::string& path) {
  std::string text = read_file(path);
  if (first_keyword(text) == "union") return parse_union(text, fs::path(path).parent_path().string());
  return Union(parse_ts(text));
}

NetType net_type(const Common& c) {
  if (c.type.empty() || c.bound < 0) throw CLI::ValidationError("--type and --bound are required");
  return NetType(parse_family(c.type), c.bound);
}

void add_type(CLI::App* s, Common& c) {
  s->add_option("--type", c.type, "net type family: tau0, tau1, tau2 or tau3");
  s->add_option("--bound", c.bound, "bound b");
}

int exit_for(Outcome o) {
  return o == Outcome::Solved ? kOk : o == Outcome::Unsolvable ? kRefuted : kBudget;
}

void write_region(const std::string& path, const Union& u, const NetType& t, const Region& r) {
  RegionFile f;
  f.name = r.name.empty() ? "R" : r.name;
  f.over = u.name();
  f.type = t;
  f.region = r;
  write_file(path, serialize_region(f, u));
}

Budget budget_from(double timeout) {
  Budget b;
  if (timeout > 0) b.seconds = timeout;
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regsyn: region-based synthesis of bounded Petri nets"};
  app.require_subcommand(1);
  Common c;
  std::function<int()> run;

  auto sub = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    add_type(s, c);
    s->add_option("--report", c.report, "write a JSON report to this path");
    return s;
  };

  // check-region
  std::string carrier, region_path;
  auto* check = sub("check-region", "verify a region file against a TS or union");
  check->add_option("carrier", carrier)->required();
  check->add_option("region", region_path)->required();
  check->callback([&] {
    run = [&] {
      Report rep("check-region");
      Union u = load_carrier(carrier);
      auto f = parse_region(read_file(region_path), u);
      NetType t = c.type.empty() ? f.type : net_type(c);
      auto r = verify_region(u, f.region, t);
      std::cout << (r.ok ? "accept" : "reject: " + r.message) << "\n";
      rep.j["inputs"] = {{"carrier", carrier}, {"region", region_path}, {"type", t.str()}};
      rep.j["verdicts"] = {{"valid", r.ok}, {"message", r.message}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return r.ok ? kOk : kRefuted;
    };
  });

  // atoms
  std::string property = "feasibility";
  auto* atoms = sub("atoms", "list separation atoms in canonical order");
  atoms->add_option("carrier", carrier)->required();
  atoms->add_option("--property", property, "essp, ssp or feasibility (both)");
  atoms->callback([&] {
    run = [&] {
      Report rep("atoms");
      Union u = load_carrier(carrier);
      auto list = atoms_for(u, parse_property(property));
      for (auto& a : list) std::cout << atom_str(u, a) << "\n";
      rep.j["inputs"] = {{"carrier", carrier}, {"property", property}};
      rep.j["statistics"] = {{"atoms", list.size()}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return kOk;
    };
  });

  // solve-atom
  std::string atom_text, out_path;
  double timeout = 0;
  auto* solve = sub("solve-atom", "decide one separation atom");
  solve->add_option("carrier", carrier)->required();
  solve->add_option("atom", atom_text, "ssp:s,t or essp:e,s")->required();
  solve->add_option("--timeout", timeout, "seconds per atom");
  solve->add_option("-o,--output", out_path, "write the witness region here");
  solve->callback([&] {
    run = [&] {
      Report rep("solve-atom");
      Union u = load_carrier(carrier);
      NetType t = net_type(c);
      Atom a = parse_atom(u, atom_text);
      auto r = solve_atom(u, a, t, budget_from(timeout));
      std::cout << atom_str(u, a) << " " << outcome_name(r.outcome) << "\n";
      rep.j["inputs"] = {{"carrier", carrier}, {"atom", atom_text}, {"type", t.str()}};
      rep.j["verdicts"] = {{"outcome", outcome_name(r.outcome)}};
      rep.j["statistics"] = {{"nodes", r.stats.nodes}, {"memo_hits", r.stats.memo_hits}};
      if (r.witness && !out_path.empty()) {
        write_region(out_path, u, t, *r.witness);
        rep.artifact(out_path);
      }
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return exit_for(r.outcome);
    };
  });

  // decide
  bool all = false, greedy = false;
  std::string emit_dir;
  auto* dec = sub("decide", "decide ESSP, SSP or feasibility");
  dec->add_option("carrier", carrier)->required();
  dec->add_option("--property", property, "essp, ssp or feasibility");
  dec->add_flag("--all", all, "do not stop at the first unsolvable atom");
  dec->add_flag("--greedy-cover", greedy, "reuse witnesses across atoms");
  dec->add_option("--timeout", timeout, "seconds per atom");
  dec->add_option("--jobs", c.jobs, "worker threads");
  dec->add_option("--emit-witnesses", emit_dir, "write witness regions into this directory");
  dec->callback([&] {
    run = [&] {
      Report rep("decide");
      Union u = load_carrier(carrier);
      NetType t = net_type(c);
      DecideOptions opt;
      opt.all = all;
      opt.greedy_cover = greedy;
      opt.jobs = c.jobs;
      opt.budget = budget_from(timeout);
      Property p = parse_property(property);
      auto r = decide(u, p, t, opt);
      const char* verdict = r.aggregate == Outcome::Solved       ? "holds"
                            : r.aggregate == Outcome::Unsolvable ? "refuted"
                                                                 : "budget-exceeded";
      std::cout << property_name(p) << " " << t.str() << ": " << verdict << "\n";
      json failing = json::array();
      for (auto& a : r.results)
        if (a.outcome != Outcome::Solved) {
          std::cout << "  " << atom_str(u, a.atom) << " " << outcome_name(a.outcome) << "\n";
          failing.push_back(atom_str(u, a.atom));
        }
      std::cout << "atoms " << r.results.size() << ", witnesses " << r.witnesses.size() << ", nodes "
                << r.stats.nodes << "\n";
      rep.j["inputs"] = {{"carrier", carrier}, {"property", property_name(p)}, {"type", t.str()},
                         {"all", all}, {"greedy_cover", greedy}};
      rep.j["verdicts"] = {{"aggregate", verdict}, {"not_solved", failing}};
      rep.j["statistics"] = {{"atoms", r.results.size()},
                             {"witnesses", r.witnesses.size()},
                             {"nodes", r.stats.nodes},
                             {"memo_hits", r.stats.memo_hits}};
      if (!emit_dir.empty()) {
        fs::create_directories(emit_dir);
        for (auto& w : r.witnesses) {
          auto path = (fs::path(emit_dir) / (w.name + ".region")).string();
          write_region(path, u, t, w);
          rep.artifact(path);
        }
      }
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return exit_for(r.aggregate);
    };
  });

  // synthesize
  std::vector<std::string> region_paths;
  auto* syn = sub("synthesize", "build the synthesized net from regions, or from solver witnesses");
  syn->add_option("ts", carrier)->required();
  syn->add_option("regions", region_paths, "region files; omitted: solve for feasibility first");
  syn->add_option("-o,--output", out_path, "net file");
  syn->add_option("--jobs", c.jobs, "worker threads");
  syn->callback([&] {
    run = [&] {
      Report rep("synthesize");
      auto ts = parse_ts(read_file(carrier));
      Union u(ts);
      std::vector<Region> regions;
      std::optional<NetType> t;
      if (!c.type.empty()) t = net_type(c);
      for (auto& p : region_paths) {
        auto f = parse_region(read_file(p), u);
        if (!t) t = f.type;
        regions.push_back(f.region);
      }
      if (!t) throw CLI::ValidationError("--type and --bound are required without region files");
      int code = kOk;
      if (region_paths.empty()) {
        DecideOptions opt;
        opt.jobs = c.jobs;
        auto r = decide(u, Property::Feasibility, *t, opt);
        regions = r.witnesses;
        if (r.aggregate != Outcome::Solved) code = exit_for(r.aggregate);
      }
      auto net = build_net(ts, regions, *t);
      auto sg = state_graph(net);
      bool iso = isomorphic(sg, ts).has_value();
      std::cout << "places " << net.places.size() << ", initial marking " << marking_name(net, net.m0)
                << ", state graph " << (iso ? "isomorphic" : "not isomorphic") << "\n";
      if (!out_path.empty()) {
        write_file(out_path, serialize_net(net));
        rep.artifact(out_path);
      }
      rep.j["inputs"] = {{"ts", carrier}, {"regions", region_paths}, {"type", t->str()}};
      rep.j["verdicts"] = {{"isomorphic", iso}, {"initial_marking", marking_name(net, net.m0)}};
      rep.j["statistics"] = {{"places", net.places.size()}, {"reachable_markings", sg.num_states()}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      if (code != kOk) return code;
      return iso ? kOk : kRefuted;
    };
  });

  // state-graph
  std::size_t cap = 1'000'000;
  auto* sgc = sub("state-graph", "reachability graph of a net");
  sgc->add_option("net", carrier)->required();
  sgc->add_option("-o,--output", out_path, "TS file");
  sgc->add_option("--cap", cap, "maximum number of reachable markings");
  sgc->callback([&] {
    run = [&] {
      Report rep("state-graph");
      auto net = parse_net(read_file(carrier));
      auto sg = state_graph(net, cap);
      std::string text = serialize_ts(sg);
      if (out_path.empty())
        std::cout << text;
      else {
        write_file(out_path, text);
        rep.artifact(out_path);
      }
      rep.j["inputs"] = {{"net", carrier}};
      rep.j["statistics"] = {{"markings", sg.num_states()}, {"transitions", sg.edges().size()}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return kOk;
    };
  });

  // iso
  std::string second;
  auto* iso = sub("iso", "isomorphism of two initialized TSs");
  iso->add_option("a", carrier)->required();
  iso->add_option("b", second)->required();
  iso->callback([&] {
    run = [&] {
      Report rep("iso");
      auto m = isomorphic(parse_ts(read_file(carrier)), parse_ts(read_file(second)));
      json pairs = json::array();
      if (m) {
        std::cout << "isomorphic\n";
        for (auto& [x, y] : *m) {
          std::cout << x << " " << y << "\n";
          pairs.push_back({x, y});
        }
      } else {
        std::cout << "not isomorphic\n";
      }
      rep.j["inputs"] = {{"a", carrier}, {"b", second}};
      rep.j["verdicts"] = {{"isomorphic", m.has_value()}, {"mapping", pairs}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return m ? kOk : kRefuted;
    };
  });

  // join
  auto* jn = sub("join", "joining TS of a union");
  jn->add_option("union", carrier)->required();
  jn->add_option("-o,--output", out_path, "TS file");
  jn->callback([&] {
    run = [&] {
      Report rep("join");
      Union u = load_carrier(carrier);
      auto j = join(u);
      std::string text = serialize_ts(j);
      if (out_path.empty())
        std::cout << text;
      else {
        write_file(out_path, text);
        rep.artifact(out_path);
      }
      rep.j["inputs"] = {{"union", carrier}};
      rep.j["verdicts"] = {{"lemma2_precondition", lemma2_precondition(u)}};
      rep.j["statistics"] = {{"states", j.num_states()}, {"transitions", j.edges().size()}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return kOk;
    };
  });

  // reduce
  std::string sat_path, target = "tau1", out_dir;
  bool do_join = false;
  auto* red = sub("reduce", "gadget union for a cubic monotone one-in-three instance");
  red->add_option("sat", sat_path)->required();
  red->add_option("--target", target, "tau0, tau1, tau2, tau3 or w-ssp");
  red->add_flag("--join", do_join, "also write the joining TS");
  red->add_option("-o,--output", out_dir, "output directory")->required();
  red->callback([&] {
    run = [&] {
      Report rep("reduce");
      auto s = parse_sat(read_file(sat_path));
      if (c.bound < 0) throw CLI::ValidationError("--bound is required");
      auto g = generate(s, parse_target(target), c.bound);
      fs::create_directories(out_dir);
      std::ostringstream uf;
      uf << "union " << g.u.name() << "\n";
      for (auto& ts : g.u.components()) {
        std::string file = ts.name() + ".ts";
        write_file((fs::path(out_dir) / file).string(), serialize_ts(ts));
        uf << "include " << file << "\n";
        rep.artifact((fs::path(out_dir) / file).string());
      }
      auto upath = (fs::path(out_dir) / "union.u").string();
      write_file(upath, uf.str());
      rep.artifact(upath);
      auto kpath = (fs::path(out_dir) / "key.atom").string();
      write_file(kpath, atom_str(g.u, g.key) + "\n");
      rep.artifact(kpath);
      std::cout << "components " << g.u.num_components() << ", states " << g.u.num_states() << ", key "
                << atom_str(g.u, g.key) << "\n";
      if (do_join) {
        auto jpath = (fs::path(out_dir) / "joined.ts").string();
        auto j = join(g.u);
        write_file(jpath, serialize_ts(j));
        rep.artifact(jpath);
        std::cout << "joined: states " << j.num_states() << ", transitions " << j.edges().size() << "\n";
      }
      rep.j["inputs"] = {{"sat", sat_path}, {"target", target_name(g.target)}, {"bound", g.bound}};
      rep.j["verdicts"] = {{"key_atom", atom_str(g.u, g.key)}, {"lemma2_precondition", true}};
      rep.j["statistics"] = {{"components", g.u.num_components()}, {"states", g.u.num_states()}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return kOk;
    };
  });

  // witness
  std::string model_text;
  auto* wit = sub("witness", "key-atom region built from a model");
  wit->add_option("sat", sat_path)->required();
  wit->add_option("--model", model_text, "comma separated variable indices")->required();
  wit->add_option("--target", target, "tau0, tau1, tau2, tau3 or w-ssp");
  wit->add_option("-o,--output", out_path, "region file")->required();
  wit->callback([&] {
    run = [&] {
      Report rep("witness");
      auto s = parse_sat(read_file(sat_path));
      if (c.bound < 0) throw CLI::ValidationError("--bound is required");
      Model m;
      std::stringstream ss(model_text);
      for (std::string x; std::getline(ss, x, ',');)
        if (!x.empty()) m.push_back(std::stoi(x));
      std::sort(m.begin(), m.end());
      auto g = generate(s, parse_target(target), c.bound);
      auto r = witness_key_region(s, m, g);
      write_region(out_path, g.u, g.type(), r);
      rep.artifact(out_path);
      std::cout << "region solves " << atom_str(g.u, g.key) << "\n";
      rep.j["inputs"] = {{"sat", sat_path}, {"model", m}, {"target", target_name(g.target)}, {"bound", g.bound}};
      rep.j["verdicts"] = {{"key_atom", atom_str(g.u, g.key)}, {"solved", true}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return kOk;
    };
  });

  // oracle
  bool lax = false;
  auto* orc = sub("oracle", "brute-force one-in-three model search");
  orc->add_option("sat", sat_path)->required();
  orc->add_flag("--lax", lax, "accept any monotone 3-clauses");
  orc->callback([&] {
    run = [&] {
      Report rep("oracle");
      auto s = parse_sat(read_file(sat_path), !lax);
      auto m = oracle(s);
      if (m) {
        std::cout << "model";
        for (int v : *m) std::cout << " X" << v;
        std::cout << "\n";
      } else {
        std::cout << "unsatisfiable\n";
      }
      rep.j["inputs"] = {{"sat", sat_path}, {"strict", !lax}};
      rep.j["verdicts"] = {{"satisfiable", m.has_value()}, {"model", m ? json(*m) : json(nullptr)}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return m ? kOk : kRefuted;
    };
  });

  // export-dot
  auto* dot = sub("export-dot", "Graphviz rendering of a TS or net file");
  dot->add_option("input", carrier)->required();
  dot->add_option("-o,--output", out_path, "DOT file");
  dot->callback([&] {
    run = [&] {
      Report rep("export-dot");
      std::string text = read_file(carrier);
      std::string out = first_keyword(text) == "net" ? net_to_dot(parse_net(text)) : ts_to_dot(parse_ts(text));
      if (out_path.empty())
        std::cout << out;
      else {
        write_file(out_path, out);
        rep.artifact(out_path);
      }
      rep.j["inputs"] = {{"input", carrier}};
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return kOk;
    };
  });

  // selftest
  std::uint64_t seed = 1;
  double scale = 1.0;
  auto* st = sub("selftest", "randomized property suites");
  st->add_option("--seed", seed, "RNG seed");
  st->add_option("--scale", scale, "fraction of the default case counts");
  st->callback([&] {
    run = [&] {
      Report rep("selftest");
      auto n = [&](int x) { return std::max(1, (int)(x * scale)); };
      std::vector<SuiteResult> rs{suite_absolute_value(seed, n(1000)), suite_join_equivalence(seed, n(100)),
                                  suite_linear_essp_ssp(seed, n(200)), suite_solver_vs_naive(seed, n(50))};
      bool ok = true;
      json v = json::object();
      for (auto& r : rs) {
        std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.cases << " cases, " << r.violations
                  << " violations\n";
        for (auto& d : r.details) std::cout << "  " << d << "\n";
        v[r.name] = {{"cases", r.cases}, {"violations", r.violations}};
        ok = ok && r.passed();
      }
      rep.j["inputs"] = {{"seed", seed}, {"scale", scale}};
      rep.j["verdicts"] = v;
      if (!c.report.empty()) write_file(c.report, rep.j.dump(2) + "\n");
      return ok ? kOk : kRefuted;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }
  try {
    return run();
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
