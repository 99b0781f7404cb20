// annet: command-line front end for simulation, analysis, conversion,
// glueing, certificate checking, compilation and the decision oracles.
//
// Every command writes one JSON report (stdout or --output).  Exit codes:
// 0 success or "yes", 1 "no" or a failed check, 2 input error, 3 budget or
// enumeration cap exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "annet/annet.hpp"
#include "json.hpp"

namespace {

using json = nlohmann::json;
using namespace annet;

struct Globals {
  std::string output;
  bool pretty = false;
  bool dot = false;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t max_states = 0;

  std::uint64_t cap() const { return max_states != 0 ? max_states : default_state_cap(); }
};

Globals globals;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json read_json(const std::string& path) {
  try {
    return json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

void write_text(const std::string& text) {
  if (globals.output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(globals.output, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidInput, "cannot write " + globals.output);
  out << text;
  if (text.empty() || text.back() != '\n') out << '\n';
}

// One "key: value" line per top-level field; containers are summarized by size.
std::string summary(const json& report) {
  std::ostringstream s;
  for (auto it = report.begin(); it != report.end(); ++it) {
    s << it.key() << ": ";
    const json& v = it.value();
    if (v.is_array())
      s << "[" << v.size() << " items]";
    else if (v.is_object())
      s << "{" << v.size() << " fields}";
    else
      s << v.dump();
    s << '\n';
  }
  return s.str();
}

void emit(const json& report) {
  write_text(globals.pretty ? summary(report) : report.dump());
}

// A dynamical system read from any of the accepted documents: a network, a
// CSAN, a G-network, or a fixture document {"csan"|"network"|"gnet", "initial"}.
struct System {
  Network net;
  std::optional<Csan> csan;
  std::optional<GNetwork> gnet;
  std::optional<Configuration> initial;
  std::vector<std::string> names;
};

System load_system(const std::string& path) {
  const json j = read_json(path);
  System s;
  if (j.contains("csan")) {
    s.csan = csan_from_json(j.at("csan").dump());
    s.net = csan_to_network(*s.csan);
  } else if (j.contains("network")) {
    s.net = network_from_json(j.at("network").dump());
  } else if (j.contains("gnet")) {
    s.gnet = gnet_from_json(j.at("gnet").dump());
    s.net = gnetwork_to_network(*s.gnet);
  } else if (j.contains("rules")) {
    s.net = network_from_json(j.dump());
  } else if (j.contains("gates")) {
    s.gnet = gnet_from_json(j.dump());
    s.net = gnetwork_to_network(*s.gnet);
  } else if (j.contains("edges") || j.contains("lambda") || j.contains("vertices")) {
    s.csan = csan_from_json(j.dump());
    s.net = csan_to_network(*s.csan);
  } else {
    throw Error(ErrorKind::Parse, path + ": not a network, CSAN or G-network document");
  }
  if (j.contains("initial")) s.initial = configuration_from_json(j.at("initial").dump());
  if (j.contains("names")) s.names = j.at("names").get<std::vector<std::string>>();
  return s;
}

std::string system_dot(const System& s) {
  if (s.csan) return csan_to_dot(*s.csan, s.names);
  if (s.gnet) return gnet_to_dot(*s.gnet);
  return network_to_dot(s.net, s.names);
}

Configuration load_configuration(const std::string& arg) {
  // Either a file or an inline digit string / JSON array.
  std::ifstream probe(arg);
  if (probe) return configuration_from_json(read_file(arg));
  if (!arg.empty() && arg.front() == '[') return configuration_from_json(arg);
  return configuration_from_json("\"" + arg + "\"");
}

json config_json(const Configuration& x) { return json(x); }

int answer(json report, bool yes) {
  report["answer"] = yes;
  emit(report);
  return yes ? 0 : 1;
}

// ---- commands ---------------------------------------------------------------

int cmd_simulate(const std::string& net_path, const std::string& config_arg, std::uint64_t t, bool keep_trace) {
  const System s = load_system(net_path);
  Configuration x = config_arg.empty() ? s.initial.value_or(Configuration{}) : load_configuration(config_arg);
  s.net.check_configuration(x);
  json report{{"t", t}};
  json trajectory = json::array();
  if (keep_trace) trajectory.push_back(x);
  Configuration next;
  for (std::uint64_t i = 0; i < t; ++i) {
    step_into(s.net, x, next);
    x.swap(next);
    if (keep_trace) trajectory.push_back(x);
  }
  report["config"] = config_json(x);
  if (keep_trace) report["trajectory"] = trajectory;
  emit(report);
  return 0;
}

int cmd_analyze(const std::string& net_path, const std::string& config_arg) {
  const System s = load_system(net_path);
  if (globals.dot) {
    write_text(system_dot(s));
    return 0;
  }
  std::optional<Configuration> x = s.initial;
  if (!config_arg.empty()) x = load_configuration(config_arg);
  if (x) {
    const OrbitAnalysis a = analyze_orbit(s.net, *x, globals.cap());
    emit({{"transient", a.transient}, {"period", a.period}});
    return 0;
  }
  const OrbitGraph g = orbit_graph(s.net, globals.cap(), globals.jobs);
  const auto atts = attractors(g);
  json list = json::array();
  std::uint64_t fixed = 0, max_period = 0;
  for (const auto& a : atts) {
    json cycle = json::array();
    for (std::uint64_t idx : a.cycle) cycle.push_back(config_at(idx, g.alphabet, g.nodes));
    list.push_back({{"period", a.cycle.size()}, {"basin", a.basin}, {"cycle", cycle}});
    if (a.cycle.size() == 1) ++fixed;
    max_period = std::max<std::uint64_t>(max_period, a.cycle.size());
  }
  emit({{"configurations", g.succ.size()},
        {"attractors", list},
        {"attractor_count", atts.size()},
        {"fixed_points", fixed},
        {"max_period", max_period}});
  return 0;
}

MatrixKind matrix_kind(const std::string& s) {
  if (s == "gf2") return MatrixKind::Gf2;
  if (s == "or") return MatrixKind::BooleanOr;
  if (s == "and") return MatrixKind::BooleanAnd;
  throw Error(ErrorKind::InvalidInput, "matrix kind must be gf2, or, and");
}

int cmd_convert(const std::string& kind, const std::string& path, const std::string& mkind) {
  if (kind == "csan") {
    const Csan c = csan_from_json(read_file(path));
    const Network net = csan_to_network(c);
    write_text(globals.dot ? network_to_dot(net) : network_to_json(net));
  } else if (kind == "matrix") {
    const json j = read_json(path);
    const json& m = j.is_object() ? j.at("matrix") : j;
    const std::string k = j.is_object() && j.contains("kind") ? j.at("kind").get<std::string>() : mkind;
    const Network net = matrix_to_network(matrix_kind(k), m.get<std::vector<std::vector<int>>>());
    write_text(globals.dot ? network_to_dot(net) : network_to_json(net));
  } else if (kind == "bounded-degree") {
    const Circuit c = circuit_encode(network_from_json(read_file(path)));
    write_text(globals.dot ? circuit_to_dot(c) : circuit_to_json(c));
  } else if (kind == "circuit") {
    const Network net = circuit_network(circuit_from_json(read_file(path)));
    write_text(globals.dot ? network_to_dot(net) : network_to_json(net));
  } else {
    throw Error(ErrorKind::InvalidInput, "convert expects csan, matrix, bounded-degree or circuit");
  }
  return 0;
}

int cmd_glue(const std::string& a_path, const std::string& b_path, const std::string& dowel_path,
             const std::string& po1_path, const std::string& po2_path) {
  const System a = load_system(a_path), b = load_system(b_path);
  const Dowel d = dowel_from_json(read_file(dowel_path));
  json report;
  const GlueResult g = glue_networks(a.net, b.net, d);
  report["network"] = json::parse(network_to_json(g.net));
  report["map1"] = g.map1;
  report["map2"] = g.map2;
  if (a.csan && b.csan) {
    const CsanGlueResult c = csan_glue(*a.csan, *b.csan, d);
    report["csan"] = json::parse(csan_to_json(c.csan));
    report["csan_map1"] = c.map1;
    report["csan_map2"] = c.map2;
  }
  if (!po1_path.empty() || !po2_path.empty()) {
    if (po1_path.empty() || po2_path.empty())
      throw Error(ErrorKind::InvalidInput, "glueing pseudo-orbits needs both --po1 and --po2");
    const PseudoOrbit p1 = pseudo_orbit_from_json(read_file(po1_path));
    const PseudoOrbit p2 = pseudo_orbit_from_json(read_file(po2_path));
    const PseudoOrbit p = glue_pseudo_orbits(g, d, p1, p2);
    const PseudoOrbitReport check = check_pseudo_orbit(g.net, p);
    report["pseudo_orbit"] = json::parse(pseudo_orbit_to_json(p));
    report["pseudo_orbit_valid"] = check.pass;
    if (!check.pass) report["detail"] = check.detail;
  }
  if (globals.dot) {
    write_text(report.contains("csan") ? csan_to_dot(csan_from_json(report["csan"].dump()))
                                       : network_to_dot(g.net));
    return 0;
  }
  emit(report);
  return 0;
}

json simulation_json(const SimulationReport& r) {
  json j{{"pass", r.pass},
         {"checked", r.checked},
         {"mode", r.mode == SimulationMode::Exhaustive ? "exhaustive" : "sample"},
         {"seed", r.seed}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

SimulationOptions sim_options(std::uint64_t samples) {
  SimulationOptions o;
  o.mode = samples > 0 ? SimulationMode::Sample : SimulationMode::Exhaustive;
  o.samples = samples;
  o.seed = globals.seed;
  o.cap = globals.cap();
  o.jobs = globals.jobs;
  return o;
}

int cmd_verify_sim(const std::string& f_path, const std::string& g_path, const std::string& phi_path,
                   std::uint64_t samples) {
  const System f = load_system(f_path), g = load_system(g_path);
  const BlockEmbedding phi = embedding_from_json(read_file(phi_path));
  const SimulationReport r = verify_simulation(f.net, g.net, phi, sim_options(samples));
  emit(simulation_json(r));
  return r.pass ? 0 : 1;
}

json certificate_json(const CertificateReport& r) {
  return {{"pass", r.pass}, {"cells", r.cells}, {"failures", r.failures}};
}

int cmd_verify_cert(const std::string& path) {
  const CoherentCertificate cert = certificate_from_json(read_file(path));
  const CertificateReport r = verify_certificate(cert, globals.jobs);
  emit(certificate_json(r));
  return r.pass ? 0 : 1;
}

std::optional<FamilySpec> family_by_name(const std::string& name) {
  if (name.empty() || name == "none") return std::nullopt;
  if (name == "gol") return game_of_life_family();
  if (name == "threshold") return threshold_family();
  if (name == "linear") return linear_family();
  if (name == "minmax") return minmax_family();
  if (name == "interval") return interval_family();
  if (name == "reaction") return reaction_family();
  throw Error(ErrorKind::InvalidInput, "unknown family " + name);
}

int cmd_compile(const std::string& gnet_path, const std::string& cert_path, const std::string& family) {
  const GNetwork gn = gnet_from_json(read_file(gnet_path));
  const CoherentCertificate cert =
      cert_path.empty() ? build_certificate() : certificate_from_json(read_file(cert_path));
  const GNetCompilation c = compile_gnetwork(gn, cert, family_by_name(family), globals.jobs);
  if (globals.dot) {
    write_text(c.csan ? csan_to_dot(*c.csan) : network_to_dot(c.net));
    return 0;
  }
  json report{{"network", json::parse(network_to_json(c.net))},
              {"embedding", json::parse(embedding_to_json(c.embedding))}};
  if (c.csan) report["csan"] = json::parse(csan_to_json(*c.csan));
  emit(report);
  return 0;
}

int cmd_gol_demo() {
  using clock = std::chrono::steady_clock;
  const auto t0 = clock::now();
  const CertificateReport cert = verify_certificate(build_certificate(), globals.jobs);
  const Csan clk = build_clock();
  const OrbitAnalysis a = analyze_orbit(csan_to_network(clk), clock_initial(), globals.cap());
  const GNetwork gn = nor_pair_network();
  const GolCompilation c = compile_to_gol(gn, globals.jobs);
  const SimulationReport sim = verify_simulation(gnetwork_to_network(gn), c.net, c.embedding, sim_options(0));
  const double seconds = std::chrono::duration<double>(clock::now() - t0).count();
  json report{{"certificate", certificate_json(cert)},
              {"clock", {{"transient", a.transient}, {"period", a.period}}},
              {"gates", gn.gates.size()},
              {"gol_nodes", c.net.size()},
              {"time", c.embedding.time},
              {"simulation", simulation_json(sim)},
              {"seconds", seconds}};
  report["pass"] = cert.pass && sim.pass;
  emit(report);
  return cert.pass && sim.pass ? 0 : 1;
}

TimeEncoding encoding_of(const json& j) {
  const std::string e = j.value("encoding", std::string("binary"));
  if (e == "unary") return TimeEncoding::Unary;
  if (e == "binary") return TimeEncoding::Binary;
  throw Error(ErrorKind::InvalidInput, "encoding must be unary or binary");
}

Network instance_network(const json& j, const std::string& base) {
  if (!j.contains("network")) throw Error(ErrorKind::Parse, "instance lacks a \"network\" field");
  const json& n = j.at("network");
  if (n.is_string()) {
    const std::string rel = n.get<std::string>();
    const auto dir = base.find_last_of('/');
    return load_system(rel.front() == '/' || dir == std::string::npos ? rel : base.substr(0, dir + 1) + rel).net;
  }
  if (n.contains("rules")) return network_from_json(n.dump());
  if (n.contains("gates")) return gnetwork_to_network(gnet_from_json(n.dump()));
  return csan_to_network(csan_from_json(n.dump()));
}

int cmd_oracle(const std::string& kind, const std::string& path) {
  const json j = read_json(path);
  const Network net = instance_network(j, path);
  auto cfg = [&](const char* key) { return configuration_from_json(j.at(key).dump()); };
  try {
    if (kind == "u-pred" || kind == "b-pred") {
      PredInstance inst{net, j.at("v").get<std::size_t>(), cfg("x"), j.at("q").get<State>(),
                        j.at("t").get<std::uint64_t>(),
                        kind == "u-pred" ? TimeEncoding::Unary : encoding_of(j)};
      const bool yes = kind == "u-pred" ? u_pred(inst, globals.cap()) : b_pred(inst, globals.cap());
      return answer({{"problem", kind}}, yes);
    }
    if (kind == "pred-chg") {
      PredChgInstance inst{net, j.at("v").get<std::size_t>(), cfg("x"), j.value("k", std::uint64_t{1})};
      return answer({{"problem", kind}}, pred_chg(inst, globals.cap()));
    }
    if (kind == "reach") {
      ReachInstance inst{net, cfg("x"), cfg("y")};
      return answer({{"problem", kind}}, reach(inst, globals.cap()));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
  throw Error(ErrorKind::InvalidInput, "oracle expects u-pred, b-pred, pred-chg or reach");
}

int cmd_construct(const std::string& kind, std::size_t n, const std::string& cnf_path) {
  if (kind == "odometer") {
    write_text(globals.dot ? network_to_dot(odometer(n)) : network_to_json(odometer(n)));
  } else if (kind == "primes") {
    const PrimeRotations p = prime_rotations(n);
    if (globals.dot) {
      write_text(gnet_to_dot(p.gn));
      return 0;
    }
    emit({{"gnet", json::parse(gnet_to_json(p.gn))}, {"initial", p.marked}, {"primes", p.primes}});
  } else if (kind == "hcounter") {
    write_text(globals.dot ? network_to_dot(h_counter_network(n)) : network_to_json(h_counter_network(n)));
  } else if (kind == "sat-pred") {
    if (cnf_path.empty()) throw Error(ErrorKind::InvalidInput, "sat-pred needs --cnf");
    const Cnf cnf = parse_dimacs(read_file(cnf_path));
    const Network net = sat_pred_network(cnf);
    if (globals.dot) {
      write_text(network_to_dot(net));
      return 0;
    }
    emit({{"network", json::parse(network_to_json(net))}, {"initial", Configuration(net.size(), 0)}});
  } else if (kind == "gt-transient") {
    const GtTransient g = gt_transient_network(n);
    if (globals.dot) {
      write_text(gnet_to_dot(g.gn));
      return 0;
    }
    emit({{"gnet", json::parse(gnet_to_json(g.gn))},
          {"initial", g.initial},
          {"primes", g.primes},
          {"loop_node", g.loop_node}});
  } else {
    throw Error(ErrorKind::InvalidInput, "construct expects odometer, primes, hcounter, sat-pred or gt-transient");
  }
  return 0;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BudgetExceeded:
    case ErrorKind::CapExceeded:
      return 3;
    default:
      return 2;
  }
}

int report_error(const std::string& kind, const std::string& message, int code) {
  std::cout << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"annet: automata networks, simulations and gadgets"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", globals.output, "Write the report to a file instead of stdout");
  app.add_flag("--pretty", globals.pretty, "Human-readable summary instead of JSON");
  app.add_flag("--dot", globals.dot, "Emit a Graphviz drawing of the result");
  app.add_option("--jobs", globals.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  app.add_option("--seed", globals.seed, "Seed for sampled checks");
  app.add_option("--max-states", globals.max_states, "Enumeration cap (default ANNET_MAX_STATES or 2^22)");

  std::string net, net2, cfg, dowel, po1, po2, emb, cert, kind, path, family, cnf, mkind = "gf2";
  std::uint64_t t = 0, samples = 0;
  std::size_t n = 2;
  bool keep_trace = false;
  std::function<int()> run;

  auto* sim = app.add_subcommand("simulate", "Iterate a network t steps");
  sim->add_option("network", net, "Network, CSAN or G-network file")->required();
  sim->add_option("config", cfg, "Initial configuration (file, digits or JSON array)");
  sim->add_option("-t,--time", t, "Number of steps");
  sim->add_flag("--trace", keep_trace, "Include every intermediate configuration");
  sim->callback([&] { run = [&] { return cmd_simulate(net, cfg, t, keep_trace); }; });

  auto* ana = app.add_subcommand("analyze", "Transient and period of a configuration, or all attractors");
  ana->add_option("network", net, "Network, CSAN, G-network or fixture file")->required();
  ana->add_option("config", cfg, "Configuration to analyze (defaults to the fixture's initial one)");
  ana->callback([&] { run = [&] { return cmd_analyze(net, cfg); }; });

  auto* conv = app.add_subcommand("convert", "Convert between representations");
  conv->add_option("kind", kind, "csan | matrix | bounded-degree | circuit")->required();
  conv->add_option("input", path, "Input file")->required();
  conv->add_option("--matrix-kind", mkind, "gf2 | or | and");
  conv->callback([&] { run = [&] { return cmd_convert(kind, path, mkind); }; });

  auto* glue = app.add_subcommand("glue", "Glue two networks along a dowel");
  glue->add_option("first", net, "First network or CSAN")->required();
  glue->add_option("second", net2, "Second network or CSAN")->required();
  glue->add_option("dowel", dowel, "Dowel file")->required();
  glue->add_option("--po1", po1, "Pseudo-orbit of the first network");
  glue->add_option("--po2", po2, "Pseudo-orbit of the second network");
  glue->callback([&] { run = [&] { return cmd_glue(net, net2, dowel, po1, po2); }; });

  auto* vsim = app.add_subcommand("verify-sim", "Check that G simulates F through an embedding");
  vsim->add_option("f", net, "Simulated network")->required();
  vsim->add_option("g", net2, "Simulating network")->required();
  vsim->add_option("embedding", emb, "Block embedding file")->required();
  vsim->add_option("--samples", samples, "Check this many seeded random configurations instead of all");
  vsim->callback([&] { run = [&] { return cmd_verify_sim(net, net2, emb, samples); }; });

  auto* vcert = app.add_subcommand("verify-cert", "Check a coherent gadget certificate");
  vcert->add_option("certificate", cert, "Certificate file")->required();
  vcert->callback([&] { run = [&] { return cmd_verify_cert(cert); }; });

  auto* comp = app.add_subcommand("compile", "Compile a G-network through a certificate");
  comp->add_option("gnet", net, "G-network file")->required();
  comp->add_option("certificate", cert, "Certificate file (default: the built-in Game of Life kit)");
  comp->add_option("--family", family, "Check the result against a family: gol, threshold, ...");
  comp->callback([&] { run = [&] { return cmd_compile(net, cert, family); }; });

  auto* gol = app.add_subcommand("gol", "Game of Life kit");
  gol->require_subcommand(1);
  gol->fallthrough();
  auto* demo = gol->add_subcommand("demo", "Verify the kit and compile a two-gate NOR network");
  demo->callback([&] { run = [&] { return cmd_gol_demo(); }; });

  auto* orc = app.add_subcommand("oracle", "Decide a prediction or reachability instance");
  orc->add_option("problem", kind, "u-pred | b-pred | pred-chg | reach")->required();
  orc->add_option("instance", path, "Instance file")->required();
  orc->callback([&] { run = [&] { return cmd_oracle(kind, path); }; });

  auto* cons = app.add_subcommand("construct", "Build one of the special networks");
  cons->add_option("kind", kind, "odometer | primes | hcounter | sat-pred | gt-transient")->required();
  cons->add_option("-n", n, "Size parameter");
  cons->add_option("--cnf", cnf, "DIMACS formula for sat-pred");
  cons->callback([&] { run = [&] { return cmd_construct(kind, n, cnf); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error("usage", e.what(), 2);
  }

  try {
    return run();
  } catch (const Error& e) {
    return report_error(to_string(e.kind()), e.what(), exit_code(e.kind()));
  } catch (const json::exception& e) {
    return report_error(to_string(ErrorKind::Parse), e.what(), 2);
  } catch (const std::exception& e) {
    return report_error("internal", e.what(), 2);
  }
}
