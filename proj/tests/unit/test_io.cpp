#include "doctest.h"
#include "support/support.hpp"

#include "annet/io.hpp"

using namespace annet;
using namespace annet::testing;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::InvalidInput;
}

}  // namespace

TEST_CASE("networks round trip through JSON") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 10; ++k) {
    const Network net = random_network(rng, 2 + k % 3, 4, 3);
    const std::string text = network_to_json(net);
    CHECK(network_from_json(text) == net);
    CHECK(network_from_json(network_to_json(net, 2)) == net);
  }
  CHECK(kind_of([] { network_from_json("{\"alphabet\": 2,"); }) == ErrorKind::Parse);
  CHECK(kind_of([] { network_from_json("[1, 2]"); }) == ErrorKind::Parse);
}

TEST_CASE("configurations accept arrays and digit strings") {
  CHECK(configuration_from_json("[0, 2, 1]") == Configuration{0, 2, 1});
  CHECK(configuration_from_json("\"0210\"") == Configuration{0, 2, 1, 0});
  const Configuration x{3, 1, 4, 1, 5};
  CHECK(configuration_from_json(configuration_to_json(x)) == x);
  CHECK(kind_of([] { configuration_from_json("\"01a\""); }) == ErrorKind::Parse);
  CHECK(kind_of([] { configuration_from_json("[0, -1]"); }) == ErrorKind::Parse);
}

TEST_CASE("CSANs round trip and keep their semantics") {
  const std::vector<Csan> fixtures{build_game_of_life(cycle_graph(5)), build_threshold(path_graph(4), {1, 2, 1, 1}),
                                   build_rule90_ring(5), build_clock()};
  for (const Csan& c : fixtures) {
    const std::string text = csan_to_json(c);
    const Csan back = csan_from_json(text);
    CHECK(csan_to_json(back) == text);
    CHECK(csan_to_network(back) == csan_to_network(c));
  }
  const Csan shorthand = csan_from_json(R"({"alphabet": 2, "nodes": 3, "edges": [[0, 1, "id"], [1, 2, "id"]],
    "lambda": {"family": "lifelike", "params": [3, -1, 2, 3]}})");
  CHECK(shorthand.size() == 3);
  CHECK(csan_to_network(shorthand) == csan_to_network(build_game_of_life(path_graph(3))));
  CHECK(kind_of([] { csan_from_json(R"({"alphabet": 2, "nodes": 2, "edges": [[0, 5, "id"]]})"); }) !=
        ErrorKind::Parse);
}

TEST_CASE("embeddings, dowels and pseudo-orbits round trip") {
  const auto slowed = slow_down(Network::identity(3, 2), 3);
  const std::string e = embedding_to_json(slowed.embedding);
  CHECK(embedding_to_json(embedding_from_json(e)) == e);
  CHECK(embedding_from_json(e).time == 3);

  const Dowel d{{DowelSide::C1, DowelSide::C2}, {0, kNoNode}, {kNoNode, 1}};
  const std::string dt = dowel_to_json(d);
  const Dowel dback = dowel_from_json(dt);
  CHECK(dback.side == d.side);
  CHECK(dback.phi1 == d.phi1);
  CHECK(dback.phi2 == d.phi2);

  const PseudoOrbit p{{{0, 1}, {1, 1}, {1, 0}}, {1}};
  const PseudoOrbit pback = pseudo_orbit_from_json(pseudo_orbit_to_json(p));
  CHECK(pback.configs == p.configs);
  CHECK(pback.exempt == p.exempt);
}

TEST_CASE("gate networks and circuits round trip") {
  const GNetwork gn = nor_pair_network();
  const std::string g = gnet_to_json(gn);
  const GNetwork gback = gnet_from_json(g);
  CHECK(gnet_to_json(gback) == g);
  CHECK(gnetwork_to_network(gback) == gnetwork_to_network(gn));

  const Circuit c = random_closed_circuit(3, 3, 7);
  const std::string ct = circuit_to_json(c);
  const Circuit cback = circuit_from_json(ct);
  CHECK(circuit_to_json(cback) == ct);
  CHECK(circuit_network(cback) == circuit_network(c));
  CHECK(kind_of([] { gnet_from_json("{\"alphabet\": 2, \"gates\": 3}"); }) == ErrorKind::Parse);
}

TEST_CASE("gadgets and certificates round trip") {
  const Gadget wire = build_wire_gadget();
  const std::string w = gadget_to_json(gol_interface(), wire);
  const GadgetDocument doc = gadget_from_json(w);
  CHECK(gadget_to_json(doc.iface, doc.gadget) == w);
  CHECK(doc.gadget.net == wire.net);

  const CoherentCertificate& cert = build_certificate();
  const std::string ct = certificate_to_json(cert);
  const CoherentCertificate back = certificate_from_json(ct);
  CHECK(certificate_to_json(back) == ct);
  CHECK(back.time == cert.time);
  CHECK(back.gates.size() == cert.gates.size());
}

TEST_CASE("DOT output lists every node and edge") {
  const Network net = csan_to_network(build_rule90_ring(4));
  const std::string dot = network_to_dot(net, {"a", "b", "c", "d"});
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("\"a\"") != std::string::npos);
  CHECK(dot.back() == '\n');
  std::size_t arrows = 0;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++arrows;
  CHECK(arrows == 12);  // two neighbours plus the node's own state

  const std::string cdot = csan_to_dot(build_game_of_life(path_graph(3)));
  CHECK(cdot.rfind("graph", 0) == 0);
  CHECK(cdot.find("--") != std::string::npos);
  CHECK(gnet_to_dot(nor_pair_network()).find("NOR") != std::string::npos);
  CHECK(circuit_to_dot(random_closed_circuit(2, 2, 3)).find("->") != std::string::npos);
}
