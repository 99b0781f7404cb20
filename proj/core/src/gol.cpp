#include "annet/gol.hpp"

#include "annet/io.hpp"
#include "gol_fixtures.hpp"
#include "json.hpp"

namespace annet {

namespace {

using json = nlohmann::json;

struct Kit {
  Interface iface;
  Gadget wire;
  Csan clock;
  Configuration clock_init;
  std::vector<std::string> clock_names;
  Gadget nor;
  Configuration nor_context;
  std::vector<std::size_t> columns;
  CoherentCertificate cert;
};

const Kit& kit() {
  static const Kit k = [] {
    Kit r;
    auto wire = gadget_from_json(fixtures::wire_json());
    r.iface = wire.iface;
    r.wire = std::move(wire.gadget);
    const json clock = json::parse(fixtures::clock_json());
    r.clock = csan_from_json(clock.at("csan").dump());
    r.clock_init = clock.at("initial").get<Configuration>();
    r.clock_names = clock.at("names").get<std::vector<std::string>>();
    r.nor = gadget_from_json(fixtures::nor_gadget_json()).gadget;
    const json nor = json::parse(fixtures::nor_gadget_json());
    r.columns = nor.at("table_columns").get<std::vector<std::size_t>>();
    r.nor_context = configuration_from_json(nor.at("context").dump());
    r.cert = certificate_from_json(fixtures::certificate_json());
    return r;
  }();
  return k;
}

}  // namespace

Interface gol_interface() { return kit().iface; }
Gadget build_wire_gadget() { return kit().wire; }
Csan build_wire() { return *kit().wire.csan; }
Csan build_clock() { return kit().clock; }
Configuration clock_initial() { return kit().clock_init; }
std::vector<std::string> clock_names() { return kit().clock_names; }
Gadget build_nor_gadget() { return kit().nor; }
Configuration nor_context() { return kit().nor_context; }
std::vector<std::size_t> nor_table_columns() { return kit().columns; }
const CoherentCertificate& build_certificate() { return kit().cert; }

GNetwork nor_pair_network() {
  GNetBuilder b(2);
  const auto w = b.new_nodes(4);
  const Gate& nor = catalog_gate("Gnor", "NOR");
  b.add(nor, {w[0], w[1]}, {w[2], w[3]});
  b.add(nor, {w[2], w[3]}, {w[0], w[1]});
  return b.build();
}

GolCompilation compile_to_gol(const GNetwork& gn, unsigned jobs) {
  const Gate& nor = catalog_gate("Gnor", "NOR");
  for (const auto& g : gn.gates)
    if (g.name != nor.name || g.in != nor.in || g.out != nor.out || g.table != nor.table)
      throw Error(ErrorKind::InvalidInput, "gate " + g.name + " is not the NOR gate");
  auto c = compile_gnetwork(gn, build_certificate(), game_of_life_family(), jobs);
  if (!c.csan) throw Error(ErrorKind::Construction, "Game of Life compilation lost its graph");
  if (auto bad = family_violation(*c.csan, game_of_life_family()))
    throw Error(ErrorKind::Construction, "compiled node " + std::to_string(*bad) + " is not a Game of Life node");
  return {std::move(*c.csan), std::move(c.net), std::move(c.embedding)};
}

}  // namespace annet
