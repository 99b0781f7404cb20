// Game of Life on graphs: the wire, clock and NOR gadgets, their coherent
// certificate, and the compiler from NOR gate networks to Game of Life.
//
// Graphs are built from alternating layers of 3 and 9 nodes; a signal is a
// pair of consecutive live layers moving one layer per step.  The adjacency is
// shipped as data (data/gol, generated by tools/gen_gol_fixtures.py).
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "annet/csan.hpp"
#include "annet/gadget.hpp"
#include "annet/gnet.hpp"
#include "annet/simulate.hpp"

namespace annet {

// C = P0..P8 (output half) and Q0..Q2 (input half).
Interface gol_interface();

// A wire gadget with one input copy and one output copy, six steps long.
Gadget build_wire_gadget();
Csan build_wire();
// Six layers in a ring; clock_initial() has the first two layers alive.
Csan build_clock();
Configuration clock_initial();
std::vector<std::string> clock_names();

// Two input wires, two output wires, two clocks and the central nodes v and a.
Gadget build_nor_gadget();
// Context of the NOR gadget's interior (both clocks in their starting phase).
Configuration nor_context();
// Nodes of the NOR gadget in the order l1..l3, l'1..l'3, c1..c3, a, v, r1..r3, r'1..r'3.
std::vector<std::size_t> nor_table_columns();

// Gates NOR and WIRE with T = 6.
const CoherentCertificate& build_certificate();

// Two NOR gates feeding each other: gate 0 reads nodes 0, 1 and writes 2, 3;
// gate 1 reads 2, 3 and writes 0, 1.
GNetwork nor_pair_network();

struct GolCompilation {
  Csan csan;
  Network net;
  BlockEmbedding embedding;
};

// Throws Error(InvalidInput) when a gate is not the NOR gate.
GolCompilation compile_to_gol(const GNetwork& gn, unsigned jobs = 1);

}  // namespace annet
