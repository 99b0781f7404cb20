// JSON and DOT serialization for the library's data types.  Every reader
// throws Error(Parse) on malformed text and the type's own validation error on
// well-formed but invalid content.  `indent` < 0 gives compact output.
#pragma once

#include <string>
#include <vector>

#include "annet/circuit.hpp"
#include "annet/csan.hpp"
#include "annet/gadget.hpp"
#include "annet/glue.hpp"
#include "annet/gnet.hpp"
#include "annet/network.hpp"
#include "annet/simulate.hpp"

namespace annet {

Network network_from_json(const std::string& text);
std::string network_to_json(const Network& net, int indent = -1);

// An array of states or, for alphabets of at most ten letters, a digit string.
Configuration configuration_from_json(const std::string& text);
std::string configuration_to_json(const Configuration& x, int indent = -1);

// Vertex labels are {"table": [...], "bound": k} or a family shorthand
// {"family": "lifelike", "params": [...]}; a top-level "lambda" applies to
// every vertex without its own entry.
Csan csan_from_json(const std::string& text);
std::string csan_to_json(const Csan& c, int indent = -1);

BlockEmbedding embedding_from_json(const std::string& text);
std::string embedding_to_json(const BlockEmbedding& phi, int indent = -1);

// Dowel elements are the integers 0..m-1, listed in "C1" or "C2".
Dowel dowel_from_json(const std::string& text);
std::string dowel_to_json(const Dowel& d, int indent = -1);

PseudoOrbit pseudo_orbit_from_json(const std::string& text);
std::string pseudo_orbit_to_json(const PseudoOrbit& p, int indent = -1);

GNetwork gnet_from_json(const std::string& text);
std::string gnet_to_json(const GNetwork& gn, int indent = -1);

Circuit circuit_from_json(const std::string& text);
std::string circuit_to_json(const Circuit& c, int indent = -1);

struct GadgetDocument {
  Interface iface;
  Gadget gadget;
};
GadgetDocument gadget_from_json(const std::string& text);
std::string gadget_to_json(const Interface& iface, const Gadget& g, int indent = -1);

CoherentCertificate certificate_from_json(const std::string& text);
std::string certificate_to_json(const CoherentCertificate& cert, int indent = -1);

// Communication graph: an edge u -> v whenever v reads u.
std::string network_to_dot(const Network& net, const std::vector<std::string>& names = {});
std::string csan_to_dot(const Csan& c, const std::vector<std::string>& names = {});
std::string gnet_to_dot(const GNetwork& gn);
std::string circuit_to_dot(const Circuit& c);

}  // namespace annet
