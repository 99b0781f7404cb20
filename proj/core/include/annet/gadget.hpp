// Gadgets: networks carrying input and output copies of a fixed interface,
// their glueing, coherent certificates and the compiler from G-networks.
#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annet/csan.hpp"
#include "annet/glue.hpp"
#include "annet/gnet.hpp"
#include "annet/network.hpp"
#include "annet/simulate.hpp"

namespace annet {

// Interface C = {0..size-1}; element c belongs to C_i when is_input[c].
struct Interface {
  std::vector<bool> is_input;
  std::vector<std::string> names;  // optional, one per element

  std::size_t size() const noexcept { return is_input.size(); }
  std::vector<std::size_t> inputs() const;
  std::vector<std::size_t> outputs() const;
  void validate() const;
};

// A copy maps interface element c to copy[c], a node of the gadget network.
using InterfaceCopy = std::vector<std::size_t>;

struct Gadget {
  Network net;
  std::optional<Csan> csan;  // present when the gadget is a symmetric network
  std::vector<InterfaceCopy> in_copies;
  std::vector<InterfaceCopy> out_copies;
  std::vector<std::string> names;  // optional node names

  // Throws Error(InvalidInput) unless copies are injective, in range and
  // pairwise disjoint, and the CSAN (if any) matches the network.
  void validate(const Interface& iface) const;
  // Nodes outside every copy, ascending.
  std::vector<std::size_t> interior() const;
  // P_g: images of C_o under input copies and of C_i under output copies.
  std::vector<std::size_t> exempt_nodes(const Interface& iface) const;
};

// Input k of A is identified with output m of B, or output k of A with input m of B.
struct GadgetWiring {
  std::vector<std::pair<std::size_t, std::size_t>> a_in_b_out;
  std::vector<std::pair<std::size_t, std::size_t>> a_out_b_in;
};

struct GadgetGlueResult {
  Gadget gadget;  // remaining copies: those of A, then those of B, in index order
  std::vector<std::size_t> map_a;
  std::vector<std::size_t> map_b;
};

// Glues through glue_networks (and csan_glue when both gadgets are CSANs).
// Throws Error(InvalidInput) when a copy index is missing or reused.
GadgetGlueResult gadget_glue(const Gadget& a, const Gadget& b, const Interface& iface,
                             const GadgetWiring& wiring,
                             const std::optional<FamilySpec>& family = std::nullopt);
Gadget disjoint_union(const Gadget& a, const Gadget& b, const Interface& iface);
// The gadget together with a disjoint copy of itself.
Gadget copy(const Gadget& a, const Interface& iface);

struct CertifiedGate {
  Gate gate;
  Gadget gadget;
  Configuration context;  // over gadget.interior(), ascending node order
  // Keyed by q_i ++ q_i' ++ q_o.
  std::map<std::vector<State>, PseudoOrbit> pseudo_orbits;
};

struct CoherentCertificate {
  std::size_t alphabet = 2;                     // states of the simulated gates
  Interface iface;
  std::vector<Configuration> state_configs;     // s_q over C
  std::uint64_t time = 1;
  std::vector<std::vector<std::vector<Configuration>>> traces;  // traces[q][q'][t] over C
  std::vector<CertifiedGate> gates;

  const CertifiedGate* find(const std::string& name) const;
};

struct CertificateReport {
  bool pass = true;
  std::size_t cells = 0;              // pseudo-orbit cells checked
  std::vector<std::string> failures;  // one line per failed clause
};

// Checks every clause of the coherence definition and, for CSAN gadgets, the
// interface conditions that keep glueing inside the symmetric class.
CertificateReport verify_certificate(const CoherentCertificate& cert, unsigned jobs = 1);

struct GNetCompilation {
  Network net;
  std::optional<Csan> csan;
  BlockEmbedding embedding;
  // Node of the compiled network for every (gate instance, gadget node).
  std::vector<std::vector<std::size_t>> instance_maps;
};

// Glues one certified gadget per gate, in gate order.  Throws
// Error(MissingGate) or Error(CertificateInvalid).
GNetCompilation compile_gnetwork(const GNetwork& gn, const CoherentCertificate& cert,
                                 const std::optional<FamilySpec>& family = std::nullopt,
                                 unsigned jobs = 1);

}  // namespace annet
