// Glueing two networks over a shared set of dowel nodes, pseudo-orbits and
// their stitching, and the glueing of concrete symmetric networks.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "annet/csan.hpp"
#include "annet/network.hpp"

namespace annet {

enum class DowelSide { C1, C2 };

// Dowel element c is identified with node phi1[c] of the first network and
// node phi2[c] of the second.  Elements on side C1 follow the first network's
// local map, elements on side C2 the second's.
struct Dowel {
  std::vector<DowelSide> side;
  std::vector<std::size_t> phi1;
  std::vector<std::size_t> phi2;

  std::size_t size() const noexcept { return side.size(); }
  void validate(std::size_t n1, std::size_t n2) const;
};

inline constexpr std::size_t kNoNode = static_cast<std::size_t>(-1);

struct GlueResult {
  Network net;
  std::vector<std::size_t> map1;  // node of F1 -> node of the glued network
  std::vector<std::size_t> map2;  // node of F2 -> node of the glued network
};

// Node order: C1 elements, C2 elements, the rest of F1, the rest of F2.
GlueResult glue_networks(const Network& f1, const Network& f2, const Dowel& d);

struct PseudoOrbit {
  std::vector<Configuration> configs;  // x^0 .. x^T
  std::vector<std::size_t> exempt;     // sorted

  bool is_exempt(std::size_t v) const;
};

struct PseudoOrbitReport {
  bool pass = true;
  std::size_t t = 0;   // first failing transition t -> t+1
  std::size_t v = 0;   // failing node
  std::string detail;
};

PseudoOrbitReport check_pseudo_orbit(const Network& f, const PseudoOrbit& p);

// Stitches p1 (a pseudo-orbit of F1) and p2 (of F2) into a pseudo-orbit of the
// glued network.  Throws Error(TraceMismatch) naming (t, c) when the two
// sequences disagree on a dowel element.
PseudoOrbit glue_pseudo_orbits(const GlueResult& glued, const Dowel& d, const PseudoOrbit& p1,
                               const PseudoOrbit& p2);

struct CsanGlueResult {
  Csan csan;
  std::vector<std::size_t> map1;
  std::vector<std::size_t> map2;
};

// Checks the three conditions under which glueing keeps a symmetric labeled
// graph and throws Error(ConditionViolated) naming the one that fails.  When
// `family` is given and both inputs belong to it, the result is checked too.
CsanGlueResult csan_glue(const Csan& c1, const Csan& c2, const Dowel& d,
                         const std::optional<FamilySpec>& family = std::nullopt);

}  // namespace annet
