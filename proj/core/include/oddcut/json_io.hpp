#pragma once

#include <string>

#include "oddcut/lattice_set.hpp"
#include "oddcut/oddsets.hpp"

namespace oddcut {

struct Approximation;

// Interchange formats. A vertex is an array of integers; a lattice set is
// {"d": int, "members": [[int,...],...]} with members sorted
// lexicographically; an approximation is {"d","black","white","window"}.
std::string to_json(const Vertex& v);
std::string to_json(const LatticeSet& s);
std::string to_json(const OddSetReport& r);
std::string to_json(const Approximation& a);

LatticeSet lattice_set_from_json(const std::string& text);
Approximation approximation_from_json(const std::string& text);

}  // namespace oddcut
