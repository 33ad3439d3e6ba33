#pragma once

#include <array>
#include <string_view>

#include "ceona/errors.hpp"

namespace ceona {

// The six two-input logic functions a programmed MRR gate can realize.
enum class GateFunction { And, Or, Xor, Nand, Nor, Xnor };

constexpr std::array<GateFunction, 6> kAllGateFunctions = {
    GateFunction::And,  GateFunction::Or,  GateFunction::Xor,
    GateFunction::Nand, GateFunction::Nor, GateFunction::Xnor};

constexpr bool gate_truth(GateFunction g, bool x, bool w) {
  switch (g) {
    case GateFunction::And:  return x && w;
    case GateFunction::Or:   return x || w;
    case GateFunction::Xor:  return x != w;
    case GateFunction::Nand: return !(x && w);
    case GateFunction::Nor:  return !(x || w);
    case GateFunction::Xnor: return x == w;
  }
  return false;
}

constexpr std::string_view gate_name(GateFunction g) {
  switch (g) {
    case GateFunction::And:  return "and";
    case GateFunction::Or:   return "or";
    case GateFunction::Xor:  return "xor";
    case GateFunction::Nand: return "nand";
    case GateFunction::Nor:  return "nor";
    case GateFunction::Xnor: return "xnor";
  }
  return "?";
}

inline GateFunction gate_from_name(std::string_view name) {
  for (GateFunction g : kAllGateFunctions) {
    if (gate_name(g) == name) return g;
  }
  throw input_error("unknown gate function: " + std::string(name));
}

}  // namespace ceona
