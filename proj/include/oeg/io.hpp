#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "oeg/biclosed.hpp"
#include "oeg/exchange.hpp"
#include "oeg/lattice.hpp"
#include "oeg/quiver.hpp"
#include "oeg/stringmod.hpp"

namespace oeg::io {

using nlohmann::json;

/// First line of every DOT document; bump when labels change meaning.
inline constexpr const char* dot_header = "// oeg-dot label-format 1";

/// {"n", "m", "matrix"}. All external vertex numbers are 1-based.
json quiver_to_json(const IceQuiver& q);
/// {"vertices", "frozen", "arrows"}.
json quiver_to_arrow_json(const IceQuiver& q);
/// Accepts either form; frozen vertices must be the last ones. Throws InputError.
IceQuiver quiver_from_json(const json& j);
IceQuiver parse_quiver(const std::string& text);

json exchange_to_json(const OrientedExchangeGraph& g);
OrientedExchangeGraph exchange_from_json(const json& j);
std::string exchange_to_dot(const OrientedExchangeGraph& g);

json lattice_to_json(const FiniteLattice& l);
FiniteLattice lattice_from_json(const json& j);
/// Node labels are optional; default is the element index.
std::string lattice_to_dot(const FiniteLattice& l, const std::vector<std::string>& labels = {});

/// [{"id", "word", "dim"}], ids 1-based in listing order.
json indecomposables_to_json(const Algebra& a);
/// Checks a listing against an algebra; returns the module ids in listing order.
std::vector<int> indecomposables_from_json(const Algebra& a, const json& j);

/// {"elements": [...], "productions": [[a, b, c], ...]} with 1-based indices.
json closure_space_to_json(const TripleClosureSpace& s);
TripleClosureSpace closure_space_from_json(const json& j);

/// Sorted 1-based module ids.
json module_set_to_json(const Algebra& a, Mask x);

}  // namespace oeg::io
