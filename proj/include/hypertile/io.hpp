#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "hypertile/hypergraph.hpp"

namespace hypertile {

// Text format: first line "n m", then m lines "u v w" (0-indexed, any order
// within a line). Emission is canonical: sorted triples in sorted order.
Hypergraph3 read_text(std::istream &in);
void write_text(std::ostream &out, const Hypergraph3 &h);
std::string to_text(const Hypergraph3 &h);

// JSON mirror: {"n": ..., "edges": [[u,v,w], ...]}.
Hypergraph3 from_json(const nlohmann::json &j);
nlohmann::json to_json(const Hypergraph3 &h);

} // namespace hypertile
