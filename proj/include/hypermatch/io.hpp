#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "hypermatch/decide.hpp"
#include "hypermatch/hypergraph.hpp"

namespace hm {

// Instance format, one record per line:
//   # free-form comment
//   p hg <n> <k> <m>
//   e <v1> ... <vk>        (m such lines, labels in 1..n)
// The header must precede the edges; vertices are 1..n. Parse errors carry line numbers.
Hypergraph parse_instance(std::istream& in);
Hypergraph parse_instance_file(const std::string& path);

// Inverse of parse_instance; requires the vertex set to be exactly 1..n. An optional comment
// is emitted as leading # lines.
std::string serialize_instance(const Hypergraph& H, const std::string& comment = "");

nlohmann::json matching_to_json(const Matching& m);
Matching matching_from_json(const nlohmann::json& j);

// Certificate JSON carries the far set, partition, canonical lattice basis, and the coset
// group (invariant factors plus the target element g0) computed from the lattice. The group
// block is derived data: serialization recomputes it, deserialization only checks its shape.
nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json decision_to_json(const Decision& dec);

}  // namespace hm
