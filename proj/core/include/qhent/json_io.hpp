#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "qhent/morphism.hpp"

namespace qhent::io {

/// Key-order-preserving documents so emitted reports are byte-stable.
using Json = nlohmann::ordered_json;

struct Violation {
  std::string location; // JSON-pointer-style path into the document
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

/// Structural and semantic validation of a group document. Checks the whole
/// tree and returns every violation found; parsing never runs on a document
/// that fails here.
ValidationReport validate_group(const Json& doc, const std::string& at = "");

/// Shape validation of an endomorphism document. Domain-dependent rules
/// (shift needs a restricted sum, table keys must be members, ...) surface
/// when the map is built against its group.
ValidationReport validate_endo(const Json& doc, const std::string& at = "");

ValidationReport validate_witness(const Json& doc, const std::string& at = "");

/// The descriptor encoded by a validated group document. The sugar forms
/// ("iwasawa", "hamiltonian") expand to the primitive constructors.
DescriptorPtr parse_descriptor(const Json& doc);

std::shared_ptr<const DescriptorGroup> parse_group(const Json& doc,
                                                   std::uint64_t seed = 0);

EndoPtr parse_endo(const Json& doc,
                   const std::shared_ptr<const DescriptorGroup>& g);

SubgroupWitness parse_witness(const Json& doc,
                              const std::shared_ptr<const DescriptorGroup>& g);

/// Base families over a group:
///   "blocks:K"  - coordinate blocks j = 1..K: the elements supported on the
///                 first j sum indices (all of every finite direct factor)
///   "cyclic"    - every cyclic subgroup of a finite group
///   JSON array  - explicit generator lists, hex element codes
std::vector<FiniteSubgroup> parse_bases(
    const Json& spec, const std::shared_ptr<const DescriptorGroup>& g);
std::vector<FiniteSubgroup> parse_bases_string(
    const std::string& spec, const std::shared_ptr<const DescriptorGroup>& g);

Json descriptor_to_json(const Descriptor& d);

Json load_json_file(const std::string& path); // DecodeError on failure

} // namespace qhent::io
