#ifndef NETGLUE_JSON_IO_HPP
#define NETGLUE_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "netglue/reduce.hpp"
#include "netglue/treedec.hpp"

namespace netglue {

using Json = nlohmann::json;

Json digraph_to_json(const Digraph& g);
Digraph digraph_from_json(const Json& j);

Json ported_to_json(const PortedGraph& g);
PortedGraph ported_from_json(const Json& j);

Json treedec_to_json(const TreeDecomp& t);
TreeDecomp treedec_from_json(const Json& j);

Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

Json descriptor_to_json(const NetworkDescriptor& d);
NetworkDescriptor descriptor_from_json(const Json& j);

Json layout_to_json(const Layout& l);
Layout layout_from_json(const Json& j);

Json gadgets_to_json(const AssembledGadgets& g);
AssembledGadgets gadgets_from_json(const Json& j);

Json triple_to_json(const PumpTriple& t);
PumpTriple triple_from_json(const Json& j);

/// Output file of `reduce build`: the reduction output plus the gadget
/// family, so verification needs no extra inputs.
Json reduction_to_json(const ReductionOutput& out, const AssembledGadgets& g);
std::pair<ReductionOutput, AssembledGadgets> reduction_from_json(const Json& j);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j, bool pretty);

std::string read_text_file(const std::string& path);

}  // namespace netglue

#endif
