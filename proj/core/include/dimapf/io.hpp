#ifndef DIMAPF_IO_HPP
#define DIMAPF_IO_HPP

#include <iosfwd>

#include "dimapf/mapf.hpp"

namespace dimapf {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Instance text format, one directive per line, '#' starts a comment:
///   node <id>
///   arc <u> <v>          directed arc (nodes created on demand)
///   edge <u> <v>         both arcs
///   agent <name>
///   init <name> <node>
///   goal <name> <node>
///   regime simple|rotation|both   (default both)
///   rot2 allow|forbid             (default allow)
/// Agents first mentioned in init/goal lines are declared implicitly.
Instance parse_instance(std::istream &in);
Instance parse_instance_file(const std::string &path);
std::string render_instance(const Instance &inst);

/// Plan text format, one step per line:
///   move <agent> <from> <to>
///   rot <v1> <v2> ... <vk>       cycle in traversal order
Plan parse_plan(std::istream &in, const Instance &inst);
Plan parse_plan_file(const std::string &path, const Instance &inst);
std::string render_plan(const Plan &plan, const Instance &inst);

} // namespace dimapf

#endif
