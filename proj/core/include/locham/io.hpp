#pragma once

#include <string>

#include "locham/brute_force.hpp"
#include "locham/decomposition.hpp"
#include "locham/graph.hpp"

namespace locham {

// Line-oriented ASCII formats. Writers are byte-exact: sorted records,
// LF newlines, no trailing whitespace, so fixtures stay diffable.
// Lines starting with '#' are comments. Conventional extensions:
// .gr graphs, .td decompositions, .wit witnesses, .3p instances.

/// `graph <n>` header, `e <u> <v>` per edge (u < v canonical, either
/// order accepted), optional `label <v> <text>` lines.
Graph parse_graph(const std::string& text);
std::string write_graph(const Graph& g);

/// `td <numNodes> <forGraphN>` header, optional `path` flag and
/// `root <id>` line, one `bag <id> <v...>` per node, `link <a> <b>`
/// per tree edge. Node ids are 1-based in files. The parsed
/// decomposition is validated against g before being returned.
TreeDecomposition parse_td(const std::string& text, const Graph& g);
std::string write_td(const TreeDecomposition& td);

/// `map <u> <p>` lines; the mapping must be total over guest vertices.
VertexMap parse_witness(const std::string& text, const Graph& guest, const Graph& host);
std::string write_witness(const VertexMap& f);

/// `instance b=<b> m=<m> A=<a1>,<a2>,...`; validated before return.
ThreePartitionInstance parse_instance(const std::string& text);
std::string write_instance(const ThreePartitionInstance& inst);

/// Command-line form "b=7;m=1;A=2,2,3".
ThreePartitionInstance parse_instance_cli(const std::string& text);

} // namespace locham
