#pragma once

#include "hgd/decomposition.hpp"
#include "hgd/hypergraph.hpp"

#include <string>
#include <vector>

namespace hgd {

// text format: one edge per line, "edgeId(v1,v2,...)."; "%" starts a
// comment; blank lines ignored; CRLF input parses identically to LF.
// Parse errors carry line and column.
Hypergraph parse_hypergraph(const std::string & text);
Hypergraph read_hypergraph_file(const std::string & path);
std::string write_hypergraph(const Hypergraph & h);

struct DecompositionFile {
    DecompositionTree tree;
    std::vector<std::string> warnings;
};

// header "hgd 1" + "kind HD|GHD|FHD width p/q", then one node record per
// line: node <id> parent <id|-> bag {v,...} cover {edgeId=p/q,...}
DecompositionFile parse_decomposition(const std::string & text, const Hypergraph & h);
DecompositionFile read_decomposition_file(const std::string & path, const Hypergraph & h);

// canonical form: BFS renumbering, bag vertices by dense index, cover
// entries by edge index, rationals as p/q; write-then-read is the identity
// and re-writing is byte-stable
std::string write_decomposition(const Hypergraph & h, const DecompositionTree & d);

std::string read_text_file(const std::string & path);
void write_text_file(const std::string & path, const std::string & text);

} // namespace hgd
