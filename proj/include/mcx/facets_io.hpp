#ifndef MCX_FACETS_IO_HPP
#define MCX_FACETS_IO_HPP

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "simplicial_complex.hpp"

namespace mcx {

// Facet file format: one facet per line, vertex labels separated by spaces,
// '#' starts a comment, blank lines ignored.  Vertex order is first
// appearance.

inline SimplicialComplex read_facets(std::istream& in, const std::string& source = "<stream>") {
    std::vector<std::vector<std::string>> facets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::vector<std::string> facet;
        std::string tok;
        while (row >> tok) facet.push_back(tok);
        if (!facet.empty()) facets.push_back(std::move(facet));
    }
    if (in.bad()) throw parse_error(source + ": read failure");
    if (facets.empty()) throw parse_error(source + ": no facets found");
    return SimplicialComplex::from_facets(facets);
}

inline SimplicialComplex read_facets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open " + path);
    return read_facets(in, path);
}

// Facets are written in the complex's canonical (lexicographic) order, so
// output is byte-stable across runs.
inline void write_facets(std::ostream& out, const SimplicialComplex& K) {
    for (const auto& f : K.facets()) out << K.render(f) << '\n';
}

inline void write_facets_file(const std::string& path, const SimplicialComplex& K) {
    std::ofstream out(path);
    if (!out) throw parse_error("cannot open " + path + " for writing");
    write_facets(out, K);
    if (!out) throw parse_error("write failure on " + path);
}

} // namespace mcx

#endif
