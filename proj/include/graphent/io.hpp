#pragma once

#include <graphent/families.hpp>
#include <graphent/graph.hpp>

#include <sstream>
#include <string>
#include <string_view>

namespace graphent {

/// Text holding either an edge list ("n <count>" header) or one graph6 line.
inline Graph parse_graph_text(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string first;
    in >> first;
    if (first.empty())
        throw parse_error("empty graph input");
    if (first == "n")
        return parse_edge_list(text);
    std::string extra;
    if (in >> extra)
        throw parse_error("graph input: expected a single graph6 token or an edge list");
    return parse_graph6(first);
}

/// One graph6 member per line; blank lines and '#' comments are skipped.
inline FamilyRecord parse_family_text(std::string_view text, const Graph& h)
{
    FamilyRecord fam;
    fam.target_h = h;
    fam.n = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string token;
        if (!(ls >> token))
            continue;
        const Graph g = parse_graph6(token);
        if (fam.n < 0)
            fam.n = g.order();
        else if (g.order() != fam.n)
            throw parse_error("family member on line " + std::to_string(lineno) + " has a different vertex count");
        fam.members.push_back(LabeledGraphId::of(g));
    }
    if (fam.n < 0)
        throw parse_error("family input has no members");
    return fam;
}

}  // namespace graphent
