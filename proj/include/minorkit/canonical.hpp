#pragma once
#include <string>
#include <vector>

#include "minorkit/graph.hpp"

namespace minorkit {

// graph6 encoding of the lexicographically smallest adjacency matrix over all
// vertex orderings; equal for two graphs exactly when they are isomorphic.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g);
bool are_isomorphic(const Graph& a, const Graph& b);

// one representative per isomorphism class, ordered by canonical form
std::vector<Graph> dedup(const std::vector<Graph>& graphs);

}  // namespace minorkit
