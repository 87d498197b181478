#ifndef ODDSIGN_FAMILIES_HPP
#define ODDSIGN_FAMILIES_HPP

#include "oddsign/graph.hpp"

namespace oddsign::families {

Graph path(int n);
Graph cycle(int n);
Graph complete(int n);
Graph empty(int n);
Graph star(int leaves);                       // centre is vertex 0
Graph complete_bipartite(int a, int b);       // parts [0,a) and [a,a+b)
Graph petersen();                             // outer 0..4, inner 5..9
Graph triangular_prism();                     // triangles {0,1,2}, {3,4,5}; matching i~i+3
// Hole 0..k-1 plus hub k adjacent to `spokes`.
Graph wheel(int hole_length, std::initializer_list<int> spokes);
// Apex 0, triangle 1,2,3, path i runs from the apex to triangle vertex i
// through lengths[i]-1 interior vertices.
Graph pyramid(int l1, int l2, int l3);
// Triangles {0,1,2} and {3,4,5}; path i joins i to i+3 with the given length.
Graph prism(int l1, int l2, int l3);
// Two apexes 0 and 1 joined by three paths of the given lengths (each >= 2).
Graph theta(int l1, int l2, int l3);

}  // namespace oddsign::families

#endif  // ODDSIGN_FAMILIES_HPP
