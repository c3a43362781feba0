// VC-dimension of the edge relation on a few small graphs, with the
// shattered set that certifies it.
#include <iostream>

#include "vcgraph/vcgraph.hpp"

int main() {
    using namespace vcgraph;
    for (const Graph& g : {make_johnson(7, 2), make_johnson(6, 3), make_hamming(3, 3), make_rook(3, 4)}) {
        const auto r = vc_dimension_edge(g);
        std::cout << g.family().name() << ": " << to_string(r.dimension) << "  {";
        bool first = true;
        for (auto v : r.certificate->base_set) {
            std::cout << (first ? "" : ", ") << to_string(g.label_or_index(v));
            first = false;
        }
        std::cout << "}\n";
    }
}
