// Shatter function of J(7,3) for n <= 5 against the quadratic bounds.
#include <iostream>

#include "vcgraph/vcgraph.hpp"

int main() {
    using namespace vcgraph;
    const Graph g = make_johnson(7, 3);
    const auto table = pi_table(g, 5);
    std::cout << emit_table(table, TableFormat::Csv);
    for (const auto& b : bounds::applicable(g.family(), 4)) {
        const auto rep = check_bound(table, b);
        std::cout << b.name << ": " << (rep.passed() ? "holds" : "violated") << "\n";
    }
}
