// Export a built-in witness table, read it back and verify it.
#include <iostream>

#include "vcgraph/vcgraph.hpp"

int main() {
    using namespace vcgraph;
    for (const auto& w : builtin_witnesses()) {
        const auto text = export_witness(w).dump();
        const auto back = import_witness(json::parse(text));
        const auto report = verify_witness(back);
        std::cout << w.graph_spec.name() << ": " << (report.passed() ? "ok" : "FAILED") << " ("
                  << report.rows.size() << " rows, " << text.size() << " bytes)\n";
    }
}
