// Regenerates the golden documents consumed by the acceptance test.
// Usage: make_golden <output directory>
#include "mgc/bridge.hpp"
#include "mgc/document.hpp"

#include <fstream>
#include <iostream>

using namespace mgc;

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_golden <dir>\n";
        return 3;
    }
    std::string dir = argv[1];
    auto write = [&](const std::string& name, const Document& d) {
        std::ofstream out(dir + "/" + name);
        out << serialize(d);
    };
    write("k0.json", make_document(k_chain(0)));
    write("k_plus1.json", make_document(k_mixed(1)));
    write("l_eps.json", make_document(l_eps(k_graded(0))));
    write("graded_pair.json",
          make_document(direct_sum(k_graded(0), insert_at_weight(k_chain(2), -1))));
    write("unit_tower.json", make_document(unit_fil()));
    write("tate_k_plus1.json", make_document(tate_realization(k_mixed(1))));
    return 0;
}
