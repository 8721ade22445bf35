// Regenerates the data/ directory from the builtin definitions. The checked-in
// files are what the CLI examples and tests load; this tool keeps them in
// lockstep with the code.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ctxkit/avn.hpp"
#include "ctxkit/graph.hpp"
#include "ctxkit/rays.hpp"

int main(int argc, char** argv) {
    std::filesystem::path dir = argc > 1 ? argv[1] : "data";
    std::filesystem::create_directories(dir);
    auto put = [&](const std::string& name, const std::string& body) {
        std::ofstream out(dir / name, std::ios::binary);
        out << body;
        std::cout << "wrote " << (dir / name).string() << "\n";
    };
    for (const char* name : {"cabello18", "yu_oh13", "kcbs5"})
        put(std::string(name) + ".rays", ctxkit::serialize_rayset(ctxkit::builtin_rayset(name)));
    for (const char* name : {"c5", "k4", "icosahedron", "icosahedron_aux"})
        put(std::string(name) + ".graph", ctxkit::serialize_graph(ctxkit::builtin_graph(name)));
    for (const char* name : {"avn_cabello01", "phip_huang03", "peres_mermin", "bell_stabilizer"})
        put(std::string(name) + ".avn", ctxkit::serialize_avn(ctxkit::builtin_avn(name)));
    return 0;
}
