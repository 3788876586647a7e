#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

// Locations inside the source tree. INFEX_REPO_DIR comes in as a compile
// definition so the binaries can run from any build directory.
namespace testpaths {

inline std::string repo(const std::string& relative) {
    return std::string(INFEX_REPO_DIR) + "/" + relative;
}

inline std::string resource(const std::string& name) {
    return repo("resources/" + name);
}

inline std::string sample(const std::string& name) {
    return repo("data/sample/" + name);
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("test input missing: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace testpaths
