#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "ostab/partition.hpp"

namespace ostab::fixtures {

/// Golden diagram: `cell x y v` and `corner x y [label]` lines.
struct DiagramFixture {
    std::map<std::pair<int, int>, int> cells;
    std::map<std::pair<int, int>, Partition> corners;
};

inline std::string fixture_path(const std::string& name)
{
    return std::string(OSTAB_FIXTURE_DIR) + "/" + name;
}

inline DiagramFixture load_fixture(const std::string& name)
{
    std::ifstream in(fixture_path(name));
    if (!in)
        throw std::runtime_error("cannot open fixture " + name);
    DiagramFixture fx;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#')
            continue;
        std::istringstream ls(line);
        std::string kind;
        int x = 0;
        int y = 0;
        ls >> kind >> x >> y;
        if (kind == "cell") {
            int v = 0;
            ls >> v;
            fx.cells[{x, y}] = v;
        } else if (kind == "corner") {
            std::string label;
            ls >> label;
            fx.corners[{x, y}] = parse_partition(label);
        } else {
            throw std::runtime_error("bad fixture line: " + line);
        }
    }
    return fx;
}

}  // namespace ostab::fixtures
