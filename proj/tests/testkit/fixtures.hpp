#pragma once

#include <filesystem>
#include <random>
#include <string_view>

#include "morseflow/diagram.hpp"

namespace morseflow::testkit {

std::filesystem::path data_path(std::string_view name);

// The diagram stored in tests/data/<name>.
SeparatrixDiagram load_fixture(std::string_view name);

// The unique 4-point flow with ids a, z (boundary source, sink) and s1, s2.
SeparatrixDiagram four_point_named();

// Random storage permutation of vertices and edges with fresh ids.
SeparatrixDiagram shuffled(const SeparatrixDiagram& d, std::mt19937& rng);

}  // namespace morseflow::testkit
