#pragma once

// Every length-3 path of the worked (delta + w)^3 example with its printed weight.

#include "ndga/kn_flat.hpp"

#include <vector>

namespace ndga::testing {

struct PrintedPath {
  std::vector<VertexS> vertices;
  int weight;
};

inline std::vector<PrintedPath> worked_cube_paths() {
  const VertexS e{};
  return {
      {{e, {0}, {1}, {2}}, 1},
      {{e, {0}, {0, 0}, {1, 0}}, 1},
      {{e, {0}, {0, 0}, {0, 1}}, -1},
      {{e, {0}, {1}, {0, 1}}, 1},
      {{e, {0}, {0, 0}, {0, 0, 0}}, 1},
      {{e, e, {0}, {1}}, 1},
      {{e, {0}, {0}, {1}}, -1},
      {{e, {0}, {1}, {1}}, 1},
      {{e, {0}, {0}, {0, 0}}, -1},
      {{e, e, {0}, {0, 0}}, 1},
      {{e, {0}, {0, 0}, {0, 0}}, 1},
      {{e, e, e, {0}}, 1},
      {{e, e, {0}, {0}}, -1},
      {{e, {0}, {0}, {0}}, 1},
  };
}

} // namespace ndga::testing
