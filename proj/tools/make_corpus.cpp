// Regenerates the JSON fixtures under data/ from the builders.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "ubercontract/complex/builders.hpp"
#include "ubercontract/complex/io.hpp"

using namespace ubercontract;
namespace fs = std::filesystem;

namespace {

void write(const fs::path& path, const Json& j) {
  std::ofstream out(path);
  out << j.dump(1) << "\n";
}

Json map_pairs(const PolygonalComplex& c, const VertexMap& h) {
  Json j = Json::array();
  for (VertexId v = 0; v < h.size(); ++v) {
    if (h[v]) j.push_back({c.label(v), c.label(*h[v])});
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  fs::path root = argc > 1 ? argv[1] : "data";
  fs::create_directories(root / "corpus");

  struct Entry {
    std::string name, family;
    PolygonalComplex c;
  };
  std::vector<Entry> corpus{
      {"single_square", "squares", grid_complex(0, 0, 2, 2)},
      {"glued_squares", "squares", glued_squares()},
      {"triangle", "triangle", triangle_complex()},
      {"path_30", "tree", path_complex(30)},
      {"tree_020_s1", "tree", random_tree(20, 1)},
      {"tree_050_s2", "tree", random_tree(50, 2)},
      {"tree_100_s3", "tree", random_tree(100, 3)},
      {"tree_100_s4", "tree", random_tree(100, 4)},
      {"grid3x3", "grid", grid_complex(0, 0, 3, 3)},
      {"grid5x5", "grid", grid_complex(0, 0, 5, 5)},
      {"grid7x7", "grid", grid_complex(0, 0, 7, 7)},
      {"grid9x9", "grid", grid_complex(0, 0, 9, 9)},
      {"grid5x5_unfilled", "grid", grid_complex(0, 0, 5, 5, false)},
      {"ladder_8", "ladder", ladder_complex(8)},
      {"ladder_8_unfilled", "ladder", ladder_complex(8, false)},
      {"square_chain_4", "squares", square_chain(4)},
      {"square_tree_10_s7", "squares", random_square_tree(10, 7)},
  };
  Json index = Json::array();
  for (const auto& e : corpus) {
    write(root / "corpus" / (e.name + ".json"), complex_to_json(e.c));
    index.push_back({{"name", e.name}, {"family", e.family}, {"file", e.name + ".json"}});
  }
  write(root / "corpus" / "index.json", index);
  write(root / "single_square.json", complex_to_json(corpus[0].c));
  write(root / "grid7x7.json", complex_to_json(corpus[10].c));

  // Tree example: a path with the shift by one and singleton checkpoints.
  auto path = path_complex(200);
  write(root / "path200.json", complex_to_json(path));
  Json sys{{"L", 0}, {"checkpoints", Json::array()}, {"map", map_pairs(path, path_shift(path, 1))}};
  for (VertexId v = 0; v < path.num_vertices(); ++v) sys["checkpoints"].push_back({path.label(v)});
  write(root / "path200_system.json", sys);

  // The same construction on Z^2 along the x-axis.
  auto grid = centered_grid(3);
  write(root / "grid_centered3.json", complex_to_json(grid));
  Json gsys{{"L", 0}, {"checkpoints", Json::array()}, {"map", map_pairs(grid, grid_shift(grid, 1, 0))}};
  for (long x = -3; x <= 3; ++x) gsys["checkpoints"].push_back({grid_label(x, 0)});
  write(root / "grid_centered3_system.json", gsys);

  std::cout << "wrote " << corpus.size() << " corpus complexes to " << (root / "corpus").string() << "\n";
  return 0;
}
