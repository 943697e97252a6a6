#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "graph.hpp"
#include "text_format.hpp"

namespace testsupport {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string sample_path() {
  return std::string(SOFTGRAPH_DATA_DIR) + "/sample.sg";
}

inline softgraph::SoftwareGraph load_sample() {
  return softgraph::parse_graph_text(read_file(sample_path()));
}

}  // namespace testsupport
