#pragma once

#include <string>
#include <vector>

#include "liftcat/algebra/pcm_table.hpp"
#include "liftcat/fincat/category.hpp"

namespace liftcat {

// A hom-set PCM whose element i is the arrow hom(x, y)[i].
struct HomPcm {
  ObjId x, y;
  PcmTable table;
};

struct ParsedModel {
  FinCategory cat;
  std::vector<HomPcm> homs;
};

ParsedModel parse_fincat(const std::string& text, std::size_t cap = kDefaultCap);
ParsedModel load_fincat(const std::string& path, std::size_t cap = kDefaultCap);
std::string serialize_fincat(const FinCategory& c, const std::vector<HomPcm>& homs = {});
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace liftcat
