#pragma once

// Catalog JSON files compiled into the library (see cmake/EmbedData.cmake).

#include <string_view>
#include <vector>

namespace gpoly::detail {

struct EmbeddedFile {
  std::string_view name;  // file stem, e.g. "fano"
  std::string_view text;
};

const std::vector<EmbeddedFile>& catalog_files();
std::string_view known_g_text();

}  // namespace gpoly::detail
