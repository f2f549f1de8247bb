#pragma once

#include <filesystem>

namespace sylbase {

// Resolution order: $SYLBASE_DATA_DIR, the source-tree data directory this
// library was built from, the install-time share directory, then ./data.
std::filesystem::path default_data_dir();

}  // namespace sylbase
