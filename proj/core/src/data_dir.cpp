#include "sylbase/data_dir.hpp"

#include <cstdlib>

namespace sylbase {

std::filesystem::path default_data_dir() {
    if (const char* env = std::getenv("SYLBASE_DATA_DIR"); env && *env) return env;
#ifdef SYLBASE_SOURCE_DATA_DIR
    if (std::filesystem::is_directory(SYLBASE_SOURCE_DATA_DIR)) return SYLBASE_SOURCE_DATA_DIR;
#endif
#ifdef SYLBASE_INSTALL_DATA_DIR
    if (std::filesystem::is_directory(SYLBASE_INSTALL_DATA_DIR)) return SYLBASE_INSTALL_DATA_DIR;
#endif
    return "data";
}

}  // namespace sylbase
