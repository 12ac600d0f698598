#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace qweight {

/// Contents of a file under data/, compiled into the library.
std::string_view bundled_file(std::string_view name);
std::vector<std::string> bundled_file_names();

}  // namespace qweight
