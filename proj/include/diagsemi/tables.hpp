#pragma once
#include <string>
#include <vector>

namespace diagsemi {

// Names of every table the renderer can reproduce, in canonical order.
std::vector<std::string> table_names();

// Render a table as CSV text; unknown names raise RangeError.
std::string render_table(const std::string& name);

}  // namespace diagsemi
