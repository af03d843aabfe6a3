#ifndef CUBELAB_REPORT_HPP
#define CUBELAB_REPORT_HPP

// Deterministic report emission: 12 significant digits, C locale, LF line
// endings, sorted JSON keys.  Identical inputs give identical bytes.

#include <string>
#include <vector>

namespace clab {

std::string fmt12(double v);

// One CSV line from already-formatted cells.
std::string csv_line(const std::vector<std::string>& cells);

void write_text_file(const std::string& path, const std::string& payload);

}  // namespace clab

#endif
