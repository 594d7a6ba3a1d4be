#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace sidon {

// On-disk set file: one structured header line
//   # sidon-set method=<name> n=<param> count=<elements>
// followed by one decimal integer per line, strictly ascending.
struct SetFile {
  std::string method;
  uint64_t n = 0;
  std::vector<mpz_class> elements;
};

void write_set_file(const std::string& path, const SetFile& sf);

// Throws std::invalid_argument on malformed input (bad header, count
// mismatch, non-numeric lines, out-of-order elements).
SetFile read_set_file(const std::string& path);

}  // namespace sidon
