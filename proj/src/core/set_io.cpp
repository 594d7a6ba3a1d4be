#include "core/set_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace sidon {

namespace {

std::string field(const std::string& header, const std::string& key) {
  std::string needle = key + "=";
  size_t pos = header.find(needle);
  if (pos == std::string::npos)
    throw std::invalid_argument("set file header missing field: " + key);
  size_t start = pos + needle.size();
  size_t end = header.find(' ', start);
  return header.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

void write_set_file(const std::string& path, const SetFile& sf) {
  if (sf.method.empty() || sf.method.find(' ') != std::string::npos)
    throw std::invalid_argument("write_set_file: bad method name");
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("write_set_file: cannot open " + path);
  out << "# sidon-set method=" << sf.method << " n=" << sf.n << " count=" << sf.elements.size()
      << "\n";
  for (const auto& x : sf.elements) out << x.get_str() << "\n";
  out.flush();
  if (!out) throw std::invalid_argument("write_set_file: write failed for " + path);
}

SetFile read_set_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("read_set_file: cannot open " + path);
  std::string header;
  if (!std::getline(in, header) || header.rfind("# sidon-set ", 0) != 0)
    throw std::invalid_argument("read_set_file: missing '# sidon-set' header");
  SetFile sf;
  sf.method = field(header, "method");
  uint64_t count = 0;
  try {
    sf.n = std::stoull(field(header, "n"));
    count = std::stoull(field(header, "count"));
  } catch (const std::exception&) {
    throw std::invalid_argument("read_set_file: non-numeric header field");
  }
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    mpz_class v;
    if (v.set_str(line, 10) != 0)
      throw std::invalid_argument("read_set_file: bad element line: " + line);
    if (!sf.elements.empty() && v <= sf.elements.back())
      throw std::invalid_argument("read_set_file: elements not strictly ascending");
    sf.elements.push_back(v);
  }
  if (sf.elements.size() != count)
    throw std::invalid_argument("read_set_file: header count mismatch");
  return sf;
}

}  // namespace sidon
