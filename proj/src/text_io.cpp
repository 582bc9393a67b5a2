#include "kmis/text_io.hpp"

#include <fstream>
#include <sstream>

namespace kmis {

std::string read_payload(const std::string& path, TextFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::string payload;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (format == TextFormat::fasta && !line.empty() && line.front() == '>') {
      continue;
    }
    payload += line;
  }
  if (payload.empty()) {
    throw std::runtime_error("empty payload in " + path);
  }
  return payload;
}

Sequence extract_pattern(const Sequence& text, std::uint32_t m, SeededRng& rng) {
  check_alignment_sizes(text.size(), m);
  const std::uint64_t start = rng.below(text.size() - m + 1);
  return Sequence(text.begin() + static_cast<std::ptrdiff_t>(start),
                  text.begin() + static_cast<std::ptrdiff_t>(start + m));
}

}  // namespace kmis
