#pragma once

#include <string>

#include "kmis/core.hpp"
#include "kmis/randomized.hpp"

namespace kmis {

enum class TextFormat { plain, fasta };

// File payload with line terminators removed; fasta additionally drops '>'
// header lines and concatenates the sequence lines. Throws on unreadable
// files and empty payloads.
std::string read_payload(const std::string& path, TextFormat format);

// Uniformly random length-m window of the text.
Sequence extract_pattern(const Sequence& text, std::uint32_t m, SeededRng& rng);

}  // namespace kmis
