#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace unidu {

std::string trim(std::string_view s);

// Whitespace tokenization shared by the tokenizer, the metrics and the
// corpus statistics. Splits on runs of blanks, never returns empty tokens.
std::vector<std::string> split_ws(std::string_view s);

// Trim plus collapse of internal whitespace runs to single spaces.
std::string normalize_ws(std::string_view s);

// Number of maximal segments ending in '.', '!' or '?'; a trailing segment
// without a terminator counts as one. Non-empty text yields at least 1.
int count_sentences(std::string_view s);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace unidu
