#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weilrep::text {

std::string_view strip(std::string_view s);

/// Split on `sep` at bracket depth zero; ()[]{} all count as brackets.
std::vector<std::string_view> split_top_level(std::string_view s, char sep);

/// Whitespace-separated tokens, keeping bracketed groups together.
std::vector<std::string> tokens(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);

long parse_long(std::string_view s);

}  // namespace weilrep::text
