#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ragweld::evalkit {

/// Lowercased runs of letters and digits; everything else separates tokens.
/// No stemming.
std::vector<std::string> tokenize(std::string_view text);

}  // namespace ragweld::evalkit
