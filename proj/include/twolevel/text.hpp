#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace twolevel::text {

// Canonical composed form (NFC) followed by full case folding.
std::string normalize(std::string_view utf8);

// Canonical composed form only; case is kept.
std::string compose(std::string_view utf8);

// Splits normalized text into user-perceived characters. Combining marks that
// survive NFC stay attached to their base.
std::vector<std::string> graphemes(std::string_view utf8);

// Lowercased word tokens: maximal runs of letters, everything else separates.
std::vector<std::string> words(std::string_view utf8);

}  // namespace twolevel::text
