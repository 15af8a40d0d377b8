#include "twolevel/text.hpp"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "twolevel/error.hpp"

namespace twolevel::text {
namespace {

const icu::Normalizer2& nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  return *n;
}

icu::UnicodeString normalized(std::string_view utf8, bool fold = true) {
  icu::UnicodeString in = icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
  if (fold) in.foldCase();
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = nfc().normalize(in, status);
  if (U_FAILURE(status)) throw Error("normalization failed");
  return out;
}

std::string to_utf8(const icu::UnicodeString& s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

}  // namespace

std::string normalize(std::string_view utf8) { return to_utf8(normalized(utf8)); }

std::string compose(std::string_view utf8) { return to_utf8(normalized(utf8, false)); }

std::vector<std::string> graphemes(std::string_view utf8) {
  icu::UnicodeString s = normalized(utf8);
  std::vector<std::string> out;
  int32_t i = 0;
  while (i < s.length()) {
    int32_t start = i;
    i = s.moveIndex32(i, 1);
    while (i < s.length() && u_getCombiningClass(s.char32At(i)) != 0) i = s.moveIndex32(i, 1);
    out.push_back(to_utf8(s.tempSubStringBetween(start, i)));
  }
  return out;
}

std::vector<std::string> words(std::string_view utf8) {
  icu::UnicodeString s = normalized(utf8);
  std::vector<std::string> out;
  int32_t i = 0;
  while (i < s.length()) {
    while (i < s.length() && !u_isalpha(s.char32At(i))) i = s.moveIndex32(i, 1);
    int32_t start = i;
    while (i < s.length() && (u_isalpha(s.char32At(i)) ||
                              u_getCombiningClass(s.char32At(i)) != 0)) {
      i = s.moveIndex32(i, 1);
    }
    if (i > start) out.push_back(to_utf8(s.tempSubStringBetween(start, i)));
  }
  return out;
}

}  // namespace twolevel::text
