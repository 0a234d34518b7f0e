#pragma once

#include <doctest.h>

#include "qiclass/words.hpp"

namespace doctest {
template <>
struct StringMaker<qiclass::Word> {
  static String convert(const qiclass::Word& w) {
    return ("[" + qiclass::format_word(w) + "]").c_str();
  }
};
}  // namespace doctest
