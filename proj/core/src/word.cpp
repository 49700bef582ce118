#include "cobordia/word.hpp"

#include <algorithm>

#include "cobordia/errors.hpp"

namespace cobordia {

ObjWord ObjWord::parse(std::string_view text) {
  std::vector<Orientation> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case '+':
        out.push_back(Orientation::Plus);
        break;
      case '-':
        out.push_back(Orientation::Minus);
        break;
      default:
        throw ParseError("invalid character '" + std::string(1, text[i]) +
                             "' at position " + std::to_string(i + 1) +
                             " (expected '+' or '-')",
                         i + 1);
    }
  }
  return ObjWord(std::move(out));
}

std::string ObjWord::str() const {
  std::string s;
  s.reserve(orientations_.size());
  for (Orientation o : orientations_) s.push_back(to_char(o));
  return s;
}

ObjWord dual(const ObjWord& w) {
  std::vector<Orientation> out(w.orientations().rbegin(), w.orientations().rend());
  for (Orientation& o : out) o = flip(o);
  return ObjWord(std::move(out));
}

ObjWord tensor(const ObjWord& w1, const ObjWord& w2) {
  std::vector<Orientation> out;
  out.reserve(w1.length() + w2.length());
  out.insert(out.end(), w1.begin(), w1.end());
  out.insert(out.end(), w2.begin(), w2.end());
  return ObjWord(std::move(out));
}

}  // namespace cobordia
