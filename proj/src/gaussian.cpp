#include "twk/gaussian.hpp"

#include <algorithm>

namespace twk {

namespace {

Rational parse_coefficient(std::string_view s, std::string_view whole) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  if (s.front() == '+') s.remove_prefix(1);
  try {
    return Rational::parse(s);
  } catch (const ParseError&) {
    throw ParseError("malformed complex literal '" + std::string(whole) + "'");
  }
}

}  // namespace

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string compact;
  std::copy_if(text.begin(), text.end(), std::back_inserter(compact), [](char c) { return c != ' '; });
  std::string_view s = compact;
  if (s.empty()) throw ParseError("empty complex literal");
  if (s.back() != 'i') return {parse_coefficient(s, text), Rational(0)};

  s.remove_suffix(1);
  if (!s.empty() && s.back() == '*') s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), parse_coefficient(s, text)};
  return {parse_coefficient(s.substr(0, split), text), parse_coefficient(s.substr(split), text)};
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  const std::string imag = im_ == 1 ? "i" : (im_ == -1 ? "-i" : im_.str() + "*i");
  if (re_.is_zero()) return imag;
  return re_.str() + (im_.sign() > 0 ? "+" : "") + imag;
}

}  // namespace twk
