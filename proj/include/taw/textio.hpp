// Text forms of the objects the CLI moves around.
//
//   group elements   t[1,-2] * s0 s1        (translation part, then letters)
//   weights          1,-2
//   Hecke elements   (v^(1) + 1)*H[0 1] + (1)*H[e; w1]
//   theta atoms      theta[1,-2]            (accepted in Hecke expressions)
//
// Printing and parsing are inverse to each other on every value the library
// produces.
#pragma once

#include <string>

#include "taw/hecke.hpp"
#include "taw/rep.hpp"
#include "taw/weyl.hpp"

namespace taw {

struct parse_error : std::runtime_error {
  size_t position;
  std::string input;
  parse_error(const std::string& what, size_t pos, std::string in)
      : std::runtime_error(what), position(pos), input(std::move(in)) {}
  // two-line message with a caret under the offending position
  std::string pretty() const;
};

Vec parse_weight(const std::string& text, int expect_len);
std::string format_weight(const Vec& v);

IWElement parse_element(const WeylContext& W, const std::string& text);
std::string format_element(const WeylContext& W, const IWElement& w);

HeckeElement parse_hecke(const HeckeContext& H, const std::string& text);
std::string format_hecke(const WeylContext& W, const HeckeElement& h);

std::string format_character(const Character& c);
std::string format_asph(const AntisphericalElement& n);

}  // namespace taw
