#pragma once

#include "nccat/serialize.hpp"

inline nccat::NCPoly P(std::string_view s) { return nccat::parse_ncpoly(s); }
inline nccat::Word W(std::string_view s) { return nccat::parse_word(s); }
