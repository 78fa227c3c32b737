#pragma once

#include <doctest.h>

#include <cmath>

#include "tunnelsplit/error.hpp"

#define CHECK_ERROR_KIND(expr, expected)                                      \
  do {                                                                        \
    bool thrown_ = false;                                                     \
    try {                                                                     \
      (void)(expr);                                                           \
    } catch (const ::tunnelsplit::Error& e_) {                                \
      thrown_ = true;                                                         \
      CHECK_MESSAGE(e_.kind() == (expected), "got kind ",                     \
                    std::string(::tunnelsplit::to_string(e_.kind())));        \
    }                                                                         \
    CHECK_MESSAGE(thrown_, "no tunnelsplit::Error from " #expr);              \
  } while (0)

inline double rel_diff(double a, double b) { return std::fabs(a - b) / std::fabs(b); }
