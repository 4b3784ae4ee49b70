#pragma once

#include "sympflag/errors.hpp"

// Passes when `expr` throws sympflag::Error of the given kind.
#define CHECK_ERROR_KIND(expr, expected_kind)                          \
  do {                                                                 \
    bool thrown_ = false;                                              \
    try {                                                              \
      (void)(expr);                                                    \
    } catch (const ::sympflag::Error& e_) {                            \
      thrown_ = true;                                                  \
      CHECK_MESSAGE(e_.kind() == (expected_kind), e_.what());          \
    }                                                                  \
    CHECK_MESSAGE(thrown_, "no sympflag::Error thrown by " #expr);     \
  } while (0)
