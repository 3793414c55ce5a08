#pragma once

#include <gtest/gtest.h>

#include "reid/error.hpp"

/// Runs `stmt` and checks that it throws reid::Error of the given kind.
#define EXPECT_REID_ERROR(stmt, expected_kind)                                   \
  do {                                                                           \
    bool caught_ = false;                                                        \
    try {                                                                        \
      stmt;                                                                      \
    } catch (const reid::Error& e_) {                                            \
      caught_ = true;                                                            \
      EXPECT_EQ(e_.kind(), expected_kind) << e_.what();                          \
    }                                                                            \
    EXPECT_TRUE(caught_) << "expected " << reid::to_string(expected_kind);       \
  } while (0)
