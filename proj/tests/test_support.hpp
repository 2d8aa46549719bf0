#pragma once

#include <gtest/gtest.h>

#include "kronreal/sampling.hpp"
#include "oracles.hpp"

#define EXPECT_MATRIX_NEAR(actual, expected, tol)                                     \
    do {                                                                              \
        const ::kronreal::CMatrix& _a = (actual);                                     \
        const ::kronreal::CMatrix& _e = (expected);                                   \
        ASSERT_EQ(_a.rows(), _e.rows());                                              \
        ASSERT_EQ(_a.cols(), _e.cols());                                              \
        EXPECT_LE(::kronreal::max_abs_diff(_a, _e), (tol)) << "entrywise mismatch";  \
    } while (0)
