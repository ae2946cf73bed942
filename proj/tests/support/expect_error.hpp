#pragma once

#include <gtest/gtest.h>

#include <string>

// Runs `fn`, expecting an exception of type `E` whose errc() equals `want`.
// Returns the error message ("" when nothing matching was thrown).
template <typename E, typename Errc, typename Fn>
std::string expect_errc(Fn&& fn, Errc want) {
  try {
    fn();
  } catch (const E& e) {
    EXPECT_EQ(e.errc(), want) << e.what();
    return e.what();
  }
  ADD_FAILURE() << "expected an error, nothing was thrown";
  return {};
}
