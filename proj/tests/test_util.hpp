// tests/test_util.hpp
#ifndef UKEDIT_TESTS_TEST_UTIL_HPP_
#define UKEDIT_TESTS_TEST_UTIL_HPP_

#include <filesystem>
#include <string>

#ifndef UKEDIT_FIXTURES_DIR
#error "UKEDIT_FIXTURES_DIR must be defined by the build"
#endif

inline std::filesystem::path fixtures_dir() { return UKEDIT_FIXTURES_DIR; }

inline std::filesystem::path fixture(const std::string& rel) { return fixtures_dir() / rel; }

#endif  // UKEDIT_TESTS_TEST_UTIL_HPP_
