#pragma once

#include <stdexcept>
#include <string>

namespace spanconfig {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidArgument : Error {
  using Error::Error;
};

struct LengthMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

struct BadSubsetSize : Error {
  using Error::Error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct RankDeficient : Error {
  using Error::Error;
};

struct BlockRankDeficient : Error {
  int block;  // 1-based index of the first offending block
  explicit BlockRankDeficient(int t)
      : Error("block " + std::to_string(t) + " is rank deficient"), block(t) {}
};

struct InvalidCode : Error {
  using Error::Error;
};

struct NonConstantAlpha : Error {
  using Error::Error;
};

struct BoundExceeded : Error {
  using Error::Error;
};

struct ParseError : InvalidArgument {
  using InvalidArgument::InvalidArgument;
};

}  // namespace spanconfig
