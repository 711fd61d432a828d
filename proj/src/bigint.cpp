#include "twonormal/bigint.hpp"

#include <limits>
#include <stdexcept>

namespace twonormal {

long long to_int64(const BigInt& x) {
  if (x < std::numeric_limits<long long>::min() ||
      x > std::numeric_limits<long long>::max())
    throw std::overflow_error("value does not fit in 64 bits");
  return static_cast<long long>(x);
}

}  // namespace twonormal
