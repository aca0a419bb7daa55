#include "burgers/errors.hpp"

namespace burgers {

void require(bool condition, const std::string& message) {
  if (!condition) throw DomainError(message);
}

}  // namespace burgers
