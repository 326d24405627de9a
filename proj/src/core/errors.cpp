#include "hadinv/core/errors.hpp"

namespace hadinv {

ZeroEntryError::ZeroEntryError(std::size_t row, std::size_t col, const std::string& what)
    : Error(what), row_(row), col_(col) {}

NumericalError::NumericalError(const std::string& what, double pivot)
    : Error(what), pivot_(pivot) {}

}  // namespace hadinv
