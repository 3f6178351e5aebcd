#pragma once

#include <stdexcept>

namespace ydlie {

/// An argument lies outside the subspace an operation is defined on.
class DomainError : public std::domain_error
{
  public:
	using std::domain_error::domain_error;
};

/// An intermediate result broke a property that holds by theory; this points
/// at a bug or at corrupted input structures, never at a user mistake.
class InvariantViolation : public std::logic_error
{
  public:
	using std::logic_error::logic_error;
};

} // namespace ydlie
