#pragma once

#include <stdexcept>
#include <string>

namespace bch {

// Two QuadExt values carry different discriminants.
struct ContextMismatch : std::invalid_argument {
  explicit ContextMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// p^2 + 4q = 0: the characteristic roots coincide and the two-root Binet
// form does not exist. Callers fall back to the iterative strategy.
struct DegenerateDiscriminant : std::domain_error {
  explicit DegenerateDiscriminant(const std::string& what) : std::domain_error(what) {}
};

// Backward recurrence w_{n-2} = (w_n - p w_{n-1})/q needs q != 0.
struct NegativeIndexUnsupported : std::domain_error {
  explicit NegativeIndexUnsupported(const std::string& what) : std::domain_error(what) {}
};

struct IndexOutOfDomain : std::domain_error {
  explicit IndexOutOfDomain(const std::string& what) : std::domain_error(what) {}
};

}  // namespace bch
