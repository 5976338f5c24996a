#pragma once

#include <cstddef>

namespace qtoda {

// Global cap on the term count of any single polynomial.  Exceeding it
// raises ResourceLimit instead of letting a computation thrash.
std::size_t term_limit();
void set_term_limit(std::size_t n);
void guard_terms(std::size_t candidate, const char* where);

}  // namespace qtoda
