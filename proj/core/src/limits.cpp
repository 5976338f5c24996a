#include "qtoda/limits.hpp"

#include <atomic>
#include <string>

#include "qtoda/errors.hpp"

namespace qtoda {

namespace {
std::atomic<std::size_t> g_term_limit{5'000'000};
}

std::size_t term_limit() { return g_term_limit.load(std::memory_order_relaxed); }

void set_term_limit(std::size_t n) { g_term_limit.store(n ? n : 1, std::memory_order_relaxed); }

void guard_terms(std::size_t candidate, const char* where) {
  if (candidate > term_limit())
    throw ResourceLimit(std::string(where) + " would hold " + std::to_string(candidate) + " terms");
}

}  // namespace qtoda
