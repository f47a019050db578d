#pragma once

// Shared error types and debug-check plumbing for the eqcol library.

#include <stdexcept>
#include <string>

// Expensive internal consistency checks (full invariant scans inside the
// solvers).  Enabled by default in debug builds; define EQCOL_HEAVY_CHECKS=0/1
// to force either way.  Cheap assertions are unconditional.
#ifndef EQCOL_HEAVY_CHECKS
#ifdef NDEBUG
#define EQCOL_HEAVY_CHECKS 0
#else
#define EQCOL_HEAVY_CHECKS 1
#endif
#endif

namespace eqcol {

// Malformed input files (DIMACS, coloring/list files).
struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

// Caller violated a documented precondition (e.g. max degree too large for
// the requested algorithm).
struct precondition_error : std::invalid_argument {
    explicit precondition_error(const std::string& what)
        : std::invalid_argument(what) {}
};

// An internal invariant failed; always a bug.  The message carries whatever
// state dump the throw site could afford.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

// A configurable work budget ran out before an answer was reached.
struct budget_exceeded : std::runtime_error {
    explicit budget_exceeded(const std::string& what)
        : std::runtime_error(what) {}
};

namespace detail {
[[noreturn]] inline void check_fail(const char* expr, const char* file, int line,
                                    const std::string& msg) {
    throw internal_error(std::string("check failed: ") + expr + " at " + file +
                         ":" + std::to_string(line) +
                         (msg.empty() ? "" : (" — " + msg)));
}
}  // namespace detail

// Unconditional cheap invariant check.
#define EQCOL_CHECK(expr)                                                     \
    do {                                                                      \
        if (!(expr)) ::eqcol::detail::check_fail(#expr, __FILE__, __LINE__, ""); \
    } while (0)

#define EQCOL_CHECK_MSG(expr, msg)                                            \
    do {                                                                      \
        if (!(expr))                                                          \
            ::eqcol::detail::check_fail(#expr, __FILE__, __LINE__, (msg));    \
    } while (0)

// Heavy check: compiled out unless EQCOL_HEAVY_CHECKS.
#if EQCOL_HEAVY_CHECKS
#define EQCOL_HEAVY(expr) EQCOL_CHECK(expr)
#define EQCOL_HEAVY_MSG(expr, msg) EQCOL_CHECK_MSG(expr, msg)
#else
#define EQCOL_HEAVY(expr) ((void)0)
#define EQCOL_HEAVY_MSG(expr, msg) ((void)0)
#endif

}  // namespace eqcol
