#pragma once
#include <stdexcept>
#include <string>

namespace ro2ss {

/// A differential or map composition that should vanish did not.
struct CompositionNotZero : std::runtime_error {
    explicit CompositionNotZero(const std::string& what) : std::runtime_error(what) {}
};

/// A monomial's sigma-divisibility contradicts survival to the requested page.
struct NotOnPage : std::runtime_error {
    explicit NotOnPage(const std::string& what) : std::runtime_error(what) {}
};

/// A page-turn was requested on a window not closed under the block shift.
struct WindowNotClosed : std::runtime_error {
    explicit WindowNotClosed(const std::string& what) : std::runtime_error(what) {}
};

/// A distinguished element's symbolic degree disagrees with its closed form.
struct DegreeMismatch : std::runtime_error {
    explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

/// Source/target blocks of a graded map violate its declared shifts.
struct BlockMismatch : std::runtime_error {
    explicit BlockMismatch(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ro2ss
