#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace neutral {

/// Outcome of one exact identity check.
struct Check {
    std::string name;
    std::string claim;  ///< the identity being tested, in plain notation
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::optional<std::string> witness;
    std::string bound;  ///< range over which the identity was checked
};

inline bool all_pass(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

template <class Seq>
std::string render_sequence(const Seq& values) {
    std::ostringstream os;
    os << '[';
    bool first = true;
    for (const auto& v : values) {
        if (!first) os << ',';
        os << v;
        first = false;
    }
    os << ']';
    return os.str();
}

} // namespace neutral
