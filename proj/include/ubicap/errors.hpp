#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ubicap {

// A single argument or parameter outside its documented bounds.
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

// Aggregated bound violations: carries every failed check, not just the first,
// so a bad config file reports all its problems in one pass.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(std::vector<std::string> violations)
        : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

    const std::vector<std::string>& violations() const { return violations_; }

private:
    static std::string join(const std::vector<std::string>& items) {
        std::string msg;
        for (const auto& item : items) {
            if (!msg.empty()) msg += "; ";
            msg += item;
        }
        return msg;
    }

    std::vector<std::string> violations_;
};

// Filesystem failure; the message carries the offending path.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace ubicap
