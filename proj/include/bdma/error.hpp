// SPDX-License-Identifier: Apache-2.0

#ifndef BDMA_ERROR_HPP
#define BDMA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bdma
{
    // Violated precondition of a numerical routine (bad index, bad length, bad argument range).
    class DomainError : public std::domain_error
    {
    public:
        using std::domain_error::domain_error;
    };

    // Invalid or inconsistent scenario configuration.
    class ConfigError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    class IoError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A Monte-Carlo drop failed; carries the drop index.
    class CampaignError : public std::runtime_error
    {
    public:
        CampaignError(std::size_t drop_index, const std::string &what)
            : std::runtime_error("drop " + std::to_string(drop_index) + ": " + what), drop_index_(drop_index) {}

        std::size_t drop_index() const noexcept { return drop_index_; }

    private:
        std::size_t drop_index_;
    };
}

#endif
