#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "oddcut/types.hpp"

namespace oddcut {

// A failed internal assertion carrying an optional witness vertex.
class check_error : public std::runtime_error {
  public:
    explicit check_error(const std::string& what, std::optional<Vertex> witness = std::nullopt)
        : std::runtime_error(witness ? what + " (witness " + to_string(*witness) + ")" : what),
          witness_(std::move(witness)) {}

    const std::optional<Vertex>& witness() const { return witness_; }

  private:
    std::optional<Vertex> witness_;
};

}  // namespace oddcut
