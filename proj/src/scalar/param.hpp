#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace wb {

/// Interned name of a formal deformation parameter (h, xi, theta, ...).
///
/// Parameters are central and even. The registry is process-wide and
/// append-only; ids are stable for the lifetime of the process.
class Param {
public:
    /// Registers `name` if new and returns its handle.
    static Param intern(std::string_view name);
    /// Handle for an already registered name.
    static std::optional<Param> find(std::string_view name);

    const std::string& name() const;
    std::uint32_t id() const { return id_; }

    friend bool operator==(Param a, Param b) { return a.id_ == b.id_; }
    friend auto operator<=>(Param a, Param b) { return a.id_ <=> b.id_; }

private:
    explicit Param(std::uint32_t id) : id_(id) {}
    std::uint32_t id_;
};

} // namespace wb
