#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>

namespace weakunits {

template <class Tag>
struct Id {
    std::uint32_t value = std::numeric_limits<std::uint32_t>::max();

    constexpr Id() = default;
    constexpr explicit Id(std::uint32_t v) : value(v) {}

    constexpr bool valid() const { return value != std::numeric_limits<std::uint32_t>::max(); }
    constexpr std::size_t index() const { return value; }
    auto operator<=>(const Id&) const = default;
};

template <class Tag>
std::ostream& operator<<(std::ostream& os, Id<Tag> id) {
    return os << Tag::prefix << id.value;
}

struct ObjTag { static constexpr const char* prefix = "o"; };
struct OneCellTag { static constexpr const char* prefix = "f"; };
struct TwoCellTag { static constexpr const char* prefix = "c"; };

using ObjId = Id<ObjTag>;
using OneCellId = Id<OneCellTag>;
using TwoCellId = Id<TwoCellTag>;

enum class Side { Left, Right };

}  // namespace weakunits

template <class Tag>
struct std::hash<weakunits::Id<Tag>> {
    std::size_t operator()(weakunits::Id<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
