#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>

namespace fincat {

// Names are the identity of objects and arrows: two arrows are equal iff
// their ids are equal.
struct ObjectId {
  std::string name;

  auto operator<=>(const ObjectId&) const = default;
  bool operator==(const ObjectId&) const = default;
};

struct ArrowId {
  std::string name;

  auto operator<=>(const ArrowId&) const = default;
  bool operator==(const ArrowId&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const ObjectId& id) { return os << id.name; }
inline std::ostream& operator<<(std::ostream& os, const ArrowId& id) { return os << id.name; }

}  // namespace fincat

template <>
struct std::hash<fincat::ObjectId> {
  std::size_t operator()(const fincat::ObjectId& id) const noexcept {
    return std::hash<std::string>{}(id.name);
  }
};

template <>
struct std::hash<fincat::ArrowId> {
  std::size_t operator()(const fincat::ArrowId& id) const noexcept {
    return std::hash<std::string>{}(id.name) ^ 0x9e3779b97f4a7c15ULL;
  }
};
