#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "fixmet/metric_space.hpp"

namespace fixmet {

/// Total map T : X -> X over a finite metric space, stored as an image
/// table indexed like the space's point list. Immutable after construction.
class SelfMap {
public:
  SelfMap(std::shared_ptr<const FiniteMetricSpace> space, std::vector<std::size_t> images)
      : space_(std::move(space)), images_(std::move(images)) {
    if (!space_) throw std::invalid_argument("self-map needs a space");
    if (images_.size() != space_->size()) {
      throw std::invalid_argument("image table size does not match the space");
    }
    for (std::size_t img : images_) {
      if (img >= space_->size()) {
        throw std::invalid_argument("image index out of range");
      }
    }
  }

  /// Builds from a name table; every point must appear exactly once as a key.
  static SelfMap from_table(std::shared_ptr<const FiniteMetricSpace> space,
                            const std::map<std::string, std::string>& table) {
    if (!space) throw std::invalid_argument("self-map needs a space");
    if (table.size() != space->size()) {
      throw std::invalid_argument("map table must cover every point exactly once");
    }
    std::vector<std::size_t> images(space->size());
    for (const auto& [from, to] : table) {
      images[space->require_index(from)] = space->require_index(to);
    }
    return SelfMap(std::move(space), std::move(images));
  }

  const FiniteMetricSpace& space() const noexcept { return *space_; }
  std::shared_ptr<const FiniteMetricSpace> space_ptr() const noexcept { return space_; }

  std::size_t size() const noexcept { return images_.size(); }

  std::size_t apply(std::size_t i) const { return images_[i]; }

  const std::vector<std::size_t>& images() const noexcept { return images_; }

  friend bool operator==(const SelfMap& a, const SelfMap& b) {
    return *a.space_ == *b.space_ && a.images_ == b.images_;
  }

private:
  std::shared_ptr<const FiniteMetricSpace> space_;
  std::vector<std::size_t> images_;
};

struct ReachedFixedPoint {
  std::size_t point;
  std::size_t steps;  // index at which the fixed point first appears

  friend bool operator==(const ReachedFixedPoint&, const ReachedFixedPoint&) = default;
};

struct EnteredCycle {
  std::vector<std::size_t> cycle;  // cycle points in visit order
  std::size_t entry_index;         // orbit index where the cycle starts

  friend bool operator==(const EnteredCycle&, const EnteredCycle&) = default;
};

struct Truncated {
  std::size_t max_steps;

  friend bool operator==(const Truncated&, const Truncated&) = default;
};

using OrbitTerminus = std::variant<ReachedFixedPoint, EnteredCycle, Truncated>;

/// Picard orbit x_0, x_1 = Tx_0, ... with its classified terminus. On the
/// orbit of a repeating point the sequence ends with the first repeated
/// element; an orbit started at a fixed point is the single-element sequence.
struct Orbit {
  std::size_t start = 0;
  std::vector<std::size_t> sequence;
  OrbitTerminus terminus;

  bool reached_fixed_point() const {
    return std::holds_alternative<ReachedFixedPoint>(terminus);
  }
};

/// Points p with T(p) = p, ascending (= lexicographic by name).
inline std::vector<std::size_t> fixed_points(const SelfMap& map) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map.apply(i) == i) out.push_back(i);
  }
  return out;
}

/// Points of prime period two: T(T(p)) = p with T(p) != p, ascending.
inline std::vector<std::size_t> period_two_points(const SelfMap& map) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    std::size_t image = map.apply(i);
    if (image != i && map.apply(image) == i) out.push_back(i);
  }
  return out;
}

/// Walks the orbit from start until a point repeats or max_steps images have
/// been taken. Repetition is exact point identity; on a finite space any
/// max_steps >= |X| guarantees a classified terminus.
inline Orbit iterate_orbit(const SelfMap& map, std::size_t start, std::size_t max_steps) {
  if (start >= map.size()) throw UnknownPointError("orbit start index out of range");
  if (max_steps < 1) throw std::invalid_argument("max_steps must be at least 1");

  Orbit orbit;
  orbit.start = start;
  orbit.sequence.push_back(start);

  if (map.apply(start) == start) {
    orbit.terminus = ReachedFixedPoint{start, 0};
    return orbit;
  }

  std::map<std::size_t, std::size_t> first_seen{{start, 0}};
  for (std::size_t step = 1; step <= max_steps; ++step) {
    std::size_t next = map.apply(orbit.sequence.back());
    auto seen = first_seen.find(next);
    if (seen != first_seen.end()) {
      bool is_fixed = next == orbit.sequence.back();
      orbit.sequence.push_back(next);
      if (is_fixed) {
        orbit.terminus = ReachedFixedPoint{next, seen->second};
      } else {
        std::vector<std::size_t> cycle(orbit.sequence.begin() + static_cast<std::ptrdiff_t>(seen->second),
                                       orbit.sequence.end() - 1);
        orbit.terminus = EnteredCycle{std::move(cycle), seen->second};
      }
      return orbit;
    }
    first_seen.emplace(next, orbit.sequence.size());
    orbit.sequence.push_back(next);
  }

  orbit.terminus = Truncated{max_steps};
  return orbit;
}

inline Orbit iterate_orbit(const SelfMap& map, std::string_view start, std::size_t max_steps) {
  return iterate_orbit(map, map.space().require_index(start), max_steps);
}

}  // namespace fixmet
