// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string_view>

#include "rtt/errors.hpp"

namespace rtt {

// Planar position in meters.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Closed axis-aligned rectangle [x_min, x_max] x [y_min, y_max].
struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  bool valid() const { return x_min <= x_max && y_min <= y_max; }

  friend bool operator==(const Rect&, const Rect&) = default;
};

enum class Direction { kForward, kBackward, kLeft, kRight };

inline constexpr std::array<Direction, 4> kAllDirections = {
    Direction::kForward, Direction::kBackward, Direction::kLeft,
    Direction::kRight};

constexpr std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::kForward: return "forward";
    case Direction::kBackward: return "backward";
    case Direction::kLeft: return "left";
    case Direction::kRight: return "right";
  }
  return "?";
}

// Unit step for a direction: Forward = +y, Backward = -y, Left = -x,
// Right = +x.
constexpr Point2 unit_step(Direction d) {
  switch (d) {
    case Direction::kForward: return {0.0, 1.0};
    case Direction::kBackward: return {0.0, -1.0};
    case Direction::kLeft: return {-1.0, 0.0};
    case Direction::kRight: return {1.0, 0.0};
  }
  return {0.0, 0.0};
}

// A robot at the start of a round. `fov_side` is the side of its square
// field of view (l_o); `fly_length` is how far it travels along the chosen
// trajectory during the round (l_f).
struct RobotSpec {
  int robot_id = 0;
  Point2 position;
  double fov_side = 1.0;
  double fly_length = 0.0;

  double track_length() const { return fov_side + fly_length; }
};

// Square field of view centered on the robot.
inline Rect fov_square(const RobotSpec& robot) {
  const double h = robot.fov_side / 2.0;
  return {robot.position.x - h, robot.position.x + h, robot.position.y - h,
          robot.position.y + h};
}

// Region swept by the field of view while flying `fly_length` in `dir`.
// The rectangle is l_f + l_o long along the direction of travel and l_o wide
// across it; the starting field-of-view square is its trailing end.
inline Rect coverage_rect(const RobotSpec& robot, Direction dir) {
  if (!(robot.fov_side > 0.0) || !(robot.fly_length >= 0.0)) {
    throw ArgumentError("coverage_rect: requires fov_side > 0 and fly_length >= 0");
  }
  Rect r = fov_square(robot);
  switch (dir) {
    case Direction::kForward: r.y_max += robot.fly_length; break;
    case Direction::kBackward: r.y_min -= robot.fly_length; break;
    case Direction::kLeft: r.x_min -= robot.fly_length; break;
    case Direction::kRight: r.x_max += robot.fly_length; break;
  }
  return r;
}

// Where the robot ends up after flying its trajectory.
inline Point2 end_position(const RobotSpec& robot, Direction dir) {
  const Point2 u = unit_step(dir);
  return {robot.position.x + robot.fly_length * u.x,
          robot.position.y + robot.fly_length * u.y};
}

inline bool contains(const Rect& rect, const Point2& p) {
  return rect.x_min <= p.x && p.x <= rect.x_max && rect.y_min <= p.y &&
         p.y <= rect.y_max;
}

// Closed-rectangle intersection; touching edges give a degenerate rectangle.
inline std::optional<Rect> rect_intersection(const Rect& a, const Rect& b) {
  Rect r{std::max(a.x_min, b.x_min), std::min(a.x_max, b.x_max),
         std::max(a.y_min, b.y_min), std::min(a.y_max, b.y_max)};
  if (!r.valid()) return std::nullopt;
  return r;
}

}  // namespace rtt
