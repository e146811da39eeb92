#pragma once

// GameConfig <-> JSON. Every key is optional; absent keys keep their defaults
// and unknown keys are rejected.
//
//   {"width": 80, "height": 30, "tv_ball": 2, "serve_direction": [1, -1],
//    "row_styles": [{"color": 12, "value": 8}], "info_font": "3x5", ...}

#include <istream>
#include <set>
#include <string>

#include <nlohmann/json.hpp>

#include "arkanoid/bigfont.hpp"
#include "arkanoid/config.hpp"
#include "arkanoid/error.hpp"

namespace arkanoid {

inline nlohmann::json config_to_json(const GameConfig& c) {
  nlohmann::json styles = nlohmann::json::array();
  for (const auto& s : c.row_styles) styles.push_back({{"color", s.color}, {"value", s.value}});
  return {
      {"width", c.width},
      {"height", c.height},
      {"info_bar_height", c.info_bar_height},
      {"pad_width", c.pad_width},
      {"pad_step", c.pad_step},
      {"lives", c.lives},
      {"tv_pad", c.tv_pad},
      {"tv_ball", c.tv_ball},
      {"tv_fall", c.tv_fall},
      {"serve_direction", {c.serve_direction.dx, c.serve_direction.dy}},
      {"block_rows", c.block_rows},
      {"block_cols", c.block_cols},
      {"block_height", c.block_height},
      {"block_top_gap", c.block_top_gap},
      {"row_styles", styles},
      {"cracked_color", c.cracked_color},
      {"info_font", std::string(to_string(c.info_font))},
  };
}

inline GameConfig config_from_json(const nlohmann::json& j, GameConfig c = {}) {
  if (!j.is_object()) throw Error(ErrorCode::kConfig, "config must be a JSON object");
  static const std::set<std::string> kKnown = {
      "width",   "height",     "info_bar_height", "pad_width",    "pad_step",      "lives",
      "tv_pad",  "tv_ball",    "tv_fall",         "serve_direction", "block_rows", "block_cols",
      "block_height", "block_top_gap", "row_styles", "cracked_color", "info_font",
  };
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.contains(key)) throw Error(ErrorCode::kConfig, "unknown config key '" + key + "'");
  }
  try {
    auto read = [&](const char* key, auto& field) {
      if (j.contains(key)) field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
    };
    read("width", c.width);
    read("height", c.height);
    read("info_bar_height", c.info_bar_height);
    read("pad_width", c.pad_width);
    read("pad_step", c.pad_step);
    read("lives", c.lives);
    read("tv_pad", c.tv_pad);
    read("tv_ball", c.tv_ball);
    read("tv_fall", c.tv_fall);
    read("block_rows", c.block_rows);
    read("block_cols", c.block_cols);
    read("block_height", c.block_height);
    read("block_top_gap", c.block_top_gap);
    if (j.contains("serve_direction")) {
      const auto& d = j.at("serve_direction");
      if (!d.is_array() || d.size() != 2) throw Error(ErrorCode::kConfig, "serve_direction must be [dx, dy]");
      c.serve_direction = {d[0].get<int>(), d[1].get<int>()};
    }
    if (j.contains("row_styles")) {
      c.row_styles.clear();
      for (const auto& s : j.at("row_styles")) {
        const int color = s.at("color").get<int>();
        if (color < 0 || color > 15) throw Error(ErrorCode::kConfig, "row color must be 0..15");
        c.row_styles.push_back({static_cast<std::uint8_t>(color), s.at("value").get<int>()});
      }
    }
    if (j.contains("cracked_color")) {
      const int color = j.at("cracked_color").get<int>();
      if (color < 0 || color > 15) throw Error(ErrorCode::kConfig, "cracked_color must be 0..15");
      c.cracked_color = static_cast<std::uint8_t>(color);
    }
    if (j.contains("info_font")) c.info_font = parse_font_size(j.at("info_font").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw;
    throw Error(ErrorCode::kConfig, e.what());
  }
  return c;
}

inline GameConfig load_config(std::istream& in) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kConfig, e.what());
  }
  return config_from_json(j);
}

}  // namespace arkanoid
