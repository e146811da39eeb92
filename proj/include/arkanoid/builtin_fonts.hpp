#pragma once

// Builtin glyph templates in the template file format (see bigfont.hpp).
// '#' = full cell, '.' = empty cell. The 9x11 set is the 3x5 set scaled 3x
// horizontally with rows repeated 2,2,3,2,2.

#include <string_view>

namespace arkanoid::fonts {

inline constexpr std::string_view kTemplate3x5 = R"glyphs(
glyph 32 3 5
...
...
...
...
...
glyph 48 3 5
###
#.#
#.#
#.#
###
glyph 49 3 5
..#
..#
..#
..#
..#
glyph 50 3 5
###
..#
###
#..
###
glyph 51 3 5
###
..#
###
..#
###
glyph 52 3 5
#.#
#.#
###
..#
..#
glyph 53 3 5
###
#..
###
..#
###
glyph 54 3 5
###
#..
###
#.#
###
glyph 55 3 5
###
..#
..#
..#
..#
glyph 56 3 5
###
#.#
###
#.#
###
glyph 57 3 5
###
#.#
###
..#
###
glyph 58 3 5
...
.#.
...
.#.
...
glyph 65 3 5
.#.
#.#
###
#.#
#.#
glyph 66 3 5
##.
#.#
##.
#.#
##.
glyph 67 3 5
###
#..
#..
#..
###
glyph 68 3 5
##.
#.#
#.#
#.#
##.
glyph 69 3 5
###
#..
##.
#..
###
glyph 70 3 5
###
#..
##.
#..
#..
glyph 71 3 5
###
#..
#.#
#.#
###
glyph 72 3 5
#.#
#.#
###
#.#
#.#
glyph 73 3 5
###
.#.
.#.
.#.
###
glyph 74 3 5
..#
..#
..#
#.#
###
glyph 75 3 5
#.#
#.#
##.
#.#
#.#
glyph 76 3 5
#..
#..
#..
#..
###
glyph 77 3 5
#.#
###
#.#
#.#
#.#
glyph 78 3 5
##.
#.#
#.#
#.#
#.#
glyph 79 3 5
.#.
#.#
#.#
#.#
.#.
glyph 80 3 5
###
#.#
###
#..
#..
glyph 81 3 5
###
#.#
#.#
###
..#
glyph 82 3 5
##.
#.#
##.
#.#
#.#
glyph 83 3 5
.##
#..
.#.
..#
##.
glyph 84 3 5
###
.#.
.#.
.#.
.#.
glyph 85 3 5
#.#
#.#
#.#
#.#
###
glyph 86 3 5
#.#
#.#
#.#
#.#
.#.
glyph 87 3 5
#.#
#.#
#.#
###
#.#
glyph 88 3 5
#.#
#.#
.#.
#.#
#.#
glyph 89 3 5
#.#
#.#
.#.
.#.
.#.
glyph 90 3 5
###
..#
.#.
#..
###
)glyphs";

inline constexpr std::string_view kTemplate5x7 = R"glyphs(
glyph 32 5 7
.....
.....
.....
.....
.....
.....
.....
glyph 48 5 7
.###.
#...#
#..##
#.#.#
##..#
#...#
.###.
glyph 49 5 7
..#..
.##..
..#..
..#..
..#..
..#..
.###.
glyph 50 5 7
.###.
#...#
....#
...#.
..#..
.#...
#####
glyph 51 5 7
#####
...#.
..#..
...#.
....#
#...#
.###.
glyph 52 5 7
...#.
..##.
.#.#.
#..#.
#####
...#.
...#.
glyph 53 5 7
#####
#....
####.
....#
....#
#...#
.###.
glyph 54 5 7
..##.
.#...
#....
####.
#...#
#...#
.###.
glyph 55 5 7
#####
....#
...#.
..#..
.#...
.#...
.#...
glyph 56 5 7
.###.
#...#
#...#
.###.
#...#
#...#
.###.
glyph 57 5 7
.###.
#...#
#...#
.####
....#
...#.
.##..
glyph 58 5 7
.....
..#..
..#..
.....
..#..
..#..
.....
glyph 65 5 7
.###.
#...#
#...#
#####
#...#
#...#
#...#
glyph 66 5 7
####.
#...#
#...#
####.
#...#
#...#
####.
glyph 67 5 7
.###.
#...#
#....
#....
#....
#...#
.###.
glyph 68 5 7
###..
#..#.
#...#
#...#
#...#
#..#.
###..
glyph 69 5 7
#####
#....
#....
####.
#....
#....
#####
glyph 70 5 7
#####
#....
#....
####.
#....
#....
#....
glyph 71 5 7
.###.
#...#
#....
#.###
#...#
#...#
.####
glyph 72 5 7
#...#
#...#
#...#
#####
#...#
#...#
#...#
glyph 73 5 7
.###.
..#..
..#..
..#..
..#..
..#..
.###.
glyph 74 5 7
..###
...#.
...#.
...#.
...#.
#..#.
.##..
glyph 75 5 7
#...#
#..#.
#.#..
##...
#.#..
#..#.
#...#
glyph 76 5 7
#....
#....
#....
#....
#....
#....
#####
glyph 77 5 7
#...#
##.##
#.#.#
#.#.#
#...#
#...#
#...#
glyph 78 5 7
#...#
#...#
##..#
#.#.#
#..##
#...#
#...#
glyph 79 5 7
.###.
#...#
#...#
#...#
#...#
#...#
.###.
glyph 80 5 7
####.
#...#
#...#
####.
#....
#....
#....
glyph 81 5 7
.###.
#...#
#...#
#...#
#.#.#
#..#.
.##.#
glyph 82 5 7
####.
#...#
#...#
####.
#.#..
#..#.
#...#
glyph 83 5 7
.####
#....
#....
.###.
....#
....#
####.
glyph 84 5 7
#####
..#..
..#..
..#..
..#..
..#..
..#..
glyph 85 5 7
#...#
#...#
#...#
#...#
#...#
#...#
.###.
glyph 86 5 7
#...#
#...#
#...#
#...#
#...#
.#.#.
..#..
glyph 87 5 7
#...#
#...#
#...#
#.#.#
#.#.#
#.#.#
.#.#.
glyph 88 5 7
#...#
#...#
.#.#.
..#..
.#.#.
#...#
#...#
glyph 89 5 7
#...#
#...#
.#.#.
..#..
..#..
..#..
..#..
glyph 90 5 7
#####
....#
...#.
..#..
.#...
#....
#####
)glyphs";

inline constexpr std::string_view kTemplate9x11 = R"glyphs(
glyph 32 9 11
.........
.........
.........
.........
.........
.........
.........
.........
.........
.........
.........
glyph 48 9 11
#########
#########
###...###
###...###
###...###
###...###
###...###
###...###
###...###
#########
#########
glyph 49 9 11
......###
......###
......###
......###
......###
......###
......###
......###
......###
......###
......###
glyph 50 9 11
#########
#########
......###
......###
#########
#########
#########
###......
###......
#########
#########
glyph 51 9 11
#########
#########
......###
......###
#########
#########
#########
......###
......###
#########
#########
glyph 52 9 11
###...###
###...###
###...###
###...###
#########
#########
#########
......###
......###
......###
......###
glyph 53 9 11
#########
#########
###......
###......
#########
#########
#########
......###
......###
#########
#########
glyph 54 9 11
#########
#########
###......
###......
#########
#########
#########
###...###
###...###
#########
#########
glyph 55 9 11
#########
#########
......###
......###
......###
......###
......###
......###
......###
......###
......###
glyph 56 9 11
#########
#########
###...###
###...###
#########
#########
#########
###...###
###...###
#########
#########
glyph 57 9 11
#########
#########
###...###
###...###
#########
#########
#########
......###
......###
#########
#########
glyph 58 9 11
.........
.........
...###...
...###...
.........
.........
.........
...###...
...###...
.........
.........
glyph 65 9 11
...###...
...###...
###...###
###...###
#########
#########
#########
###...###
###...###
###...###
###...###
glyph 66 9 11
######...
######...
###...###
###...###
######...
######...
######...
###...###
###...###
######...
######...
glyph 67 9 11
#########
#########
###......
###......
###......
###......
###......
###......
###......
#########
#########
glyph 68 9 11
######...
######...
###...###
###...###
###...###
###...###
###...###
###...###
###...###
######...
######...
glyph 69 9 11
#########
#########
###......
###......
######...
######...
######...
###......
###......
#########
#########
glyph 70 9 11
#########
#########
###......
###......
######...
######...
######...
###......
###......
###......
###......
glyph 71 9 11
#########
#########
###......
###......
###...###
###...###
###...###
###...###
###...###
#########
#########
glyph 72 9 11
###...###
###...###
###...###
###...###
#########
#########
#########
###...###
###...###
###...###
###...###
glyph 73 9 11
#########
#########
...###...
...###...
...###...
...###...
...###...
...###...
...###...
#########
#########
glyph 74 9 11
......###
......###
......###
......###
......###
......###
......###
###...###
###...###
#########
#########
glyph 75 9 11
###...###
###...###
###...###
###...###
######...
######...
######...
###...###
###...###
###...###
###...###
glyph 76 9 11
###......
###......
###......
###......
###......
###......
###......
###......
###......
#########
#########
glyph 77 9 11
###...###
###...###
#########
#########
###...###
###...###
###...###
###...###
###...###
###...###
###...###
glyph 78 9 11
######...
######...
###...###
###...###
###...###
###...###
###...###
###...###
###...###
###...###
###...###
glyph 79 9 11
...###...
...###...
###...###
###...###
###...###
###...###
###...###
###...###
###...###
...###...
...###...
glyph 80 9 11
#########
#########
###...###
###...###
#########
#########
#########
###......
###......
###......
###......
glyph 81 9 11
#########
#########
###...###
###...###
###...###
###...###
###...###
#########
#########
......###
......###
glyph 82 9 11
######...
######...
###...###
###...###
######...
######...
######...
###...###
###...###
###...###
###...###
glyph 83 9 11
...######
...######
###......
###......
...###...
...###...
...###...
......###
......###
######...
######...
glyph 84 9 11
#########
#########
...###...
...###...
...###...
...###...
...###...
...###...
...###...
...###...
...###...
glyph 85 9 11
###...###
###...###
###...###
###...###
###...###
###...###
###...###
###...###
###...###
#########
#########
glyph 86 9 11
###...###
###...###
###...###
###...###
###...###
###...###
###...###
###...###
###...###
...###...
...###...
glyph 87 9 11
###...###
###...###
###...###
###...###
###...###
###...###
###...###
#########
#########
###...###
###...###
glyph 88 9 11
###...###
###...###
###...###
###...###
...###...
...###...
...###...
###...###
###...###
###...###
###...###
glyph 89 9 11
###...###
###...###
###...###
###...###
...###...
...###...
...###...
...###...
...###...
...###...
...###...
glyph 90 9 11
#########
#########
......###
......###
...###...
...###...
...###...
###......
###......
#########
#########
)glyphs";

// Custom logo art, 10x13.
inline constexpr std::string_view kLogoTemplate = R"glyphs(
glyph 256 10 13
##########
#........#
#..#####.#
#....#...#
#..####..#
#..####..#
##########
#.#.#.#.##
#..####..#
#...##...#
#.######.#
#........#
##########
)glyphs";

}  // namespace arkanoid::fonts
