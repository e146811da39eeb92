#pragma once

#include "arkanoid/bigfont.hpp"
#include "arkanoid/config.hpp"
#include "arkanoid/engine.hpp"
#include "arkanoid/error.hpp"
#include "arkanoid/frame_dump.hpp"
#include "arkanoid/replay.hpp"
#include "arkanoid/rng.hpp"
#include "arkanoid/screen.hpp"
#include "arkanoid/world.hpp"
