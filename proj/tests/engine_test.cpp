#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "arkanoid/engine.hpp"

using namespace arkanoid;

namespace {

GameState playing_game(const GameConfig& config = {}, std::uint64_t seed = 1) {
  GameState state = new_game(config, seed);
  handle_key(state, KeyEvent::kOther);
  return state;
}

int active_blocks(const GameState& state) {
  int n = 0;
  for (const auto& b : state.world.blocks) n += b.active;
  return n;
}

void expect_code(ErrorCode code, auto&& fn) {
  try {
    fn();
    FAIL() << "expected " << to_string(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

// --- new_game / config -----------------------------------------------------

TEST(NewGame, Defaults) {
  const GameState state = new_game(GameConfig{}, 123);
  EXPECT_EQ(state.phase, GamePhase::kWelcome);
  EXPECT_EQ(active_blocks(state), 40);
  EXPECT_EQ(state.score, 0);
  EXPECT_EQ(state.lives_left, 3);
  EXPECT_FALSE(state.world.ball.active);
}

TEST(NewGame, SameSeedSameState) {
  EXPECT_EQ(new_game(GameConfig{}, 9), new_game(GameConfig{}, 9));
  EXPECT_EQ(playing_game({}, 9), playing_game({}, 9));
}

TEST(NewGame, InvalidConfigs) {
  auto with = [](auto mutate) {
    GameConfig c;
    mutate(c);
    return c;
  };
  expect_code(ErrorCode::kConfig, [&] { (void)new_game(with([](GameConfig& c) { c.tv_pad = 0; }), 0); });
  expect_code(ErrorCode::kConfig, [&] { (void)new_game(with([](GameConfig& c) { c.tv_ball = 65536; }), 0); });
  expect_code(ErrorCode::kConfig, [&] { (void)new_game(with([](GameConfig& c) { c.tv_fall = 1; }), 0); });
  expect_code(ErrorCode::kConfig, [&] { (void)new_game(with([](GameConfig& c) { c.height = 15; }), 0); });
  expect_code(ErrorCode::kConfig, [&] { (void)new_game(with([](GameConfig& c) { c.serve_direction = {1, 1}; }), 0); });
  expect_code(ErrorCode::kConfig, [&] { (void)new_game(with([](GameConfig& c) { c.lives = 0; }), 0); });
  expect_code(ErrorCode::kConfig, [&] { (void)new_game(with([](GameConfig& c) { c.pad_width = 0; }), 0); });
  expect_code(ErrorCode::kConfig, [&] { (void)new_game(with([](GameConfig& c) { c.row_styles.clear(); }), 0); });
}

// --- random draws ----------------------------------------------------------

TEST(Random, FrozenSequence) {
  // Reference values computed independently from the documented recurrence.
  GameState a = new_game(GameConfig{}, 0);
  EXPECT_DOUBLE_EQ(next_random_unit(a), 0.07820865487829387);
  EXPECT_DOUBLE_EQ(next_random_unit(a), 0.10169876029679303);
  EXPECT_DOUBLE_EQ(next_random_unit(a), 0.6053233226252335);
  EXPECT_EQ(a.rng.state(), 0x9af678222e728119ULL);

  GameState b = new_game(GameConfig{}, 42);
  EXPECT_DOUBLE_EQ(next_random_unit(b), 0.5682303266439076);
}

TEST(Random, RangeAndDeterminism) {
  GameState a = new_game(GameConfig{}, 5);
  GameState b = new_game(GameConfig{}, 5);
  for (int i = 0; i < 10000; ++i) {
    const double r = next_random_unit(a);
    ASSERT_GE(r, 0.0);
    ASSERT_LT(r, 1.0);
    ASSERT_EQ(r, next_random_unit(b));
  }
}

TEST(Random, SeedsDiffer) {
  std::set<double> firsts;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    GameState s = new_game(GameConfig{}, seed);
    firsts.insert(next_random_unit(s));
  }
  EXPECT_EQ(firsts.size(), 8u);
}

// --- tick_gate -------------------------------------------------------------

TEST(TickGate, Examples) {
  for (std::uint64_t n = 1; n < 20; ++n) EXPECT_TRUE(tick_gate(n, {1}));
  EXPECT_TRUE(tick_gate(3, {3}));
  EXPECT_FALSE(tick_gate(4, {3}));
  int fired = 0;
  for (std::uint64_t n = 1; n <= 100; ++n) fired += tick_gate(n, {2});
  EXPECT_EQ(fired, 50);
}

TEST(TickGate, CountsAreFloorOfTicksOverPeriod) {
  for (int period : {1, 2, 3, 7, 64, 65535}) {
    for (std::uint64_t total : {1ULL, 99ULL, 600ULL, 1000ULL}) {
      std::uint64_t fired = 0;
      for (std::uint64_t n = 1; n <= total; ++n) fired += tick_gate(n, {period});
      EXPECT_EQ(fired, total / static_cast<std::uint64_t>(period));
    }
  }
}

// --- handle_key ------------------------------------------------------------

TEST(HandleKey, EscAtWelcomeQuits) {
  GameState state = new_game(GameConfig{}, 1);
  handle_key(state, KeyEvent::kEsc);
  EXPECT_EQ(state.phase, GamePhase::kQuit);
}

TEST(HandleKey, AnyKeyStartsAndServes) {
  for (const KeyEvent key : {KeyEvent::kOther, KeyEvent::kLeft, KeyEvent::kRight}) {
    GameState state = new_game(GameConfig{}, 1);
    handle_key(state, key);
    EXPECT_EQ(state.phase, GamePhase::kPlaying);
    EXPECT_TRUE(state.world.ball.active);
    EXPECT_EQ(state.world.ball.cur.y, state.world.area.pad_row() - 1);
    EXPECT_FALSE(state.pending_pad_move.has_value());
  }
}

TEST(HandleKey, ServeColumnUsesFirstDraw) {
  GameState state = new_game(GameConfig{}, 0);
  handle_key(state, KeyEvent::kOther);
  // floor(0.0782... * 8) = 0
  EXPECT_EQ(state.world.ball.cur.x, 36);
  GameState other = new_game(GameConfig{}, 42);
  handle_key(other, KeyEvent::kOther);
  // floor(0.568... * 8) = 4
  EXPECT_EQ(other.world.ball.cur.x, 40);
}

TEST(HandleKey, PadMoveAppliedOnPadGate) {
  GameConfig config;
  config.tv_pad = 2;
  config.tv_fall = 3;
  GameState state = playing_game(config);
  handle_key(state, KeyEvent::kRight);
  step(state);  // tick 1: pad gate closed
  EXPECT_EQ(state.world.pad.area.left, 36);
  step(state);  // tick 2: move applied
  EXPECT_EQ(state.world.pad.area.left, 38);
  step(state);
  step(state);
  EXPECT_EQ(state.world.pad.area.left, 38);  // one queued move, one step
}

TEST(HandleKey, LatestKeyWins) {
  GameState state = playing_game();
  handle_key(state, KeyEvent::kLeft);
  handle_key(state, KeyEvent::kRight);
  step(state);
  EXPECT_EQ(state.world.pad.area.left, 38);
}

TEST(HandleKey, LeftAtWallIsClamped) {
  GameState state = playing_game();
  state.world.pad.area = {0, 29, 7, 29};
  handle_key(state, KeyEvent::kLeft);
  step(state);
  EXPECT_EQ(state.world.pad.area, (Rect{0, 29, 7, 29}));
}

TEST(HandleKey, TerminalPhasesIgnoreInput) {
  GameState state = new_game(GameConfig{}, 1);
  handle_key(state, KeyEvent::kEsc);
  const GameState quit = state;
  handle_key(state, KeyEvent::kOther);
  handle_key(state, KeyEvent::kEsc);
  EXPECT_EQ(state, quit);
}

// --- step ------------------------------------------------------------------

TEST(Step, OutsidePlayingIsPhaseError) {
  GameState state = new_game(GameConfig{}, 1);
  expect_code(ErrorCode::kPhase, [&] { step(state); });
}

TEST(Step, BallDestroysBlockOnGatedTick) {
  GameState state = playing_game();
  // Bottom block row occupies rows 15-16; block 30 spans columns 0-7.
  ASSERT_EQ(state.world.blocks[30].area, (Rect{0, 15, 7, 16}));
  state.world.ball = Ball{{3, 17}, {2, 18}, true};
  state.tick_counter = 1;  // next tick is ball-gated
  step(state);
  EXPECT_FALSE(state.world.blocks[30].active);
  EXPECT_EQ(state.score, state.config.row_styles[3].value);
  EXPECT_EQ(state.world.ball.cur, (Coord{4, 18}));
  EXPECT_EQ(ball_direction(state.world.ball), (Direction{+1, +1}));
  ASSERT_FALSE(state.events.empty());
  EXPECT_EQ(state.events.back().kind, EventKind::kBlockDestroyed);
  EXPECT_EQ(state.events.back().block, 30);
}

TEST(Step, NoBallMovementOnClosedGate) {
  GameState state = playing_game();
  const Ball before = state.world.ball;
  step(state);  // tick 1, tv_ball 2
  EXPECT_EQ(state.world.ball, before);
  step(state);
  EXPECT_NE(state.world.ball, before);
}

TEST(Step, LastLifeEndsGame) {
  GameState state = playing_game();
  state.lives_left = 1;
  state.world.ball = Ball{{10, 29}, {9, 28}, true};
  state.tick_counter = 1;
  step(state);
  EXPECT_EQ(state.phase, GamePhase::kGameOver);
  EXPECT_EQ(state.lives_left, 0);
  EXPECT_FALSE(state.won);
}

TEST(Step, LifeLossRewritesGameScreen) {
  GameState state = playing_game();
  state.world.pad.area = {0, 29, 7, 29};
  state.world.blocks[35].active = false;
  state.score = 7;
  state.world.ball = Ball{{20, 29}, {19, 28}, true};
  state.tick_counter = 1;
  step(state);
  EXPECT_EQ(state.phase, GamePhase::kPlaying);
  EXPECT_EQ(state.lives_left, 2);
  EXPECT_EQ(state.score, 7);
  EXPECT_FALSE(state.world.blocks[35].active);
  EXPECT_EQ(state.world.pad.area, (Rect{36, 29, 43, 29}));
  EXPECT_TRUE(state.world.ball.active);
  EXPECT_EQ(state.world.ball.cur.y, 28);
  EXPECT_GE(state.world.ball.cur.x, 36);
  EXPECT_LE(state.world.ball.cur.x, 43);
}

TEST(Step, GateCounts) {
  GameState state = playing_game();
  for (int i = 0; i < 100; ++i) step(state);
  ASSERT_EQ(state.phase, GamePhase::kPlaying);
  EXPECT_EQ(state.gates.pad, 100u);
  EXPECT_EQ(state.gates.ball, 50u);
  EXPECT_EQ(state.gates.fall, 33u);
}

TEST(Step, CatchingFallingBlockScoresDouble) {
  GameState state = playing_game();
  state.world.falling.push_back({36, 43, 28, 8});
  state.tick_counter = 2;  // next tick is fall-gated
  step(state);
  EXPECT_EQ(state.score, 16);
  EXPECT_TRUE(state.world.falling.empty());
  EXPECT_EQ(state.events.back().kind, EventKind::kFallingCaught);
}

TEST(Step, ClearingTheBoardWins) {
  GameState state = playing_game();
  for (auto& b : state.world.blocks) b.active = false;
  state.world.blocks[30].active = true;
  state.world.ball = Ball{{3, 17}, {2, 18}, true};
  state.tick_counter = 1;
  step(state);
  EXPECT_EQ(state.phase, GamePhase::kGameOver);
  EXPECT_TRUE(state.won);
  EXPECT_EQ(state.lives_left, 3);
}

TEST(Step, BoardNotClearedWhileABlockIsFalling) {
  GameState state = playing_game();
  for (auto& b : state.world.blocks) b.active = false;
  state.world.falling.push_back({0, 7, 20, 8});
  step(state);
  EXPECT_EQ(state.phase, GamePhase::kPlaying);
}

TEST(Step, BlockFreeLayoutNeverWins) {
  GameConfig config;
  config.block_rows = 0;
  GameState state = playing_game(config);
  step(state);
  EXPECT_EQ(state.phase, GamePhase::kPlaying);
}

// --- render_frame ----------------------------------------------------------

TEST(RenderFrame, PureAndDeterministic) {
  GameState state = playing_game();
  for (int i = 0; i < 7; ++i) step(state);
  const GameState before = state;
  EXPECT_EQ(render_frame(state), render_frame(state));
  EXPECT_EQ(state, before);
}

TEST(RenderFrame, FreshGameLayout) {
  const GameState state = playing_game();
  const ScreenBuffer frame = render_frame(state);
  ASSERT_EQ(frame.width(), 80);
  ASSERT_EQ(frame.height(), 30);
  for (int y = 0; y < 7; ++y) {
    for (int x = 0; x < 80; ++x) EXPECT_EQ(frame.at({x, y}).bg(), color::kDarkGray);
  }
  for (const auto& block : state.world.blocks) {
    for (int y = block.area.top; y <= block.area.bottom; ++y) {
      for (int x = block.area.left; x <= block.area.right; ++x) {
        EXPECT_EQ(frame.at({x, y}).fg(), block.color);
        EXPECT_NE(frame.at({x, y}).char_code, 0);
      }
    }
  }
  for (int x = 36; x <= 43; ++x) EXPECT_EQ(frame.at({x, 29}), ScreenCell::make(219, palette::kPadColor, 0));
  EXPECT_EQ(frame.at(state.world.ball.cur), ScreenCell::make(219, color::kWhite, 0));
}

TEST(RenderFrame, CrackedBlocksUseCrackedColor) {
  GameState state = playing_game();
  state.world.blocks[0] = register_hit(state.world.blocks[0], state.config).block;
  const ScreenBuffer frame = render_frame(state);
  EXPECT_EQ(frame.at({0, 9}).fg(), state.config.cracked_color);
}

TEST(RenderFrame, DestroyedBlockRevertsToBackground) {
  GameState state = playing_game();
  const ScreenBuffer before = render_frame(state);
  state.world.blocks[17].active = false;
  const CellPatch patch = diff(before, render_frame(state));
  const Rect area = state.world.blocks[17].area;
  ASSERT_EQ(static_cast<int>(patch.size()), area.width() * area.height());
  for (const auto& change : patch) {
    EXPECT_TRUE(area.contains(change.at));
    EXPECT_EQ(change.cell, palette::kPlayBackground);
  }
}

TEST(RenderFrame, WelcomeScreenIsStatic) {
  const GameState state = new_game(GameConfig{}, 3);
  const ScreenBuffer frame = render_frame(state);
  int filled = 0;
  for (const auto& cell : frame.cells()) filled += cell.char_code == kFullBlock;
  EXPECT_GT(filled, 100);
  EXPECT_TRUE(diff(frame, render_frame(new_game(GameConfig{}, 4))).empty());
}

TEST(RenderFrame, SmallConsolesClipInsteadOfFailing) {
  GameConfig config;
  config.width = 12;
  config.height = 12;
  config.info_bar_height = 1;
  config.block_rows = 1;
  config.block_cols = 3;
  config.block_top_gap = 0;
  config.pad_width = 4;
  GameState state = new_game(config, 1);
  EXPECT_NO_THROW((void)render_frame(state));
  handle_key(state, KeyEvent::kOther);
  EXPECT_NO_THROW((void)render_frame(state));
}
