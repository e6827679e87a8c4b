#pragma once

#include <string>
#include <vector>

#include "cech/closure_space.hpp"

namespace cech {

/// A step x -> y is admissible when y lies in c({x}) or x lies in c({y}).
/// Both orientations are allowed because a step function on the unit
/// interval is continuous with either half-open bracketing of the jump, so
/// the discrete model has to accept both. On symmetric closures the two
/// clauses coincide.
bool step_ok(const ClosureSpace& space, std::size_t x, std::size_t y);

/// A finite point sequence in a space. Construction checks index ranges and
/// nonemptiness only; `valid()` reports whether every step is admissible, so
/// defective inputs can be diagnosed rather than rejected at parse time.
class DiscretePath {
public:
    DiscretePath(ClosureSpace space, std::vector<std::size_t> points);

    const ClosureSpace& space() const { return space_; }
    const std::vector<std::size_t>& points() const { return points_; }
    std::size_t length() const { return points_.size() - 1; }  // number of steps
    std::size_t start() const { return points_.front(); }
    std::size_t end() const { return points_.back(); }
    bool is_loop() const { return start() == end(); }

    bool valid() const;
    /// Index of the first inadmissible step, or npos.
    std::size_t first_bad_step() const;

    bool operator==(const DiscretePath& o) const {
        return space_ == o.space_ && points_ == o.points_;
    }

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
    ClosureSpace space_;
    std::vector<std::size_t> points_;
};

/// Concatenation; the shared endpoint is not duplicated.
DiscretePath star(const DiscretePath& p, const DiscretePath& q);

DiscretePath reverse(const DiscretePath& p);

DiscretePath constant_path(const ClosureSpace& space, std::size_t x, std::size_t steps = 0);

/// Elementary homotopy moves.
///   InsertRepeat i: duplicate point i (the copy lands at i+1).
///   DeleteRepeat i: remove point i+1 when it repeats point i.
///   Substitute  i: replace interior point i by `value`; admissible when the
///     steps (p[i-1], value), (value, p[i+1]) and (p[i], value) all hold.
struct Move {
    enum class Kind { InsertRepeat, DeleteRepeat, Substitute };
    Kind kind;
    std::size_t index;
    std::size_t value = 0;  // Substitute: new point
    std::size_t prev = 0;   // Substitute: replaced point (for inversion)
};

bool move_applicable(const DiscretePath& p, const Move& m);
DiscretePath apply_move(const DiscretePath& p, const Move& m);
DiscretePath apply_moves(const DiscretePath& p, const std::vector<Move>& trace);

/// All moves applicable to p, in a fixed deterministic order.
std::vector<Move> enumerate_moves(const DiscretePath& p);

Move invert_move(const Move& m);
std::vector<Move> invert_trace(const std::vector<Move>& trace);

std::string move_to_string(const Move& m);

}  // namespace cech
