#include "cech/paths.hpp"

#include <stdexcept>

namespace cech {

bool step_ok(const ClosureSpace& space, std::size_t x, std::size_t y) {
    return space.row(x).test(y) || space.row(y).test(x);
}

DiscretePath::DiscretePath(ClosureSpace space, std::vector<std::size_t> points)
    : space_(std::move(space)), points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("a path needs at least one point");
    for (auto p : points_)
        if (p >= space_.size()) throw std::invalid_argument("path point out of range");
}

bool DiscretePath::valid() const { return first_bad_step() == npos; }

std::size_t DiscretePath::first_bad_step() const {
    for (std::size_t i = 0; i + 1 < points_.size(); ++i)
        if (!step_ok(space_, points_[i], points_[i + 1])) return i;
    return npos;
}

DiscretePath star(const DiscretePath& p, const DiscretePath& q) {
    if (p.space() != q.space())
        throw std::invalid_argument("star requires paths in the same space");
    if (p.end() != q.start())
        throw std::invalid_argument("star requires end(p) = start(q)");
    std::vector<std::size_t> pts = p.points();
    pts.insert(pts.end(), q.points().begin() + 1, q.points().end());
    return DiscretePath(p.space(), std::move(pts));
}

DiscretePath reverse(const DiscretePath& p) {
    std::vector<std::size_t> pts(p.points().rbegin(), p.points().rend());
    return DiscretePath(p.space(), std::move(pts));
}

DiscretePath constant_path(const ClosureSpace& space, std::size_t x, std::size_t steps) {
    return DiscretePath(space, std::vector<std::size_t>(steps + 1, x));
}

bool move_applicable(const DiscretePath& p, const Move& m) {
    const auto& pts = p.points();
    const std::size_t k = pts.size();
    switch (m.kind) {
        case Move::Kind::InsertRepeat:
            return m.index < k;
        case Move::Kind::DeleteRepeat:
            return m.index + 1 < k && pts[m.index] == pts[m.index + 1];
        case Move::Kind::Substitute: {
            if (m.index == 0 || m.index + 1 >= k) return false;
            if (m.value >= p.space().size()) return false;
            return step_ok(p.space(), pts[m.index - 1], m.value) &&
                   step_ok(p.space(), m.value, pts[m.index + 1]) &&
                   step_ok(p.space(), pts[m.index], m.value);
        }
    }
    return false;
}

DiscretePath apply_move(const DiscretePath& p, const Move& m) {
    if (!move_applicable(p, m))
        throw std::invalid_argument("move not applicable: " + move_to_string(m));
    std::vector<std::size_t> pts = p.points();
    switch (m.kind) {
        case Move::Kind::InsertRepeat:
            pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(m.index) + 1, pts[m.index]);
            break;
        case Move::Kind::DeleteRepeat:
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(m.index) + 1);
            break;
        case Move::Kind::Substitute:
            pts[m.index] = m.value;
            break;
    }
    return DiscretePath(p.space(), std::move(pts));
}

DiscretePath apply_moves(const DiscretePath& p, const std::vector<Move>& trace) {
    DiscretePath cur = p;
    for (const auto& m : trace) cur = apply_move(cur, m);
    return cur;
}

std::vector<Move> enumerate_moves(const DiscretePath& p) {
    std::vector<Move> out;
    const auto& pts = p.points();
    const std::size_t k = pts.size();
    for (std::size_t i = 0; i < k; ++i)
        out.push_back({Move::Kind::InsertRepeat, i, pts[i], pts[i]});
    for (std::size_t i = 0; i + 1 < k; ++i)
        if (pts[i] == pts[i + 1]) out.push_back({Move::Kind::DeleteRepeat, i, pts[i], pts[i]});
    for (std::size_t i = 1; i + 1 < k; ++i)
        for (std::size_t v = 0; v < p.space().size(); ++v) {
            if (v == pts[i]) continue;
            Move m{Move::Kind::Substitute, i, v, pts[i]};
            if (move_applicable(p, m)) out.push_back(m);
        }
    return out;
}

Move invert_move(const Move& m) {
    switch (m.kind) {
        case Move::Kind::InsertRepeat:
            return {Move::Kind::DeleteRepeat, m.index, m.value, m.value};
        case Move::Kind::DeleteRepeat:
            return {Move::Kind::InsertRepeat, m.index, m.value, m.value};
        case Move::Kind::Substitute:
            return {Move::Kind::Substitute, m.index, m.prev, m.value};
    }
    throw std::logic_error("unreachable");
}

std::vector<Move> invert_trace(const std::vector<Move>& trace) {
    std::vector<Move> out;
    out.reserve(trace.size());
    for (auto it = trace.rbegin(); it != trace.rend(); ++it) out.push_back(invert_move(*it));
    return out;
}

std::string move_to_string(const Move& m) {
    switch (m.kind) {
        case Move::Kind::InsertRepeat:
            return "insert@" + std::to_string(m.index);
        case Move::Kind::DeleteRepeat:
            return "delete@" + std::to_string(m.index);
        case Move::Kind::Substitute:
            return "subst@" + std::to_string(m.index) + "->" + std::to_string(m.value);
    }
    return "?";
}

}  // namespace cech
