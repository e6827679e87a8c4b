#include "cech/homotopy.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <unordered_map>

#include "cech/constructions.hpp"

namespace cech {

namespace {

long positive_mod(long v, long n) {
    long r = v % n;
    return r < 0 ? r + n : r;
}

/// Signed displacement of a single step on the n-cycle, in (-n/2, n/2).
long signed_step(long n, std::size_t from, std::size_t to) {
    long d = positive_mod(static_cast<long>(to) - static_cast<long>(from), n);
    if (2 * d > n) d -= n;
    return d;
}

/// Same closure structure in the same point order; labels may differ.
bool same_rows(const ClosureSpace& a, const ClosureSpace& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t x = 0; x < a.size(); ++x)
        if (a.row(x) != b.row(x)) return false;
    return true;
}

}  // namespace

long winding(const CyclicSpace& cs, const DiscretePath& loop) {
    if (!cs.winding_defined())
        throw std::invalid_argument("winding undefined: 2m >= n leaves steps ambiguous");
    if (!same_rows(loop.space(), cs.space()))
        throw std::invalid_argument("loop does not live on the given cyclic space");
    if (!loop.is_loop()) throw std::invalid_argument("winding requires a loop");
    if (!loop.valid()) throw std::invalid_argument("winding requires a valid path");

    const long n = static_cast<long>(cs.n);
    long total = 0;
    const auto& pts = loop.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) total += signed_step(n, pts[i], pts[i + 1]);
    if (total % n != 0) throw std::logic_error("loop displacement not a multiple of n");
    return total / n;
}

DiscretePath staircase_loop(const CyclicSpace& cs, long w, std::size_t base) {
    const ClosureSpace space = cs.space();
    if (w == 0) return constant_path(space, base);
    if (cs.m == 0) throw std::invalid_argument("no non-constant loops exist at m = 0");
    const long n = static_cast<long>(cs.n);
    const long m = static_cast<long>(cs.m);
    const long reach = std::labs(w) * n;
    const long steps = (reach + m - 1) / m;
    std::vector<std::size_t> pts;
    pts.reserve(static_cast<std::size_t>(steps) + 1);
    for (long j = 0; j < steps; ++j) {
        long v = (w > 0) ? j * m : -j * m;
        pts.push_back(static_cast<std::size_t>(positive_mod(static_cast<long>(base) + v, n)));
    }
    pts.push_back(base);
    return DiscretePath(space, std::move(pts));
}

// ---------------------------------------------------------------------------
// Canonical reduction on cyclic spaces.
//
// A loop at `base` lifts to an integer path once 2m < n: each step has a
// unique signed displacement in [-m, m]. Every substitution move with all
// three step conditions inside the arcs changes a lift value by at most m,
// so moves act locally on the lift and preserve its endpoints. The
// reduction below first raises the lift pointwise (each raise is one
// substitution) until it reaches the unique maximal profile of its length,
// the "tent" y_i = min(y_{i-1}, y_{i+1}) + m; the tent of minimal length is
// the monotone staircase, and any longer tent has an apex whose removal
// (substitute to the right neighbour, then delete the repeat) shortens the
// path. Iterating lands on the winding staircase, the canonical form.
// ---------------------------------------------------------------------------

namespace {

struct CyclicReduction {
    std::vector<std::size_t> points;
    std::vector<Move> trace;
};

class CyclicReducer {
public:
    CyclicReducer(const CyclicSpace& cs, std::size_t base, bool mirrored)
        : n_(static_cast<long>(cs.n)), m_(static_cast<long>(cs.m)),
          base_(static_cast<long>(base)), sign_(mirrored ? -1 : 1) {}

    std::size_t point_of(long lift) const {
        return static_cast<std::size_t>(positive_mod(base_ + sign_ * lift, n_));
    }

    void substitute(std::vector<long>& y, std::size_t i, long v) {
        trace.push_back({Move::Kind::Substitute, i, point_of(v), point_of(y[i])});
        y[i] = v;
    }

    void erase_repeat(std::vector<long>& y, std::size_t i) {
        trace.push_back({Move::Kind::DeleteRepeat, i, point_of(y[i]), point_of(y[i])});
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(i) + 1);
    }

    void run(std::vector<long>& y) {
        for (;;) {
            strip_repeats(y);
            const std::size_t len = y.size() - 1;
            if (len == 0) return;
            raise_to_tent(y);
            if (has_repeat(y)) continue;
            const long reach = y.back();
            const std::size_t min_len =
                reach == 0 ? 0 : static_cast<std::size_t>((reach + m_ - 1) / m_);
            if (y.size() - 1 == min_len) return;
            const std::size_t apex = find_apex(y);
            substitute(y, apex, y[apex + 1]);
        }
    }

    std::vector<Move> trace;

private:
    void strip_repeats(std::vector<long>& y) {
        for (std::size_t i = 0; i + 1 < y.size();) {
            if (y[i] == y[i + 1])
                erase_repeat(y, i);
            else
                ++i;
        }
    }

    bool has_repeat(const std::vector<long>& y) const {
        for (std::size_t i = 0; i + 1 < y.size(); ++i)
            if (y[i] == y[i + 1]) return true;
        return false;
    }

    void raise_to_tent(std::vector<long>& y) {
        bool raised = true;
        while (raised) {
            raised = false;
            for (std::size_t i = 1; i + 1 < y.size(); ++i) {
                long target = std::min(y[i - 1], y[i + 1]) + m_;
                target = std::min(target, y[i] + m_);
                if (target > y[i]) {
                    substitute(y, i, target);
                    raised = true;
                }
            }
        }
    }

    std::size_t find_apex(const std::vector<long>& y) const {
        for (std::size_t i = 1; i + 1 < y.size(); ++i)
            if (y[i] > y[i - 1] && y[i] > y[i + 1]) return i;
        throw std::logic_error("tent without apex or repeat");
    }

    long n_, m_, base_, sign_;
};

/// Lift the loop, canonicalize, and return the final points plus the move
/// trace. Assumes the covering regime of `cs`.
CyclicReduction cyclic_reduce_coords(const CyclicSpace& cs,
                                     const std::vector<std::size_t>& coords) {
    const long n = static_cast<long>(cs.n);
    std::vector<long> y{0};
    y.reserve(coords.size());
    for (std::size_t i = 0; i + 1 < coords.size(); ++i)
        y.push_back(y.back() + signed_step(n, coords[i], coords[i + 1]));

    const bool mirrored = y.back() < 0;
    if (mirrored)
        for (auto& v : y) v = -v;

    CyclicReducer red(cs, coords.front(), mirrored);
    red.run(y);

    CyclicReduction out;
    out.trace = std::move(red.trace);
    out.points.reserve(y.size());
    for (auto v : y) out.points.push_back(red.point_of(v));
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Wedge spaces and wedge words.
// ---------------------------------------------------------------------------

WedgeSpace::WedgeSpace(CyclicSpace first, CyclicSpace second)
    : first_(first), second_(second) {
    const std::size_t n1 = first_.n, n2 = second_.n;
    auto glued = disjoint_union({first_.space(), second_.space()});

    std::vector<std::string> classes;
    classes.reserve(n1 + n2 - 1);
    classes.push_back("*");
    for (std::size_t k = 1; k < n1; ++k) classes.push_back("a" + std::to_string(k));
    for (std::size_t k = 1; k < n2; ++k) classes.push_back("b" + std::to_string(k));

    std::vector<std::size_t> assign(n1 + n2);
    for (std::size_t k = 0; k < n1; ++k) assign[k] = (k == 0) ? 0 : k;
    for (std::size_t k = 0; k < n2; ++k) assign[n1 + k] = (k == 0) ? 0 : (n1 - 1) + k;

    space_ = quotient(QuotientMap(std::move(glued), std::move(classes), std::move(assign)));
}

const CyclicSpace& WedgeSpace::circle(int which) const {
    if (which == 0) return first_;
    if (which == 1) return second_;
    throw std::out_of_range("wedge has circles 0 and 1");
}

std::size_t WedgeSpace::embed(int which, std::size_t k) const {
    const CyclicSpace& c = circle(which);
    if (k >= c.n) throw std::out_of_range("circle coordinate out of range");
    if (k == 0) return 0;
    return which == 0 ? k : (first_.n - 1) + k;
}

int WedgeSpace::circle_of(std::size_t idx) const {
    if (idx >= space_.size()) throw std::out_of_range("point index out of range");
    if (idx == 0) return -1;
    return idx < first_.n ? 0 : 1;
}

std::size_t WedgeSpace::circle_coord(int which, std::size_t idx) const {
    if (idx == 0) return 0;
    if (circle_of(idx) != which) throw std::invalid_argument("point not on that circle");
    return which == 0 ? idx : idx - (first_.n - 1);
}

Word free_reduce(const Word& w) {
    Word out;
    for (const auto& l : w) {
        if (l.exponent == 0) continue;
        if (!out.empty() && out.back().letter == l.letter) {
            out.back().exponent += l.exponent;
            if (out.back().exponent == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

Word word_concat(const Word& u, const Word& v) {
    Word w = u;
    w.insert(w.end(), v.begin(), v.end());
    return free_reduce(w);
}

std::string word_to_string(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += " ";
        out += w[i].letter;
        if (w[i].exponent != 1) out += "^" + std::to_string(w[i].exponent);
    }
    return out;
}

namespace {

void require_wedge_regime(const WedgeSpace& ws) {
    for (int c = 0; c < 2; ++c)
        if (!ws.circle(c).covering_regime())
            throw std::invalid_argument(
                "wedge words need both circles with 1 <= m and 3m < n");
}

long segment_winding(const CyclicSpace& cs, const std::vector<std::size_t>& coords) {
    const long n = static_cast<long>(cs.n);
    long total = 0;
    for (std::size_t i = 0; i + 1 < coords.size(); ++i)
        total += signed_step(n, coords[i], coords[i + 1]);
    if (total % n != 0) throw std::logic_error("segment displacement not a multiple of n");
    return total / n;
}

}  // namespace

Word wedge_word(const WedgeSpace& ws, const DiscretePath& loop) {
    require_wedge_regime(ws);
    if (loop.space() != ws.space())
        throw std::invalid_argument("loop does not live on the given wedge space");
    if (!loop.is_loop() || loop.start() != ws.wedge_point())
        throw std::invalid_argument("wedge words need a loop based at the wedge point");
    if (!loop.valid()) throw std::invalid_argument("invalid path");

    const auto& pts = loop.points();
    Word raw;
    std::size_t i = 0;
    while (i + 1 < pts.size()) {
        if (pts[i + 1] == ws.wedge_point()) {
            ++i;
            continue;
        }
        // Segment between consecutive wedge visits; valid steps keep it on
        // one circle.
        const int c = ws.circle_of(pts[i + 1]);
        std::size_t j = i + 1;
        while (pts[j] != ws.wedge_point()) {
            if (ws.circle_of(pts[j]) != c)
                throw std::logic_error("segment crosses circles without a wedge visit");
            ++j;
        }
        std::vector<std::size_t> coords;
        coords.reserve(j - i + 1);
        for (std::size_t t = i; t <= j; ++t) coords.push_back(ws.circle_coord(c, pts[t]));
        raw.push_back({c == 0 ? 'a' : 'b', segment_winding(ws.circle(c), coords)});
        i = j;
    }
    return free_reduce(raw);
}

// ---------------------------------------------------------------------------
// Homotopy decision procedure.
// ---------------------------------------------------------------------------

namespace {

/// Leftmost-first rewriting: delete immediate repeats, and cut corners by
/// substituting p[i] with p[i+1] whenever p[i-1] and p[i+1] are one step
/// apart. Each round shortens the path by one, so this terminates; on an
/// indiscrete space it always reaches the constant loop.
///
/// Palindromes are handled first, always at the center: folding there keeps
/// the sequence a palindrome, so p followed by its reverse contracts all the
/// way to the basepoint regardless of the ambient space.
std::vector<Move> shortcut_reduce(const ClosureSpace& space, std::vector<std::size_t>& pts) {
    std::vector<Move> trace;

    auto is_palindrome = [&]() {
        for (std::size_t t = 0; t * 2 < pts.size(); ++t)
            if (pts[t] != pts[pts.size() - 1 - t]) return false;
        return true;
    };
    while (pts.size() > 1 && is_palindrome()) {
        const std::size_t mid = pts.size() / 2;
        if (pts.size() % 2 == 0) {
            // even count: the two central points are equal
            trace.push_back({Move::Kind::DeleteRepeat, mid - 1, pts[mid - 1], pts[mid - 1]});
            pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(mid));
            continue;
        }
        const std::size_t u = pts[mid - 1];
        if (!step_ok(space, u, u) || !step_ok(space, pts[mid], u)) break;
        trace.push_back({Move::Kind::Substitute, mid, u, pts[mid]});
        pts[mid] = u;
        trace.push_back({Move::Kind::DeleteRepeat, mid - 1, u, u});
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(mid));
        trace.push_back({Move::Kind::DeleteRepeat, mid - 1, u, u});
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(mid));
    }

    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
            if (pts[i] == pts[i + 1]) {
                trace.push_back({Move::Kind::DeleteRepeat, i, pts[i], pts[i]});
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                progress = true;
                break;
            }
        }
        if (progress) continue;
        for (std::size_t i = 1; i + 1 < pts.size(); ++i) {
            if (step_ok(space, pts[i - 1], pts[i + 1]) && step_ok(space, pts[i], pts[i + 1]) &&
                step_ok(space, pts[i + 1], pts[i + 1])) {
                trace.push_back({Move::Kind::Substitute, i, pts[i + 1], pts[i]});
                pts[i] = pts[i + 1];
                trace.push_back({Move::Kind::DeleteRepeat, i, pts[i], pts[i]});
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                progress = true;
                break;
            }
        }
    }
    return trace;
}

struct VectorHash {
    std::size_t operator()(const std::vector<std::size_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ (x + 0x9e3779b97f4a7c15ull)) * 1099511628211ull;
        return h;
    }
};

/// Breadth-first search through the move graph; nullopt when the budget or
/// cap exhausts the reachable states without meeting `to`.
std::optional<std::vector<Move>> bfs_moves(const ClosureSpace& space,
                                           const std::vector<std::size_t>& from,
                                           const std::vector<std::size_t>& to, std::size_t cap,
                                           std::size_t budget) {
    if (from == to) return std::vector<Move>{};
    const std::size_t max_points = cap + 1;

    std::vector<std::vector<std::size_t>> states{from};
    std::vector<std::pair<std::size_t, Move>> parents{{DiscretePath::npos, Move{}}};
    std::unordered_map<std::vector<std::size_t>, std::size_t, VectorHash> seen{{from, 0}};
    std::deque<std::size_t> queue{0};

    auto build_trace = [&](std::size_t id) {
        std::vector<Move> trace;
        while (parents[id].first != DiscretePath::npos) {
            trace.push_back(parents[id].second);
            id = parents[id].first;
        }
        std::reverse(trace.begin(), trace.end());
        return trace;
    };

    while (!queue.empty()) {
        const std::size_t id = queue.front();
        queue.pop_front();
        const std::vector<std::size_t> cur = states[id];

        auto visit = [&](std::vector<std::size_t>&& nxt, const Move& mv) -> std::size_t {
            if (nxt.size() > max_points) return DiscretePath::npos;
            auto it = seen.find(nxt);
            if (it != seen.end()) return DiscretePath::npos;
            const std::size_t nid = states.size();
            seen.emplace(nxt, nid);
            states.push_back(std::move(nxt));
            parents.push_back({id, mv});
            queue.push_back(nid);
            return nid;
        };

        for (std::size_t i = 0; i < cur.size(); ++i) {
            std::vector<std::size_t> nxt = cur;
            nxt.insert(nxt.begin() + static_cast<std::ptrdiff_t>(i) + 1, cur[i]);
            std::size_t nid = visit(std::move(nxt), {Move::Kind::InsertRepeat, i, cur[i], cur[i]});
            if (nid != DiscretePath::npos && states[nid] == to) return build_trace(nid);
        }
        for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
            if (cur[i] != cur[i + 1]) continue;
            std::vector<std::size_t> nxt = cur;
            nxt.erase(nxt.begin() + static_cast<std::ptrdiff_t>(i) + 1);
            std::size_t nid = visit(std::move(nxt), {Move::Kind::DeleteRepeat, i, cur[i], cur[i]});
            if (nid != DiscretePath::npos && states[nid] == to) return build_trace(nid);
        }
        for (std::size_t i = 1; i + 1 < cur.size(); ++i) {
            for (std::size_t v = 0; v < space.size(); ++v) {
                if (v == cur[i]) continue;
                if (!step_ok(space, cur[i - 1], v) || !step_ok(space, v, cur[i + 1]) ||
                    !step_ok(space, cur[i], v))
                    continue;
                std::vector<std::size_t> nxt = cur;
                nxt[i] = v;
                std::size_t nid = visit(std::move(nxt), {Move::Kind::Substitute, i, v, cur[i]});
                if (nid != DiscretePath::npos && states[nid] == to) return build_trace(nid);
            }
        }
        if (states.size() > budget) return std::nullopt;
    }
    return std::nullopt;
}

std::vector<Move> concat_traces(std::vector<Move> a, const std::vector<Move>& b,
                                const std::vector<Move>& c) {
    a.insert(a.end(), b.begin(), b.end());
    a.insert(a.end(), c.begin(), c.end());
    return a;
}

/// Canonical form of a wedge loop: repeatedly strip repeats and reduce every
/// maximal one-circle stretch to its winding staircase; stretches of winding
/// zero vanish and their neighbours merge, which realizes free reduction of
/// the word by moves.
CyclicReduction wedge_reduce(const WedgeSpace& ws, const std::vector<std::size_t>& start) {
    CyclicReduction out;
    out.points = start;
    auto& pts = out.points;

    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < pts.size();) {
            if (pts[i] == pts[i + 1]) {
                out.trace.push_back({Move::Kind::DeleteRepeat, i, pts[i], pts[i]});
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i) + 1);
                changed = true;
            } else {
                ++i;
            }
        }

        // Maximal stretches of a single circle (interior wedge visits do not
        // split a stretch when both sides stay on the same circle).
        std::size_t i = 0;
        while (i + 1 < pts.size()) {
            if (pts[i + 1] == ws.wedge_point()) {
                ++i;
                continue;
            }
            const int c = ws.circle_of(pts[i + 1]);
            std::size_t j = i + 1;
            std::size_t last_zero = i;  // last wedge visit inside the stretch
            while (j < pts.size()) {
                if (pts[j] == ws.wedge_point()) {
                    last_zero = j;
                    if (j + 1 >= pts.size() || ws.circle_of(pts[j + 1]) != c) break;
                } else if (ws.circle_of(pts[j]) != c) {
                    throw std::logic_error("segment crosses circles without a wedge visit");
                }
                ++j;
            }
            const std::size_t end = last_zero;  // stretch spans [i, end]
            std::vector<std::size_t> coords;
            coords.reserve(end - i + 1);
            for (std::size_t t = i; t <= end; ++t) coords.push_back(ws.circle_coord(c, pts[t]));

            CyclicReduction red = cyclic_reduce_coords(ws.circle(c), coords);
            if (red.points != coords) {
                for (Move m : red.trace) {
                    m.index += i;
                    if (m.kind == Move::Kind::Substitute) {
                        m.value = ws.embed(c, m.value);
                        m.prev = ws.embed(c, m.prev);
                    } else {
                        m.value = ws.embed(c, m.value);
                        m.prev = m.value;
                    }
                    out.trace.push_back(m);
                }
                std::vector<std::size_t> replacement;
                replacement.reserve(red.points.size());
                for (auto k : red.points) replacement.push_back(ws.embed(c, k));
                pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(i),
                          pts.begin() + static_cast<std::ptrdiff_t>(end) + 1);
                pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(i), replacement.begin(),
                           replacement.end());
                changed = true;
                break;  // indices moved; rescan
            }
            i = end;
        }
    }
    return out;
}

}  // namespace

std::size_t default_cap(const DiscretePath& a, const DiscretePath& b) {
    return 2 * std::max(a.length(), b.length()) + a.space().size();
}

HomotopyResult homotopic(const DiscretePath& a, const DiscretePath& b, std::size_t cap) {
    HomotopyOptions opts;
    opts.cap = cap;
    return homotopic(a, b, opts);
}

HomotopyResult homotopic(const DiscretePath& a, const DiscretePath& b,
                         const HomotopyOptions& opts) {
    if (a.space() != b.space())
        throw std::invalid_argument("homotopic requires loops in the same space");
    if (!a.is_loop() || !b.is_loop()) throw std::invalid_argument("homotopic requires loops");
    if (a.start() != b.start()) throw std::invalid_argument("basepoint mismatch");
    if (!a.valid() || !b.valid()) throw std::invalid_argument("invalid path");

    const ClosureSpace& space = a.space();
    HomotopyResult res;

    // Complete invariants give "no" without any search.
    const std::optional<CyclicSpace> cyc = detect_cyclic(space);
    const bool cyclic_regime = cyc && cyc->covering_regime();
    if (cyclic_regime) {
        const long wa = winding(*cyc, a), wb = winding(*cyc, b);
        if (wa != wb) {
            res.verdict = HomotopyVerdict::No;
            res.reason = "winding " + std::to_string(wa) + " vs " + std::to_string(wb);
            return res;
        }
    }
    std::optional<WedgeSpace> wedge;
    if (opts.wedge && opts.wedge->space() == space && opts.wedge->circle(0).covering_regime() &&
        opts.wedge->circle(1).covering_regime()) {
        wedge = opts.wedge;
        const Word wa = wedge_word(*wedge, a), wb = wedge_word(*wedge, b);
        if (wa != wb) {
            res.verdict = HomotopyVerdict::No;
            res.reason = "wedge word " + word_to_string(wa) + " vs " + word_to_string(wb);
            return res;
        }
    }

    if (a.points() == b.points()) {
        res.verdict = HomotopyVerdict::Yes;
        return res;
    }
    if (opts.cap + 1 < std::max(a.points().size(), b.points().size())) {
        res.verdict = HomotopyVerdict::Unknown;
        res.reason = "cap smaller than the input loops";
        return res;
    }

    if (cyclic_regime) {
        CyclicReduction ra = cyclic_reduce_coords(*cyc, a.points());
        CyclicReduction rb = cyclic_reduce_coords(*cyc, b.points());
        if (ra.points == rb.points) {
            res.verdict = HomotopyVerdict::Yes;
            res.trace = concat_traces(std::move(ra.trace), {}, invert_trace(rb.trace));
            return res;
        }
    }
    if (wedge) {
        CyclicReduction ra = wedge_reduce(*wedge, a.points());
        CyclicReduction rb = wedge_reduce(*wedge, b.points());
        if (ra.points == rb.points) {
            res.verdict = HomotopyVerdict::Yes;
            res.trace = concat_traces(std::move(ra.trace), {}, invert_trace(rb.trace));
            return res;
        }
    }

    std::vector<std::size_t> pa = a.points(), pb = b.points();
    std::vector<Move> ta = shortcut_reduce(space, pa);
    std::vector<Move> tb = shortcut_reduce(space, pb);
    if (pa == pb) {
        res.verdict = HomotopyVerdict::Yes;
        res.trace = concat_traces(std::move(ta), {}, invert_trace(tb));
        return res;
    }
    if (auto found = bfs_moves(space, pa, pb, opts.cap, opts.bfs_node_budget)) {
        res.verdict = HomotopyVerdict::Yes;
        res.trace = concat_traces(std::move(ta), *found, invert_trace(tb));
        return res;
    }
    res.verdict = HomotopyVerdict::Unknown;
    res.reason = "move search exhausted at cap " + std::to_string(opts.cap);
    return res;
}

std::vector<std::vector<std::string>> pi0(const ClosureSpace& space) {
    std::vector<std::vector<std::string>> out;
    for (const auto& comp : space.components()) {
        std::vector<std::string> cls;
        cls.reserve(comp.size());
        for (auto i : comp) cls.push_back(space.label(i));
        out.push_back(std::move(cls));
    }
    return out;
}

bool null_contraction_exists(const ClosureSpace& space, std::size_t cap) {
    if (space.size() == 0) return true;
    if (space.is_indiscrete()) return true;

    const std::size_t bound = std::min(cap, space.size() + 1);
    constexpr std::size_t kBudget = 2'000'000;
    std::size_t visited = 0;

    for (const auto& comp : space.components()) {
        const std::size_t base = comp.front();
        // Iterative DFS over step-valid prefixes from the basepoint.
        std::vector<std::vector<std::size_t>> stack{{base}};
        while (!stack.empty()) {
            std::vector<std::size_t> cur = std::move(stack.back());
            stack.pop_back();
            if (++visited > kBudget)
                throw std::runtime_error(
                    "null-contraction search budget exceeded; lower the cap");
            if (cur.size() > 1 && cur.back() == base) {
                bool trivial = std::all_of(cur.begin(), cur.end(),
                                           [&](std::size_t p) { return p == base; });
                if (!trivial) {
                    DiscretePath loop(space, cur);
                    DiscretePath cpath = constant_path(space, base);
                    HomotopyResult r = homotopic(loop, cpath, cap);
                    if (r.verdict != HomotopyVerdict::Yes) return false;
                }
            }
            if (cur.size() <= bound) {
                for (std::size_t v = 0; v < space.size(); ++v) {
                    if (!step_ok(space, cur.back(), v)) continue;
                    std::vector<std::size_t> nxt = cur;
                    nxt.push_back(v);
                    stack.push_back(std::move(nxt));
                }
            }
        }
    }
    return true;
}

}  // namespace cech
