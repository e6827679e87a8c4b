#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cech/generators.hpp"
#include "cech/paths.hpp"

namespace cech {

/// Net signed displacement of a loop on the radius-m cycle, divided by n.
/// Requires 2m < n so that each step has a unique signed representative in
/// [-m, m]. Throws otherwise, and on non-loops or invalid paths.
long winding(const CyclicSpace& cs, const DiscretePath& loop);

/// The loop of winding w at `base` with every step as long as possible:
/// positions base, base+m, base+2m, ... reduced mod n. The empty product
/// (w = 0) is the constant path.
DiscretePath staircase_loop(const CyclicSpace& cs, long w, std::size_t base = 0);

/// Two cycles glued at their 0 points. The underlying space is the quotient
/// of the disjoint union identifying the zeros; index 0 is the wedge point,
/// then come the nonzero points of the first circle ("a1", ...), then of the
/// second ("b1", ...).
class WedgeSpace {
public:
    WedgeSpace(CyclicSpace first, CyclicSpace second);

    const CyclicSpace& circle(int which) const;
    const ClosureSpace& space() const { return space_; }
    std::size_t wedge_point() const { return 0; }

    std::size_t embed(int which, std::size_t k) const;
    /// 0 or 1 for interior circle points, -1 for the wedge point.
    int circle_of(std::size_t idx) const;
    std::size_t circle_coord(int which, std::size_t idx) const;

private:
    CyclicSpace first_, second_;
    ClosureSpace space_;
};

/// Reduced word over the free generators a (first circle) and b (second).
struct WordLetter {
    char letter;
    long exponent;
    bool operator==(const WordLetter& o) const = default;
};
using Word = std::vector<WordLetter>;

Word free_reduce(const Word& w);
Word word_concat(const Word& u, const Word& v);
std::string word_to_string(const Word& w);

/// Split the loop at wedge-point visits, read each maximal one-circle
/// stretch as a power of its generator via the winding number, and freely
/// reduce. Requires both circles in the covering regime (m >= 1 and 3m < n)
/// and a valid loop based at the wedge point.
Word wedge_word(const WedgeSpace& ws, const DiscretePath& loop);

enum class HomotopyVerdict { Yes, No, Unknown };

struct HomotopyResult {
    HomotopyVerdict verdict = HomotopyVerdict::Unknown;
    std::vector<Move> trace;  // Yes: elementary moves turning a into b
    std::string reason;       // No: separating invariant; Unknown: what gave out
};

struct HomotopyOptions {
    std::size_t cap = 0;
    std::optional<WedgeSpace> wedge;        // structure hint for wedge spaces
    std::size_t bfs_node_budget = 200000;   // fallback search size limit
};

std::size_t default_cap(const DiscretePath& a, const DiscretePath& b);

/// Decide homotopy rel endpoints of two loops at a common basepoint by
/// searching over elementary moves. Answers:
///   Yes      with a certified move trace,
///   No       only when a complete invariant (winding in the cyclic covering
///            regime, the wedge word on wedges) separates the loops,
///   Unknown  when the bounded search gives out.
/// Intermediate paths never exceed `cap` steps.
HomotopyResult homotopic(const DiscretePath& a, const DiscretePath& b, std::size_t cap);
HomotopyResult homotopic(const DiscretePath& a, const DiscretePath& b,
                         const HomotopyOptions& opts);

/// Components as label classes.
std::vector<std::vector<std::string>> pi0(const ClosureSpace& space);

/// True iff the space is indiscrete, or every loop of at most
/// min(cap, N+1) steps based at each component's least point contracts to
/// the constant loop within the cap. A "no" or "unknown" verdict on any such
/// loop yields false.
bool null_contraction_exists(const ClosureSpace& space, std::size_t cap);

}  // namespace cech
