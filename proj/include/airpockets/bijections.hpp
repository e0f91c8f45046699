#ifndef AIRPOCKETS_BIJECTIONS_HPP
#define AIRPOCKETS_BIJECTIONS_HPP

// psi: closed paths in the window [0, 2] of length n  ->  C(n-2)
// phi: closed paths in the window [-1, 1] of length n ->  C'(n+3)
// together with the block decomposition they share and their inverses.

#include <algorithm>
#include <vector>

#include "airpockets/error.hpp"
#include "airpockets/oracle.hpp"
#include "airpockets/path.hpp"

namespace airpockets {

struct BlockDecomposition {
    std::vector<LatticePath> blocks;

    std::vector<int> lengths() const {
        std::vector<int> out;
        out.reserve(blocks.size());
        for (const auto& b : blocks) out.push_back(static_cast<int>(b.length()));
        return out;
    }
};

/// Cuts after every up-step that is followed by another up-step or by D_2.
/// With no such up-step the whole path is a single block; ε has no blocks.
inline BlockDecomposition block_decompose(const LatticePath& path) {
    BlockDecomposition out;
    auto steps = path.steps();
    std::size_t start = 0;
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        const Step& next = steps[i + 1];
        if (steps[i].is_up() && (next.is_up() || next.drop() == 2)) {
            out.blocks.emplace_back(std::vector<Step>(steps.begin() + start, steps.begin() + i + 1));
            start = i + 1;
        }
    }
    if (start < steps.size())
        out.blocks.emplace_back(std::vector<Step>(steps.begin() + start, steps.end()));
    return out;
}

namespace detail {

inline bool in_window(const LatticePath& path, int lo, int hi) {
    return path.final_ordinate() == 0 && path.min_height() >= lo && path.max_height() <= hi;
}

inline void append(std::vector<Step>& out, std::initializer_list<Step> pattern, int times) {
    for (int i = 0; i < times; ++i) out.insert(out.end(), pattern);
}

// An odd block (UD)^((c-1)/2) U.
inline void odd_block(std::vector<Step>& out, int c) {
    append(out, {Step::up(), Step::down(1)}, (c - 1) / 2);
    out.push_back(Step::up());
}

// An even block D_2 U (DU)^((c-2)/2).
inline void even_block(std::vector<Step>& out, int c) {
    out.push_back(Step::down(2));
    out.push_back(Step::up());
    append(out, {Step::down(1), Step::up()}, (c - 2) / 2);
}

inline void inner_block(std::vector<Step>& out, int c) {
    if (c % 2 == 1) odd_block(out, c);
    else even_block(out, c);
}

} // namespace detail

/// psi(α): drop the first and last steps and read off the block lengths.
/// UD maps to the empty composition.
inline Composition psi(const LatticePath& path) {
    if (path.length() < 2 || !detail::in_window(path, 0, 2))
        throw Error(ErrorCode::NotInFamily,
                    "'" + path.to_string() + "' is not a closed path in [0,2] of length >= 2");
    LatticePath inner(std::vector<Step>(path.steps().begin() + 1, path.steps().end() - 1));
    return Composition{block_decompose(inner).lengths()};
}

/// Inverse of psi. The first block is (DU)^(c1/2) when c1 is even; the
/// closing step is D after an even last part and D_2 after an odd one.
inline LatticePath psi_inv(const Composition& c) {
    if (!is_alternating(c))
        throw Error(ErrorCode::NotAlternating, "'" + c.to_string() + "'");
    std::vector<Step> steps{Step::up()};
    if (c.parts.empty()) {
        steps.push_back(Step::down(1));
        return LatticePath(std::move(steps));
    }
    const int first = c.parts.front();
    if (first % 2 == 0) detail::append(steps, {Step::down(1), Step::up()}, first / 2);
    else detail::odd_block(steps, first);
    for (std::size_t i = 1; i < c.parts.size(); ++i) detail::inner_block(steps, c.parts[i]);
    steps.push_back(Step::down(c.parts.back() % 2 == 0 ? 1 : 2));
    return LatticePath(std::move(steps));
}

/// phi(α) for a closed path in [-1, 1].
inline Composition phi(const LatticePath& path) {
    if (!detail::in_window(path, -1, 1))
        throw Error(ErrorCode::NotInFamily,
                    "'" + path.to_string() + "' is not a closed path in [-1,1]");
    const int n = static_cast<int>(path.length());
    auto b = block_decompose(path).lengths();
    if (b.empty()) return Composition{{1, 2}};
    if (b.size() == 1) {
        // a single block in this window is (UD)^j or (DU)^j
        if (n % 2 != 0) throw Error(ErrorCode::NotInFamily, "odd single-block path");
        if (path.first_kind() == StepKind::Up) return Composition{{n + 1, 2}};
        return Composition{{1, n + 2}};
    }
    std::vector<int> l(b.rbegin(), b.rend());
    const std::size_t r = b.size();
    if (b[r - 2] % 2 == 0) l.front() += 1;
    else l.insert(l.begin(), 1);
    if (b[0] % 2 == 0) l.back() += 2;
    else l.push_back(2);
    return Composition{std::move(l)};
}

/// Inverse of phi: the parts c_{r-1}, ..., c_2 become alternating odd and
/// even blocks, preceded by (DU)^((c_r-2)/2) and followed by (UD)^((c_1-1)/2).
inline LatticePath phi_inv(const Composition& c) {
    if (!is_alternating_odd_even(c))
        throw Error(ErrorCode::NotInCPrime, "'" + c.to_string() + "'");
    const auto& p = c.parts;
    std::vector<Step> steps;
    detail::append(steps, {Step::down(1), Step::up()}, (p.back() - 2) / 2);
    for (std::size_t i = p.size() - 1; i-- > 1;) detail::inner_block(steps, p[i]);
    detail::append(steps, {Step::up(), Step::down(1)}, (p.front() - 1) / 2);
    return LatticePath(std::move(steps));
}

} // namespace airpockets

#endif // AIRPOCKETS_BIJECTIONS_HPP
