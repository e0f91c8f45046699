#ifndef AIRPOCKETS_PATH_HPP
#define AIRPOCKETS_PATH_HPP

// Lattice paths made of up-steps U=(1,1) and down-steps D_k=(1,-k), k >= 1,
// with no two consecutive down-steps, plus the structural maps on them.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "airpockets/error.hpp"

namespace airpockets {

/// A single step. `drop == 0` encodes U; `drop == k >= 1` encodes D_k.
class Step {
public:
    static constexpr Step up() noexcept { return Step(0); }
    static Step down(int k) {
        if (k < 1) throw Error(ErrorCode::MalformedToken, "down-step size must be >= 1");
        return Step(k);
    }

    constexpr bool is_up() const noexcept { return drop_ == 0; }
    constexpr bool is_down() const noexcept { return drop_ > 0; }
    constexpr int drop() const noexcept { return drop_; }
    constexpr int delta() const noexcept { return is_up() ? 1 : -drop_; }

    // U < D1 < D2 < ...
    constexpr auto operator<=>(const Step&) const = default;

private:
    constexpr explicit Step(int drop) noexcept : drop_(drop) {}
    int drop_;
};

enum class StepKind { Empty, Up, Down };

class LatticePath {
public:
    LatticePath() : profile_{0} {}

    explicit LatticePath(std::vector<Step> steps) : steps_(std::move(steps)) {
        profile_.reserve(steps_.size() + 1);
        profile_.push_back(0);
        for (std::size_t i = 0; i < steps_.size(); ++i) {
            if (i > 0 && steps_[i].is_down() && steps_[i - 1].is_down())
                throw Error(ErrorCode::ConsecutiveDowns,
                            "down-steps at positions " + std::to_string(i - 1) + " and " +
                                std::to_string(i));
            profile_.push_back(profile_.back() + steps_[i].delta());
        }
    }

    std::size_t length() const noexcept { return steps_.size(); }
    bool empty() const noexcept { return steps_.empty(); }
    std::span<const Step> steps() const noexcept { return steps_; }
    std::span<const int> profile() const noexcept { return profile_; }
    const Step& operator[](std::size_t i) const { return steps_[i]; }

    int final_ordinate() const noexcept { return profile_.back(); }
    int max_height() const noexcept { return *std::max_element(profile_.begin(), profile_.end()); }
    int min_height() const noexcept { return *std::min_element(profile_.begin(), profile_.end()); }

    StepKind first_kind() const noexcept {
        if (steps_.empty()) return StepKind::Empty;
        return steps_.front().is_up() ? StepKind::Up : StepKind::Down;
    }
    StepKind last_kind() const noexcept {
        if (steps_.empty()) return StepKind::Empty;
        return steps_.back().is_up() ? StepKind::Up : StepKind::Down;
    }

    bool operator==(const LatticePath& other) const { return steps_ == other.steps_; }
    auto operator<=>(const LatticePath& other) const {
        return std::lexicographical_compare_three_way(steps_.begin(), steps_.end(),
                                                      other.steps_.begin(), other.steps_.end());
    }

    /// Step-string in the "U" / "Dk" notation; D1 prints as "D".
    std::string to_string() const {
        std::string out;
        for (const Step& s : steps_) {
            if (s.is_up()) {
                out += 'U';
            } else {
                out += 'D';
                if (s.drop() != 1) out += std::to_string(s.drop());
            }
        }
        return out;
    }

private:
    std::vector<Step> steps_;
    std::vector<int> profile_;
};

inline LatticePath concat(const LatticePath& a, const LatticePath& b) {
    std::vector<Step> steps(a.steps().begin(), a.steps().end());
    steps.insert(steps.end(), b.steps().begin(), b.steps().end());
    return LatticePath(std::move(steps));
}

/// Parses "U", "D" and "Dk" tokens with no separators. The empty string is ε.
inline LatticePath parse_path(std::string_view text) {
    std::vector<Step> steps;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        if (c == 'U') {
            steps.push_back(Step::up());
            ++i;
        } else if (c == 'D') {
            ++i;
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            int k = 1;
            if (i > start) {
                if (i - start > 9)
                    throw Error(ErrorCode::MalformedToken, "down-step size too large");
                k = std::stoi(std::string(text.substr(start, i - start)));
                if (k < 1)
                    throw Error(ErrorCode::MalformedToken,
                                "down-step size must be >= 1 in '" + std::string(text) + "'");
            }
            steps.push_back(Step::down(k));
        } else {
            throw Error(ErrorCode::MalformedToken,
                        std::string("unexpected character '") + c + "' at offset " +
                            std::to_string(i));
        }
    }
    return LatticePath(std::move(steps));
}

struct PathClassification {
    std::size_t length = 0;
    int final_ordinate = 0;
    int max_height = 0;
    int min_height = 0;
    bool is_dap = false;
    bool is_gdap = false;
    bool is_prime = false;
    StepKind starts_with = StepKind::Empty;
    StepKind ends_with = StepKind::Empty;
};

// Prime check scans the interior of the profile for zeros; the endpoint is
// excluded.
inline PathClassification classify(const LatticePath& path) {
    PathClassification c;
    c.length = path.length();
    c.final_ordinate = path.final_ordinate();
    c.max_height = path.max_height();
    c.min_height = path.min_height();
    c.is_gdap = c.final_ordinate == 0;
    c.is_dap = c.is_gdap && c.min_height >= 0 && c.length >= 2;
    c.starts_with = path.first_kind();
    c.ends_with = path.last_kind();
    if (c.is_dap && path.steps().back().drop() >= 2) {
        auto interior = path.profile().subspan(1, path.length() - 1);
        c.is_prime = std::find(interior.begin(), interior.end(), 0) == interior.end();
    }
    return c;
}

inline bool is_dap(const LatticePath& path) { return classify(path).is_dap; }
inline bool is_prime(const LatticePath& path) { return classify(path).is_prime; }

/// Reverses the step order. Involutive.
inline LatticePath mirror(const LatticePath& path) {
    std::vector<Step> steps(path.steps().rbegin(), path.steps().rend());
    return LatticePath(std::move(steps));
}

/// Lowering of a prime path: U β U D_k  ->  β U D_{k-1}.
inline LatticePath flat(const LatticePath& path) {
    if (!is_prime(path)) throw Error(ErrorCode::NotPrime, path.to_string());
    std::vector<Step> steps(path.steps().begin() + 1, path.steps().end());
    steps.back() = Step::down(steps.back().drop() - 1);
    return LatticePath(std::move(steps));
}

/// Elevation, the inverse of flat: β U D_k  ->  U β U D_{k+1}.
inline LatticePath sharp(const LatticePath& path) {
    if (!is_dap(path)) throw Error(ErrorCode::NotDAP, "'" + path.to_string() + "'");
    std::vector<Step> steps;
    steps.reserve(path.length() + 1);
    steps.push_back(Step::up());
    steps.insert(steps.end(), path.steps().begin(), path.steps().end());
    steps.back() = Step::down(steps.back().drop() + 1);
    return LatticePath(std::move(steps));
}

/// x D_i  merged with  D_j y  gives  x D_{i+j} y.
inline LatticePath merge(const LatticePath& alpha, const LatticePath& beta) {
    if (alpha.last_kind() != StepKind::Down || beta.first_kind() != StepKind::Down)
        throw Error(ErrorCode::BadEnds,
                    "cannot merge '" + alpha.to_string() + "' with '" + beta.to_string() + "'");
    std::vector<Step> steps(alpha.steps().begin(), alpha.steps().end());
    steps.back() = Step::down(alpha.steps().back().drop() + beta.steps().front().drop());
    steps.insert(steps.end(), beta.steps().begin() + 1, beta.steps().end());
    return LatticePath(std::move(steps));
}

enum class ReturnCase {
    Atom,         // UD
    DapThenAtom,  // β · UD
    Prime,        // a prime path
    DapThenPrime, // β · γ, γ prime
};

struct FirstReturnDecomposition {
    ReturnCase kind;
    std::optional<LatticePath> head; // β, present for DapThenAtom / DapThenPrime
    LatticePath last;                // UD or the prime factor

    LatticePath reassemble() const { return head ? concat(*head, last) : last; }
};

/// Splits a DAP at its second-to-last return to the x-axis.
inline FirstReturnDecomposition first_return_decompose(const LatticePath& path) {
    if (!is_dap(path)) throw Error(ErrorCode::NotDAP, "'" + path.to_string() + "'");
    auto profile = path.profile();
    std::size_t split = 0;
    for (std::size_t i = path.length() - 1; i > 0; --i) {
        if (profile[i] == 0) {
            split = i;
            break;
        }
    }
    static const LatticePath atom = parse_path("UD");
    if (split == 0) {
        if (path == atom) return {ReturnCase::Atom, std::nullopt, path};
        return {ReturnCase::Prime, std::nullopt, path};
    }
    LatticePath head(std::vector<Step>(path.steps().begin(), path.steps().begin() + split));
    LatticePath last(std::vector<Step>(path.steps().begin() + split, path.steps().end()));
    ReturnCase kind = last == atom ? ReturnCase::DapThenAtom : ReturnCase::DapThenPrime;
    return {kind, std::move(head), std::move(last)};
}

} // namespace airpockets

#endif // AIRPOCKETS_PATH_HPP
