#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace jtspec {

enum class Truncation { PerMode, TotalNumber };

/// Truncation of the spin-1/2 x two-mode Fock space.
///
/// PerMode keeps n1 <= n_max_1 and n2 <= n_max_2. TotalNumber keeps
/// n1 + n2 <= total_max; in that mode n_max_1 == n_max_2 == total_max.
struct BasisSpec {
    int n_max_1 = 1;
    int n_max_2 = 1;
    Truncation truncation = Truncation::PerMode;
    int total_max = 0;

    static BasisSpec per_mode(int n_max_1, int n_max_2);
    static BasisSpec per_mode(int n_max) { return per_mode(n_max, n_max); }
    static BasisSpec total_number(int n_max);

    /// Largest single-mode occupation reachable in the basis.
    [[nodiscard]] int cutoff() const;

    friend bool operator==(const BasisSpec&, const BasisSpec&) = default;
};

std::string to_string(const BasisSpec& spec);

/// Spin label: Up is the sigma_0 = +1 state and comes first in the ordering.
enum class Spin : int { Up = 0, Down = 1 };

struct BasisState {
    Spin spin = Spin::Up;
    int n1 = 0;
    int n2 = 0;

    friend bool operator==(const BasisState&, const BasisState&) = default;
};

/// Enumerated basis with a bijective index map. Ordering is spin-major,
/// then n1, then n2, lexicographic.
class Basis {
public:
    explicit Basis(BasisSpec spec);

    [[nodiscard]] const BasisSpec& spec() const { return spec_; }
    [[nodiscard]] std::size_t dim() const { return states_.size(); }
    [[nodiscard]] const BasisState& state(std::size_t index) const { return states_.at(index); }
    [[nodiscard]] const std::vector<BasisState>& states() const { return states_; }

    [[nodiscard]] bool contains(const BasisState& s) const;
    [[nodiscard]] std::optional<std::size_t> index(const BasisState& s) const;

    friend bool operator==(const Basis& a, const Basis& b) { return a.spec_ == b.spec_; }

private:
    [[nodiscard]] std::size_t slot(int n1, int n2) const;

    BasisSpec spec_;
    std::vector<BasisState> states_;
    // Per-spin lookup table over (n1, n2) -> index or npos.
    std::vector<std::size_t> lookup_;
    std::size_t stride_ = 0;
};

}  // namespace jtspec
